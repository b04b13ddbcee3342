#include "qaff/cluster.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "qaff/error.hpp"
#include "qaff/tsystem.hpp"

namespace qaff {

// ---------------------------------------------------------------- ClusterVar

Monomial ClusterVar::denominator() const {
  std::vector<Monomial::Factor> f;
  const Monomial lo = laurent.min_exponents();
  for (const auto& [k, e] : lo.factors())
    if (e < 0) f.emplace_back(k, -e);
  return Monomial::from_factors(std::move(f));
}

LaurentPoly ClusterVar::numerator() const { return laurent * denominator(); }

std::string ClusterVar::to_string() const {
  const Monomial den = denominator();
  if (den.is_one()) return laurent.to_string();
  return "(" + numerator().to_string() + ")/(" + den.to_string() + ")";
}

json ClusterVar::to_json() const {
  return json{{"numerator", numerator().to_json()}, {"denominator", denominator().to_string()}, {"text", to_string()}};
}

// ---------------------------------------------------------------------- Seed

std::size_t Seed::index(const Vertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || *it != v) throw Error(ErrorCode::UnknownVertex, v.to_string() + " is not in the seed");
  return static_cast<std::size_t>(it - vertices.begin());
}

std::vector<Vertex> Seed::mutable_vertices() const {
  std::vector<Vertex> out;
  for (const auto& v : vertices)
    if (!is_frozen(v)) out.push_back(v);
  return out;
}

QuiverGraph Seed::quiver() const {
  QuiverGraph q;
  q.vertices = vertices;
  q.frozen = frozen;
  for (std::size_t u = 0; u < vertices.size(); ++u)
    for (std::size_t v = 0; v < vertices.size(); ++v)
      for (int m = 0; m < b[u][v]; ++m) q.arrows.emplace_back(vertices[u], vertices[v]);
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

json Seed::to_json() const {
  json j = quiver().to_json();
  json vars = json::array();
  for (std::size_t u = 0; u < vertices.size(); ++u)
    vars.push_back(json{{"vertex", vertex_to_json(vertices[u])}, {"variable", attach[u].to_string()}});
  j["variables"] = vars;
  return j;
}

Seed seed_from_quiver(const QuiverGraph& q) {
  Seed s;
  s.vertices = q.vertices;
  std::sort(s.vertices.begin(), s.vertices.end());
  s.frozen = q.frozen;
  const std::size_t n = s.vertices.size();
  s.b.assign(n, std::vector<int>(n, 0));
  for (const auto& [from, to] : q.arrows) {
    const std::size_t u = s.index(from);
    const std::size_t v = s.index(to);
    if (u == v) throw Error(ErrorCode::InvalidConfig, "loop at " + from.to_string());
    s.b[u][v] += 1;
    s.b[v][u] -= 1;
  }
  for (const auto& v : s.vertices) s.attach.push_back(ClusterVar::initial(v));
  return s;
}

Seed initial_seed(const CartanData& cd, const TruncationParams& params) {
  return seed_from_quiver(truncated_quiver(cd, params));
}

std::vector<std::vector<int>> mutate_matrix(const std::vector<std::vector<int>>& b, std::size_t k) {
  const std::size_t n = b.size();
  auto out = b;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out[i][j] = -b[i][j];
      } else {
        const long long v = b[i][j] + (std::llabs(b[i][k]) * b[k][j] + static_cast<long long>(b[i][k]) * std::abs(b[k][j])) / 2;
        if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
          throw Error(ErrorCode::InvalidConfig, "exchange matrix entry overflows int");
        out[i][j] = static_cast<int>(v);
      }
    }
  }
  return out;
}

Seed mutate(const Seed& s, const Vertex& k, Exchange* record) {
  const std::size_t kk = s.index(k);
  if (s.is_frozen(k)) throw Error(ErrorCode::FrozenVertex, k.to_string() + " is frozen");
  LaurentPoly in(1);
  LaurentPoly out(1);
  std::vector<ClusterVar> in_vars;
  std::vector<ClusterVar> out_vars;
  for (std::size_t u = 0; u < s.vertices.size(); ++u) {
    for (int m = 0; m < s.b[u][kk]; ++m) {
      in = in * s.attach[u].laurent;
      in_vars.push_back(s.attach[u]);
    }
    for (int m = 0; m < s.b[kk][u]; ++m) {
      out = out * s.attach[u].laurent;
      out_vars.push_back(s.attach[u]);
    }
  }
  Seed t = s;
  t.b = mutate_matrix(s.b, kk);
  t.attach[kk] = ClusterVar{exact_div(in + out, s.attach[kk].laurent)};
  if (record) *record = Exchange{k, s.attach[kk], t.attach[kk], in, out, std::move(in_vars), std::move(out_vars)};
  return t;
}

Seed mutate_sequence(const Seed& s, const std::vector<Vertex>& seq) {
  Seed t = s;
  for (const auto& v : seq) t = mutate(t, v);
  return t;
}

ClosureResult enumerate_closure(const Seed& s, std::size_t max_seeds) {
  ClosureResult res;
  const std::vector<Vertex> mut = s.mutable_vertices();
  for (const auto& v : s.vertices)
    if (s.is_frozen(v)) res.frozen.insert(s.at(v));
  auto key = [&mut](const Seed& x) {
    std::set<ClusterVar> c;
    for (const auto& v : mut) c.insert(x.at(v));
    return c;
  };
  std::set<std::set<ClusterVar>> seen{key(s)};
  std::deque<Seed> queue{s};
  for (const auto& v : mut) res.variables.insert(s.at(v));
  res.closed = true;
  while (!queue.empty()) {
    const Seed cur = std::move(queue.front());
    queue.pop_front();
    for (const auto& v : mut) {
      Exchange ex;
      Seed next = mutate(cur, v, &ex);
      if (!next.at(v).denominator().is_polynomial())
        throw Error(ErrorCode::ExactDivisionFailed, "non-monomial denominator at " + v.to_string());
      auto k = key(next);
      if (seen.count(k)) continue;
      if (seen.size() >= max_seeds) {
        res.closed = false;
        continue;
      }
      res.exchanges.push_back(std::move(ex));
      res.variables.insert(next.at(v));
      seen.insert(std::move(k));
      queue.push_back(std::move(next));
    }
  }
  res.seed_count = seen.size();
  return res;
}

std::vector<int> denominator_vector(const ClusterVar& x, const Seed& s0) {
  std::vector<int> out;
  const Monomial lo = x.laurent.min_exponents();
  for (const auto& v : s0.mutable_vertices()) out.push_back(-lo.exponent(zkey(v.i, v.r)));
  return out;
}

LaurentPoly realize_qchar(const ClusterVar& x, const std::map<Vertex, LaurentPoly>& table) {
  Substitution sub;
  auto image = [&table](const VarKey& k) -> const LaurentPoly& {
    auto it = table.find({k.node, k.shift});
    if (k.family != Family::Z || it == table.end())
      throw Error(ErrorCode::UnknownVertex, "no realization for " + k.to_string());
    return it->second;
  };
  const LaurentPoly num = x.numerator();
  for (const auto& [m, c] : num.terms())
    for (const auto& [k, e] : m.factors()) sub.emplace(k, image(k));
  LaurentPoly den(1);
  const Monomial dm = x.denominator();
  for (const auto& [k, e] : dm.factors()) den = den * image(k).pow(static_cast<unsigned>(e));
  return exact_div(substitute(num, sub), den);
}

std::map<Vertex, LaurentPoly> realization_table(const CartanData& cd, const TruncationParams& params,
                                                TSystemSolver& solver) {
  std::map<Vertex, LaurentPoly> table;
  for (const auto& v : truncated_quiver(cd, params).vertices)
    table.emplace(v, solver.kr_qchar(kr_label(cd, v, params.ell)));
  return table;
}

Monomial highest_monomial(const CartanData& cd, const LaurentPoly& qchar) {
  using Rational = boost::multiprecision::cpp_rational;
  // Height of a weight sum_i mu_i varpi_i is w . mu with C^T w = (1,...,1).
  const int n = cd.rank();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = cd.c(j + 1, i + 1);
    a[i][n] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (a[piv][col] == 0) ++piv;
    std::swap(a[piv], a[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (int c = col; c <= n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<Rational> w(n);
  for (int i = 0; i < n; ++i) w[i] = a[i][n] / a[i][i];

  const Monomial* best = nullptr;
  Rational best_h;
  bool unique = false;
  for (const auto& [m, c] : qchar.terms()) {
    Rational h = 0;
    for (const auto& [k, e] : m.factors())
      if (k.family == Family::Y && cd.valid_node(k.node)) h += w[k.node - 1] * e;
    if (!best || h > best_h) {
      best = &m;
      best_h = h;
      unique = true;
    } else if (h == best_h) {
      unique = false;
    }
  }
  if (!best || !unique) throw Error(ErrorCode::InvalidConfig, "no unique highest monomial");
  return *best;
}

bool isomorphic_ignoring_frozen_arrows(const Seed& a, const Seed& b) {
  const std::size_t n = a.vertices.size();
  if (n != b.vertices.size() || a.frozen.size() != b.frozen.size()) return false;
  auto fa = [&](std::size_t u) { return a.is_frozen(a.vertices[u]); };
  auto fb = [&](std::size_t u) { return b.is_frozen(b.vertices[u]); };
  std::vector<std::size_t> image(n);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> place = [&](std::size_t u) {
    if (u == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || fa(u) != fb(v)) continue;
      bool ok = true;
      for (std::size_t p = 0; p < u && ok; ++p) {
        if (fa(u) && fa(p)) continue;
        ok = a.b[p][u] == b.b[image[p]][v];
      }
      if (!ok) continue;
      used[v] = true;
      image[u] = v;
      if (place(u + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return place(0);
}

}  // namespace qaff
