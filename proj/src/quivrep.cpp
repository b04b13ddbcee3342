#include "qaff/quivrep.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>

#include "qaff/error.hpp"

namespace qaff {

namespace {

int span_bound(const CartanData& cd) {
  int s = 0;
  for (int i = 1; i <= cd.rank(); ++i)
    for (int j = 1; j <= cd.rank(); ++j) s += std::abs(cd.b(i, j));
  return 2 * s;
}

Rational parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    const Integer num(s.substr(0, slash));
    const Integer den(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad scalar '" + s + "'");
  }
}

std::string rational_text(const Rational& q) {
  const Integer num = boost::multiprecision::numerator(q);
  const Integer den = boost::multiprecision::denominator(q);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational evaluate(const ThinRep& rep, const PathWord& p) {
  Rational acc = 1;
  for (const Arrow& a : p) {
    acc *= rep.scalar(a.from, a.to);
    if (acc == 0) break;
  }
  return acc;
}

}  // namespace

std::string path_to_string(const PathWord& p) {
  if (p.empty()) return "";
  std::string out = p.front().from.to_string();
  for (const Arrow& a : p) out += "->" + a.to.to_string();
  return out;
}

PathWord potential_cycle(const CartanData& cd, int i, int j, int r) {
  if (!cd.valid_node(i) || !cd.valid_node(j)) throw Error(ErrorCode::IndexOutOfRange, "cycle nodes");
  if (i == j || cd.c(i, j) >= 0)
    throw Error(ErrorCode::NotAdjacent, "c_" + std::to_string(i) + std::to_string(j) + " >= 0");
  const int bij = cd.b(i, j);
  const int bii = cd.b(i, i);
  PathWord p;
  const Vertex start{i, r};
  const Vertex mid{j, r + bij};
  Vertex cur{i, r + 2 * bij};
  p.push_back({start, mid});
  p.push_back({mid, cur});
  for (int step = 0; step < -cd.c(i, j); ++step) {
    const Vertex next{i, cur.r + bii};
    p.push_back({cur, next});
    cur = next;
  }
  return p;
}

std::vector<PathWord> cycles_through(const CartanData& cd, const Arrow& a) {
  std::vector<PathWord> out;
  const int span = span_bound(cd);
  for (int i = 1; i <= cd.rank(); ++i) {
    for (int j : cd.neighbours(i)) {
      if (cd.c(i, j) >= 0) continue;
      for (int t = a.from.r - span; t <= a.from.r + span; ++t) {
        PathWord c = potential_cycle(cd, i, j, t);
        if (std::find(c.begin(), c.end(), a) != c.end()) out.push_back(std::move(c));
      }
    }
  }
  return out;
}

Relation cyclic_derivative(const CartanData& cd, const Arrow& a) {
  Relation rel{a, {}};
  std::map<PathWord, int> acc;
  for (const PathWord& c : cycles_through(cd, a)) {
    const auto pos = static_cast<std::size_t>(std::find(c.begin(), c.end(), a) - c.begin());
    PathWord comp;
    for (std::size_t k = 1; k < c.size(); ++k) comp.push_back(c[(pos + k) % c.size()]);
    acc[comp] += 1;
  }
  for (auto& [p, coeff] : acc)
    if (coeff != 0) rel.terms.emplace_back(coeff, p);
  return rel;
}

std::vector<Relation> relations(const CartanData& cd, const Window& window) {
  std::vector<Relation> out;
  for (int i = 1; i <= cd.rank(); ++i) {
    for (int r = window.lo; r <= window.hi; ++r) {
      const Vertex v{i, r};
      for (const Vertex& w : arrows_from(cd, v)) {
        if (!window.contains(w.r)) continue;
        Relation rel = cyclic_derivative(cd, {v, w});
        if (!rel.terms.empty()) out.push_back(std::move(rel));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- ThinRep

Rational ThinRep::scalar(const Vertex& from, const Vertex& to) const {
  auto it = arrows.find({from, to});
  return it == arrows.end() ? Rational(0) : it->second;
}

json ThinRep::to_json() const {
  json sup = json::array();
  for (const auto& v : support) sup.push_back(vertex_to_json(v));
  json arr = json::array();
  for (const auto& [ft, s] : arrows)
    arr.push_back(json{{"from", vertex_to_json(ft.first)}, {"to", vertex_to_json(ft.second)}, {"scalar", rational_text(s)}});
  return json{{"support", sup}, {"arrows", arr}};
}

ThinRep ThinRep::from_json(const json& j) {
  if (!j.is_object() || !j.contains("support")) throw Error(ErrorCode::ParseError, "ThinRep JSON needs 'support'");
  ThinRep rep;
  for (const auto& v : j.at("support"))
    if (!rep.support.insert(vertex_from_json(v)).second)
      throw Error(ErrorCode::NotThin, "vertex " + vertex_from_json(v).to_string() + " listed twice");
  if (j.contains("arrows")) {
    for (const auto& a : j.at("arrows")) {
      const Vertex from = vertex_from_json(a.at("from"));
      const Vertex to = vertex_from_json(a.at("to"));
      Rational s = 1;
      if (a.contains("scalar")) {
        const auto& sj = a.at("scalar");
        s = sj.is_string() ? parse_rational(sj.get<std::string>()) : Rational(sj.get<long long>());
      }
      if (s == 0) continue;
      if (!rep.arrows.emplace(std::make_pair(from, to), s).second)
        throw Error(ErrorCode::InvalidRepresentation, "arrow listed twice");
    }
  }
  return rep;
}

void validate_rep(const CartanData& cd, const ThinRep& rep) {
  for (const auto& v : rep.support)
    if (!cd.valid_node(v.i)) throw Error(ErrorCode::InvalidRepresentation, "vertex " + v.to_string());
  for (const auto& [ft, s] : rep.arrows) {
    const auto& [from, to] = ft;
    if (!rep.support.count(from) || !rep.support.count(to))
      throw Error(ErrorCode::InvalidRepresentation, "arrow outside support " + from.to_string() + "->" + to.to_string());
    if (!is_arrow(cd, from, to))
      throw Error(ErrorCode::InvalidRepresentation, "not an arrow of the quiver " + from.to_string() + "->" + to.to_string());
    if (s == 0) throw Error(ErrorCode::InvalidRepresentation, "zero scalar stored");
  }
}

bool check_relations(const ThinRep& rep, const CartanData& cd, const Window& window) {
  for (const Relation& rel : relations(cd, window)) {
    if (!rep.support.count(rel.source()) || !rep.support.count(rel.target())) continue;
    Rational total = 0;
    for (const auto& [coeff, path] : rel.terms) total += coeff * evaluate(rep, path);
    if (total != 0) return false;
  }
  return true;
}

bool check_relations(const ThinRep& rep, const CartanData& cd) {
  if (rep.support.empty()) return true;
  validate_rep(cd, rep);
  int lo = rep.support.begin()->r;
  int hi = lo;
  for (const auto& v : rep.support) {
    lo = std::min(lo, v.r);
    hi = std::max(hi, v.r);
  }
  const int pad = span_bound(cd);
  return check_relations(rep, cd, {lo - pad, hi + pad});
}

LaurentPoly f_polynomial(const ThinRep& rep) {
  const std::vector<Vertex> verts(rep.support.begin(), rep.support.end());
  const std::size_t n = verts.size();
  if (n > 63) throw Error(ErrorCode::InvalidRepresentation, "support too large for subset enumeration");
  auto index_of = [&](const Vertex& v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  // succ[u]: targets of nonzero arrows out of u; pred[u]: sources into u.
  std::vector<std::uint64_t> succ(n, 0);
  std::vector<std::uint64_t> pred(n, 0);
  for (const auto& [ft, s] : rep.arrows) {
    if (s == 0) continue;
    if (!rep.support.count(ft.first) || !rep.support.count(ft.second))
      throw Error(ErrorCode::InvalidRepresentation, "arrow outside support");
    const auto a = index_of(ft.first);
    const auto b = index_of(ft.second);
    succ[a] |= std::uint64_t{1} << b;
    pred[b] |= std::uint64_t{1} << a;
  }
  auto close = [n](std::uint64_t set, const std::vector<std::uint64_t>& edges) {
    std::uint64_t prev = 0;
    while (prev != set) {
      prev = set;
      for (std::size_t u = 0; u < n; ++u)
        if (set >> u & 1u) set |= edges[u];
    }
    return set;
  };

  LaurentPoly out;
  // Subrepresentations of a thin module are exactly the subsets closed under
  // nonzero arrows; each is one point of its quiver Grassmannian.
  std::function<void(std::uint64_t, std::uint64_t, std::size_t)> walk =
      [&](std::uint64_t in, std::uint64_t ex, std::size_t next) {
        while (next < n && ((in | ex) >> next & 1u)) ++next;
        if (next == n) {
          std::vector<Monomial::Factor> f;
          for (std::size_t u = 0; u < n; ++u)
            if (in >> u & 1u) f.emplace_back(vkey(verts[u].i, verts[u].r), 1);
          out.add_term(Monomial::from_factors(std::move(f)), 1);
          return;
        }
        const std::uint64_t bit = std::uint64_t{1} << next;
        const std::uint64_t in2 = close(in | bit, succ);
        if ((in2 & ex) == 0) walk(in2, ex, next + 1);
        const std::uint64_t ex2 = close(ex | bit, pred);
        if ((ex2 & in) == 0) walk(in, ex2, next + 1);
      };
  walk(0, 0, 0);
  return out;
}

bool RepSum::is_thin() const {
  std::set<Vertex> seen;
  for (const auto& s : summands)
    for (const auto& v : s.support)
      if (!seen.insert(v).second) return false;
  return true;
}

ThinRep RepSum::as_thin() const {
  if (!is_thin()) throw Error(ErrorCode::NotThin, "summands share a vertex");
  ThinRep out;
  for (const auto& s : summands) {
    out.support.insert(s.support.begin(), s.support.end());
    out.arrows.insert(s.arrows.begin(), s.arrows.end());
  }
  return out;
}

RepSum direct_sum(const RepSum& a, const RepSum& b) {
  RepSum out = a;
  out.summands.insert(out.summands.end(), b.summands.begin(), b.summands.end());
  return out;
}

RepSum direct_sum(const ThinRep& a, const ThinRep& b) { return RepSum{{a, b}}; }

LaurentPoly f_polynomial(const RepSum& rep) {
  if (rep.is_thin()) return f_polynomial(rep.as_thin());
  LaurentPoly out(1);
  for (const auto& s : rep.summands) out = out * f_polynomial(s);
  return out;
}

Monomial yhat(const CartanData& cd, const Vertex& v) {
  std::vector<Monomial::Factor> f;
  for (const Vertex& w : arrows_from(cd, v)) f.emplace_back(zkey(w.i, w.r), 1);
  for (const Vertex& u : arrows_into(cd, v)) f.emplace_back(zkey(u.i, u.r), -1);
  return Monomial::from_factors(std::move(f));
}

Monomial z_to_y(const CartanData& cd, const Monomial& m) {
  // Group z-exponents by node and residue of r modulo 2 d_j; in each group
  // Y[j, u + d_j] carries the running sum of exponents up to u.
  std::map<std::pair<int, int>, std::map<int, int>> groups;
  for (const auto& [k, e] : m.factors()) {
    if (k.family != Family::Z || !cd.valid_node(k.node))
      throw Error(ErrorCode::NotInImageLattice, "non-z factor " + k.to_string());
    const int step = 2 * cd.d(k.node);
    const int res = ((k.shift % step) + step) % step;
    groups[{k.node, res}][k.shift] = e;
  }
  std::vector<Monomial::Factor> out;
  for (const auto& [key, col] : groups) {
    const int j = key.first;
    const int d = cd.d(j);
    int acc = 0;
    for (int u = col.begin()->first; u <= col.rbegin()->first; u += 2 * d) {
      auto it = col.find(u);
      if (it != col.end()) acc += it->second;
      if (acc != 0) out.emplace_back(ykey(j, u + d), acc);
    }
    if (acc != 0)
      throw Error(ErrorCode::NotInImageLattice, "column " + std::to_string(j) + " has total degree " + std::to_string(acc) +
                                                    " in " + m.to_string());
  }
  return Monomial::from_factors(std::move(out));
}

namespace {

LaurentPoly substitute_yhat(const CartanData& cd, const LaurentPoly& F, const Monomial& prefactor) {
  std::map<Vertex, Monomial> hats;
  LaurentPoly out;
  for (const auto& [m, c] : F.terms()) {
    Monomial z;
    for (const auto& [k, e] : m.factors()) {
      const Vertex v{k.node, k.shift};
      auto it = hats.find(v);
      if (it == hats.end()) it = hats.emplace(v, yhat(cd, v)).first;
      z = z * it->second.pow(e);
    }
    out.add_term(prefactor * z_to_y(cd, z), c);
  }
  return out;
}

}  // namespace

LaurentPoly geometric_qchar(const CartanData& cd, int i, int r, const ThinRep& K) {
  if (!cd.valid_node(i)) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  return substitute_yhat(cd, f_polynomial(K), Monomial(ykey(i, r - cd.d(i))));
}

LaurentPoly geometric_qchar_standard(const CartanData& cd, const std::vector<std::pair<Vertex, ThinRep>>& parts) {
  RepSum sum;
  Monomial prefactor;
  for (const auto& [v, K] : parts) {
    prefactor = prefactor * Monomial(ykey(v.i, v.r - cd.d(v.i)));
    sum.summands.push_back(K);
  }
  return substitute_yhat(cd, f_polynomial(sum), prefactor);
}

bool has_builtin_K(const CartanData& cd) {
  const auto& t = cd.label();
  return (t.family == 'A' && t.rank <= 2) || (t.family == 'B' && t.rank == 2);
}

ThinRep builtin_K(const CartanData& cd, int i, int r) {
  if (!has_builtin_K(cd))
    throw Error(ErrorCode::UnsupportedType, "no built-in K modules for " + cd.label().to_string());
  if (!cd.valid_node(i)) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  ThinRep K;
  auto chain = [&K](std::vector<Vertex> path) {
    // path runs from the top of the module down to its socle
    K.support.insert(path.begin(), path.end());
    for (std::size_t k = 0; k + 1 < path.size(); ++k) K.arrows.emplace(std::make_pair(path[k], path[k + 1]), 1);
  };
  const auto& t = cd.label();
  if (t.family == 'A' && t.rank == 1) {
    chain({{1, r}});
  } else if (t.family == 'A') {
    const int j = 3 - i;
    chain({{j, r + 1}, {i, r}});
  } else if (i == 1) {
    chain({{1, r + 2}, {2, r}, {2, r + 2}, {1, r}});
  } else {
    chain({{2, r + 4}, {1, r + 2}, {2, r}});
  }
  return K;
}

}  // namespace qaff
