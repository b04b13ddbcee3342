#include "qaff/verify.hpp"

#include <random>

#include "qaff/cluster.hpp"
#include "qaff/error.hpp"
#include "qaff/quivrep.hpp"
#include "qaff/sl2strings.hpp"

namespace qaff {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> p{
      {"paper-A3-l1", "A3", 1, {2, -1}},
      {"paper-B2-l2", "B2", 2, {1, -2}},
      {"paper-G2-l3", "G2", 3, {1, -3}},
      {"paper-A2-l1", "A2", 1, {2, -1}},
  };
  return p;
}

const Preset& find_preset(const std::string& name) {
  for (const auto& p : presets())
    if (p.name == name) return p;
  throw Error(ErrorCode::InvalidConfig, "unknown preset '" + name + "'");
}

bool SuiteReport::ok() const {
  for (const auto& c : checks)
    if (!c.skipped && !c.passed) return false;
  return true;
}

void SuiteReport::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, false, std::move(detail)});
}

void SuiteReport::skip(std::string name, std::string why) {
  checks.push_back({std::move(name), true, true, std::move(why)});
}

namespace {

std::optional<FundamentalProvider> provider_for(const VerifyOptions& opt) {
  if (opt.fundamentals) return opt.fundamentals;
  if (has_builtin_K(opt.cd)) return FundamentalProvider::builtin(opt.cd);
  return std::nullopt;
}

std::string range_text(int lo, int hi) { return "r in [" + std::to_string(lo) + "," + std::to_string(hi) + "]"; }

void append(SuiteReport& into, const SuiteReport& from) {
  into.checks.insert(into.checks.end(), from.checks.begin(), from.checks.end());
}

// Runs `body`; library errors become a failed check.
template <class F>
void guarded(SuiteReport& rep, const std::string& name, F&& body) {
  try {
    body();
  } catch (const Error& e) {
    rep.add(name, false, e.what());
  }
}

}  // namespace

SuiteReport verify_tsystem_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  const auto fp = provider_for(opt);
  const std::string tag = opt.cd.label().to_string();
  if (!fp) {
    rep.skip("tsystem " + tag, "no fundamental q-characters (pass --fundamentals)");
    return rep;
  }
  TSystemSolver solver(opt.cd, *fp);
  for (int i = 1; i <= opt.cd.rank(); ++i) {
    for (int k = 1; k <= opt.kmax; ++k) {
      const std::string name = tag + " T-system i=" + std::to_string(i) + " k=" + std::to_string(k);
      guarded(rep, name, [&] {
        int bad = 0;
        std::string first;
        for (int r = -opt.window; r <= opt.window; ++r) {
          if (!solver.verify(i, k, r)) {
            if (!bad) first = " first failure at r=" + std::to_string(r);
            ++bad;
          }
        }
        rep.add(name, bad == 0, range_text(-opt.window, opt.window) + first);
      });
      const std::string hname = tag + " highest monomial i=" + std::to_string(i) + " k=" + std::to_string(k);
      guarded(rep, hname, [&] {
        const LaurentPoly t = solver.kr_qchar(i, k, 0);
        rep.add(hname, t.coefficient(kr_highest_monomial(opt.cd, i, k, 0)) == 1 && t.nonnegative_coefficients(),
                "dim " + dimension(t).str());
      });
      const std::string sname = tag + " shift equivariance i=" + std::to_string(i) + " k=" + std::to_string(k);
      guarded(rep, sname, [&] {
        const LaurentPoly t = solver.kr_qchar(i, k, 0);
        bool ok = true;
        for (int s = -4; s <= 4; ++s) ok = ok && solver.kr_qchar(i, k, s) == spectral_shift(t, s);
        rep.add(sname, ok);
      });
    }
  }
  return rep;
}

SuiteReport verify_geometric_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  const CartanData& cd = opt.cd;
  const std::string tag = cd.label().to_string();
  if (!has_builtin_K(cd)) {
    rep.skip("geometric " + tag, "no built-in K modules for this type");
    return rep;
  }
  const FundamentalProvider builtin = FundamentalProvider::builtin(cd);
  for (int i = 1; i <= cd.rank(); ++i) {
    const std::string name = tag + " geometric formula i=" + std::to_string(i);
    guarded(rep, name, [&] {
      bool relations_ok = true, f_ok = true, q_ok = true, stable = true, user_ok = true;
      for (int r = -opt.window; r <= opt.window; ++r) {
        const ThinRep K = builtin_K(cd, i, r);
        relations_ok = relations_ok && check_relations(K, cd);
        stable = stable && check_relations(K, cd, {r - 12, r + 16}) == check_relations(K, cd, {r - 40, r + 44});
        const LaurentPoly F = f_polynomial(K);
        f_ok = f_ok && F.coefficient(Monomial()) == 1 && F.nonnegative_coefficients();
        const LaurentPoly chi = geometric_qchar(cd, i, r, K);
        q_ok = q_ok && chi == builtin(i, r - cd.d(i)) && chi.nonnegative_coefficients();
        if (opt.fundamentals) user_ok = user_ok && chi == (*opt.fundamentals)(i, r - cd.d(i));
      }
      rep.add(name, relations_ok && f_ok && q_ok && stable && user_ok,
              range_text(-opt.window, opt.window) + (opt.fundamentals ? ", compared with supplied fundamentals" : ""));
    });
  }
  const std::string mname = tag + " F-polynomial multiplicativity";
  guarded(rep, mname, [&] {
    bool ok = true;
    for (int i = 1; i <= cd.rank(); ++i)
      for (int j = 1; j <= cd.rank(); ++j)
        for (int s = -4; s <= 4; ++s) {
          const ThinRep a = builtin_K(cd, i, 0);
          const ThinRep b = builtin_K(cd, j, s);
          ok = ok && f_polynomial(direct_sum(a, b)) == f_polynomial(a) * f_polynomial(b);
        }
    rep.add(mname, ok);
  });
  return rep;
}

namespace {

std::pair<Str, Str> random_special_pair(std::mt19937& rng) {
  auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const Str a{pick(-12, 12), pick(1, 7)};
  const int lo2 = a.lo + 2 * pick(1, a.n);
  const int hi2 = a.hi() + 2 * pick(1, 6);
  const Str b = str_interval(lo2, hi2);
  return pick(0, 1) ? std::make_pair(a, b) : std::make_pair(b, a);
}

}  // namespace

SuiteReport verify_sl2_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  const CartanData a1 = cartan_from_label("A1");
  TSystemSolver solver(a1, FundamentalProvider::builtin(a1));
  guarded(rep, "sl2 worked example split", [&] {
    const SpecialSplit s = special_split(str_interval(0, 8), str_interval(6, 16));
    const bool ok = s.s3 == str_interval(0, 16) && s.s4 == str_interval(6, 8) && s.s5 == str_interval(0, 2) &&
                    s.s6 == str_interval(12, 16);
    rep.add("sl2 worked example split", ok);
  });
  guarded(rep, "sl2 character identity", [&] {
    std::mt19937 rng(opt.seed);
    int bad = 0;
    for (int n = 0; n < 200; ++n) {
      const auto [a, b] = random_special_pair(rng);
      const LaurentPoly lhs = string_qchar(solver, a) * string_qchar(solver, b);
      if (lhs != k0_qchar(solver, tensor_pair(a, b))) ++bad;
    }
    rep.add("sl2 character identity", bad == 0, "200 random special pairs, " + std::to_string(bad) + " failures");
  });
  guarded(rep, "sl2 normalize confluence", [&] {
    std::mt19937 rng(opt.seed + 1);
    auto pick = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    bool ok = true;
    for (int n = 0; n < 50; ++n) {
      std::vector<Str> triple;
      for (int m = 0; m < 3; ++m) triple.push_back({2 * pick(-4, 4), pick(1, 4)});
      const K0Elem first = normalize(triple);
      const K0Elem last = normalize(triple, [](const auto& c) { return c.size() - 1; });
      std::mt19937 inner(opt.seed + static_cast<unsigned>(n));
      const K0Elem random = normalize(triple, [&inner](const auto& c) {
        return std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(inner);
      });
      LaurentPoly product(1);
      for (const auto& s : triple) product = product * string_qchar(solver, s);
      ok = ok && first == last && first == random && k0_qchar(solver, first) == product;
    }
    rep.add("sl2 normalize confluence", ok, "50 random triples");
  });
  for (int ell = 1; ell <= 3; ++ell) {
    const std::string name = "sl2 cluster cross-check ell=" + std::to_string(ell);
    guarded(rep, name, [&] {
      const std::string err = sl2_cluster_crosscheck(ell);
      rep.add(name, err.empty(), err);
    });
  }
  return rep;
}

std::string sl2_cluster_crosscheck(int ell) {
  const CartanData a1 = cartan_from_label("A1");
  TSystemSolver solver(a1, FundamentalProvider::builtin(a1));
  const TruncationParams params{ell, default_anchor(a1)};
  const Seed s0 = initial_seed(a1, params);
  const auto table = realization_table(a1, params, solver);

  std::map<LaurentPoly, Str> by_qchar;
  for (int lo = -2 * ell; lo <= 0; lo += 2)
    for (int hi = lo; hi <= 0; hi += 2) {
      const Str s = str_interval(lo, hi);
      by_qchar.emplace(string_qchar(solver, s), s);
    }

  const ClosureResult closure = enumerate_closure(s0, 100000);
  if (!closure.closed) return "closure not reached";
  std::map<ClusterVar, Str> label;
  auto add_label = [&](const ClusterVar& x) -> std::string {
    const LaurentPoly chi = realize_qchar(x, table);
    auto it = by_qchar.find(chi);
    if (it == by_qchar.end()) return "cluster variable " + x.to_string() + " is not a string in S";
    label.emplace(x, it->second);
    return {};
  };
  for (const auto& x : closure.variables)
    if (auto e = add_label(x); !e.empty()) return e;
  for (const auto& x : closure.frozen)
    if (auto e = add_label(x); !e.empty()) return e;
  std::set<Str> hit;
  for (const auto& [x, s] : label) hit.insert(s);
  if (hit.size() != label.size() || hit.size() != by_qchar.size())
    return "cluster variables and strings in S are not in bijection";
  const SimpleClass frozen_class({str_interval(-2 * ell, 0)});
  for (const auto& x : closure.frozen)
    if (SimpleClass({label.at(x)}) != frozen_class) return "frozen variable is not the full string";

  auto class_of = [&label](const std::vector<ClusterVar>& vars) {
    std::vector<Str> strings;
    for (const auto& v : vars) strings.push_back(label.at(v));
    return SimpleClass(strings);
  };
  for (const Exchange& ex : closure.exchanges) {
    const Str a = label.at(ex.before);
    const Str b = label.at(ex.after);
    if (in_general_position(a, b)) return "exchanged strings " + a.to_string() + ", " + b.to_string() + " are general";
    K0Elem expect;
    expect[class_of(ex.in_vars)] += 1;
    expect[class_of(ex.out_vars)] += 1;
    if (tensor_pair(a, b) != expect)
      return "exchange at " + ex.vertex.to_string() + " differs from tensor_pair(" + a.to_string() + "," + b.to_string() + ")";
  }
  return {};
}

SuiteReport verify_cluster_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  const CartanData& cd = opt.cd;
  const std::string tag = cd.label().to_string() + " ell=" + std::to_string(opt.ell) + " anchor " + opt.anchor.to_string();
  const TruncationParams params{opt.ell, opt.anchor};
  const Seed s0 = initial_seed(cd, params);
  ClosureResult closure;
  guarded(rep, "cluster closure " + tag, [&] {
    closure = enumerate_closure(s0, opt.max_seeds);
    rep.add("cluster closure " + tag, closure.closed,
            std::to_string(closure.variables.size()) + " cluster variables, " + std::to_string(closure.frozen.size()) +
                " frozen, " + std::to_string(closure.seed_count) + " seeds" + (closure.closed ? "" : " (cap reached)"));
  });
  guarded(rep, "cluster Laurent phenomenon " + tag, [&] {
    bool ok = true;
    for (const auto& x : closure.variables) ok = ok && x.denominator().is_polynomial() && x.numerator().nonnegative_coefficients();
    for (const auto& ex : closure.exchanges) ok = ok && ex.before.laurent * ex.after.laurent == ex.in_product + ex.out_product;
    rep.add("cluster Laurent phenomenon " + tag, ok, "monomial denominators, positive numerators, exchange relations");
  });
  const auto fp = provider_for(opt);
  if (!fp) {
    rep.skip("cluster realization " + tag, "no fundamental q-characters (pass --fundamentals)");
    return rep;
  }
  guarded(rep, "cluster realization " + tag, [&] {
    TSystemSolver solver(cd, *fp);
    const auto table = realization_table(cd, params, solver);
    bool ok = true;
    for (const auto& x : closure.variables) ok = ok && realize_qchar(x, table).nonnegative_coefficients();
    rep.add("cluster realization " + tag, ok, "every cluster variable realizes to a positive q-character");
  });
  return rep;
}

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opt) {
  if (suite == "tsystem") return verify_tsystem_suite(opt);
  if (suite == "geometric") return verify_geometric_suite(opt);
  if (suite == "sl2") return verify_sl2_suite(opt);
  if (suite == "cluster") return verify_cluster_suite(opt);
  if (suite == "all") {
    SuiteReport rep;
    for (const auto& s : {"tsystem", "geometric", "sl2", "cluster"}) append(rep, run_suite(s, opt));
    return rep;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown suite '" + suite + "'");
}

}  // namespace qaff
