#include "qaff/tsystem.hpp"

#include <fstream>

#include "qaff/error.hpp"
#include "qaff/quivrep.hpp"

namespace qaff {

std::vector<KRIndex> s_term_factors(const CartanData& cd, int i, int k, int r) {
  if (!cd.valid_node(i)) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  if (k < 0) throw Error(ErrorCode::IndexOutOfRange, "negative level " + std::to_string(k));
  std::vector<KRIndex> f;
  const int n = cd.rank();
  const int di = cd.d(i);
  if (cd.simply_laced()) {
    for (int j = 1; j <= n; ++j)
      if (j != i && cd.c(i, j) == -1) f.push_back({j, k, r});
  } else if (di >= 2) {
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      if (cd.c(j, i) == -1) f.push_back({j, k, r});
      if (cd.c(j, i) <= -2) f.push_back({j, di * k, r - di + 1});
    }
  } else if (cd.t() == 2) {
    const int l = k / 2;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      if (cd.c(i, j) == -1) f.push_back({j, k, r});
      if (cd.c(i, j) == -2) {
        f.push_back({j, k % 2 == 0 ? l : l + 1, r});
        f.push_back({j, l, r + 2});
      }
    }
  } else {
    const int j = i == 1 ? 2 : 1;
    const int l = k / 3;
    const int m = k % 3;
    f.push_back({j, m >= 1 ? l + 1 : l, r});
    f.push_back({j, m >= 2 ? l + 1 : l, r + 2});
    f.push_back({j, l, r + 4});
  }
  std::erase_if(f, [](const KRIndex& x) { return x.k == 0; });
  return f;
}

LaurentPoly s_term(const CartanData& cd, int i, int k, int r, const TLookup& T) {
  LaurentPoly out(1);
  for (const KRIndex& x : s_term_factors(cd, i, k, r)) out = out * T(x.i, x.k, x.r);
  return out;
}

Monomial kr_highest_monomial(const CartanData& cd, int i, int k, int r) {
  std::vector<Monomial::Factor> f;
  for (int j = 0; j < k; ++j) f.emplace_back(ykey(i, r + 2 * cd.d(i) * j), 1);
  return Monomial::from_factors(std::move(f));
}

// ------------------------------------------------------- FundamentalProvider

void FundamentalProvider::add(const CartanData& cd, int i, LaurentPoly p) {
  if (!cd.valid_node(i)) throw Error(ErrorCode::InvalidFundamental, "node " + std::to_string(i) + " out of range");
  if (p.coefficient(Monomial(ykey(i, 0))) != 1)
    throw Error(ErrorCode::InvalidFundamental, "fundamental " + std::to_string(i) + " lacks Y[" + std::to_string(i) +
                                                   ",0] with coefficient 1");
  for (const auto& [m, c] : p.terms())
    for (const auto& [key, e] : m.factors())
      if (key.family != Family::Y || !cd.valid_node(key.node))
        throw Error(ErrorCode::InvalidFundamental, "unexpected variable " + key.to_string());
  base_[i] = std::move(p);
}

FundamentalProvider FundamentalProvider::builtin(const CartanData& cd) {
  if (!has_builtin_K(cd))
    throw Error(ErrorCode::UnsupportedType,
                "no built-in fundamentals for " + cd.label().to_string() + "; pass a fundamentals file");
  FundamentalProvider fp;
  fp.source_ = "builtin:" + cd.label().to_string();
  for (int i = 1; i <= cd.rank(); ++i) {
    const int r = cd.d(i);
    fp.add(cd, i, geometric_qchar(cd, i, r, builtin_K(cd, i, r)));
  }
  return fp;
}

FundamentalProvider FundamentalProvider::from_json(const CartanData& cd, const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "fundamentals JSON must be an object");
  FundamentalProvider fp;
  fp.source_ = "json";
  for (const auto& [key, value] : j.items()) {
    int i = 0;
    try {
      std::size_t used = 0;
      i = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "fundamentals key '" + key + "' is not a node index");
    }
    fp.add(cd, i, poly_from_json(value));
  }
  return fp;
}

FundamentalProvider FundamentalProvider::from_file(const CartanData& cd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  FundamentalProvider fp = from_json(cd, j);
  fp.source_ = "file:" + path;
  return fp;
}

LaurentPoly FundamentalProvider::operator()(int i, int r) const {
  auto it = base_.find(i);
  if (it == base_.end()) throw Error(ErrorCode::MissingFundamental, "no fundamental q-character for node " + std::to_string(i));
  return spectral_shift(it->second, r);
}

// ------------------------------------------------------------ TSystemSolver

TSystemSolver::TSystemSolver(CartanData cd, FundamentalProvider fp) : cd_(std::move(cd)), fp_(std::move(fp)) {}

LaurentPoly TSystemSolver::kr_qchar(int i, int k, int r) {
  std::set<KRIndex> active;
  return get({i, k, r}, active);
}

LaurentPoly TSystemSolver::s_term(int i, int k, int r) {
  std::set<KRIndex> active;
  return qaff::s_term(cd_, i, k, r, [&](int j, int kk, int rr) { return get({j, kk, rr}, active); });
}

LaurentPoly TSystemSolver::get(const KRIndex& idx, std::set<KRIndex>& active) {
  if (!cd_.valid_node(idx.i)) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(idx.i));
  if (idx.k < 0) throw Error(ErrorCode::IndexOutOfRange, "negative level " + std::to_string(idx.k));
  if (idx.k == 0) return LaurentPoly(1);
  {
    std::shared_lock lock(mu_);
    auto it = memo_.find(idx);
    if (it != memo_.end()) return it->second;
  }
  if (!active.insert(idx).second) throw Error(ErrorCode::DependencyCycle, "cycle through " + idx.to_string());
  LaurentPoly p = compute(idx, active);
  active.erase(idx);
  std::unique_lock lock(mu_);
  return memo_.emplace(idx, std::move(p)).first->second;
}

LaurentPoly TSystemSolver::compute(const KRIndex& idx, std::set<KRIndex>& active) {
  const auto [i, K, s] = idx;
  if (K == 1) return fp_(i, s);
  // T_{K,s} T_{K-2,s+2d} = T_{K-1,s+2d} T_{K-1,s} - S_{K-1,s+d}
  const int d = cd_.d(i);
  const LaurentPoly lhs = get({i, K - 1, s + 2 * d}, active) * get({i, K - 1, s}, active);
  const LaurentPoly S =
      qaff::s_term(cd_, i, K - 1, s + d, [&](int j, int kk, int rr) { return get({j, kk, rr}, active); });
  LaurentPoly p = exact_div(lhs - S, get({i, K - 2, s + 2 * d}, active));
  if (!p.nonnegative_coefficients())
    throw Error(ErrorCode::InconsistentTSystem, idx.to_string() + " has a negative multiplicity");
  return p;
}

bool TSystemSolver::verify(int i, int k, int r) {
  if (k < 1) throw Error(ErrorCode::IndexOutOfRange, "T-system equations start at k = 1");
  const int d = cd_.d(i);
  const LaurentPoly diff = kr_qchar(i, k, r + d) * kr_qchar(i, k, r - d) -
                           kr_qchar(i, k - 1, r + d) * kr_qchar(i, k + 1, r - d) - s_term(i, k, r);
  return diff.is_zero();
}

void TSystemSolver::preload(const KRIndex& idx, const LaurentPoly& p) {
  std::unique_lock lock(mu_);
  memo_.insert_or_assign(idx, p);
}

std::map<KRIndex, LaurentPoly> TSystemSolver::table() const {
  std::shared_lock lock(mu_);
  return memo_;
}

std::size_t TSystemSolver::computed() const {
  std::shared_lock lock(mu_);
  return memo_.size();
}

LaurentPoly kr_qchar(const CartanData& cd, const KRIndex& idx, const FundamentalProvider& fp) {
  TSystemSolver solver(cd, fp);
  return solver.kr_qchar(idx);
}

bool verify_tsystem(const CartanData& cd, int i, int k, int r, const FundamentalProvider& fp) {
  TSystemSolver solver(cd, fp);
  return solver.verify(i, k, r);
}

}  // namespace qaff
