#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <vector>

#include "qaff/cartan.hpp"
#include "qaff/kr_index.hpp"
#include "qaff/laurent.hpp"

namespace qaff {

using TLookup = std::function<LaurentPoly(int j, int k, int r)>;

// The KR indices whose product is S^{(i)}_{k,r}, with k = 0 factors dropped.
std::vector<KRIndex> s_term_factors(const CartanData& cd, int i, int k, int r);
LaurentPoly s_term(const CartanData& cd, int i, int k, int r, const TLookup& T);

// prod_{j<k} Y[i, r + 2 d_i j].
Monomial kr_highest_monomial(const CartanData& cd, int i, int k, int r);

// q-characters of the fundamental modules W^{(i)}_{1,q^r}, stored at r = 0
// and shifted on demand.
class FundamentalProvider {
 public:
  // A1, A2, B2 through the geometric character formula. Throws UnsupportedType.
  static FundamentalProvider builtin(const CartanData& cd);
  // {"1": <poly JSON of chi_q(W^{(1)}_{1,q^0})>, "2": ...}.
  // Throws ParseError / InvalidFundamental.
  static FundamentalProvider from_json(const CartanData& cd, const json& j);
  static FundamentalProvider from_file(const CartanData& cd, const std::string& path);

  bool has(int i) const { return base_.count(i) > 0; }
  // Throws MissingFundamental.
  LaurentPoly operator()(int i, int r) const;
  const std::string& source() const { return source_; }

 private:
  void add(const CartanData& cd, int i, LaurentPoly p);

  std::map<int, LaurentPoly> base_;
  std::string source_;
};

// Memoized solver for T^{(i)}_{k,r} = chi_q(W^{(i)}_{k,q^r}). Any integer r
// is accepted. Lookups are thread safe; distinct indices may be computed
// concurrently.
class TSystemSolver {
 public:
  TSystemSolver(CartanData cd, FundamentalProvider fp);

  const CartanData& cartan() const { return cd_; }

  // Throws ExactDivisionFailed, DependencyCycle, MissingFundamental,
  // InconsistentTSystem (negative multiplicity).
  LaurentPoly kr_qchar(int i, int k, int r);
  LaurentPoly kr_qchar(const KRIndex& idx) { return kr_qchar(idx.i, idx.k, idx.r); }
  LaurentPoly s_term(int i, int k, int r);

  // T_{k,r+d} T_{k,r-d} - T_{k-1,r+d} T_{k+1,r-d} - S_{k,r} == 0.
  bool verify(int i, int k, int r);

  // Seeds the memo (cache files). Entries are trusted.
  void preload(const KRIndex& idx, const LaurentPoly& p);
  std::map<KRIndex, LaurentPoly> table() const;
  std::size_t computed() const;

 private:
  LaurentPoly get(const KRIndex& idx, std::set<KRIndex>& active);
  LaurentPoly compute(const KRIndex& idx, std::set<KRIndex>& active);

  CartanData cd_;
  FundamentalProvider fp_;
  mutable std::shared_mutex mu_;
  std::map<KRIndex, LaurentPoly> memo_;
};

LaurentPoly kr_qchar(const CartanData& cd, const KRIndex& idx, const FundamentalProvider& fp);
bool verify_tsystem(const CartanData& cd, int i, int k, int r, const FundamentalProvider& fp);

}  // namespace qaff
