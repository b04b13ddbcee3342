#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qaff/laurent.hpp"

namespace qaff {

class TSystemSolver;

// q-string {q^lo, q^{lo+2}, ..., q^{lo+2(n-1)}}, stored by exponents.
struct Str {
  int lo = 0;
  int n = 1;

  int hi() const { return lo + 2 * (n - 1); }
  bool contains(const Str& o) const { return (lo - o.lo) % 2 == 0 && lo <= o.lo && o.hi() <= hi(); }
  std::string to_string() const;
  auto operator<=>(const Str&) const = default;
};

// [lo..hi] with hi - lo even and nonnegative. Throws InvalidConfig.
Str str_interval(int lo, int hi);
// "(lo,n);(lo,n)". Throws ParseError.
std::vector<Str> parse_strings(const std::string& text);

bool in_general_position(const Str& a, const Str& b);

// Sigma3 = union, Sigma4 = intersection, Sigma5/Sigma6 = the parts of the
// union lying beyond the nearest neighbours of the intersection.
struct SpecialSplit {
  Str s3;
  std::optional<Str> s4;
  std::optional<Str> s5;
  std::optional<Str> s6;
};

// Throws NotSpecialPosition.
SpecialSplit special_split(const Str& a, const Str& b);

// Multiset of strings in pairwise general position (sorted).
class SimpleClass {
 public:
  SimpleClass() = default;
  // Throws InvalidConfig if two strings are in special position.
  explicit SimpleClass(std::vector<Str> strings);

  const std::vector<Str>& strings() const { return strings_; }
  bool is_trivial() const { return strings_.empty(); }
  std::string to_string() const;
  json to_json() const;
  auto operator<=>(const SimpleClass&) const = default;

 private:
  std::vector<Str> strings_;
};

// Classes of simple modules with positive multiplicities.
using K0Elem = std::map<SimpleClass, Integer>;

json k0_to_json(const K0Elem& e);
std::string k0_to_string(const K0Elem& e);

K0Elem tensor_pair(const Str& a, const Str& b);

// Picks one special pair (indices into the sorted string list) out of the
// nonempty list of candidates.
using PairSelector = std::function<std::size_t(const std::vector<std::pair<std::size_t, std::size_t>>&)>;

struct NormalizeStep {
  std::vector<Str> before;
  Str a;
  Str b;
  // (total length, -sum of squared lengths) before and after, per branch.
  std::pair<long long, long long> measure_before;
  std::pair<long long, long long> measure_union;
  std::pair<long long, long long> measure_outer;
};

// Expands the tensor product of V(strings) into simple classes. The default
// selector takes the lexicographically first special pair.
K0Elem normalize(const std::vector<Str>& product, const PairSelector& select = {},
                 std::vector<NormalizeStep>* trace = nullptr);

std::pair<long long, long long> normalize_measure(const std::vector<Str>& strings);

// Every point of every string lies in {0, -2, ..., -2 ell}.
bool in_category_ell(const SimpleClass& c, int ell);

// Products of A1 Kirillov-Reshetikhin q-characters; `a1` must be an A1 solver.
LaurentPoly string_qchar(TSystemSolver& a1, const Str& s);
LaurentPoly class_qchar(TSystemSolver& a1, const SimpleClass& c);
LaurentPoly k0_qchar(TSystemSolver& a1, const K0Elem& e);

}  // namespace qaff
