#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace qaff {

using Integer = boost::multiprecision::cpp_int;
using json = nlohmann::json;

// Variable families: Y (loop weights), z (cluster variables), v (F-polynomial).
enum class Family : std::uint8_t { Y = 0, Z = 1, V = 2 };

// Indexed variable family[node, shift]. Ordered by (family, node, shift).
struct VarKey {
  Family family = Family::Y;
  int node = 0;
  int shift = 0;

  auto operator<=>(const VarKey&) const = default;
  std::string to_string() const;
};

inline VarKey ykey(int i, int r) { return {Family::Y, i, r}; }
inline VarKey zkey(int i, int r) { return {Family::Z, i, r}; }
inline VarKey vkey(int i, int r) { return {Family::V, i, r}; }

// Laurent monomial: sorted (VarKey, exponent) pairs, no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<VarKey, int>;

  Monomial() = default;
  explicit Monomial(VarKey key, int exponent = 1);
  // Builds from arbitrary factors; merges repeated keys and drops zeros.
  static Monomial from_factors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  int exponent(const VarKey& key) const;
  int degree() const;
  bool is_one() const { return factors_.empty(); }
  // True when every exponent is >= 0.
  bool is_polynomial() const;

  Monomial operator*(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const { return *this * o.inverse(); }
  Monomial inverse() const;
  Monomial pow(int e) const;
  // Whether o divides *this inside the polynomial monoid (exponent-wise <=).
  bool divisible_by(const Monomial& o) const;

  bool operator==(const Monomial&) const = default;
  std::string to_string() const;
  std::size_t hash() const;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic comparison: total degree first, then the exponent of
// the smallest VarKey where the two differ. Returns <0, 0, >0.
int graded_lex_compare(const Monomial& a, const Monomial& b);

struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Exact sparse Laurent polynomial with unbounded integer coefficients.
// Terms are kept in descending graded-lex order with no zero coefficients.
class LaurentPoly {
 public:
  using TermMap = std::map<Monomial, Integer, MonomialDescending>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: implicit integer constants
  explicit LaurentPoly(const Integer& constant);
  LaurentPoly(const Monomial& m, const Integer& coeff = 1);

  static LaurentPoly var(VarKey key, int exponent = 1) { return LaurentPoly(Monomial(key, exponent)); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Integer coefficient(const Monomial& m) const;
  const std::pair<const Monomial, Integer>& leading_term() const;

  void add_term(const Monomial& m, const Integer& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator*(const Monomial& m) const;
  LaurentPoly pow(unsigned e) const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  // Total order used for canonical sorting of polynomials.
  friend std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b);

  // Per variable, the minimum exponent over all terms (only nonzero minima).
  Monomial min_exponents() const;
  bool nonnegative_coefficients() const;

  std::string to_string() const;
  json to_json() const;

 private:
  TermMap terms_;
};

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_sub(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q);

// s with s*q == p. Throws DivisionByZero or ExactDivisionFailed.
LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q);

using Substitution = std::map<VarKey, LaurentPoly>;
// Ring-homomorphic substitution; unmapped variables pass through. Negative
// powers are only allowed for images that are a single monomial with unit
// coefficient (NegativePowerOfNonMonomial otherwise).
LaurentPoly substitute(const LaurentPoly& p, const Substitution& image);

// (f, i, r) -> (f, i, r + s) on every variable.
LaurentPoly spectral_shift(const LaurentPoly& p, int s);
Monomial spectral_shift(const Monomial& m, int s);

// Sum of all coefficients.
Integer dimension(const LaurentPoly& p);

// Text form: "3*Y[1,-2]^2*Y[2,1]^-1 - z[1,0] + 1". Families print as Y, z, v.
LaurentPoly parse_poly(const std::string& text);
Monomial parse_monomial(const std::string& text);
VarKey parse_varkey(const std::string& text);

// JSON form: [{"coeff": "3", "monomial": {"Y[1,-2]": 2, "Y[2,1]": -1}}, ...].
LaurentPoly poly_from_json(const json& j);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

}  // namespace qaff
