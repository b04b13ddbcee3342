#include "qaff/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "qaff/error.hpp"

namespace qaff {

namespace {

char family_char(Family f) {
  switch (f) {
    case Family::Y: return 'Y';
    case Family::Z: return 'z';
    case Family::V: return 'v';
  }
  return '?';
}

bool is_integer_text(const std::string& s) {
  std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (k >= s.size()) return false;
  return std::all_of(s.begin() + static_cast<long>(k), s.end(),
                     [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
}

Integer parse_integer(const std::string& s) {
  if (!is_integer_text(s)) throw Error(ErrorCode::ParseError, "not an integer: '" + s + "'");
  return Integer(s[0] == '+' ? s.substr(1) : s);
}

}  // namespace

// ---------------------------------------------------------------- VarKey

std::string VarKey::to_string() const {
  return std::string(1, family_char(family)) + "[" + std::to_string(node) + "," + std::to_string(shift) + "]";
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(VarKey key, int exponent) {
  if (exponent != 0) factors_.emplace_back(key, exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
  Monomial m;
  for (const auto& [k, e] : factors) {
    if (!m.factors_.empty() && m.factors_.back().first == k)
      m.factors_.back().second += e;
    else
      m.factors_.emplace_back(k, e);
    if (m.factors_.back().second == 0) m.factors_.pop_back();
  }
  return m;
}

int Monomial::exponent(const VarKey& key) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), key,
                             [](const Factor& f, const VarKey& k) { return f.first < k; });
  return (it != factors_.end() && it->first == key) ? it->second : 0;
}

int Monomial::degree() const {
  int d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

bool Monomial::is_polynomial() const {
  return std::all_of(factors_.begin(), factors_.end(), [](const Factor& f) { return f.second > 0; });
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + o.factors_.size());
  auto a = factors_.begin();
  auto b = o.factors_.begin();
  while (a != factors_.end() || b != o.factors_.end()) {
    if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      const int e = a->second + b->second;
      if (e != 0) out.factors_.emplace_back(a->first, e);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::inverse() const {
  Monomial out = *this;
  for (auto& f : out.factors_) f.second = -f.second;
  return out;
}

Monomial Monomial::pow(int e) const {
  if (e == 0) return {};
  Monomial out = *this;
  for (auto& f : out.factors_) f.second *= e;
  return out;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (const auto& [k, e] : o.factors_)
    if (exponent(k) < e) return false;
  for (const auto& [k, e] : factors_)
    if (e < 0 && o.exponent(k) == 0) return false;
  return true;
}

std::string Monomial::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [k, e] : factors_) {
    if (!out.empty()) out += '*';
    out += k.to_string();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&h](std::size_t v) { h = (h ^ v) * 1099511628211ull; };
  for (const auto& [k, e] : factors_) {
    mix(static_cast<std::size_t>(k.family));
    mix(static_cast<std::size_t>(k.node));
    mix(static_cast<std::size_t>(static_cast<long long>(k.shift)));
    mix(static_cast<std::size_t>(static_cast<long long>(e)));
  }
  return h;
}

int graded_lex_compare(const Monomial& a, const Monomial& b) {
  const int da = a.degree();
  const int db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto x = fa.begin();
  auto y = fb.begin();
  while (x != fa.end() || y != fb.end()) {
    int ea = 0;
    int eb = 0;
    if (y == fb.end() || (x != fa.end() && x->first < y->first)) {
      ea = (x++)->second;
    } else if (x == fa.end() || y->first < x->first) {
      eb = (y++)->second;
    } else {
      ea = (x++)->second;
      eb = (y++)->second;
    }
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.emplace(Monomial{}, Integer(constant));
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

LaurentPoly::LaurentPoly(const Monomial& m, const Integer& coeff) {
  if (coeff != 0) terms_.emplace(m, coeff);
}

Integer LaurentPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

const std::pair<const Monomial, Integer>& LaurentPoly::leading_term() const {
  if (terms_.empty()) throw Error(ErrorCode::InvalidConfig, "leading term of zero polynomial");
  return *terms_.begin();
}

void LaurentPoly::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial() && b.terms_.begin()->second == 1) return a * b.terms_.begin()->first;
  if (a.is_monomial() && a.terms_.begin()->second == 1) return b * a.terms_.begin()->first;
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) acc[ma * mb] += ca * cb;
  LaurentPoly out;
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.emplace(m, std::move(c));
  return out;
}

LaurentPoly LaurentPoly::operator*(const Monomial& m) const {
  if (m.is_one()) return *this;
  LaurentPoly out;
  // Multiplication by a monomial preserves the order.
  for (const auto& [t, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), t * m, c);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

std::strong_ordering operator<=>(const LaurentPoly& a, const LaurentPoly& b) {
  auto x = a.terms_.begin();
  auto y = b.terms_.begin();
  for (; x != a.terms_.end() && y != b.terms_.end(); ++x, ++y) {
    const int mc = graded_lex_compare(x->first, y->first);
    if (mc != 0) return mc < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (x->second != y->second) return x->second < y->second ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

Monomial LaurentPoly::min_exponents() const {
  // Absent variables count as exponent 0.
  std::map<VarKey, int> mins;
  for (const auto& [m, c] : terms_)
    for (const auto& [k, e] : m.factors()) mins.try_emplace(k, e);
  for (auto& [k, lo] : mins)
    for (const auto& [m, c] : terms_) lo = std::min(lo, m.exponent(k));
  std::vector<Monomial::Factor> f(mins.begin(), mins.end());
  return Monomial::from_factors(std::move(f));
}

bool LaurentPoly::nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    if (m.is_one()) {
      out += mag.str();
    } else if (mag == 1) {
      out += m.to_string();
    } else {
      out += mag.str() + "*" + m.to_string();
    }
  }
  return out;
}

json LaurentPoly::to_json() const {
  json arr = json::array();
  for (const auto& [m, c] : terms_) {
    json mono = json::object();
    for (const auto& [k, e] : m.factors()) mono[k.to_string()] = e;
    arr.push_back(json{{"coeff", c.str()}, {"monomial", mono}});
  }
  return arr;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }
std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.to_string(); }

// ---------------------------------------------------------------- operations

LaurentPoly poly_add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly poly_sub(const LaurentPoly& p, const LaurentPoly& q) { return p - q; }
LaurentPoly poly_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  if (q.is_zero()) throw Error(ErrorCode::DivisionByZero, "exact_div by zero");
  if (p.is_zero()) return {};

  // Reduce to honest polynomials: q = mu*q0 with no variable dividing q0, and
  // p = nu*p0. A Laurent quotient of p0 by q0 is then a polynomial, so
  // leading-term elimination in a well-order terminates.
  const Monomial mu = q.min_exponents();
  const Monomial nu = p.min_exponents();
  const LaurentPoly q0 = q * mu.inverse();
  LaurentPoly rem = p * nu.inverse();

  const auto& [lead_m, lead_c] = q0.leading_term();
  LaurentPoly quot;
  while (!rem.is_zero()) {
    const auto [rm, rc] = rem.leading_term();
    if (!rm.divisible_by(lead_m) || rc % lead_c != 0)
      throw Error(ErrorCode::ExactDivisionFailed, "(" + p.to_string() + ") / (" + q.to_string() + ")");
    const Monomial tm = rm / lead_m;
    const Integer tc = rc / lead_c;
    quot.add_term(tm, tc);
    for (const auto& [m, c] : q0.terms()) rem.add_term(m * tm, -(c * tc));
  }
  return quot * (nu / mu);
}

LaurentPoly substitute(const LaurentPoly& p, const Substitution& image) {
  std::map<std::pair<VarKey, int>, LaurentPoly> powers;
  auto power_of = [&](const VarKey& k, int e) -> const LaurentPoly& {
    auto key = std::make_pair(k, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const LaurentPoly& img = image.at(k);
    LaurentPoly val;
    if (e >= 0) {
      val = img.pow(static_cast<unsigned>(e));
    } else {
      if (!img.is_monomial() || abs(img.leading_term().second) != 1)
        throw Error(ErrorCode::NegativePowerOfNonMonomial,
                    k.to_string() + "^" + std::to_string(e) + " -> " + img.to_string());
      const auto& [m, c] = img.leading_term();
      val = LaurentPoly(m.pow(e), (-e) % 2 == 1 ? c : Integer(1));
    }
    return powers.emplace(key, std::move(val)).first->second;
  };

  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> kept;
    LaurentPoly term(1);
    for (const auto& [k, e] : m.factors()) {
      if (image.count(k))
        term = term * power_of(k, e);
      else
        kept.emplace_back(k, e);
    }
    out += term * Monomial::from_factors(std::move(kept)) * LaurentPoly(c);
  }
  return out;
}

Monomial spectral_shift(const Monomial& m, int s) {
  std::vector<Monomial::Factor> f = m.factors();
  for (auto& [k, e] : f) k.shift += s;
  return Monomial::from_factors(std::move(f));
}

LaurentPoly spectral_shift(const LaurentPoly& p, int s) {
  if (s == 0) return p;
  LaurentPoly out;
  for (const auto& [m, c] : p.terms()) out.add_term(spectral_shift(m, s), c);
  return out;
}

Integer dimension(const LaurentPoly& p) {
  Integer sum = 0;
  for (const auto& [m, c] : p.terms()) sum += c;
  return sum;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_.push_back(ch);
  }

  LaurentPoly poly() {
    LaurentPoly out;
    if (s_ == "0") return out;
    bool first = true;
    while (pos_ < s_.size() || first) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = (s_[pos_] == '-') ? -1 : 1;
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = term();
      out.add_term(m, sign * c);
    }
    return out;
  }

  Monomial monomial_only() {
    auto [m, c] = term();
    if (c != 1 || pos_ != s_.size()) fail("expected a bare monomial");
    return m;
  }

  VarKey varkey_only() {
    VarKey k = varkey();
    if (pos_ != s_.size()) fail("trailing characters");
    return k;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  long long integer() {
    std::size_t start = pos_;
    if (peek() == '-' || peek() == '+') ++pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string digits = s_.substr(start, pos_ - start);
    if (!is_integer_text(digits)) fail("expected integer");
    return std::stoll(digits);
  }

  Integer big_integer() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return parse_integer(s_.substr(start, pos_ - start));
  }

  VarKey varkey() {
    VarKey k;
    switch (peek()) {
      case 'Y': case 'y': k.family = Family::Y; break;
      case 'Z': case 'z': k.family = Family::Z; break;
      case 'V': case 'v': k.family = Family::V; break;
      default: fail("expected variable");
    }
    ++pos_;
    expect('[');
    k.node = static_cast<int>(integer());
    expect(',');
    k.shift = static_cast<int>(integer());
    expect(']');
    return k;
  }

  std::pair<Monomial, Integer> term() {
    Integer coeff = 1;
    std::vector<Monomial::Factor> f;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = big_integer();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    if (need_factor) {
      while (true) {
        VarKey k = varkey();
        int e = 1;
        if (peek() == '^') {
          ++pos_;
          e = static_cast<int>(integer());
        }
        f.emplace_back(k, e);
        if (peek() != '*') break;
        ++pos_;
      }
    }
    return {Monomial::from_factors(std::move(f)), coeff};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_poly(const std::string& text) { return Parser(text).poly(); }
Monomial parse_monomial(const std::string& text) {
  if (text == "1") return {};
  return Parser(text).monomial_only();
}
VarKey parse_varkey(const std::string& text) { return Parser(text).varkey_only(); }

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial JSON must be an array");
  LaurentPoly out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial"))
      throw Error(ErrorCode::ParseError, "polynomial term needs coeff and monomial");
    const auto& cj = t.at("coeff");
    Integer c = cj.is_string() ? parse_integer(cj.get<std::string>())
              : cj.is_number_integer() ? Integer(cj.get<long long>())
                                       : throw Error(ErrorCode::ParseError, "coeff must be an integer string");
    if (c == 0) throw Error(ErrorCode::ParseError, "zero coefficient in canonical JSON");
    std::vector<Monomial::Factor> f;
    for (const auto& [key, e] : t.at("monomial").items()) {
      if (!e.is_number_integer() || e.get<int>() == 0) throw Error(ErrorCode::ParseError, "bad exponent for " + key);
      f.emplace_back(parse_varkey(key), e.get<int>());
    }
    Monomial m = Monomial::from_factors(std::move(f));
    if (out.coefficient(m) != 0) throw Error(ErrorCode::ParseError, "duplicate monomial " + m.to_string());
    out.add_term(m, c);
  }
  return out;
}

}  // namespace qaff
