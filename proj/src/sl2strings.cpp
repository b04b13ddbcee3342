#include "qaff/sl2strings.hpp"

#include <algorithm>
#include <regex>

#include "qaff/error.hpp"
#include "qaff/tsystem.hpp"

namespace qaff {

std::string Str::to_string() const {
  return n == 1 ? "[" + std::to_string(lo) + "]" : "[" + std::to_string(lo) + ".." + std::to_string(hi()) + "]";
}

Str str_interval(int lo, int hi) {
  if (hi < lo || (hi - lo) % 2 != 0)
    throw Error(ErrorCode::InvalidConfig, "bad string interval [" + std::to_string(lo) + ".." + std::to_string(hi) + "]");
  return {lo, (hi - lo) / 2 + 1};
}

std::vector<Str> parse_strings(const std::string& text) {
  static const std::regex item(R"(\(\s*(-?\d+)\s*,\s*(\d+)\s*\))");
  std::vector<Str> out;
  std::string rest;
  auto begin = std::sregex_iterator(text.begin(), text.end(), item);
  std::size_t pos = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += text.substr(pos, static_cast<std::size_t>(it->position()) - pos);
    pos = static_cast<std::size_t>(it->position() + it->length());
    const int n = std::stoi((*it)[2]);
    if (n < 1) throw Error(ErrorCode::ParseError, "string length must be positive");
    out.push_back({std::stoi((*it)[1]), n});
  }
  rest += text.substr(pos);
  if (rest.find_first_not_of(" ;,\t") != std::string::npos || out.empty())
    throw Error(ErrorCode::ParseError, "expected \"(lo,n);(lo,n);...\", got '" + text + "'");
  return out;
}

bool in_general_position(const Str& a, const Str& b) {
  if ((a.lo - b.lo) % 2 != 0) return true;
  if (a.contains(b) || b.contains(a)) return true;
  const Str& l = a.lo <= b.lo ? a : b;
  const Str& r = a.lo <= b.lo ? b : a;
  return r.lo > l.hi() + 2;
}

SpecialSplit special_split(const Str& a, const Str& b) {
  if (in_general_position(a, b))
    throw Error(ErrorCode::NotSpecialPosition, a.to_string() + " and " + b.to_string() + " are in general position");
  const Str& l = a.lo <= b.lo ? a : b;
  const Str& r = a.lo <= b.lo ? b : a;
  const int l1 = l.lo, r1 = l.hi(), l2 = r.lo, r2 = r.hi();
  SpecialSplit s{str_interval(l1, r2), {}, {}, {}};
  if (l2 <= r1) s.s4 = str_interval(l2, r1);
  if (l1 <= l2 - 4) s.s5 = str_interval(l1, l2 - 4);
  if (r1 + 4 <= r2) s.s6 = str_interval(r1 + 4, r2);
  return s;
}

SimpleClass::SimpleClass(std::vector<Str> strings) : strings_(std::move(strings)) {
  std::sort(strings_.begin(), strings_.end());
  for (std::size_t i = 0; i < strings_.size(); ++i)
    for (std::size_t j = i + 1; j < strings_.size(); ++j)
      if (!in_general_position(strings_[i], strings_[j]))
        throw Error(ErrorCode::InvalidConfig,
                    strings_[i].to_string() + " and " + strings_[j].to_string() + " are in special position");
}

std::string SimpleClass::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < strings_.size(); ++i) out += (i ? "," : "") + strings_[i].to_string();
  return out + "}";
}

json SimpleClass::to_json() const {
  json a = json::array();
  for (const auto& s : strings_) a.push_back(json::array({s.lo, s.n}));
  return a;
}

json k0_to_json(const K0Elem& e) {
  json out = json::array();
  for (const auto& [c, m] : e) {
    json mult = m.str();
    if (boost::multiprecision::abs(m) < (Integer(1) << 53)) mult = static_cast<long long>(m);
    out.push_back(json{{"class", c.to_json()}, {"mult", mult}});
  }
  return out;
}

std::string k0_to_string(const K0Elem& e) {
  std::string out;
  for (const auto& [c, m] : e) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += m.str() + "*";
    out += c.to_string();
  }
  return out.empty() ? "0" : out;
}

K0Elem tensor_pair(const Str& a, const Str& b) {
  if (in_general_position(a, b)) return {{SimpleClass({a, b}), 1}};
  const SpecialSplit s = special_split(a, b);
  std::vector<Str> first{s.s3};
  if (s.s4) first.push_back(*s.s4);
  std::vector<Str> second;
  if (s.s5) second.push_back(*s.s5);
  if (s.s6) second.push_back(*s.s6);
  K0Elem out;
  out[SimpleClass(first)] += 1;
  out[SimpleClass(second)] += 1;
  return out;
}

std::pair<long long, long long> normalize_measure(const std::vector<Str>& strings) {
  long long total = 0;
  long long squares = 0;
  for (const auto& s : strings) {
    total += s.n;
    squares += static_cast<long long>(s.n) * s.n;
  }
  return {total, -squares};
}

K0Elem normalize(const std::vector<Str>& product, const PairSelector& select, std::vector<NormalizeStep>* trace) {
  using Term = std::vector<Str>;
  std::map<Term, Integer> pending;
  K0Elem done;
  Term start = product;
  std::sort(start.begin(), start.end());
  pending[start] = 1;
  while (!pending.empty()) {
    // Largest measure first, so equal terms produced on different branches
    // merge before being expanded.
    auto it = std::max_element(pending.begin(), pending.end(), [](const auto& x, const auto& y) {
      return std::make_pair(normalize_measure(x.first), x.first) < std::make_pair(normalize_measure(y.first), y.first);
    });
    const Term term = it->first;
    const Integer mult = it->second;
    pending.erase(it);

    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t i = 0; i < term.size(); ++i)
      for (std::size_t j = i + 1; j < term.size(); ++j)
        if (!in_general_position(term[i], term[j])) special.emplace_back(i, j);
    if (special.empty()) {
      done[SimpleClass(term)] += mult;
      continue;
    }
    const std::size_t pick = select ? select(special) : 0;
    if (pick >= special.size()) throw Error(ErrorCode::IndexOutOfRange, "pair selector out of range");
    const auto [i, j] = special[pick];
    const SpecialSplit s = special_split(term[i], term[j]);
    Term rest;
    for (std::size_t k = 0; k < term.size(); ++k)
      if (k != i && k != j) rest.push_back(term[k]);
    Term u = rest;
    u.push_back(s.s3);
    if (s.s4) u.push_back(*s.s4);
    Term o = rest;
    if (s.s5) o.push_back(*s.s5);
    if (s.s6) o.push_back(*s.s6);
    std::sort(u.begin(), u.end());
    std::sort(o.begin(), o.end());
    if (trace)
      trace->push_back({term, term[i], term[j], normalize_measure(term), normalize_measure(u), normalize_measure(o)});
    pending[u] += mult;
    pending[o] += mult;
  }
  return done;
}

bool in_category_ell(const SimpleClass& c, int ell) {
  for (const auto& s : c.strings())
    if (s.lo % 2 != 0 || s.lo < -2 * ell || s.hi() > 0) return false;
  return true;
}

LaurentPoly string_qchar(TSystemSolver& a1, const Str& s) { return a1.kr_qchar(1, s.n, s.lo); }

LaurentPoly class_qchar(TSystemSolver& a1, const SimpleClass& c) {
  LaurentPoly out(1);
  for (const auto& s : c.strings()) out = out * string_qchar(a1, s);
  return out;
}

LaurentPoly k0_qchar(TSystemSolver& a1, const K0Elem& e) {
  LaurentPoly out;
  for (const auto& [c, m] : e) out += class_qchar(a1, c) * LaurentPoly(m);
  return out;
}

}  // namespace qaff
