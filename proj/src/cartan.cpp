#include "qaff/cartan.hpp"

#include <algorithm>
#include <cctype>

#include "qaff/error.hpp"

namespace qaff {

namespace {

using Matrix = std::vector<std::vector<int>>;

void link(Matrix& c, int i, int j, int cij = -1, int cji = -1) {
  c[i - 1][j - 1] = cij;
  c[j - 1][i - 1] = cji;
}

Matrix chain(int n) {
  Matrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  for (int i = 1; i < n; ++i) link(c, i, i + 1);
  return c;
}

void check_rank(const LieType& t) {
  const int n = t.rank;
  bool ok = true;
  switch (t.family) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 4; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: throw Error(ErrorCode::UnknownLabel, t.to_string());
  }
  if (!ok) throw Error(ErrorCode::RankOutOfRange, t.to_string());
}

}  // namespace

LieType parse_lie_type(const std::string& tag) {
  std::string s;
  for (char ch : tag)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0])))
    throw Error(ErrorCode::UnknownLabel, "malformed Lie type '" + tag + "'");
  const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (family < 'A' || family > 'G') throw Error(ErrorCode::UnknownLabel, "unknown family in '" + tag + "'");
  const std::string digits = s.substr(1);
  if (digits.empty() || digits.size() > 3 ||
      !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    throw Error(ErrorCode::UnknownLabel, "malformed rank in '" + tag + "'");
  LieType t{family, std::stoi(digits)};
  check_rank(t);
  return t;
}

CartanData::CartanData(LieType label) : label_(label) {
  check_rank(label_);
  const int n = label_.rank;
  cartan_ = chain(n);
  d_.assign(n, 1);
  switch (label_.family) {
    case 'A':
      break;
    case 'B':
      cartan_[n - 1][n - 2] = -2;
      std::fill(d_.begin(), d_.end() - 1, 2);
      break;
    case 'C':
      cartan_[n - 2][n - 1] = -2;
      d_[n - 1] = 2;
      break;
    case 'D':
      cartan_ = chain(n - 1);
      for (auto& row : cartan_) row.push_back(0);
      cartan_.emplace_back(n, 0);
      cartan_[n - 1][n - 1] = 2;
      link(cartan_, n - 2, n);
      break;
    case 'E':
      // Bourbaki: 1-3-4-5-6(-7-8) with 2 attached to 4.
      cartan_.assign(n, std::vector<int>(n, 0));
      for (int i = 0; i < n; ++i) cartan_[i][i] = 2;
      link(cartan_, 1, 3);
      link(cartan_, 3, 4);
      link(cartan_, 2, 4);
      for (int i = 4; i < n; ++i) link(cartan_, i, i + 1);
      break;
    case 'F':
      cartan_[2][1] = -2;
      d_ = {2, 2, 1, 1};
      break;
    case 'G':
      cartan_ = {{2, -1}, {-3, 2}};
      d_ = {3, 1};
      break;
    default:
      throw Error(ErrorCode::UnknownLabel, label_.to_string());
  }
  t_ = *std::max_element(d_.begin(), d_.end());
}

std::size_t CartanData::idx(int i) const {
  if (!valid_node(i))
    throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i) + " not in 1.." + std::to_string(rank()));
  return static_cast<std::size_t>(i - 1);
}

std::vector<int> CartanData::neighbours(int i) const {
  std::vector<int> out;
  for (int j = 1; j <= rank(); ++j)
    if (j != i && c(i, j) != 0) out.push_back(j);
  return out;
}

CartanData cartan_from_label(const std::string& tag) { return CartanData(parse_lie_type(tag)); }

std::vector<std::vector<int>> symmetrized_matrix(const CartanData& cd) {
  const int n = cd.rank();
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out[i - 1][j - 1] = cd.b(i, j);
  return out;
}

std::vector<int> simple_root_coords(const CartanData& cd, int i) {
  if (!cd.valid_node(i)) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  std::vector<int> out;
  for (int j = 1; j <= cd.rank(); ++j) out.push_back(cd.c(j, i));
  return out;
}

}  // namespace qaff
