#pragma once

#include <string>
#include <vector>

namespace qaff {

// Lie type of a simple Lie algebra: family letter A..G and rank.
struct LieType {
  char family = 'A';
  int rank = 1;

  std::string to_string() const { return std::string(1, family) + std::to_string(rank); }
  bool operator==(const LieType&) const = default;
};

// Parses tags like "A3", "b2", "G2". Throws UnknownLabel / RankOutOfRange.
LieType parse_lie_type(const std::string& tag);

// Cartan matrix C, symmetrizer D = diag(d) with B = D*C symmetric,
// min d_i = 1 and t = max d_i. Nodes are numbered 1..n.
//
// Numbering is Bourbaki except G2, where node 1 is the long root (d_1 = 3).
// B_n has the short root at node n, C_n the long root at node n.
class CartanData {
 public:
  explicit CartanData(LieType label);

  const LieType& label() const { return label_; }
  int rank() const { return static_cast<int>(d_.size()); }
  int t() const { return t_; }

  // 1-based accessors.
  int c(int i, int j) const { return cartan_.at(idx(i)).at(idx(j)); }
  int b(int i, int j) const { return d(i) * c(i, j); }
  int d(int i) const { return d_.at(idx(i)); }

  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
  const std::vector<int>& symmetrizer() const { return d_; }

  bool valid_node(int i) const { return i >= 1 && i <= rank(); }
  bool simply_laced() const { return t_ == 1; }

  // Nodes j != i with c_ij != 0, increasing.
  std::vector<int> neighbours(int i) const;

 private:
  std::size_t idx(int i) const;

  LieType label_;
  std::vector<std::vector<int>> cartan_;
  std::vector<int> d_;
  int t_ = 1;
};

CartanData cartan_from_label(const std::string& tag);

// B = D*C.
std::vector<std::vector<int>> symmetrized_matrix(const CartanData& cd);

// Coordinates of the simple root alpha_i on the fundamental weights:
// alpha_i = sum_j c_ji varpi_j, i.e. column i of C.
std::vector<int> simple_root_coords(const CartanData& cd, int i);

}  // namespace qaff
