#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "qaff/cartan.hpp"
#include "qaff/laurent.hpp"
#include "qaff/quiver.hpp"

namespace qaff {

class TSystemSolver;

// Cluster variable as a Laurent polynomial in the initial z-variables.
// The reduced fraction numerator / denominator is derived from it.
struct ClusterVar {
  LaurentPoly laurent;

  static ClusterVar initial(const Vertex& v) { return {LaurentPoly::var(zkey(v.i, v.r))}; }
  // Monomial with nonnegative exponents clearing every negative power.
  Monomial denominator() const;
  LaurentPoly numerator() const;
  std::string to_string() const;
  json to_json() const;

  auto operator<=>(const ClusterVar& o) const { return laurent <=> o.laurent; }
  bool operator==(const ClusterVar& o) const { return laurent == o.laurent; }
};

// Seed on a fixed vertex list. b[u][v] > 0 means b[u][v] arrows u -> v.
struct Seed {
  std::vector<Vertex> vertices;  // sorted
  std::vector<std::vector<int>> b;
  std::set<Vertex> frozen;
  std::vector<ClusterVar> attach;

  std::size_t index(const Vertex& v) const;  // throws UnknownVertex
  bool is_frozen(const Vertex& v) const { return frozen.count(v) > 0; }
  const ClusterVar& at(const Vertex& v) const { return attach[index(v)]; }
  std::vector<Vertex> mutable_vertices() const;
  QuiverGraph quiver() const;
  json to_json() const;
};

Seed seed_from_quiver(const QuiverGraph& q);
Seed initial_seed(const CartanData& cd, const TruncationParams& params);

struct Exchange {
  Vertex vertex;
  ClusterVar before;
  ClusterVar after;
  LaurentPoly in_product;   // over arrows u -> k
  LaurentPoly out_product;  // over arrows k -> w
  std::vector<ClusterVar> in_vars;  // with multiplicity
  std::vector<ClusterVar> out_vars;
};

// Throws FrozenVertex, UnknownVertex, ExactDivisionFailed (Laurent phenomenon
// violated).
Seed mutate(const Seed& s, const Vertex& k, Exchange* record = nullptr);
Seed mutate_sequence(const Seed& s, const std::vector<Vertex>& seq);

// The exchange matrix alone; same convention as the seed.
std::vector<std::vector<int>> mutate_matrix(const std::vector<std::vector<int>>& b, std::size_t k);

struct ClosureResult {
  std::set<ClusterVar> variables;  // mutable cluster variables
  std::set<ClusterVar> frozen;
  std::size_t seed_count = 0;
  bool closed = false;
  std::vector<Exchange> exchanges;  // one per explored mutation
};

// Breadth-first closure; seeds are identified by their unordered mutable cluster.
ClosureResult enumerate_closure(const Seed& s, std::size_t max_seeds);

// Indexed by s0.mutable_vertices(): minus the minimal exponent of z_v.
std::vector<int> denominator_vector(const ClusterVar& x, const Seed& s0);

// z_v -> table[v], then exact division by the image of the denominator.
LaurentPoly realize_qchar(const ClusterVar& x, const std::map<Vertex, LaurentPoly>& table);
// Each vertex of the truncated quiver mapped to the q-character of its KR label.
std::map<Vertex, LaurentPoly> realization_table(const CartanData& cd, const TruncationParams& params,
                                                TSystemSolver& solver);

// Monomial of maximal weight (strictly greater height than all others).
// Throws InvalidConfig if the maximum is not unique.
Monomial highest_monomial(const CartanData& cd, const LaurentPoly& qchar);

// Bijection of vertices preserving frozenness and every arrow multiplicity
// except those between two frozen vertices.
bool isomorphic_ignoring_frozen_arrows(const Seed& a, const Seed& b);

}  // namespace qaff
