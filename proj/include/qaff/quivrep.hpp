#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qaff/cartan.hpp"
#include "qaff/laurent.hpp"
#include "qaff/quiver.hpp"

namespace qaff {

using Rational = boost::multiprecision::cpp_rational;

struct Arrow {
  Vertex from;
  Vertex to;
  auto operator<=>(const Arrow&) const = default;
  std::string to_string() const { return from.to_string() + "->" + to.to_string(); }
};

// Composable arrows, first arrow first.
using PathWord = std::vector<Arrow>;

std::string path_to_string(const PathWord& p);

// Oriented cycle (i,r) -> (j, r+b_ij) -> (i, r+2b_ij) -> ... -> (i,r), closing
// with -c_ij vertical steps of size b_ii. Throws NotAdjacent when c_ij >= 0.
PathWord potential_cycle(const CartanData& cd, int i, int j, int r);

// All cycles of the potential passing through `a`.
std::vector<PathWord> cycles_through(const CartanData& cd, const Arrow& a);

// Cyclic derivative of the potential with respect to one arrow: the
// complementary paths (from a.to back to a.from) of every cycle through a.
struct Relation {
  Arrow arrow;
  std::vector<std::pair<int, PathWord>> terms;

  Vertex source() const { return arrow.to; }
  Vertex target() const { return arrow.from; }
};

Relation cyclic_derivative(const CartanData& cd, const Arrow& a);

// One relation per arrow with both endpoints in the window (both components).
std::vector<Relation> relations(const CartanData& cd, const Window& window);

// Representation with every vertex space of dimension <= 1. Arrows not
// listed act by zero; listed scalars are nonzero.
struct ThinRep {
  std::set<Vertex> support;
  std::map<std::pair<Vertex, Vertex>, Rational> arrows;

  Rational scalar(const Vertex& from, const Vertex& to) const;
  json to_json() const;
  static ThinRep from_json(const json& j);
};

// Arrows must be arrows of the quiver between support vertices.
// Throws InvalidRepresentation.
void validate_rep(const CartanData& cd, const ThinRep& rep);

// Evaluates every relation touching the support; window derived from the support.
bool check_relations(const ThinRep& rep, const CartanData& cd);
bool check_relations(const ThinRep& rep, const CartanData& cd, const Window& window);

// Sum over arrow-closed subsets S of the support of prod_{v in S} v[v.i, v.r].
LaurentPoly f_polynomial(const ThinRep& rep);

// Direct sum of thin summands. The sum itself is thin iff the supports are
// pairwise disjoint.
struct RepSum {
  std::vector<ThinRep> summands;

  bool is_thin() const;
  // Throws NotThin.
  ThinRep as_thin() const;
};

RepSum direct_sum(const RepSum& a, const RepSum& b);
RepSum direct_sum(const ThinRep& a, const ThinRep& b);
// Thin sums are enumerated directly; otherwise F is the product over summands.
LaurentPoly f_polynomial(const RepSum& rep);

// prod_{v -> w} z_w * prod_{u -> v} z_u^{-1}.
Monomial yhat(const CartanData& cd, const Vertex& v);

// Rewrites a z-monomial in Y[j, s - d_j] = z[j, s - 2d_j] / z[j, s].
// Throws NotInImageLattice.
Monomial z_to_y(const CartanData& cd, const Monomial& m);

// Y[i, r - d_i] * F_K(yhat), expressed in Y-variables.
LaurentPoly geometric_qchar(const CartanData& cd, int i, int r, const ThinRep& K);
// Standard module: product of Y-prefactors times F of the direct sum.
LaurentPoly geometric_qchar_standard(const CartanData& cd, const std::vector<std::pair<Vertex, ThinRep>>& parts);

// K_{(i,r)} for A1, A2, B2 (arrow scalars 1). Throws UnsupportedType.
ThinRep builtin_K(const CartanData& cd, int i, int r);
bool has_builtin_K(const CartanData& cd);

}  // namespace qaff
