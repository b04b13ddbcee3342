#pragma once

#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qaff/cartan.hpp"
#include "qaff/kr_index.hpp"

namespace qaff {

using json = nlohmann::json;

// Vertex (i, r) of the infinite quiver on I x Z.
struct Vertex {
  int i = 1;
  int r = 0;

  auto operator<=>(const Vertex&) const = default;
  std::string to_string() const { return "(" + std::to_string(i) + "," + std::to_string(r) + ")"; }
};

Vertex parse_vertex(const std::string& text);
// "(3,-2),(2,-1)" or "(3,-2);(2,-1)".
std::vector<Vertex> parse_vertex_list(const std::string& text);
json vertex_to_json(const Vertex& v);
Vertex vertex_from_json(const json& j);

// Closed range of spectral exponents r.
struct Window {
  int lo = 0;
  int hi = 0;
  bool contains(int r) const { return lo <= r && r <= hi; }
};

// (i,r) -> (j, r + b_ij) for every b_ij != 0, in increasing j.
std::vector<Vertex> arrows_from(const CartanData& cd, const Vertex& v);
// Sources (j, r - b_ji) of the arrows ending at v.
std::vector<Vertex> arrows_into(const CartanData& cd, const Vertex& v);
bool is_arrow(const CartanData& cd, const Vertex& from, const Vertex& to);

// Each of the two connected components is a parity class: r - parity_offset(i)
// has the same parity on the whole component.
int parity_offset(const CartanData& cd, int i);
bool same_component(const CartanData& cd, const Vertex& a, const Vertex& b);

// Vertices of the component of `anchor` whose shift lies in `window`.
// Computed by breadth-first search in a padded window, so the answer does
// not depend on paths leaving the window.
std::set<Vertex> component(const CartanData& cd, const Vertex& anchor, const Window& window);

struct QuiverGraph {
  std::vector<Vertex> vertices;                    // sorted
  std::vector<std::pair<Vertex, Vertex>> arrows;   // sorted; repeated entries are multi-arrows
  std::set<Vertex> frozen;

  bool has_vertex(const Vertex& v) const;
  bool is_frozen(const Vertex& v) const { return frozen.count(v) > 0; }
  json to_json() const;
  static QuiverGraph from_json(const json& j);
};

struct TruncationParams {
  int ell = 0;
  Vertex anchor;
};

// (1, -d_1).
Vertex default_anchor(const CartanData& cd);

// Spectral window of V_ell for node i: -2l-1 <= r + d_i <= 0.
bool in_truncation_window(const CartanData& cd, const Vertex& v, int ell);
bool is_frozen_vertex(const CartanData& cd, const Vertex& v, int ell);

// Full subquiver on V_ell with frozen set {r - d_i < -2l-1}.
// Throws EmptyTruncation.
QuiverGraph truncated_quiver(const CartanData& cd, const TruncationParams& params);

// m_{i,r} = max{k | r + (2k+1) d_i <= 0} + 1; returns W^{(i)}_{m, q^{r+d_i}}.
// Throws VertexNotInTruncation.
KRIndex kr_label(const CartanData& cd, const Vertex& v, int ell);

}  // namespace qaff
