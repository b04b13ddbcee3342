#include "qaff/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>

#include "qaff/error.hpp"

namespace qaff {

Vertex parse_vertex(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.size() < 5 || s.front() != '(' || s.back() != ')')
    throw Error(ErrorCode::ParseError, "vertex must look like (i,r): '" + text + "'");
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::ParseError, "vertex needs a comma: '" + text + "'");
  try {
    std::size_t used_i = 0;
    std::size_t used_r = 0;
    const std::string a = s.substr(1, comma - 1);
    const std::string b = s.substr(comma + 1, s.size() - comma - 2);
    Vertex v{std::stoi(a, &used_i), std::stoi(b, &used_r)};
    if (used_i != a.size() || used_r != b.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad vertex '" + text + "'");
  }
}

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::size_t pos = 0;
  while (true) {
    const auto open = text.find('(', pos);
    if (open == std::string::npos) break;
    const auto close = text.find(')', open);
    if (close == std::string::npos) throw Error(ErrorCode::ParseError, "unbalanced vertex list '" + text + "'");
    out.push_back(parse_vertex(text.substr(open, close - open + 1)));
    pos = close + 1;
  }
  return out;
}

json vertex_to_json(const Vertex& v) { return json::array({v.i, v.r}); }

Vertex vertex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw Error(ErrorCode::ParseError, "vertex JSON must be [i, r]");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<Vertex> arrows_from(const CartanData& cd, const Vertex& v) {
  std::vector<Vertex> out;
  for (int j = 1; j <= cd.rank(); ++j)
    if (cd.b(v.i, j) != 0) out.push_back({j, v.r + cd.b(v.i, j)});
  return out;
}

std::vector<Vertex> arrows_into(const CartanData& cd, const Vertex& v) {
  std::vector<Vertex> out;
  for (int j = 1; j <= cd.rank(); ++j)
    if (cd.b(j, v.i) != 0) out.push_back({j, v.r - cd.b(j, v.i)});
  return out;
}

bool is_arrow(const CartanData& cd, const Vertex& from, const Vertex& to) {
  if (!cd.valid_node(from.i) || !cd.valid_node(to.i)) return false;
  const int b = cd.b(from.i, to.i);
  return b != 0 && to.r == from.r + b;
}

int parity_offset(const CartanData& cd, int i) {
  std::vector<int> phi(cd.rank() + 1, -1);
  phi[1] = 0;
  std::deque<int> todo{1};
  while (!todo.empty()) {
    const int a = todo.front();
    todo.pop_front();
    for (int j : cd.neighbours(a)) {
      if (phi[j] >= 0) continue;
      phi[j] = (phi[a] + std::abs(cd.b(a, j))) % 2;
      todo.push_back(j);
    }
  }
  if (!cd.valid_node(i)) throw Error(ErrorCode::IndexOutOfRange, "node " + std::to_string(i));
  return phi[i];
}

bool same_component(const CartanData& cd, const Vertex& a, const Vertex& b) {
  const int pa = a.r - parity_offset(cd, a.i);
  const int pb = b.r - parity_offset(cd, b.i);
  return ((pa - pb) % 2) == 0;
}

std::set<Vertex> component(const CartanData& cd, const Vertex& anchor, const Window& window) {
  if (!cd.valid_node(anchor.i)) throw Error(ErrorCode::IndexOutOfRange, "anchor " + anchor.to_string());
  int pad = 0;
  for (int i = 1; i <= cd.rank(); ++i)
    for (int j = 1; j <= cd.rank(); ++j) pad += std::abs(cd.b(i, j));
  const Window padded{std::min(window.lo, anchor.r) - 2 * pad, std::max(window.hi, anchor.r) + 2 * pad};

  std::set<Vertex> seen{anchor};
  std::deque<Vertex> todo{anchor};
  while (!todo.empty()) {
    const Vertex v = todo.front();
    todo.pop_front();
    auto visit = [&](const Vertex& w) {
      if (padded.contains(w.r) && seen.insert(w).second) todo.push_back(w);
    };
    for (const Vertex& w : arrows_from(cd, v)) visit(w);
    for (const Vertex& w : arrows_into(cd, v)) visit(w);
  }
  std::set<Vertex> out;
  for (const Vertex& v : seen)
    if (window.contains(v.r)) out.insert(v);
  return out;
}

bool QuiverGraph::has_vertex(const Vertex& v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

json QuiverGraph::to_json() const {
  json verts = json::array();
  for (const auto& v : vertices) verts.push_back(vertex_to_json(v));
  json arr = json::array();
  for (const auto& [a, b] : arrows) arr.push_back(json::array({vertex_to_json(a), vertex_to_json(b)}));
  json fr = json::array();
  for (const auto& v : frozen) fr.push_back(vertex_to_json(v));
  return json{{"vertices", verts}, {"arrows", arr}, {"frozen", fr}};
}

QuiverGraph QuiverGraph::from_json(const json& j) {
  QuiverGraph g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back(vertex_from_json(v));
  std::sort(g.vertices.begin(), g.vertices.end());
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2) throw Error(ErrorCode::ParseError, "arrow must be [src, dst]");
    g.arrows.emplace_back(vertex_from_json(a[0]), vertex_from_json(a[1]));
  }
  std::sort(g.arrows.begin(), g.arrows.end());
  for (const auto& v : j.at("frozen")) g.frozen.insert(vertex_from_json(v));
  for (const auto& v : g.frozen)
    if (!g.has_vertex(v)) throw Error(ErrorCode::ParseError, "frozen vertex not in quiver");
  return g;
}

Vertex default_anchor(const CartanData& cd) { return {1, -cd.d(1)}; }

bool in_truncation_window(const CartanData& cd, const Vertex& v, int ell) {
  if (!cd.valid_node(v.i)) return false;
  const int s = v.r + cd.d(v.i);
  return -2 * ell - 1 <= s && s <= 0;
}

bool is_frozen_vertex(const CartanData& cd, const Vertex& v, int ell) {
  return v.r - cd.d(v.i) < -2 * ell - 1;
}

QuiverGraph truncated_quiver(const CartanData& cd, const TruncationParams& params) {
  if (params.ell < 0) throw Error(ErrorCode::InvalidConfig, "ell must be >= 0");
  const int ell = params.ell;
  int lo = 0;
  int hi = 0;
  for (int i = 1; i <= cd.rank(); ++i) {
    lo = std::min(lo, -2 * ell - 1 - cd.d(i));
    hi = std::max(hi, -cd.d(i));
  }
  QuiverGraph g;
  for (const Vertex& v : component(cd, params.anchor, {lo, hi}))
    if (in_truncation_window(cd, v, ell)) g.vertices.push_back(v);
  if (g.vertices.empty())
    throw Error(ErrorCode::EmptyTruncation, "no vertex for ell=" + std::to_string(ell) + " anchor " + params.anchor.to_string());
  for (const Vertex& v : g.vertices) {
    for (const Vertex& w : arrows_from(cd, v))
      if (g.has_vertex(w)) g.arrows.emplace_back(v, w);
    if (is_frozen_vertex(cd, v, ell)) g.frozen.insert(v);
  }
  std::sort(g.arrows.begin(), g.arrows.end());
  return g;
}

KRIndex kr_label(const CartanData& cd, const Vertex& v, int ell) {
  if (!in_truncation_window(cd, v, ell))
    throw Error(ErrorCode::VertexNotInTruncation, v.to_string() + " for ell=" + std::to_string(ell));
  const int d = cd.d(v.i);
  // largest k >= 0 with r + (2k+1)d <= 0
  const int kmax = (-v.r - d) / (2 * d);
  return {v.i, kmax + 1, v.r + d};
}

}  // namespace qaff
