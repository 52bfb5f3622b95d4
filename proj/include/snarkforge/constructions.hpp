// Copyright 2026 The Snarkforge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Named graphs and the snark-building surgeries.
//
// Vertex labels of the binary constructions follow one block scheme: first
// the surviving vertices of the left operand in their original order, then
// those of the right operand, then any new vertices. Edge indices follow the
// same blocks, with the new edges last.

#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "snarkforge/graph.hpp"

namespace snarkforge {

// Vertices u_i = 2i and v_i = 2i + 1 for i in Z5; edges listed as the five
// (u_i, u_{i+1}), then the five (u_i, v_i), then the five (v_i, v_{i+2}).
inline Graph petersen() {
  auto u = [](int i) { return 2 * (i % 5); };
  auto v = [](int i) { return 2 * (i % 5) + 1; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 5; ++i) edges.emplace_back(u(i), u(i + 1));
  for (int i = 0; i < 5; ++i) edges.emplace_back(u(i), v(i));
  for (int i = 0; i < 5; ++i) edges.emplace_back(v(i), v(i + 2));
  return Graph(10, edges);
}

// The 8-vertex wheel with four rim-to-rim spokes and no hub vertex.
struct Wheel {
  Graph graph;
  std::array<int, 8> rim;     // rim[i] = (t_i, t_{i+1})
  std::array<int, 4> spokes;  // spokes[i] = (t_i, t_{i+4})
};

inline Wheel wheel_w8() {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < 8; ++i) edges.emplace_back(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) edges.emplace_back(i, i + 4);
  return Wheel{Graph(8, edges), {0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11}};
}

// Flower snark J_n: t_k = k, u_k = n + k, v_k = 2n + k, w_k = 3n + k.
// Edge blocks: (t_k, t_{k+1}), (u_k, v_{k+1}), (v_k, u_{k+1}), (w_k, t_k),
// (w_k, u_k), (w_k, v_k), each for k = 0..n-1.
inline Graph flower(int n) {
  if (n < 5 || n % 2 == 0) throw DomainError("flower snark needs odd n >= 5");
  auto t = [n](int k) { return k % n; };
  auto u = [n](int k) { return n + k % n; };
  auto v = [n](int k) { return 2 * n + k % n; };
  auto w = [n](int k) { return 3 * n + k % n; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int k = 0; k < n; ++k) edges.emplace_back(t(k), t(k + 1));
  for (int k = 0; k < n; ++k) edges.emplace_back(u(k), v(k + 1));
  for (int k = 0; k < n; ++k) edges.emplace_back(v(k), u(k + 1));
  for (int k = 0; k < n; ++k) edges.emplace_back(w(k), t(k));
  for (int k = 0; k < n; ++k) edges.emplace_back(w(k), u(k));
  for (int k = 0; k < n; ++k) edges.emplace_back(w(k), v(k));
  return Graph(4 * n, edges);
}

namespace detail {

inline void require_pentagon(const Graph& g, const Cycle& p) {
  if (p.length() != 5 || !is_cycle_of(g, p)) throw DomainError("not a pentagon of the graph");
}

// For each pentagon vertex, the neighbour off the pentagon.
inline std::array<Vertex, 5> pentagon_attachments(const Graph& g, const Cycle& p) {
  std::set<Vertex> on(p.vertices.begin(), p.vertices.end());
  std::array<Vertex, 5> out{};
  for (int k = 0; k < 5; ++k) {
    const Vertex x = p.vertices[k];
    if (g.degree(x) != 3) throw DomainError("pentagon vertex is not trivalent");
    out[k] = -1;
    for (Vertex y : g.neighbors(x)) {
      if (!on.count(y)) out[k] = y;
    }
    if (out[k] < 0) throw DomainError("pentagon has a chord");
  }
  std::set<Vertex> distinct(out.begin(), out.end());
  if (distinct.size() != 5) {
    throw DomainError("pentagon attachments are not distinct (short cycle nearby)");
  }
  return out;
}

inline std::vector<Vertex> sorted_neighbors_except(const Graph& g, Vertex x, Vertex skip) {
  std::vector<Vertex> out;
  for (Vertex y : g.neighbors(x)) {
    if (y != skip) out.push_back(y);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

struct PentagonRemoval {
  Graph graph;                 // g - E(p); vertex ids unchanged
  std::array<int, 5> pendant;  // pendant[i]: the edge at pentagon vertex p.vertices[i]
};

inline PentagonRemoval remove_pentagon(const Graph& g, const Cycle& p) {
  if (!is_cubic(g)) throw DomainError("remove_pentagon needs a cubic graph");
  detail::require_pentagon(g, p);
  const auto attach = detail::pentagon_attachments(g, p);
  const auto pentagon_edges = p.edges(g);
  Surgery cut = delete_edges(g, std::set<int>(pentagon_edges.begin(), pentagon_edges.end()));
  std::array<int, 5> pendant{};
  for (int i = 0; i < 5; ++i) pendant[i] = *cut.graph.find_edge(p.vertices[i], attach[i]);
  return PentagonRemoval{std::move(cut.graph), pendant};
}

// Output of a two-operand construction. Maps send old vertex/edge ids of
// each operand to ids in `graph` (-1 when removed).
struct Composite {
  Graph graph;
  std::vector<int> left_vertex_map;
  std::vector<int> right_vertex_map;
  std::vector<int> left_edge_map;
  std::vector<int> right_edge_map;
  std::vector<int> new_edges;

  // Edges of `graph` that come from the right (resp. left) operand.
  std::vector<int> right_block_edges() const { return mapped(right_edge_map); }
  std::vector<int> left_block_edges() const { return mapped(left_edge_map); }

 private:
  static std::vector<int> mapped(const std::vector<int>& m) {
    std::vector<int> out;
    for (int e : m) {
      if (e >= 0) out.push_back(e);
    }
    return out;
  }
};

namespace detail {

// Lays out two surgeries side by side and appends `extra` edges whose
// endpoints are already in combined ids. `extra_vertices` new vertices are
// numbered after both blocks.
inline Composite combine(const Surgery& left, const Surgery& right, int extra_vertices,
                         const std::vector<std::pair<Vertex, Vertex>>& extra) {
  const int offset = left.graph.num_vertices();
  const int n = offset + right.graph.num_vertices() + extra_vertices;
  std::vector<std::pair<Vertex, Vertex>> edges = left.graph.edge_pairs();
  const int right_edge_offset = static_cast<int>(edges.size());
  for (auto [a, b] : right.graph.edge_pairs()) edges.emplace_back(a + offset, b + offset);
  const int new_offset = static_cast<int>(edges.size());
  edges.insert(edges.end(), extra.begin(), extra.end());
  Composite out{Graph(n, edges), left.vertex_map, right.vertex_map, left.edge_map,
                right.edge_map, {}};
  for (int& v : out.right_vertex_map) {
    if (v >= 0) v += offset;
  }
  for (int& e : out.right_edge_map) {
    if (e >= 0) e += right_edge_offset;
  }
  for (std::size_t i = 0; i < extra.size(); ++i) {
    out.new_edges.push_back(new_offset + static_cast<int>(i));
  }
  return out;
}

}  // namespace detail

// Five-edge connection of two graphs with pentagons. Both pentagons lose
// their vertices; t_k (off left pentagon vertex k) is joined to
// w_{2k + rotation} (off right pentagon vertex 2k + rotation), indices mod 5.
inline Composite pentagon_join(const Graph& left, const Cycle& left_pentagon, const Graph& right,
                               const Cycle& right_pentagon, int rotation = 0) {
  if (!is_cubic(left) || !is_cubic(right)) throw DomainError("pentagon_join needs cubic graphs");
  detail::require_pentagon(left, left_pentagon);
  detail::require_pentagon(right, right_pentagon);
  const auto t = detail::pentagon_attachments(left, left_pentagon);
  const auto w = detail::pentagon_attachments(right, right_pentagon);
  rotation = ((rotation % 5) + 5) % 5;
  Surgery l = delete_vertices(
      left, std::set<Vertex>(left_pentagon.vertices.begin(), left_pentagon.vertices.end()));
  Surgery r = delete_vertices(
      right, std::set<Vertex>(right_pentagon.vertices.begin(), right_pentagon.vertices.end()));
  const int offset = l.graph.num_vertices();
  std::vector<std::pair<Vertex, Vertex>> extra;
  for (int k = 0; k < 5; ++k) {
    extra.emplace_back(l.vertex_map[t[k]], r.vertex_map[w[(2 * k + rotation) % 5]] + offset);
  }
  return detail::combine(l, r, 0, extra);
}

// Replaces edge E = (U, V) of `outer` by `inner`, splitting the two
// non-adjacent vertices u and v of `inner` into three strands each.
// New vertices, appended in this order: T_{-1}, T_0, T_1, W_{-1}, W_0, W_1.
// T_{-2} < T_2 are U's other neighbours, W_{-2} < W_2 are V's, and
// u_{-1} < u_0 < u_1, v_{-1} < v_0 < v_1 the neighbours of u and v.
// New edges: the paths T_{-2}..T_2 and W_{-2}..W_2, then (T_i, u_i), then
// (v_i, W_i). A common neighbour of u and v simply receives one edge from
// each side.
inline Composite superpose_52(const Graph& outer, int outer_edge, const Graph& inner, Vertex u,
                              Vertex v) {
  if (!is_cubic(outer) || !is_cubic(inner)) throw DomainError("superpose_52 needs cubic graphs");
  if (outer_edge < 0 || outer_edge >= outer.num_edges()) throw DomainError("unknown edge E");
  if (u < 0 || v < 0 || u >= inner.num_vertices() || v >= inner.num_vertices() || u == v) {
    throw DomainError("u and v must be two vertices of the inner graph");
  }
  if (inner.adjacent(u, v)) throw DomainError("u and v must be non-adjacent");
  const EdgeRef E = outer.edge(outer_edge);
  const auto t_ends = detail::sorted_neighbors_except(outer, E.u, E.v);
  const auto w_ends = detail::sorted_neighbors_except(outer, E.v, E.u);
  const auto u_nb = detail::sorted_neighbors_except(inner, u, -1);
  const auto v_nb = detail::sorted_neighbors_except(inner, v, -1);
  Surgery l = delete_vertices(outer, {E.u, E.v});
  Surgery r = delete_vertices(inner, {u, v});
  const int offset = l.graph.num_vertices();
  const int first_new = offset + r.graph.num_vertices();
  // T[0..4] = T_{-2}..T_2, W likewise.
  std::array<Vertex, 5> T = {l.vertex_map[t_ends[0]], first_new, first_new + 1, first_new + 2,
                             l.vertex_map[t_ends[1]]};
  std::array<Vertex, 5> W = {l.vertex_map[w_ends[0]], first_new + 3, first_new + 4,
                             first_new + 5, l.vertex_map[w_ends[1]]};
  std::vector<std::pair<Vertex, Vertex>> extra;
  for (int i = 0; i < 4; ++i) extra.emplace_back(T[i], T[i + 1]);
  for (int i = 0; i < 4; ++i) extra.emplace_back(W[i], W[i + 1]);
  for (int i = 0; i < 3; ++i) extra.emplace_back(T[i + 1], r.vertex_map[u_nb[i]] + offset);
  for (int i = 0; i < 3; ++i) extra.emplace_back(r.vertex_map[v_nb[i]] + offset, W[i + 1]);
  Composite out = detail::combine(l, r, 6, extra);
  if (!is_cubic(out.graph)) throw DomainError("superposition is not cubic for these choices");
  return out;
}

// Isaacs' dot product: drop independent edges e1 = (a, b), e2 = (c, d) from
// g1 and adjacent vertices x, y from g2, then add (a, x1), (b, x2),
// (c, y1), (d, y2) where x1 < x2 are x's other neighbours and y1 < y2 are
// y's. Bit 0 of `wiring` swaps x1 and x2, bit 1 swaps y1 and y2.
inline Composite dot_product(const Graph& g1, int e1, int e2, const Graph& g2, Vertex x, Vertex y,
                             int wiring = 0) {
  if (!is_cubic(g1) || !is_cubic(g2)) throw DomainError("dot_product needs cubic graphs");
  if (e1 < 0 || e2 < 0 || e1 >= g1.num_edges() || e2 >= g1.num_edges() || e1 == e2) {
    throw DomainError("e1, e2 must be two edges of the first graph");
  }
  if (g1.edges_adjacent(e1, e2)) throw DomainError("e1 and e2 must be independent");
  if (x < 0 || y < 0 || x >= g2.num_vertices() || y >= g2.num_vertices() || !g2.adjacent(x, y)) {
    throw DomainError("x and y must be adjacent vertices of the second graph");
  }
  auto xs = detail::sorted_neighbors_except(g2, x, y);
  auto ys = detail::sorted_neighbors_except(g2, y, x);
  if (xs[0] == ys[0] || xs[0] == ys[1] || xs[1] == ys[0] || xs[1] == ys[1]) {
    throw DomainError("x and y lie on a triangle");
  }
  if (wiring & 1) std::swap(xs[0], xs[1]);
  if (wiring & 2) std::swap(ys[0], ys[1]);
  const EdgeRef a = g1.edge(e1);
  const EdgeRef c = g1.edge(e2);
  Surgery l = delete_edges(g1, {e1, e2});
  Surgery r = delete_vertices(g2, {x, y});
  const int offset = l.graph.num_vertices();
  auto R = [&](Vertex z) { return r.vertex_map[z] + offset; };
  std::vector<std::pair<Vertex, Vertex>> extra = {
      {a.u, R(xs[0])}, {a.v, R(xs[1])}, {c.u, R(ys[0])}, {c.v, R(ys[1])}};
  return detail::combine(l, r, 0, extra);
}

}  // namespace snarkforge
