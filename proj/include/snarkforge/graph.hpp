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

// Immutable simple graphs and the structural surgeries used by the snark
// constructions: vertex/edge deletion, smoothing out a removed edge, girth,
// cyclic edge connectivity, cycle listing and Hamiltonicity.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "snarkforge/errors.hpp"

namespace snarkforge {

using Vertex = int;

struct EdgeRef {
  int index = -1;
  Vertex u = -1;  // u < v
  Vertex v = -1;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// A finite simple undirected graph on vertices 0..n-1. Edges keep the order
// in which they were supplied; an edge's index is its position in that order.
class Graph {
 public:
  // Validates: n >= 1, endpoints in range, no loops, no repeated pairs.
  Graph(int num_vertices, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : num_vertices_(num_vertices), incident_(num_vertices > 0 ? num_vertices : 0) {
    if (num_vertices < 1) throw DomainError("graph needs at least one vertex");
    std::set<std::pair<Vertex, Vertex>> seen;
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= num_vertices || b >= num_vertices) {
        throw DomainError("edge endpoint out of range");
      }
      if (a == b) throw DomainError("loop at vertex " + std::to_string(a));
      if (a > b) std::swap(a, b);
      if (!seen.insert({a, b}).second) {
        throw DomainError("multiple edge " + std::to_string(a) + "-" +
                          std::to_string(b));
      }
      const int index = static_cast<int>(edges_.size());
      edges_.push_back({index, a, b});
      incident_[a].push_back(index);
      incident_[b].push_back(index);
    }
  }

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<EdgeRef>& edges() const { return edges_; }
  const EdgeRef& edge(int index) const { return edges_.at(index); }

  std::span<const int> incident(Vertex v) const { return incident_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(incident_.at(v).size()); }

  Vertex other_end(int edge_index, Vertex v) const {
    const EdgeRef& e = edges_[edge_index];
    return e.u == v ? e.v : e.u;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    std::vector<Vertex> out;
    for (int e : incident(v)) out.push_back(other_end(e, v));
    return out;
  }

  std::optional<int> find_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= num_vertices_ || b >= num_vertices_) {
      return std::nullopt;
    }
    const auto& inc = incident_[a].size() <= incident_[b].size() ? incident_[a]
                                                                 : incident_[b];
    for (int e : inc) {
      const EdgeRef& r = edges_[e];
      if ((r.u == a && r.v == b) || (r.u == b && r.v == a)) return e;
    }
    return std::nullopt;
  }

  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  bool edges_adjacent(int e1, int e2) const {
    const EdgeRef& a = edges_[e1];
    const EdgeRef& b = edges_[e2];
    return e1 != e2 && (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v);
  }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const EdgeRef& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

 private:
  int num_vertices_;
  std::vector<EdgeRef> edges_;
  std::vector<std::vector<int>> incident_;
};

// Cyclic vertex sequence. Normalized form starts at the least vertex and
// walks toward the smaller of its two cycle neighbours.
struct Cycle {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }

  std::vector<int> edges(const Graph& g) const {
    std::vector<int> out;
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto e = g.find_edge(vertices[i], vertices[(i + 1) % n]);
      if (!e) throw DomainError("cycle uses a non-edge");
      out.push_back(*e);
    }
    return out;
  }

  friend bool operator==(const Cycle&, const Cycle&) = default;
  friend auto operator<=>(const Cycle&, const Cycle&) = default;
};

inline Cycle normalize_cycle(std::vector<Vertex> seq) {
  const std::size_t n = seq.size();
  if (n == 0) return {};
  const auto min_it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), min_it, seq.end());
  if (n > 2 && seq[n - 1] < seq[1]) std::reverse(seq.begin() + 1, seq.end());
  return Cycle{std::move(seq)};
}

// True iff `c` is a cycle of `g`: n >= 3 distinct vertices, consecutive
// pairs (with wraparound) adjacent.
inline bool is_cycle_of(const Graph& g, const Cycle& c) {
  const std::size_t n = c.vertices.size();
  if (n < 3) return false;
  std::set<Vertex> distinct(c.vertices.begin(), c.vertices.end());
  if (distinct.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!g.adjacent(c.vertices[i], c.vertices[(i + 1) % n])) return false;
  }
  return true;
}

// Result of a surgery. vertex_map[old] is the new id or -1 when deleted;
// edge_map likewise for edge indices.
struct Surgery {
  Graph graph;
  std::vector<int> vertex_map;
  std::vector<int> edge_map;
};

inline Surgery delete_vertices(const Graph& g, const std::set<Vertex>& q) {
  for (Vertex v : q) {
    if (v < 0 || v >= g.num_vertices()) throw DomainError("unknown vertex");
  }
  if (static_cast<int>(q.size()) >= g.num_vertices()) {
    throw DomainError("deleted vertex set must be a proper subset");
  }
  std::vector<int> vmap(g.num_vertices(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!q.count(v)) vmap[v] = next++;
  }
  std::vector<int> emap(g.num_edges(), -1);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const EdgeRef& e : g.edges()) {
    if (vmap[e.u] < 0 || vmap[e.v] < 0) continue;
    emap[e.index] = static_cast<int>(kept.size());
    kept.emplace_back(vmap[e.u], vmap[e.v]);
  }
  return Surgery{Graph(next, kept), std::move(vmap), std::move(emap)};
}

inline Surgery delete_edges(const Graph& g, const std::set<int>& s) {
  for (int e : s) {
    if (e < 0 || e >= g.num_edges()) throw DomainError("unknown edge");
  }
  std::vector<int> vmap(g.num_vertices());
  std::iota(vmap.begin(), vmap.end(), 0);
  std::vector<int> emap(g.num_edges(), -1);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const EdgeRef& e : g.edges()) {
    if (s.count(e.index)) continue;
    emap[e.index] = static_cast<int>(kept.size());
    kept.emplace_back(e.u, e.v);
  }
  return Surgery{Graph(g.num_vertices(), kept), std::move(vmap), std::move(emap)};
}

// valence -> number of vertices with that valence
inline std::map<int, int> valence_profile(const Graph& g) {
  std::map<int, int> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) ++out[g.degree(v)];
  return out;
}

inline bool is_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 3) return false;
  }
  return true;
}

inline bool is_quasi_cubic(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) != 1 && g.degree(v) != 3) return false;
  }
  return true;
}

inline std::optional<Vertex> first_trivalent_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 3) return v;
  }
  return std::nullopt;
}

// Component id per vertex, ids assigned in order of least vertex.
inline std::vector<int> connected_components(const Graph& g, int* count = nullptr) {
  std::vector<int> comp(g.num_vertices(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (int e : g.incident(x)) {
        Vertex y = g.other_end(e, x);
        if (comp[y] < 0) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  if (count) *count = next;
  return comp;
}

inline bool is_connected(const Graph& g) {
  int count = 0;
  connected_components(g, &count);
  return count == 1;
}

// All-pairs BFS distances; -1 for unreachable pairs.
inline std::vector<std::vector<int>> distance_matrix(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    auto& d = dist[s];
    d[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (int e : g.incident(x)) {
        Vertex y = g.other_end(e, x);
        if (d[y] < 0) {
          d[y] = d[x] + 1;
          queue.push_back(y);
        }
      }
    }
  }
  return dist;
}

// Length of a shortest cycle, or nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.num_vertices();
  int best = n + 1;
  std::vector<int> dist(n), parent_edge(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent_edge[s] = -1;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (2 * dist[x] + 1 >= best) break;
      for (int e : g.incident(x)) {
        if (e == parent_edge[x]) continue;
        Vertex y = g.other_end(e, x);
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent_edge[y] = e;
          queue.push_back(y);
        } else {
          best = std::min(best, dist[x] + dist[y] + 1);
        }
      }
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

// Calls visit(const std::vector<Vertex>&) once per cycle of the given length,
// with the sequence in normalized form. Stops early when visit returns false.
template <class Visit>
bool for_each_cycle_of_length(const Graph& g, int length, Visit&& visit) {
  if (length < 3) return true;
  const int n = g.num_vertices();
  std::vector<Vertex> path;
  std::vector<char> on_path(n, 0);
  bool keep_going = true;

  auto extend = [&](auto&& self, Vertex start) -> void {
    if (!keep_going) return;
    Vertex last = path.back();
    if (static_cast<int>(path.size()) == length) {
      if (path[1] < path.back() && g.adjacent(last, start)) {
        keep_going = visit(std::as_const(path));
      }
      return;
    }
    for (int e : g.incident(last)) {
      Vertex y = g.other_end(e, last);
      if (y <= start || on_path[y]) continue;
      path.push_back(y);
      on_path[y] = 1;
      self(self, start);
      on_path[y] = 0;
      path.pop_back();
      if (!keep_going) return;
    }
  };

  for (Vertex s = 0; s < n && keep_going; ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    extend(extend, s);
    on_path[s] = 0;
  }
  return keep_going;
}

// All cycles of exactly `length` vertices, normalized and sorted.
inline std::vector<Cycle> find_cycles(const Graph& g, int length) {
  std::vector<Cycle> out;
  for_each_cycle_of_length(g, length, [&](const std::vector<Vertex>& seq) {
    out.push_back(Cycle{seq});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<Cycle> list_pentagons(const Graph& g) { return find_cycles(g, 5); }

// Number of edges minus number of vertices plus number of components; zero
// exactly for forests.
inline int cycle_rank(const Graph& g) {
  int comps = 0;
  connected_components(g, &comps);
  return g.num_edges() - g.num_vertices() + comps;
}

inline bool has_disjoint_cycles(const Graph& g) {
  bool found = false;
  for (int len = 3; len <= g.num_vertices() - 3 && !found; ++len) {
    for_each_cycle_of_length(g, len, [&](const std::vector<Vertex>& seq) {
      if (static_cast<int>(seq.size()) >= g.num_vertices()) return true;
      Surgery rest = delete_vertices(g, std::set<Vertex>(seq.begin(), seq.end()));
      if (cycle_rank(rest.graph) > 0) found = true;
      return !found;
    });
  }
  return found;
}

namespace detail {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent[b] = a;  // root is the least member
    return true;
  }
};

// True iff g minus the marked edges has at least two components that each
// contain a cycle.
inline bool separates_two_cycles(const Graph& g, const std::vector<char>& removed,
                                 std::vector<int>& edges_in, std::vector<int>& verts_in) {
  const int n = g.num_vertices();
  DisjointSets sets(n);
  for (const EdgeRef& e : g.edges()) {
    if (!removed[e.index]) sets.unite(e.u, e.v);
  }
  std::fill(edges_in.begin(), edges_in.end(), 0);
  std::fill(verts_in.begin(), verts_in.end(), 0);
  for (Vertex v = 0; v < n; ++v) ++verts_in[sets.find(v)];
  for (const EdgeRef& e : g.edges()) {
    if (!removed[e.index]) ++edges_in[sets.find(e.u)];
  }
  int cyclic = 0;
  for (Vertex r = 0; r < n; ++r) {
    if (verts_in[r] > 0 && edges_in[r] >= verts_in[r]) ++cyclic;
  }
  return cyclic >= 2;
}

}  // namespace detail

// Decides cyclic n-edge-connectivity by trying every edge set S with
// |S| <= n-1 and asking whether g - S has two components that each carry a
// cycle. Such components yield two disjoint cycles avoided by S, and
// conversely a separating S for two disjoint cycles leaves them in distinct
// cyclic components.
inline bool cyclically_edge_connected_at_least(const Graph& g, int n) {
  if (n < 2) throw DomainError("cyclic connectivity level must be >= 2");
  if (!has_disjoint_cycles(g)) {
    throw UndefinedError("graph has no pair of disjoint cycles");
  }
  const int m = g.num_edges();
  std::vector<char> removed(m, 0);
  std::vector<int> edges_in(g.num_vertices()), verts_in(g.num_vertices());
  if (detail::separates_two_cycles(g, removed, edges_in, verts_in)) return false;
  std::vector<int> chosen;
  bool violated = false;
  auto search = [&](auto&& self, int start, int remaining) -> void {
    for (int e = start; e < m && !violated; ++e) {
      removed[e] = 1;
      chosen.push_back(e);
      if (detail::separates_two_cycles(g, removed, edges_in, verts_in)) {
        violated = true;
      } else if (remaining > 1) {
        self(self, e + 1, remaining - 1);
      }
      chosen.pop_back();
      removed[e] = 0;
    }
  };
  search(search, 0, n - 1);
  return !violated;
}

struct ContractedEdge {
  Graph graph;
  std::vector<int> vertex_map;  // old vertex -> new id, -1 for the endpoints of e
  EdgeRef d1;                   // joins the two other neighbours of e.u
  EdgeRef d2;                   // joins the two other neighbours of e.v
};

// Removes edge e = (u, v) together with u and v and smooths the two paths of
// length two that remain: d1 joins u's other neighbours, d2 joins v's. The
// result is cubic and simple whenever g is cubic, e lies on no triangle and
// neither pair of outer neighbours is already adjacent (girth >= 4 and
// cyclic 2-edge-connectivity give that). Edges of g - {u, v} keep their
// relative order; d1 and d2 are appended in that order.
inline ContractedEdge contract_removed_edge(const Graph& g, int edge_index) {
  if (edge_index < 0 || edge_index >= g.num_edges()) throw DomainError("unknown edge");
  if (!is_cubic(g)) throw DomainError("contract_removed_edge needs a cubic graph");
  const EdgeRef e = g.edge(edge_index);
  auto others = [&](Vertex x, Vertex skip) {
    std::vector<Vertex> out;
    for (Vertex y : g.neighbors(x)) {
      if (y != skip) out.push_back(y);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  const std::vector<Vertex> t = others(e.u, e.v);
  const std::vector<Vertex> w = others(e.v, e.u);
  for (Vertex a : t) {
    for (Vertex b : w) {
      if (a == b) throw DomainError("edge lies on a triangle");
    }
  }
  if (g.adjacent(t[0], t[1]) || g.adjacent(w[0], w[1])) {
    throw DomainError("smoothing would create a multiple edge (4-cycle through e)");
  }
  Surgery cut = delete_vertices(g, {e.u, e.v});
  auto pairs = cut.graph.edge_pairs();
  const Vertex t1 = cut.vertex_map[t[0]], t2 = cut.vertex_map[t[1]];
  const Vertex w1 = cut.vertex_map[w[0]], w2 = cut.vertex_map[w[1]];
  const int d1_index = static_cast<int>(pairs.size());
  pairs.emplace_back(t1, t2);
  pairs.emplace_back(w1, w2);
  Graph out(cut.graph.num_vertices(), pairs);
  EdgeRef d1 = out.edge(d1_index);
  EdgeRef d2 = out.edge(d1_index + 1);
  return ContractedEdge{std::move(out), std::move(cut.vertex_map), d1, d2};
}

// Exact backtracking search for a Hamiltonian cycle.
inline bool is_hamiltonian(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 3) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < 2) return false;
  }
  if (!is_connected(g)) return false;
  std::vector<char> used(n, 0);
  used[0] = 1;
  auto extend = [&](auto&& self, Vertex last, int depth) -> bool {
    if (depth == n) return g.adjacent(last, 0);
    for (int e : g.incident(last)) {
      Vertex y = g.other_end(e, last);
      if (used[y]) continue;
      used[y] = 1;
      if (self(self, y, depth + 1)) return true;
      used[y] = 0;
    }
    return false;
  };
  return extend(extend, 0, 1);
}

}  // namespace snarkforge
