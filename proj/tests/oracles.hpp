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

// Reference computations for the tests. Each one is written from the
// definitions alone and shares no code with the library beyond the Graph
// container.

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "snarkforge/graph.hpp"

namespace oracle {

using snarkforge::Graph;
using Count = std::uint64_t;

// Plain adjacency lists of (neighbor, edge index).
inline std::vector<std::vector<std::pair<int, int>>> adjacency(const Graph& g) {
  std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices());
  for (int i = 0; i < g.num_edges(); ++i) {
    const auto& e = g.edge(i);
    adj[e.u].push_back({e.v, i});
    adj[e.v].push_back({e.u, i});
  }
  return adj;
}

// Colors edges 0, 1, 2, ... in order with 1..3 and rejects a color already
// used at either end. Visits every proper coloring.
inline void for_each_coloring(const Graph& g, const std::function<void(const std::vector<int>&)>& visit) {
  const int m = g.num_edges();
  std::vector<int> color(m, 0);
  std::vector<int> used(g.num_vertices(), 0);  // bit mask of colors at each vertex
  std::function<void(int)> go = [&](int i) {
    if (i == m) {
      visit(color);
      return;
    }
    const auto& e = g.edge(i);
    for (int c = 1; c <= 3; ++c) {
      const int bit = 1 << c;
      if ((used[e.u] & bit) || (used[e.v] & bit)) continue;
      color[i] = c;
      used[e.u] |= bit;
      used[e.v] |= bit;
      go(i + 1);
      used[e.u] &= ~bit;
      used[e.v] &= ~bit;
    }
    color[i] = 0;
  };
  go(0);
}

inline Count count_colorings(const Graph& g) {
  Count n = 0;
  for_each_coloring(g, [&](const std::vector<int>&) { ++n; });
  return n;
}

// Cubic graphs only. A coloring is a perfect matching (the c edges) plus a
// 2-coloring of the complementary 2-factor, which exists iff every cycle of
// the 2-factor is even and then in 2^cycles ways.
inline Count count_colorings_by_matchings(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  std::vector<char> in_matching(m, 0), matched(n, 0);
  Count total = 0;
  std::function<void()> go = [&]() {
    int v = 0;
    while (v < n && matched[v]) ++v;
    if (v == n) {
      // Walk the 2-factor.
      std::vector<char> seen(n, 0);
      Count ways = 1;
      for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int len = 0, prev = -1, cur = s;
        do {
          seen[cur] = 1;
          int next = -1;
          for (int x : g.neighbors(cur)) {
            const int e = *g.find_edge(cur, x);
            if (in_matching[e] || x == prev) continue;
            next = x;
            break;
          }
          if (next < 0) return;  // not cubic
          prev = cur;
          cur = next;
          ++len;
        } while (cur != s);
        if (len % 2) return;
        ways *= 2;
      }
      total += ways;
      return;
    }
    for (int x : g.neighbors(v)) {
      if (matched[x]) continue;
      const int e = *g.find_edge(v, x);
      in_matching[e] = 1;
      matched[v] = matched[x] = 1;
      go();
      matched[v] = matched[x] = 0;
      in_matching[e] = 0;
    }
  };
  go();
  return total;
}

// Every cycle as a sorted edge set.
inline std::vector<std::vector<int>> all_cycles(const Graph& g) {
  const auto adj = adjacency(g);
  std::set<std::vector<int>> found;
  std::vector<char> on(g.num_vertices(), 0);
  std::vector<int> edges;
  std::function<void(int, int)> go = [&](int s, int v) {
    for (auto [x, e] : adj[v]) {
      if (x < s) continue;
      if (x == s && edges.size() >= 2) {
        std::vector<int> c = edges;
        c.push_back(e);
        std::sort(c.begin(), c.end());
        found.insert(c);
        continue;
      }
      if (on[x]) continue;
      on[x] = 1;
      edges.push_back(e);
      go(s, x);
      edges.pop_back();
      on[x] = 0;
    }
  };
  for (int s = 0; s < g.num_vertices(); ++s) {
    on[s] = 1;
    go(s, s);
    on[s] = 0;
  }
  return {found.begin(), found.end()};
}

// Unit-capacity max flow between two vertex sets of an undirected graph,
// i.e. the fewest edges whose removal separates them.
inline int min_edge_cut(const Graph& g, const std::set<int>& a, const std::set<int>& b) {
  const int n = g.num_vertices();
  const int source = n, sink = n + 1;
  std::vector<std::map<int, int>> cap(n + 2);
  for (const auto& e : g.edges()) {
    cap[e.u][e.v] += 1;
    cap[e.v][e.u] += 1;
  }
  for (int v : a) cap[source][v] = 1 << 20;
  for (int v : b) cap[v][sink] = 1 << 20;
  int flow = 0;
  while (true) {
    std::vector<int> parent(n + 2, -1);
    parent[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && parent[sink] < 0) {
      const int x = q.front();
      q.pop();
      for (auto [y, c] : cap[x]) {
        if (c > 0 && parent[y] < 0) {
          parent[y] = x;
          q.push(y);
        }
      }
    }
    if (parent[sink] < 0) return flow;
    for (int y = sink; y != source; y = parent[y]) {
      cap[parent[y]][y] -= 1;
      cap[y][parent[y]] += 1;
    }
    ++flow;
  }
}

// Smallest number of edges separating two vertex-disjoint cycles, or -1
// when no such pair exists.
inline int cyclic_edge_connectivity(const Graph& g) {
  const auto cycles = all_cycles(g);
  std::vector<std::set<int>> verts;
  for (const auto& c : cycles) {
    std::set<int> s;
    for (int e : c) {
      s.insert(g.edge(e).u);
      s.insert(g.edge(e).v);
    }
    verts.push_back(s);
  }
  int best = -1;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      bool disjoint = true;
      for (int v : verts[i]) disjoint = disjoint && !verts[j].count(v);
      if (!disjoint) continue;
      const int cut = min_edge_cut(g, verts[i], verts[j]);
      if (best < 0 || cut < best) best = cut;
    }
  }
  return best;
}

// Shortest cycle length by checking every cycle.
inline int girth(const Graph& g) {
  int best = 0;
  for (const auto& c : all_cycles(g)) {
    if (best == 0 || static_cast<int>(c.size()) < best) best = static_cast<int>(c.size());
  }
  return best;
}

// Every vertex permutation preserving adjacency, by backtracking in vertex
// order with an adjacency check against all earlier vertices.
inline std::vector<std::vector<int>> automorphisms(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  std::vector<std::vector<int>> out;
  std::function<void(int)> go = [&](int v) {
    if (v == n) {
      out.push_back(image);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[y] || g.degree(y) != g.degree(v)) continue;
      bool ok = true;
      for (int w = 0; w < v && ok; ++w) ok = adj[v][w] == adj[y][image[w]];
      if (!ok) continue;
      image[v] = y;
      used[y] = 1;
      go(v + 1);
      used[y] = 0;
    }
    image[v] = -1;
  };
  go(0);
  return out;
}

// Number of edge orbits under the full automorphism group.
inline int edge_orbit_count(const Graph& g) {
  std::vector<int> label(g.num_edges());
  std::iota(label.begin(), label.end(), 0);
  std::function<int(int)> find = [&](int x) { return label[x] == x ? x : label[x] = find(label[x]); };
  for (const auto& image : automorphisms(g)) {
    for (int i = 0; i < g.num_edges(); ++i) {
      const auto& e = g.edge(i);
      const int j = *g.find_edge(image[e.u], image[e.v]);
      label[find(i)] = find(j);
    }
  }
  std::set<int> roots;
  for (int i = 0; i < g.num_edges(); ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

// True iff some vertex bijection preserves adjacency (small graphs only).
inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  const int n = g.num_vertices();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : g.edges()) {
      if (!h.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Vertices reachable from one edge's end by alternating through edges of
// the two given colors; returns the edge set of that two-colored component.
inline std::set<int> two_color_component(const Graph& g, const std::vector<int>& color, int seed,
                                         int x, int y) {
  std::set<int> out = {seed};
  std::vector<int> todo = {seed};
  while (!todo.empty()) {
    const int e = todo.back();
    todo.pop_back();
    for (int end : {g.edge(e).u, g.edge(e).v}) {
      for (int f : g.incident(end)) {
        if ((color[f] == x || color[f] == y) && out.insert(f).second) todo.push_back(f);
      }
    }
  }
  return out;
}

// d1 and d2 never share a two-colored component in any coloring. Colors are
// 1..3 as produced by for_each_coloring above.
inline bool orthogonal(const Graph& h, int d1, int d2) {
  bool shared = false;
  for_each_coloring(h, [&](const std::vector<int>& color) {
    for (int other = 1; other <= 3; ++other) {
      if (other == color[d1]) continue;
      if (two_color_component(h, color, d1, color[d1], other).count(d2)) shared = true;
    }
  });
  return !shared;
}

// Tries every start vertex and every extension; true iff some cycle visits
// all vertices.
inline bool hamiltonian(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::function<bool(int, int)> go = [&](int v, int depth) {
    if (depth == n) return g.adjacent(v, 0);
    for (int x : g.neighbors(v)) {
      if (seen[x]) continue;
      seen[x] = 1;
      if (go(x, depth + 1)) return true;
      seen[x] = 0;
    }
    return false;
  };
  seen[0] = 1;
  return go(0, 1);
}

}  // namespace oracle
