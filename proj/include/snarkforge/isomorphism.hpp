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

// Isomorphism and automorphism search for small graphs. Plain backtracking:
// a vertex may only map to a vertex with the same degree and distance
// histogram, and every partial map must preserve all pairwise distances.

#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "snarkforge/graph.hpp"

namespace snarkforge {

namespace detail {

class MappingSearch {
 public:
  MappingSearch(const Graph& from, const Graph& to)
      : from_(from), to_(to), dist_from_(distance_matrix(from)), dist_to_(distance_matrix(to)) {
    signature_from_ = signatures(from_, dist_from_);
    signature_to_ = signatures(to_, dist_to_);
  }

  bool compatible_shapes() const {
    if (from_.num_vertices() != to_.num_vertices()) return false;
    if (from_.num_edges() != to_.num_edges()) return false;
    auto a = signature_from_;
    auto b = signature_to_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  // Finds a distance-preserving bijection extending `seed` (pairs
  // from-vertex -> to-vertex).
  std::optional<std::vector<Vertex>> find(const std::vector<std::pair<Vertex, Vertex>>& seed) {
    if (!compatible_shapes()) return std::nullopt;
    const int n = from_.num_vertices();
    map_.assign(n, -1);
    used_.assign(n, 0);
    order_.clear();
    for (auto [x, y] : seed) {
      if (map_[x] >= 0) {
        if (map_[x] != y) return std::nullopt;
        continue;
      }
      if (used_[y] || !fits(x, y)) return std::nullopt;
      map_[x] = y;
      used_[y] = 1;
      order_.push_back(x);
    }
    seeded_ = order_.size();
    // Remaining vertices in BFS order from the seeded ones so that each new
    // vertex has mapped neighbours constraining it.
    std::vector<char> queued(n, 0);
    for (Vertex x : order_) queued[x] = 1;
    for (std::size_t head = 0;; ++head) {
      if (head == order_.size()) {
        Vertex fresh = -1;
        for (Vertex v = 0; v < n; ++v) {
          if (!queued[v]) {
            fresh = v;
            break;
          }
        }
        if (fresh < 0) break;
        queued[fresh] = 1;
        order_.push_back(fresh);
      }
      Vertex x = order_[head];
      for (Vertex y : from_.neighbors(x)) {
        if (!queued[y]) {
          queued[y] = 1;
          order_.push_back(y);
        }
      }
    }
    if (extend(seeded_)) return map_;
    return std::nullopt;
  }

 private:
  using Signature = std::pair<int, std::vector<int>>;

  static std::vector<Signature> signatures(const Graph& g,
                                           const std::vector<std::vector<int>>& dist) {
    const int n = g.num_vertices();
    std::vector<Signature> out(n);
    for (Vertex v = 0; v < n; ++v) {
      std::vector<int> hist(n + 1, 0);
      for (Vertex w = 0; w < n; ++w) ++hist[dist[v][w] < 0 ? n : dist[v][w]];
      out[v] = {g.degree(v), std::move(hist)};
    }
    return out;
  }

  bool fits(Vertex x, Vertex y) const {
    if (signature_from_[x] != signature_to_[y]) return false;
    for (Vertex x2 : order_) {
      if (dist_from_[x][x2] != dist_to_[y][map_[x2]]) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex x = order_[depth];
    const int n = to_.num_vertices();
    // Prefer candidates adjacent to the image of an already-mapped neighbour.
    Vertex anchor = -1;
    for (Vertex y : from_.neighbors(x)) {
      if (map_[y] >= 0) {
        anchor = y;
        break;
      }
    }
    std::vector<Vertex> candidates;
    if (anchor >= 0) {
      candidates = to_.neighbors(map_[anchor]);
    } else {
      candidates.resize(n);
      for (Vertex y = 0; y < n; ++y) candidates[y] = y;
    }
    for (Vertex y : candidates) {
      if (used_[y]) continue;
      if (!fits_partial(x, y, depth)) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(depth + 1)) return true;
      map_[x] = -1;
      used_[y] = 0;
    }
    return false;
  }

  bool fits_partial(Vertex x, Vertex y, std::size_t depth) const {
    if (signature_from_[x] != signature_to_[y]) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex x2 = order_[i];
      if (dist_from_[x][x2] != dist_to_[y][map_[x2]]) return false;
    }
    return true;
  }

  const Graph& from_;
  const Graph& to_;
  std::vector<std::vector<int>> dist_from_, dist_to_;
  std::vector<Signature> signature_from_, signature_to_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::vector<Vertex> order_;
  std::size_t seeded_ = 0;
};

}  // namespace detail

// Returns map with map[v] = image in h of vertex v of g.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& g, const Graph& h) {
  detail::MappingSearch search(g, h);
  return search.find({});
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
  return find_isomorphism(g, h).has_value();
}

// An automorphism of g that maps edge e onto edge f, if one exists.
inline std::optional<std::vector<Vertex>> automorphism_mapping_edge(const Graph& g, int e, int f) {
  detail::MappingSearch search(g, g);
  const EdgeRef& a = g.edge(e);
  const EdgeRef& b = g.edge(f);
  if (auto m = search.find({{a.u, b.u}, {a.v, b.v}})) return m;
  return search.find({{a.u, b.v}, {a.v, b.u}});
}

// Partition of edge indices into automorphism orbits; each orbit sorted,
// orbits ordered by least member.
inline std::vector<std::vector<int>> edge_orbits(const Graph& g) {
  const int m = g.num_edges();
  detail::DisjointSets sets(m);
  auto image_edge = [&](const std::vector<Vertex>& perm, int e) {
    const EdgeRef& r = g.edge(e);
    return *g.find_edge(perm[r.u], perm[r.v]);
  };
  for (int e = 0; e < m; ++e) {
    if (sets.find(e) != e) continue;
    for (int f = e + 1; f < m; ++f) {
      if (sets.find(f) == sets.find(e)) continue;
      auto perm = automorphism_mapping_edge(g, e, f);
      if (!perm) continue;
      for (int x = 0; x < m; ++x) sets.unite(x, image_edge(*perm, x));
    }
  }
  std::vector<std::vector<int>> orbits;
  std::vector<int> slot(m, -1);
  for (int e = 0; e < m; ++e) {
    const int root = sets.find(e);
    if (slot[root] < 0) {
      slot[root] = static_cast<int>(orbits.size());
      orbits.emplace_back();
    }
    orbits[slot[root]].push_back(e);
  }
  return orbits;
}

}  // namespace snarkforge
