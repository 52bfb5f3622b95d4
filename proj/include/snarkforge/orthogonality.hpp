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

// Orthogonal edge pairs and the quantities tied to them: color-pair counts,
// same-class counts and spanning covers by even cycles.

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "snarkforge/coloring.hpp"
#include "snarkforge/kempe.hpp"

namespace snarkforge {

using ColorPairTable = std::array<std::array<Count, 3>, 3>;

// True iff d1 and d2 lie on one two-colored Kempe chain of `coloring`.
inline bool on_common_kempe_chain(const Graph& h, const EdgeColoring& coloring, int d1, int d2) {
  const Color x = coloring[d1];
  const Color y = coloring[d2];
  if (x != y) return kempe_chain_two_colors(h, coloring, x, y, d1).contains(d2);
  for (Color other : kColors) {
    if (other == x) continue;
    if (kempe_chain(h, coloring, d1, other).contains(d2)) return true;
  }
  return false;
}

namespace detail {

inline void check_edge_pair(const Graph& h, int d1, int d2) {
  if (d1 < 0 || d2 < 0 || d1 >= h.num_edges() || d2 >= h.num_edges()) {
    throw DomainError("unknown edge");
  }
  if (d1 == d2) throw DomainError("edge pair must be two distinct edges");
}

}  // namespace detail

// No coloring of h puts d1 and d2 on a common Kempe cycle. Decided over the
// full coloring set.
inline bool are_orthogonal(const Graph& h, int d1, int d2) {
  detail::check_edge_pair(h, d1, d2);
  if (!is_cubic(h)) throw DomainError("orthogonality is defined on cubic graphs");
  bool any = false;
  bool shared = false;
  for_each_coloring(h, [&](const EdgeColoring& c) {
    any = true;
    shared = on_common_kempe_chain(h, c, d1, d2);
    return !shared;
  });
  if (!any) throw DomainError("orthogonality needs an edge-3-colorable graph");
  return !shared;
}

// Entry [x][y] counts colorings with d1 colored x and d2 colored y
// (indices a=0, b=1, c=2).
inline ColorPairTable color_pair_counts(const Graph& h, int d1, int d2) {
  detail::check_edge_pair(h, d1, d2);
  ColorPairTable table{};
  for_each_coloring(h, [&](const EdgeColoring& c) {
    auto& cell = table[color_index(c[d1])][color_index(c[d2])];
    cell = checked_add(cell, 1);
    return true;
  });
  return table;
}

// Number of 3-edge-decompositions that put d1 and d2 in one class.
inline Count same_class_count(const Graph& g, int d1, int d2) {
  detail::check_edge_pair(g, d1, d2);
  Count n = 0;
  for_each_decomposition(g, [&](const EdgeColoring& c) {
    if (c[d1] == c[d2]) ++n;
    return true;
  });
  return n;
}

// Every orthogonal pair {d1 < d2} of h, lexicographically ordered. One pass
// over EC(h) marks the pairs seen on a common chain; the rest are orthogonal.
inline std::vector<std::pair<int, int>> orthogonal_pairs(const Graph& h) {
  if (!is_cubic(h)) throw DomainError("orthogonality is defined on cubic graphs");
  const int m = h.num_edges();
  std::vector<std::vector<char>> together(m, std::vector<char>(m, 0));
  bool any = false;
  constexpr std::array<std::pair<Color, Color>, 3> kPairs = {
      std::pair{Color::a, Color::b}, std::pair{Color::a, Color::c},
      std::pair{Color::b, Color::c}};
  for_each_coloring(h, [&](const EdgeColoring& c) {
    any = true;
    for (auto [x, y] : kPairs) {
      for (const KempeChain& chain : kempe_chains(h, c, x, y)) {
        for (int e : chain.edges) {
          for (int f : chain.edges) together[e][f] = 1;
        }
      }
    }
    return true;
  });
  if (!any) throw DomainError("orthogonality needs an edge-3-colorable graph");
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < m; ++e) {
    for (int f = e + 1; f < m; ++f) {
      if (!together[e][f]) out.emplace_back(e, f);
    }
  }
  return out;
}

struct CycleCover {
  std::vector<Cycle> cycles;

  int num_cycles() const { return static_cast<int>(cycles.size()); }
};

// Spanning subgraphs of h made of disjoint even cycles that avoid d1 and d2.
// Each cycle is grown from the least uncovered vertex and accepted at
// closure only if it has an even number of edges.
inline std::vector<CycleCover> even_cycle_covers(const Graph& h, int d1, int d2) {
  detail::check_edge_pair(h, d1, d2);
  if (!is_cubic(h)) throw DomainError("even cycle covers are defined on cubic graphs");
  const int n = h.num_vertices();
  std::vector<char> covered(n, 0), on_path(n, 0);
  std::vector<Cycle> chosen;
  std::vector<CycleCover> out;

  auto cover_rest = [&](auto&& self) -> void {
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (!covered[v]) {
        start = v;
        break;
      }
    }
    if (start < 0) {
      out.push_back(CycleCover{chosen});
      return;
    }
    std::vector<Vertex> path = {start};  // one per level; deeper levels grow their own
    auto grow = [&](auto&& grow_self) -> void {
      const Vertex last = path.back();
      for (int e : h.incident(last)) {
        if (e == d1 || e == d2) continue;
        const Vertex y = h.other_end(e, last);
        if (y == start) {
          if (path.size() >= 4 && path.size() % 2 == 0 && path[1] < path.back()) {
            for (Vertex v : path) covered[v] = 1;
            chosen.push_back(Cycle{path});
            self(self);
            chosen.pop_back();
            for (Vertex v : path) covered[v] = 0;
          }
          continue;
        }
        if (covered[y] || on_path[y]) continue;
        path.push_back(y);
        on_path[y] = 1;
        grow_self(grow_self);
        on_path[y] = 0;
        path.pop_back();
      }
    };
    on_path[start] = 1;
    grow(grow);
    on_path[start] = 0;
  };
  cover_rest(cover_rest);
  return out;
}

struct KaszonyiSum {
  Count lhs = 0;          // |ED(h)|
  Count rhs = 0;          // (3/2) * sum over covers of 2^(number of cycles)
  Count power_sum = 0;    // sum over covers of 2^(number of cycles)
  std::size_t covers = 0;
  bool equal = false;
};

// Compares |ED(h)| with (3/2) * sum 2^N over the even cycle covers avoiding
// d1, d2. Both sides come from separate enumerations.
inline KaszonyiSum kaszonyi_sum_check(const Graph& h, int d1, int d2) {
  if (!are_orthogonal(h, d1, d2)) throw DomainError("edges are not orthogonal");
  KaszonyiSum out;
  out.lhs = count_decompositions(h);
  const auto covers = even_cycle_covers(h, d1, d2);
  out.covers = covers.size();
  for (const CycleCover& c : covers) {
    out.power_sum = checked_add(out.power_sum, Count{1} << c.num_cycles());
  }
  out.rhs = checked_mul(out.power_sum, 3) / 2;
  out.equal = checked_mul(out.lhs, 2) == checked_mul(out.power_sum, 3);
  return out;
}

}  // namespace snarkforge
