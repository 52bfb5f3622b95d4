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

// Kempe chains, Kempe swaps and the parity of pendant colors.

#pragma once

#include <algorithm>
#include <vector>

#include "snarkforge/coloring.hpp"

namespace snarkforge {

struct KempeChain {
  enum class Kind { kPath, kCycle };

  Color x = Color::a;
  Color y = Color::b;
  std::vector<int> edges;        // sorted edge indices
  Kind kind = Kind::kCycle;
  std::vector<Vertex> endpoints;  // the two ends of a path; empty for a cycle

  bool contains(int edge) const { return std::binary_search(edges.begin(), edges.end(), edge); }
};

// The maximal connected subgraph through `seed` whose edges are colored x or y.
inline KempeChain kempe_chain_two_colors(const Graph& g, const EdgeColoring& coloring, Color x,
                                         Color y, int seed) {
  if (x == y) throw DomainError("Kempe chain needs two distinct colors");
  const Color s = coloring[seed];
  if (s != x && s != y) throw DomainError("seed edge is not colored with either chain color");
  KempeChain chain;
  chain.x = x;
  chain.y = y;
  std::vector<char> in_chain(g.num_edges(), 0);
  std::vector<int> stack = {seed};
  in_chain[seed] = 1;
  while (!stack.empty()) {
    const int e = stack.back();
    stack.pop_back();
    chain.edges.push_back(e);
    for (Vertex end : {g.edge(e).u, g.edge(e).v}) {
      for (int f : g.incident(end)) {
        if (in_chain[f]) continue;
        if (coloring[f] != x && coloring[f] != y) continue;
        in_chain[f] = 1;
        stack.push_back(f);
      }
    }
  }
  std::sort(chain.edges.begin(), chain.edges.end());
  // Every vertex of the chain meets one or two chain edges.
  std::vector<int> touch(g.num_vertices(), 0);
  for (int e : chain.edges) {
    ++touch[g.edge(e).u];
    ++touch[g.edge(e).v];
  }
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (touch[v] == 1) chain.endpoints.push_back(v);
  }
  chain.kind = chain.endpoints.empty() ? KempeChain::Kind::kCycle : KempeChain::Kind::kPath;
  return chain;
}

// The chain through `edge` using its own color and `other`.
inline KempeChain kempe_chain(const Graph& g, const EdgeColoring& coloring, int edge, Color other) {
  return kempe_chain_two_colors(g, coloring, coloring[edge], other, edge);
}

// All xy-chains of the coloring, ordered by least edge.
inline std::vector<KempeChain> kempe_chains(const Graph& g, const EdgeColoring& coloring, Color x,
                                            Color y) {
  std::vector<KempeChain> out;
  std::vector<char> done(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    if (done[e] || (coloring[e] != x && coloring[e] != y)) continue;
    out.push_back(kempe_chain_two_colors(g, coloring, x, y, e));
    for (int f : out.back().edges) done[f] = 1;
  }
  return out;
}

// Interchanges x and y on the chain's edges.
inline EdgeColoring kempe_swap(const EdgeColoring& coloring, const KempeChain& chain) {
  EdgeColoring out = coloring;
  for (int e : chain.edges) {
    const Color c = out.colors.at(e);
    if (c == chain.x) {
      out.colors[e] = chain.y;
    } else if (c == chain.y) {
      out.colors[e] = chain.x;
    } else {
      throw DomainError("chain does not belong to this coloring");
    }
  }
  return out;
}

struct PendantEdge {
  Vertex vertex;  // the univalent end
  int edge;
};

// Pendant edges listed by univalent vertex; an isolated edge appears twice.
inline std::vector<PendantEdge> pendant_edges(const Graph& g) {
  std::vector<PendantEdge> out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 1) out.push_back({v, g.incident(v)[0]});
  }
  return out;
}

// Group sum of the colors at univalent vertices. Zero for every coloring of
// a quasi-cubic graph.
inline GroupElement parity_residual(const Graph& g, const EdgeColoring& coloring) {
  if (!is_quasi_cubic(g)) throw DomainError("parity residual needs a quasi-cubic graph");
  const auto pendants = pendant_edges(g);
  if (pendants.empty()) throw DomainError("parity residual needs a univalent vertex");
  GroupElement sum = kZero;
  for (const PendantEdge& p : pendants) sum += to_group(coloring[p.edge]);
  return sum;
}

}  // namespace snarkforge
