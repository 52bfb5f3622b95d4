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

// Exact counting and enumeration of edge-3-colorings and 3-edge-decompositions.
//
// Both paths run the same backtracking kernel. At every node the kernel picks
// the uncolored edge with the fewest admissible colors (a vertex with two
// colored edges forces its third), so on connected cubic graphs the search
// grows along already colored vertices and most steps are forced.

#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "snarkforge/errors.hpp"
#include "snarkforge/graph.hpp"
#include "snarkforge/klein.hpp"

namespace snarkforge {

using Count = std::uint64_t;

inline Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("count overflow");
  return out;
}

inline Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("count overflow");
  return out;
}

// Total map edge index -> color.
struct EdgeColoring {
  std::vector<Color> colors;

  Color operator[](int edge) const { return colors.at(edge); }
  std::size_t size() const { return colors.size(); }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

inline bool is_valid_coloring(const Graph& g, const EdgeColoring& c) {
  if (static_cast<int>(c.size()) != g.num_edges()) return false;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    unsigned seen = 0;
    for (int e : g.incident(v)) {
      const unsigned bit = 1u << static_cast<int>(c.colors[e]);
      if (seen & bit) return false;
      seen |= bit;
    }
  }
  return true;
}

// One line per edge: "<edge index> <a|b|c>".
inline std::string serialize_coloring(const EdgeColoring& c) {
  std::string out;
  for (std::size_t e = 0; e < c.size(); ++e) {
    out += std::to_string(e);
    out += ' ';
    out += color_char(c.colors[e]);
    out += '\n';
  }
  return out;
}

inline EdgeColoring parse_coloring(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, Color>> entries;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    if (line.empty()) continue;
    std::istringstream fields(line);
    int index = -1;
    std::string color;
    if (!(fields >> index >> color) || index < 0) {
      throw ParseError("malformed coloring line", line_start);
    }
    try {
      entries.emplace_back(index, parse_color(color));
    } catch (const DomainError&) {
      throw ParseError("unknown color '" + color + "'", line_start);
    }
  }
  EdgeColoring out;
  out.colors.assign(entries.size(), Color::a);
  std::vector<char> seen(entries.size(), 0);
  for (auto [index, color] : entries) {
    if (index >= static_cast<int>(entries.size()) || seen[index]) {
      throw ParseError("coloring edge indices must be 0..m-1 once each", 0);
    }
    seen[index] = 1;
    out.colors[index] = color;
  }
  return out;
}

// Class labels 0..2 normalized by first appearance in edge order, so equal
// decompositions compare equal regardless of color names.
struct EdgeDecomposition {
  std::vector<std::uint8_t> classes;

  static EdgeDecomposition from_coloring(const EdgeColoring& c) {
    EdgeDecomposition out;
    int relabel[4] = {-1, -1, -1, -1};
    int next = 0;
    out.classes.reserve(c.size());
    for (Color col : c.colors) {
      int& slot = relabel[static_cast<int>(col)];
      if (slot < 0) slot = next++;
      out.classes.push_back(static_cast<std::uint8_t>(slot));
    }
    return out;
  }

  bool same_class(int e1, int e2) const { return classes.at(e1) == classes.at(e2); }

  friend bool operator==(const EdgeDecomposition&, const EdgeDecomposition&) = default;
};

struct SearchBudget {
  std::uint64_t max_nodes = 0;  // 0: unlimited
};

struct SearchStats {
  std::uint64_t nodes = 0;
  bool truncated = false;
};

struct CountResult {
  Count count = 0;
  SearchStats stats;
};

class ColoringKernel {
 public:
  explicit ColoringKernel(const Graph& g)
      : g_(g), color_(g.num_edges(), 0), used_(g.num_vertices(), 0) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) > 3) {
        throw DomainError("vertex " + std::to_string(v) + " has valence > 3");
      }
    }
  }

  // Pre-assigns a color; throws if it clashes with an earlier assignment.
  void fix(int edge, Color c) {
    const EdgeRef& e = g_.edge(edge);
    const unsigned bit = 1u << static_cast<int>(c);
    if (color_[edge] != 0) {
      if (color_[edge] != static_cast<std::uint8_t>(c)) throw DomainError("edge fixed twice");
      return;
    }
    if ((used_[e.u] | used_[e.v]) & bit) throw DomainError("fixed colors clash");
    color_[edge] = static_cast<std::uint8_t>(c);
    used_[e.u] |= bit;
    used_[e.v] |= bit;
    ++fixed_;
  }

  CountResult count(SearchBudget budget = {}) {
    count_ = 0;
    stats_ = {};
    budget_ = budget;
    search<false>([](std::span<const std::uint8_t>) { return true; });
    return {count_, stats_};
  }

  // visit(const EdgeColoring&) -> bool; false stops the enumeration.
  template <class Visit>
  SearchStats enumerate(Visit&& visit, SearchBudget budget = {}) {
    count_ = 0;
    stats_ = {};
    budget_ = budget;
    EdgeColoring scratch;
    scratch.colors.resize(color_.size());
    search<true>([&](std::span<const std::uint8_t> raw) {
      for (std::size_t i = 0; i < raw.size(); ++i) scratch.colors[i] = static_cast<Color>(raw[i]);
      return static_cast<bool>(visit(std::as_const(scratch)));
    });
    return stats_;
  }

 private:
  static constexpr unsigned kAllColors = 0b1110;

  template <bool kEmit, class Leaf>
  void search(Leaf&& leaf) {
    stopped_ = false;
    remaining_ = g_.num_edges() - fixed_;
    descend<kEmit>(leaf);
  }

  // Returns the uncolored edge with the fewest admissible colors, -1 when all
  // edges are colored, -2 when some edge has no admissible color.
  int choose(unsigned& candidates) const {
    int best = -1;
    int best_count = 4;
    for (const EdgeRef& e : g_.edges()) {
      if (color_[e.index]) continue;
      const unsigned free = kAllColors & ~(used_[e.u] | used_[e.v]);
      const int n = std::popcount(free);
      if (n == 0) return -2;
      if (n < best_count) {
        best = e.index;
        best_count = n;
        candidates = free;
        if (n == 1) break;
      }
    }
    return best;
  }

  template <bool kEmit, class Leaf>
  void descend(Leaf& leaf) {
    if (remaining_ == 0) {
      count_ = checked_add(count_, 1);
      if constexpr (kEmit) {
        if (!leaf(std::span<const std::uint8_t>(color_))) stopped_ = true;
      }
      return;
    }
    unsigned candidates = 0;
    const int edge = choose(candidates);
    if (edge < 0) return;
    const EdgeRef& e = g_.edge(edge);
    for (int c = 1; c <= 3 && !stopped_; ++c) {
      const unsigned bit = 1u << c;
      if (!(candidates & bit)) continue;
      if (budget_.max_nodes && stats_.nodes >= budget_.max_nodes) {
        stats_.truncated = true;
        stopped_ = true;
        return;
      }
      ++stats_.nodes;
      color_[edge] = static_cast<std::uint8_t>(c);
      used_[e.u] |= bit;
      used_[e.v] |= bit;
      --remaining_;
      descend<kEmit>(leaf);
      ++remaining_;
      used_[e.u] &= ~bit;
      used_[e.v] &= ~bit;
      color_[edge] = 0;
    }
  }

  const Graph& g_;
  std::vector<std::uint8_t> color_;
  std::vector<unsigned> used_;
  int fixed_ = 0;
  int remaining_ = 0;
  bool stopped_ = false;
  Count count_ = 0;
  SearchStats stats_;
  SearchBudget budget_;
};

inline CountResult count_colorings_bounded(const Graph& g, SearchBudget budget) {
  return ColoringKernel(g).count(budget);
}

// |EC(g)|.
inline Count count_colorings(const Graph& g) { return ColoringKernel(g).count().count; }

// Calls visit(const EdgeColoring&) once per edge-3-coloring; visit returns
// false to stop early.
template <class Visit>
SearchStats for_each_coloring(const Graph& g, Visit&& visit, SearchBudget budget = {}) {
  return ColoringKernel(g).enumerate(std::forward<Visit>(visit), budget);
}

inline std::vector<EdgeColoring> enumerate_colorings(const Graph& g) {
  std::vector<EdgeColoring> out;
  for_each_coloring(g, [&](const EdgeColoring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

inline bool is_colorable(const Graph& g) {
  bool found = false;
  for_each_coloring(g, [&](const EdgeColoring&) {
    found = true;
    return false;
  });
  return found;
}

namespace detail {

// Kernel with the edges at the first trivalent vertex fixed to a, b, c in
// incidence order. Its colorings are in bijection with ED(g).
inline ColoringKernel decomposition_kernel(const Graph& g) {
  const auto v = first_trivalent_vertex(g);
  if (!v) throw DomainError("3-edge-decompositions need a trivalent vertex");
  ColoringKernel kernel(g);
  const auto inc = g.incident(*v);
  kernel.fix(inc[0], Color::a);
  kernel.fix(inc[1], Color::b);
  kernel.fix(inc[2], Color::c);
  return kernel;
}

}  // namespace detail

inline CountResult count_decompositions_bounded(const Graph& g, SearchBudget budget) {
  return detail::decomposition_kernel(g).count(budget);
}

// |ED(g)|, counted as the colorings with fixed colors at one trivalent vertex.
inline Count count_decompositions(const Graph& g) {
  return detail::decomposition_kernel(g).count().count;
}

// Visits one representative coloring per 3-edge-decomposition.
template <class Visit>
SearchStats for_each_decomposition(const Graph& g, Visit&& visit, SearchBudget budget = {}) {
  return detail::decomposition_kernel(g).enumerate(std::forward<Visit>(visit), budget);
}

}  // namespace snarkforge
