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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "snarkforge.hpp"

namespace snarkforge {
namespace {

constexpr std::array<std::pair<Color, Color>, 3> kPairs = {
    std::pair{Color::a, Color::b}, std::pair{Color::a, Color::c}, std::pair{Color::b, Color::c}};

void expect_swap_properties(const Graph& g, const EdgeColoring& c) {
  for (auto [x, y] : kPairs) {
    for (const KempeChain& chain : kempe_chains(g, c, x, y)) {
      if (is_cubic(g)) EXPECT_EQ(chain.kind, KempeChain::Kind::kCycle);
      const EdgeColoring swapped = kempe_swap(c, chain);
      EXPECT_TRUE(is_valid_coloring(g, swapped));
      EXPECT_EQ(kempe_swap(swapped, chain).colors, c.colors);
    }
  }
}

TEST(KempeTest, AllColoringsOfTheWheel) {
  const Graph w = wheel_w8().graph;
  for (const auto& c : enumerate_colorings(w)) expect_swap_properties(w, c);
}

TEST(KempeTest, SampledColoringsOfLargerInstances) {
  std::mt19937 rng(20261019);
  for (const Graph& g : {contract_removed_edge(flower(5), 0).graph,
                         contract_removed_edge(flower(7), 3).graph}) {
    const auto all = enumerate_colorings(g);
    ASSERT_FALSE(all.empty());
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 30; ++i) expect_swap_properties(g, all[pick(rng)]);
  }
}

TEST(KempeTest, ChainsPartitionTheirColorClasses) {
  const Graph w = wheel_w8().graph;
  const auto c = enumerate_colorings(w).front();
  std::vector<int> seen(w.num_edges(), 0);
  for (const auto& chain : kempe_chains(w, c, Color::a, Color::b)) {
    for (int e : chain.edges) ++seen[e];
  }
  for (int e = 0; e < w.num_edges(); ++e) EXPECT_EQ(seen[e], c[e] == Color::c ? 0 : 1);
}

TEST(KempeTest, ChainMatchesTwoColorComponentOracle) {
  const Graph g = contract_removed_edge(flower(5), 7).graph;
  const auto c = enumerate_colorings(g).back();
  std::vector<int> plain(c.colors.size());
  for (std::size_t i = 0; i < plain.size(); ++i) plain[i] = static_cast<int>(c.colors[i]);
  for (int e = 0; e < g.num_edges(); ++e) {
    for (Color other : kColors) {
      if (other == c[e]) continue;
      const auto chain = kempe_chain(g, c, e, other);
      const auto ref = oracle::two_color_component(g, plain, e, plain[e], static_cast<int>(other));
      EXPECT_EQ(std::set<int>(chain.edges.begin(), chain.edges.end()), ref);
    }
  }
}

TEST(KempeTest, PathsAppearInQuasiCubicHosts) {
  const Graph q = remove_pentagon(petersen(), list_pentagons(petersen())[0]).graph;
  bool path = false;
  for (const auto& c : enumerate_colorings(q)) {
    for (const auto& chain : kempe_chains(q, c, Color::a, Color::b)) {
      if (chain.kind == KempeChain::Kind::kPath) {
        path = true;
        EXPECT_EQ(chain.endpoints.size(), 2u);
      }
    }
    expect_swap_properties(q, c);
  }
  EXPECT_TRUE(path);
}

TEST(KempeTest, SeedMustCarryAChainColor) {
  const Graph w = wheel_w8().graph;
  const auto c = enumerate_colorings(w).front();
  int e = 0;
  while (c[e] != Color::c) ++e;
  EXPECT_THROW(kempe_chain_two_colors(w, c, Color::a, Color::b, e), DomainError);
  EXPECT_THROW(kempe_chain_two_colors(w, c, Color::a, Color::a, e), DomainError);
}

TEST(ParityTest, PentagonRemovalsOfPetersen) {
  const Graph p = petersen();
  for (const Cycle& pent : list_pentagons(p)) {
    const Graph q = remove_pentagon(p, pent).graph;
    for_each_coloring(q, [&](const EdgeColoring& c) {
      EXPECT_EQ(parity_residual(q, c), kZero);
      std::map<Color, int> tally;
      for (const PendantEdge& pe : pendant_edges(q)) ++tally[c[pe.edge]];
      std::vector<int> sizes;
      for (auto [col, n] : tally) sizes.push_back(n);
      std::sort(sizes.begin(), sizes.end());
      EXPECT_EQ(sizes, (std::vector<int>{1, 1, 3}));
      return true;
    });
  }
}

TEST(ParityTest, SingleEdge) {
  const Graph g(2, {{0, 1}});
  EXPECT_EQ(pendant_edges(g).size(), 2u);
  for (const auto& c : enumerate_colorings(g)) EXPECT_EQ(parity_residual(g, c), kZero);
  EXPECT_THROW(parity_residual(wheel_w8().graph, enumerate_colorings(wheel_w8().graph)[0]),
               DomainError);
}

}  // namespace
}  // namespace snarkforge
