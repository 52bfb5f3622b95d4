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

#include "oracles.hpp"
#include "snarkforge.hpp"

namespace snarkforge {
namespace {

TEST(OrbitTest, PetersenIsEdgeTransitive) {
  const auto orbits = edge_orbits(petersen());
  ASSERT_EQ(orbits.size(), 1u);
  EXPECT_EQ(orbits[0].size(), 15u);
}

TEST(OrbitTest, PathOfTwoEdges) {
  EXPECT_EQ(edge_orbits(Graph(3, {{0, 1}, {1, 2}})).size(), 1u);
}

TEST(OrbitTest, FlowerFiveHasFourClasses) {
  const auto orbits = edge_orbits(flower(5));
  EXPECT_EQ(orbits.size(), 4u);
  EXPECT_EQ(static_cast<int>(orbits.size()), oracle::edge_orbit_count(flower(5)));
  for (std::size_t i = 1; i < orbits.size(); ++i) EXPECT_LT(orbits[i - 1][0], orbits[i][0]);
}

TEST(OrbitTest, AgreesWithAutomorphismOracle) {
  for (const Graph& g : {wheel_w8().graph, flower(7), contract_removed_edge(flower(5), 0).graph}) {
    EXPECT_EQ(static_cast<int>(edge_orbits(g).size()), oracle::edge_orbit_count(g));
  }
}

TEST(IsomorphismTest, MappingPreservesAdjacency) {
  const Graph p = petersen();
  const Graph relabeled = decode_graph6(encode_graph6(p));
  const auto map = find_isomorphism(p, relabeled);
  ASSERT_TRUE(map.has_value());
  for (const auto& e : p.edges()) EXPECT_TRUE(relabeled.adjacent((*map)[e.u], (*map)[e.v]));
}

TEST(IsomorphismTest, DistinguishesCubeFromWheel) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v < 8; ++v) {
    for (int b : {1, 2, 4}) {
      if (v < (v ^ b)) e.push_back({v, v ^ b});
    }
  }
  const Graph cube(8, e);
  EXPECT_FALSE(are_isomorphic(cube, wheel_w8().graph));
  EXPECT_EQ(are_isomorphic(cube, wheel_w8().graph), oracle::isomorphic(cube, wheel_w8().graph));
}

TEST(IsomorphismTest, AutomorphismCarriesEdgeToEdge) {
  const Graph p = petersen();
  const auto map = automorphism_mapping_edge(p, 0, 14);
  ASSERT_TRUE(map.has_value());
  const auto& from = p.edge(0);
  const auto& to = p.edge(14);
  EXPECT_EQ(std::minmax((*map)[from.u], (*map)[from.v]), std::minmax(to.u, to.v));
}

TEST(IsomorphismTest, PetersenHas120Automorphisms) {
  EXPECT_EQ(oracle::automorphisms(petersen()).size(), 120u);
}

}  // namespace
}  // namespace snarkforge
