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

Graph triangle() { return Graph(3, {{0, 1}, {1, 2}, {0, 2}}); }
Graph k4() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
Graph prism() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}}); }
Graph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}
Graph cube() {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v < 8; ++v) {
    for (int b : {1, 2, 4}) {
      if (v < (v ^ b)) e.push_back({v, v ^ b});
    }
  }
  return Graph(8, e);
}
// Two Petersen graphs, each with one edge cut, joined by two edges: a
// cubic graph with a 2-edge cut between two cyclic parts.
Graph two_petersens_bridged() {
  const Graph p = petersen();
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i < p.num_edges(); ++i) {
    e.push_back({p.edge(i).u, p.edge(i).v});
    e.push_back({p.edge(i).u + 10, p.edge(i).v + 10});
  }
  const auto cut = p.edge(0);
  e.push_back({cut.u, cut.u + 10});
  e.push_back({cut.v, cut.v + 10});
  return Graph(20, e);
}

TEST(GraphTest, RejectsLoopsAndParallelEdges) {
  EXPECT_THROW(Graph(2, {{0, 0}}), DomainError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), DomainError);
  EXPECT_THROW(Graph(2, {{0, 2}}), DomainError);
  EXPECT_THROW(Graph(0, {}), DomainError);
}

TEST(GraphTest, EdgesKeepInputOrderWithSortedEnds) {
  const Graph g(3, {{2, 1}, {0, 2}});
  EXPECT_EQ(g.edge(0).u, 1);
  EXPECT_EQ(g.edge(0).v, 2);
  EXPECT_EQ(g.find_edge(2, 0), 1);
  EXPECT_FALSE(g.find_edge(0, 1).has_value());
}

TEST(DeleteVerticesTest, PetersenOuterPentagonLeavesPentagram) {
  const Surgery s = delete_vertices(petersen(), {0, 2, 4, 6, 8});
  EXPECT_EQ(s.graph.num_vertices(), 5);
  EXPECT_EQ(s.graph.num_edges(), 5);
  EXPECT_EQ(s.vertex_map[0], -1);
  EXPECT_EQ(s.vertex_map[1], 0);
  EXPECT_EQ(girth(s.graph), 5);
}

TEST(DeleteVerticesTest, EmptySetAndTriangle) {
  const Graph p = petersen();
  const Surgery same = delete_vertices(p, {});
  EXPECT_EQ(same.graph.num_edges(), 15);
  EXPECT_EQ(same.graph.edges().size(), p.edges().size());
  const Surgery t = delete_vertices(triangle(), {0});
  EXPECT_EQ(t.graph.num_vertices(), 2);
  EXPECT_EQ(t.graph.num_edges(), 1);
  EXPECT_THROW(delete_vertices(triangle(), {0, 1, 2}), DomainError);
  EXPECT_THROW(delete_vertices(triangle(), {7}), DomainError);
}

TEST(DeleteEdgesTest, PentagonEdgesGiveFiveUnivalentVertices) {
  const Graph p = petersen();
  const auto pent = list_pentagons(p).front();
  const auto e = pent.edges(p);
  const Surgery s = delete_edges(p, std::set<int>(e.begin(), e.end()));
  const auto profile = valence_profile(s.graph);
  EXPECT_EQ(profile.at(1), 5);
  EXPECT_EQ(profile.at(3), 5);
  EXPECT_TRUE(is_quasi_cubic(s.graph));
  EXPECT_FALSE(is_cubic(s.graph));
}

TEST(DeleteEdgesTest, EmptyAndFullSets) {
  const Graph p = petersen();
  EXPECT_EQ(delete_edges(p, {}).graph.num_edges(), 15);
  std::set<int> all;
  for (int i = 0; i < 15; ++i) all.insert(i);
  const Surgery bare = delete_edges(p, all);
  EXPECT_EQ(bare.graph.num_vertices(), 10);
  EXPECT_EQ(bare.graph.num_edges(), 0);
  EXPECT_EQ(bare.edge_map[3], -1);
}

TEST(ValenceTest, CubicAndQuasiCubic) {
  EXPECT_TRUE(is_cubic(petersen()));
  EXPECT_EQ(valence_profile(petersen()).at(3), 10);
  const Graph single(2, {{0, 1}});
  EXPECT_TRUE(is_quasi_cubic(single));
  EXPECT_EQ(valence_profile(single).at(1), 2);
  EXPECT_FALSE(first_trivalent_vertex(single).has_value());
  EXPECT_FALSE(is_quasi_cubic(cycle(4)));
}

TEST(GirthTest, KnownValuesAgreeWithCycleOracle) {
  EXPECT_EQ(girth(petersen()), 5);
  EXPECT_EQ(girth(k4()), 3);
  EXPECT_EQ(girth(flower(7)), 6);
  EXPECT_FALSE(girth(Graph(3, {{0, 1}, {1, 2}})).has_value());
  for (const Graph& g : {petersen(), k4(), prism(), cube(), cycle(7)}) {
    EXPECT_EQ(*girth(g), oracle::girth(g));
  }
}

TEST(CyclicConnectivityTest, PetersenLevels) {
  const Graph p = petersen();
  EXPECT_TRUE(cyclically_edge_connected_at_least(p, 4));
  EXPECT_TRUE(cyclically_edge_connected_at_least(p, 5));
  EXPECT_FALSE(cyclically_edge_connected_at_least(p, 6));
}

TEST(CyclicConnectivityTest, PrismHasThreeEdgeCut) {
  EXPECT_TRUE(cyclically_edge_connected_at_least(prism(), 3));
  EXPECT_FALSE(cyclically_edge_connected_at_least(prism(), 4));
}

TEST(CyclicConnectivityTest, UndefinedWithoutDisjointCycles) {
  EXPECT_THROW(cyclically_edge_connected_at_least(k4(), 4), UndefinedError);
  EXPECT_THROW(cyclically_edge_connected_at_least(cycle(6), 2), UndefinedError);
}

TEST(CyclicConnectivityTest, AgreesWithMaxFlowOracleAndIsMonotone) {
  for (const Graph& g : {petersen(), prism(), cube(), two_petersens_bridged()}) {
    const int lambda = oracle::cyclic_edge_connectivity(g);
    ASSERT_GT(lambda, 0);
    bool previous = true;
    for (int n = 2; n <= 7; ++n) {
      const bool at_least = cyclically_edge_connected_at_least(g, n);
      EXPECT_EQ(at_least, lambda >= n) << "n=" << n;
      EXPECT_TRUE(previous || !at_least) << "not monotone at n=" << n;
      previous = at_least;
    }
  }
}

TEST(FindCyclesTest, PentagonCounts) {
  EXPECT_EQ(list_pentagons(petersen()).size(), 12u);
  EXPECT_EQ(list_pentagons(flower(5)).size(), 1u);
  EXPECT_TRUE(list_pentagons(k4()).empty());
  EXPECT_EQ(find_cycles(petersen(), 6).size(), 10u);
}

TEST(FindCyclesTest, MatchesOracleByLength) {
  for (const Graph& g : {petersen(), cube(), prism()}) {
    std::map<int, std::size_t> by_length;
    for (const auto& c : oracle::all_cycles(g)) ++by_length[static_cast<int>(c.size())];
    for (auto [len, n] : by_length) {
      const auto found = find_cycles(g, len);
      EXPECT_EQ(found.size(), n) << "length " << len;
      for (const auto& c : found) EXPECT_TRUE(is_cycle_of(g, c));
    }
  }
}

TEST(ContractTest, PetersenMinusAnyEdgeIsTheWheel) {
  const Graph p = petersen();
  const Wheel w = wheel_w8();
  for (int e = 0; e < p.num_edges(); ++e) {
    const ContractedEdge ge = contract_removed_edge(p, e);
    EXPECT_EQ(ge.graph.num_vertices(), 8);
    EXPECT_EQ(ge.graph.num_edges(), 12);
    EXPECT_TRUE(is_cubic(ge.graph));
    EXPECT_TRUE(are_isomorphic(ge.graph, w.graph)) << "edge " << e;
    EXPECT_EQ(ge.d1.index, 10);
    EXPECT_EQ(ge.d2.index, 11);
  }
  EXPECT_TRUE(oracle::isomorphic(contract_removed_edge(p, 0).graph, w.graph));
}

TEST(ContractTest, RejectsTriangleEdges) {
  EXPECT_THROW(contract_removed_edge(k4(), 0), DomainError);
  EXPECT_THROW(contract_removed_edge(prism(), 0), DomainError);
}

TEST(HamiltonianTest, KnownCases) {
  EXPECT_TRUE(is_hamiltonian(wheel_w8().graph));
  EXPECT_FALSE(is_hamiltonian(petersen()));
  EXPECT_FALSE(oracle::hamiltonian(petersen()));
  EXPECT_TRUE(is_hamiltonian(cycle(5)));
  EXPECT_EQ(is_hamiltonian(flower(5)), oracle::hamiltonian(flower(5)));
  EXPECT_EQ(is_hamiltonian(cube()), oracle::hamiltonian(cube()));
}

TEST(NormalizeCycleTest, RotationAndReflectionAgree) {
  EXPECT_EQ(normalize_cycle({3, 1, 4, 2, 0}), normalize_cycle({0, 2, 4, 1, 3}));
  EXPECT_EQ(normalize_cycle({3, 1, 4, 2, 0}).vertices.front(), 0);
}

}  // namespace
}  // namespace snarkforge
