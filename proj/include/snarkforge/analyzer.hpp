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

// Verification routines: each builds the relevant instance, computes both
// sides of every counting identity by enumeration and reports exact integer
// comparisons. Nothing here assumes an identity holds; a failed check is
// reported, not thrown.

#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "snarkforge/certificate.hpp"
#include "snarkforge/coloring.hpp"
#include "snarkforge/constructions.hpp"
#include "snarkforge/isomorphism.hpp"
#include "snarkforge/kempe.hpp"
#include "snarkforge/orthogonality.hpp"
#include "snarkforge/psi.hpp"

namespace snarkforge {

struct TheoremCheck {
  std::string name;
  Count lhs = 0;
  Count rhs = 0;

  bool holds() const { return lhs == rhs; }
};

struct TheoremNote {
  std::string name;
  std::string value;
};

struct TheoremReport {
  std::string theorem;
  std::string instance;
  std::vector<TheoremCheck> checks;
  std::vector<TheoremNote> notes;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
  }

  void check(std::string name, Count lhs, Count rhs) {
    checks.push_back({std::move(name), lhs, rhs});
  }
  void note(std::string name, std::string value) {
    notes.push_back({std::move(name), std::move(value)});
  }

  // Line-oriented record:
  //   theorem <id>
  //   instance <text>
  //   check <name> <lhs> <rhs> ok|FAIL
  //   note <name> <value>
  //   verdict pass|fail
  std::string to_text() const {
    std::ostringstream out;
    out << "theorem " << theorem << "\n";
    out << "instance " << instance << "\n";
    for (const auto& c : checks) {
      out << "check " << c.name << " " << c.lhs << " " << c.rhs << " "
          << (c.holds() ? "ok" : "FAIL") << "\n";
    }
    for (const auto& n : notes) out << "note " << n.name << " " << n.value << "\n";
    out << "verdict " << (pass() ? "pass" : "fail") << "\n";
    return out.str();
  }
};

// Per-edge psi cache for one graph.
class PsiTable {
 public:
  explicit PsiTable(const Graph& g) : g_(g), values_(g.num_edges()) {}

  Count operator()(int edge) {
    auto& slot = values_.at(edge);
    if (!slot) slot = psi(g_, edge);
    return *slot;
  }

 private:
  const Graph& g_;
  std::vector<std::optional<Count>> values_;
};

// Counting identities on G_e for a snark G: |ED(G_e)| = 3L, the number of
// decompositions with d1 ~ d2 is L, each of the nine color pairs on (d1, d2)
// occurs 2L times, and d1, d2 are orthogonal whenever G_e is colorable.
inline TheoremReport verify_kaszonyi_counts(const Graph& g, int edge, std::string instance = "") {
  TheoremReport report{"kaszonyi-counts", std::move(instance), {}, {}};
  report.note("edge", std::to_string(edge));
  const ContractedEdge ge = contract_removed_edge(g, edge);
  const int d1 = ge.d1.index;
  const int d2 = ge.d2.index;
  const Count ed = count_decompositions(ge.graph);
  const Count L = ed / 3;
  report.note("L", std::to_string(L));
  report.check("ED(G_e)=3L", ed, 3 * L);
  report.check("same-class(d1,d2)=L", same_class_count(ge.graph, d1, d2), L);
  const ColorPairTable table = color_pair_counts(ge.graph, d1, d2);
  static constexpr char kNames[] = "abc";
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      report.check(std::string("pair(") + kNames[x] + "," + kNames[y] + ")=2L", table[x][y], 2 * L);
    }
  }
  if (ed > 0) {
    report.check("orthogonal(d1,d2)", are_orthogonal(ge.graph, d1, d2) ? 1 : 0, 1);
  } else {
    report.note("orthogonal(d1,d2)", "vacuous (G_e uncolorable)");
  }
  return report;
}

// |ED(G_e)| = (3/2) * sum over even cycle covers of 2^N, and psi(G, e) is
// even whenever G_e has no Hamiltonian cycle.
inline TheoremReport verify_cycle_cover_identity(const Graph& g, int edge, std::string instance = "") {
  TheoremReport report{"cycle-cover", std::move(instance), {}, {}};
  report.note("edge", std::to_string(edge));
  const ContractedEdge ge = contract_removed_edge(g, edge);
  const Count ed = count_decompositions(ge.graph);
  const Count value = ed / 3;
  report.note("psi", std::to_string(value));
  const bool hamiltonian = is_hamiltonian(ge.graph);
  report.note("G_e-hamiltonian", hamiltonian ? "yes" : "no");
  if (ed == 0) {
    report.note("cover-sum", "vacuous (G_e uncolorable)");
  } else {
    const KaszonyiSum sum = kaszonyi_sum_check(ge.graph, ge.d1.index, ge.d2.index);
    report.note("covers", std::to_string(sum.covers));
    report.check("2*ED(G_e)=3*sum(2^N)", 2 * sum.lhs, 3 * sum.power_sum);
  }
  if (!hamiltonian) report.check("psi-mod-2", value % 2, 0);
  return report;
}

namespace detail {

// Pentagons sharing a vertex are linked; returns the component containing
// pentagon `index`, as a sorted list of edge indices.
inline std::vector<int> pentagon_union_edges(const Graph& g, const std::vector<Cycle>& pentagons,
                                             std::size_t index) {
  DisjointSets sets(static_cast<int>(pentagons.size()));
  for (std::size_t i = 0; i < pentagons.size(); ++i) {
    for (std::size_t j = i + 1; j < pentagons.size(); ++j) {
      for (Vertex v : pentagons[i].vertices) {
        if (std::find(pentagons[j].vertices.begin(), pentagons[j].vertices.end(), v) !=
            pentagons[j].vertices.end()) {
          sets.unite(static_cast<int>(i), static_cast<int>(j));
          break;
        }
      }
    }
  }
  std::set<int> edges;
  const int root = sets.find(static_cast<int>(index));
  for (std::size_t i = 0; i < pentagons.size(); ++i) {
    if (sets.find(static_cast<int>(i)) != root) continue;
    for (int e : pentagons[i].edges(g)) edges.insert(e);
  }
  return {edges.begin(), edges.end()};
}

}  // namespace detail

// For a pentagon P of a snark G: psi is constant on the connected union of
// pentagons through P, |ED(G - E(P))| = 5 psi, and for each k the number of
// decompositions with pendant edges k-2, k, k+2 in one class equals psi.
// Also checks the pendant parity on every coloring of G - E(P).
inline TheoremReport verify_pentagon_counts(const Graph& g, const Cycle& p, std::string instance = "") {
  TheoremReport report{"pentagon", std::move(instance), {}, {}};
  std::string seq;
  for (Vertex v : p.vertices) seq += (seq.empty() ? "" : ",") + std::to_string(v);
  report.note("pentagon", seq);
  const auto pentagons = list_pentagons(g);
  const auto it = std::find(pentagons.begin(), pentagons.end(), normalize_cycle(p.vertices));
  if (it == pentagons.end()) throw DomainError("not a pentagon of the graph");
  PsiTable table(g);
  const auto p_edges = p.edges(g);
  const Count value = table(p_edges[0]);
  report.note("psi", std::to_string(value));
  const auto union_edges =
      detail::pentagon_union_edges(g, pentagons, static_cast<std::size_t>(it - pentagons.begin()));
  report.note("pentagon-union-edges", std::to_string(union_edges.size()));
  for (int e : union_edges) {
    report.check("psi(e" + std::to_string(e) + ")=psi(P)", table(e), value);
  }
  const PentagonRemoval removal = remove_pentagon(g, p);
  std::array<Count, 5> spread{};
  Count decompositions = 0;
  for_each_decomposition(removal.graph, [&](const EdgeColoring& c) {
    ++decompositions;
    for (int k = 0; k < 5; ++k) {
      const Color mid = c[removal.pendant[k]];
      if (c[removal.pendant[(k + 3) % 5]] == mid && c[removal.pendant[(k + 2) % 5]] == mid) {
        ++spread[k];
      }
    }
    return true;
  });
  report.check("ED(G-E(P))=5psi", decompositions, 5 * value);
  for (int k = 0; k < 5; ++k) {
    report.check("class(k-2,k,k+2)=psi k=" + std::to_string(k), spread[k], value);
  }
  Count parity_violations = 0;
  Count split_violations = 0;
  for_each_coloring(removal.graph, [&](const EdgeColoring& c) {
    if (!parity_residual(removal.graph, c).is_zero()) ++parity_violations;
    std::array<int, 4> tally{};
    for (int e : removal.pendant) ++tally[static_cast<int>(c[e])];
    std::array<int, 3> sorted = {tally[1], tally[2], tally[3]};
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 3>{1, 1, 3}) ++split_violations;
    return true;
  });
  report.check("parity-violations", parity_violations, 0);
  report.check("split-3+1+1-violations", split_violations, 0);
  return report;
}

namespace detail {

inline std::vector<int> inverse_map(const std::vector<int>& forward, int size) {
  std::vector<int> back(size, -1);
  for (std::size_t i = 0; i < forward.size(); ++i) {
    if (forward[i] >= 0) back[forward[i]] = static_cast<int>(i);
  }
  return back;
}

// Edges of `block` to test: all of them for graphs up to `max_all` edges,
// otherwise the first block edge of each automorphism orbit of g.
inline std::vector<int> edges_to_test(const Graph& g, const std::vector<int>& block, int max_all) {
  if (g.num_edges() <= max_all) return block;
  std::vector<int> out;
  std::set<int> in_block(block.begin(), block.end());
  for (const auto& orbit : edge_orbits(g)) {
    for (int e : orbit) {
      if (in_block.count(e)) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

struct VerifyOptions {
  int max_edges_all = 60;  // test every block edge up to this many edges
};

// Five-edge join of two snarks with pentagons: psi on each kept block is the
// factor graph's psi times the other factor's pentagon psi. The five joining
// edges are recorded only.
inline TheoremReport verify_pentagon_join(const Graph& left, const Cycle& left_pentagon,
                                          const Graph& right, const Cycle& right_pentagon,
                                          int rotation = 0, std::string instance = "",
                                          VerifyOptions options = {}) {
  TheoremReport report{"pentagon-join", std::move(instance), {}, {}};
  const Composite joined = pentagon_join(left, left_pentagon, right, right_pentagon, rotation);
  const Graph& g = joined.graph;
  PsiTable joined_psi(g), left_psi(left), right_psi(right);
  const Count left_pentagon_psi = left_psi(left_pentagon.edges(left)[0]);
  const Count right_pentagon_psi = right_psi(right_pentagon.edges(right)[0]);
  report.note("psi(left,P)", std::to_string(left_pentagon_psi));
  report.note("psi(right,P)", std::to_string(right_pentagon_psi));
  const auto from_left = detail::inverse_map(joined.left_edge_map, g.num_edges());
  const auto from_right = detail::inverse_map(joined.right_edge_map, g.num_edges());
  for (int e : detail::edges_to_test(g, joined.right_block_edges(), options.max_edges_all)) {
    report.check("right e" + std::to_string(e), joined_psi(e),
                 checked_mul(right_psi(from_right[e]), left_pentagon_psi));
  }
  for (int e : detail::edges_to_test(g, joined.left_block_edges(), options.max_edges_all)) {
    report.check("left e" + std::to_string(e), joined_psi(e),
                 checked_mul(left_psi(from_left[e]), right_pentagon_psi));
  }
  for (int e : joined.new_edges) {
    report.note("connecting e" + std::to_string(e), std::to_string(joined_psi(e)));
  }
  return report;
}

// Superposition of `inner` in place of an edge of `outer`: for every edge e
// kept from `inner`, psi(G, e) = 2 psi(inner, e) psi(outer, E).
inline TheoremReport verify_superposition(const Graph& outer, int outer_edge, const Graph& inner,
                                          Vertex u, Vertex v, std::string instance = "",
                                          VerifyOptions options = {}) {
  TheoremReport report{"superposition", std::move(instance), {}, {}};
  const Composite sup = superpose_52(outer, outer_edge, inner, u, v);
  const Graph& g = sup.graph;
  PsiTable joined_psi(g), inner_psi(inner);
  const Count outer_value = psi(outer, outer_edge);
  report.note("psi(outer,E)", std::to_string(outer_value));
  const auto from_inner = detail::inverse_map(sup.right_edge_map, g.num_edges());
  std::set<Vertex> stubs;
  for (Vertex x : inner.neighbors(u)) stubs.insert(x);
  for (Vertex x : inner.neighbors(v)) stubs.insert(x);
  int near_stub = 0;
  for (int e : detail::edges_to_test(g, sup.right_block_edges(), options.max_edges_all)) {
    const EdgeRef& old = inner.edge(from_inner[e]);
    if (stubs.count(old.u) || stubs.count(old.v)) ++near_stub;
    report.check("inner e" + std::to_string(e), joined_psi(e),
                 checked_mul(2, checked_mul(inner_psi(from_inner[e]), outer_value)));
  }
  report.note("edges-at-split-vertices", std::to_string(near_stub));
  return report;
}

// G_e is colorable and its smoothed edges d1, d2 are orthogonal. Hypotheses:
// g cubic, girth >= 5, cyclically 4-edge-connected.
inline bool condition_k(const Graph& g, int edge) {
  if (!is_cubic(g)) throw DomainError("condition K needs a cubic graph");
  const auto gi = girth(g);
  if (!gi || *gi < 5) throw DomainError("condition K needs girth >= 5");
  if (!cyclically_edge_connected_at_least(g, 4)) {
    throw DomainError("condition K needs cyclic 4-edge-connectivity");
  }
  const ContractedEdge ge = contract_removed_edge(g, edge);
  if (!is_colorable(ge.graph)) return false;
  return are_orthogonal(ge.graph, ge.d1.index, ge.d2.index);
}

struct PentagonPsi {
  std::vector<int> edges;  // edge set of one connected union of pentagons
  Count psi = 0;
};

// psi on each connected union of pentagons (one value per component).
inline std::vector<PentagonPsi> pentagon_psi_values(const Graph& g) {
  const auto pentagons = list_pentagons(g);
  std::vector<PentagonPsi> out;
  std::set<int> seen;
  for (std::size_t i = 0; i < pentagons.size(); ++i) {
    auto edges = detail::pentagon_union_edges(g, pentagons, i);
    if (seen.count(edges.front())) continue;
    seen.insert(edges.begin(), edges.end());
    out.push_back({edges, psi(g, edges.front())});
  }
  return out;
}

}  // namespace snarkforge
