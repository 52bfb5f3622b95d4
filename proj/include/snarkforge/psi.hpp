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

// Kaszonyi numbers: psi(G, e) = |ED(G_e)| / 3 for a snark G.

#pragma once

#include <optional>
#include <string>

#include "snarkforge/certificate.hpp"
#include "snarkforge/coloring.hpp"
#include "snarkforge/graph.hpp"

namespace snarkforge {

enum class PsiMode {
  kAssumeSnark,  // caller vouches that g is a snark
  kStrict,       // certify g first; throw if it is not a snark
  kExtension,    // any cubic g meeting the smoothing hypotheses; no divisibility claim
};

struct PsiOptions {
  PsiMode mode = PsiMode::kAssumeSnark;
  SearchBudget budget;
};

struct PsiResult {
  std::optional<Count> value;  // empty when truncated, or non-integral in extension mode
  Count decompositions = 0;    // |ED(G_e)|
  bool certified = false;      // g passed certify_snark in this call
  bool formula_extension = false;
  bool truncated = false;
  SearchStats stats;
};

inline PsiResult psi_detailed(const Graph& g, int edge, const PsiOptions& options = {}) {
  PsiResult out;
  if (options.mode == PsiMode::kStrict) {
    const SnarkCertificate cert = certify_snark(g);
    if (!cert.valid()) throw DomainError("graph is not a snark: " + cert.summary());
    out.certified = true;
  }
  out.formula_extension = options.mode == PsiMode::kExtension;
  const ContractedEdge ge = contract_removed_edge(g, edge);
  const CountResult counted = count_decompositions_bounded(ge.graph, options.budget);
  out.stats = counted.stats;
  if (counted.stats.truncated) {
    out.truncated = true;
    return out;
  }
  out.decompositions = counted.count;
  if (counted.count % 3 != 0) {
    if (out.formula_extension) return out;
    throw InternalError("|ED(G_e)| = " + std::to_string(counted.count) +
                        " is not a multiple of 3 on a graph treated as a snark");
  }
  out.value = counted.count / 3;
  return out;
}

inline Count psi(const Graph& g, int edge) { return *psi_detailed(g, edge).value; }

}  // namespace snarkforge
