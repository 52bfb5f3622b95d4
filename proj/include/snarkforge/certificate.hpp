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

#pragma once

#include <optional>
#include <string>

#include "snarkforge/coloring.hpp"
#include "snarkforge/graph.hpp"

namespace snarkforge {

// Outcome of checking the three snark clauses: girth >= 5, cyclic
// `level`-edge-connectivity (level >= 4) and no edge-3-coloring.
struct SnarkCertificate {
  std::optional<int> girth;
  int level = 4;
  bool girth_ok = false;
  bool connectivity_defined = false;  // false when no two disjoint cycles exist
  bool connectivity_ok = false;
  Count colorings = 0;

  bool uncolorable() const { return colorings == 0; }
  bool valid() const { return girth_ok && connectivity_ok && uncolorable(); }

  std::string summary() const {
    std::string out = "girth=" + (girth ? std::to_string(*girth) : std::string("none"));
    out += " cyclic" + std::to_string(level) + "=";
    out += connectivity_defined ? (connectivity_ok ? "yes" : "no") : "undefined";
    out += " colorings=" + std::to_string(colorings);
    out += valid() ? " snark" : " not-snark";
    return out;
  }
};

inline SnarkCertificate certify_snark(const Graph& g, int level = 4) {
  if (!is_cubic(g)) throw DomainError("snark certification needs a cubic graph");
  if (level < 4) throw DomainError("snark certification level must be >= 4");
  SnarkCertificate cert;
  cert.level = level;
  cert.girth = girth(g);
  cert.girth_ok = cert.girth && *cert.girth >= 5;
  try {
    cert.connectivity_ok = cyclically_edge_connected_at_least(g, level);
    cert.connectivity_defined = true;
  } catch (const UndefinedError&) {
    cert.connectivity_defined = false;
    cert.connectivity_ok = false;
  }
  cert.colorings = count_colorings(g);
  return cert;
}

}  // namespace snarkforge
