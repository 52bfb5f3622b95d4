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

// Append-only store of Kaszonyi numbers and a search harness over recipe
// families.
//
// File format: UTF-8 text, one JSON object per line, keys in this order:
//
//   {"id":<int>,"kind":"edge"|"pentagon","recipe":<string>,
//    "graph6":<string>,"vertices":<int>,"edge":<int>,
//    "psi":<int>|null,"ec":<int>|null,"certificate":<string>,
//    "status":"ok"|"truncated","wall_ms":<number>,"version":<string>}
//
// ids are 0, 1, 2, ... in line order. "edge" is the orbit representative
// (kind "edge") or the least edge of a connected union of pentagons (kind
// "pentagon"). For status "ok", psi * 18 == ec where ec = |EC(G_e)|.

#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "snarkforge/analyzer.hpp"
#include "snarkforge/graph6.hpp"
#include "snarkforge/isomorphism.hpp"
#include "snarkforge/recipe.hpp"

namespace snarkforge {

inline constexpr const char* kVersion = "snarkforge 0.1.0";

struct PsiRecord {
  long long id = -1;
  std::string kind = "edge";
  std::string recipe;
  std::string graph6;
  int vertices = 0;
  int edge = 0;
  std::optional<Count> psi;
  std::optional<Count> ec;
  std::string certificate;
  std::string status = "ok";
  double wall_ms = 0;
  std::string version = kVersion;

  bool ok() const { return status == "ok"; }
};

inline nlohmann::ordered_json to_json(const PsiRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["kind"] = r.kind;
  j["recipe"] = r.recipe;
  j["graph6"] = r.graph6;
  j["vertices"] = r.vertices;
  j["edge"] = r.edge;
  j["psi"] = r.psi ? nlohmann::ordered_json(*r.psi) : nlohmann::ordered_json(nullptr);
  j["ec"] = r.ec ? nlohmann::ordered_json(*r.ec) : nlohmann::ordered_json(nullptr);
  j["certificate"] = r.certificate;
  j["status"] = r.status;
  j["wall_ms"] = r.wall_ms;
  j["version"] = r.version;
  return j;
}

namespace detail {

// Checks the record invariants; returns an empty string when they hold.
inline std::string record_problem(const PsiRecord& r) {
  if (r.status != "ok" && r.status != "truncated") return "unknown status";
  if (r.kind != "edge" && r.kind != "pentagon") return "unknown kind";
  if (r.ok()) {
    if (!r.psi || !r.ec) return "ok record without psi/ec";
    if (checked_mul(*r.psi, 18) != *r.ec) return "psi * 18 != ec";
  }
  try {
    const Graph g = decode_graph6(r.graph6);
    if (g.num_vertices() != r.vertices) return "vertex count does not match graph6";
    if (r.edge < 0 || r.edge >= g.num_edges()) return "edge index not valid for graph6";
  } catch (const std::exception& e) {
    return std::string("graph6: ") + e.what();
  }
  return "";
}

inline PsiRecord record_from_json(const nlohmann::json& j) {
  PsiRecord r;
  r.id = j.at("id").get<long long>();
  r.kind = j.at("kind").get<std::string>();
  r.recipe = j.at("recipe").get<std::string>();
  r.graph6 = j.at("graph6").get<std::string>();
  r.vertices = j.at("vertices").get<int>();
  r.edge = j.at("edge").get<int>();
  if (!j.at("psi").is_null()) r.psi = j.at("psi").get<Count>();
  if (!j.at("ec").is_null()) r.ec = j.at("ec").get<Count>();
  r.certificate = j.at("certificate").get<std::string>();
  r.status = j.at("status").get<std::string>();
  r.wall_ms = j.at("wall_ms").get<double>();
  r.version = j.at("version").get<std::string>();
  return r;
}

}  // namespace detail

class Ledger {
 public:
  // In-memory ledger (nothing persisted).
  Ledger() = default;

  // Opens or creates the ledger file and rebuilds the index from it.
  static Ledger open(const std::string& path) {
    Ledger ledger;
    ledger.path_ = path;
    std::ifstream in(path);
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
      if (line.empty()) {
        ++line_no;
        continue;
      }
      PsiRecord r;
      try {
        r = detail::record_from_json(nlohmann::json::parse(line));
      } catch (const std::exception& e) {
        throw IntegrityError(std::string("unparseable line: ") + e.what(), line_no);
      }
      if (r.id != static_cast<long long>(ledger.records_.size())) {
        throw IntegrityError("id out of sequence", r.id);
      }
      if (auto problem = detail::record_problem(r); !problem.empty()) {
        throw IntegrityError(problem, r.id);
      }
      ledger.records_.push_back(std::move(r));
      ++line_no;
    }
    return ledger;
  }

  long long record(PsiRecord rec) {
    std::lock_guard<std::mutex> lock(*mutex_);
    rec.id = static_cast<long long>(records_.size());
    if (auto problem = detail::record_problem(rec); !problem.empty()) {
      throw DomainError("refusing to record: " + problem);
    }
    if (!path_.empty()) {
      std::ofstream out(path_, std::ios::app);
      out << to_json(rec).dump() << "\n";
      if (!out) throw std::runtime_error("cannot append to ledger " + path_);
    }
    records_.push_back(std::move(rec));
    return records_.back().id;
  }

  const std::vector<PsiRecord>& records() const { return records_; }

  // Witnesses for psi = n, smallest graph first, ties by recipe text.
  std::vector<PsiRecord> query(Count n) const {
    std::vector<PsiRecord> out;
    for (const auto& r : records_) {
      if (r.ok() && r.psi && *r.psi == n) out.push_back(r);
    }
    std::stable_sort(out.begin(), out.end(), [](const PsiRecord& a, const PsiRecord& b) {
      if (a.vertices != b.vertices) return a.vertices < b.vertices;
      return a.recipe < b.recipe;
    });
    return out;
  }

  std::vector<Count> achieved() const {
    std::set<Count> values;
    for (const auto& r : records_) {
      if (r.ok() && r.psi) values.insert(*r.psi);
    }
    return {values.begin(), values.end()};
  }

  // n,best_witness_vertices,recipe
  std::string export_csv() const {
    std::ostringstream out;
    out << "n,best_witness_vertices,recipe\n";
    for (Count n : achieved()) {
      const PsiRecord best = query(n).front();
      std::string recipe = best.recipe;
      out << n << "," << best.vertices << ",\"" << recipe << "\"\n";
    }
    return out.str();
  }

  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::vector<PsiRecord> records_;
  std::shared_ptr<std::mutex> mutex_ = std::make_shared<std::mutex>();
};

struct SearchLimits {
  int max_edges = 80;
  std::uint64_t max_nodes = 100000000;
  int workers = 1;
};

namespace detail {

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

inline PsiRecord measure_psi(const Graph& g, int edge, const PsiRecord& base,
                             const SearchLimits& limits) {
  PsiRecord r = base;
  r.edge = edge;
  const auto start = std::chrono::steady_clock::now();
  const ContractedEdge ge = contract_removed_edge(g, edge);
  const CountResult ec = count_colorings_bounded(ge.graph, {limits.max_nodes});
  r.wall_ms = elapsed_ms(start);
  if (ec.stats.truncated) {
    r.status = "truncated";
    return r;
  }
  if (ec.count % 18 != 0) {
    throw InternalError("|EC(G_e)| = " + std::to_string(ec.count) + " not divisible by 18");
  }
  r.ec = ec.count;
  r.psi = ec.count / 18;
  return r;
}

}  // namespace detail

// Builds the recipe, certifies it and measures psi on one edge per
// automorphism orbit, plus psi on each connected union of pentagons.
// Oversized or non-snark instances produce a single truncated record.
inline std::vector<PsiRecord> evaluate_recipe(const std::string& recipe_text,
                                              const SearchLimits& limits = {}) {
  const Recipe recipe = parse_recipe(recipe_text);
  const Graph g = evaluate(recipe);
  PsiRecord base;
  base.recipe = to_string(recipe);
  base.graph6 = encode_graph6(g);
  base.vertices = g.num_vertices();
  if (g.num_edges() > limits.max_edges) {
    base.status = "truncated";
    base.certificate = "skipped: " + std::to_string(g.num_edges()) + " edges over budget";
    return {base};
  }
  const SnarkCertificate cert = certify_snark(g);
  base.certificate = cert.summary();
  if (!cert.valid()) {
    base.status = "truncated";
    return {base};
  }
  std::vector<PsiRecord> out;
  for (const auto& orbit : edge_orbits(g)) {
    out.push_back(detail::measure_psi(g, orbit.front(), base, limits));
  }
  const auto pentagons = list_pentagons(g);
  std::set<int> seen;
  for (std::size_t i = 0; i < pentagons.size(); ++i) {
    const auto edges = detail::pentagon_union_edges(g, pentagons, i);
    if (seen.count(edges.front())) continue;
    seen.insert(edges.begin(), edges.end());
    PsiRecord r = detail::measure_psi(g, edges.front(), base, limits);
    r.kind = "pentagon";
    out.push_back(std::move(r));
  }
  return out;
}

// Evaluates each recipe (optionally on several worker threads) and appends
// the records to the ledger in family order. on_record sees each stored
// record. A recipe that throws is recorded as nothing and reported through
// on_error.
inline void search(const std::vector<std::string>& family, const SearchLimits& limits,
                   Ledger& ledger, const std::function<void(const PsiRecord&)>& on_record = {},
                   const std::function<void(const std::string&, const std::string&)>& on_error = {}) {
  std::vector<std::vector<PsiRecord>> results(family.size());
  std::vector<std::string> errors(family.size());
  auto work = [&](std::size_t i) {
    try {
      results[i] = evaluate_recipe(family[i], limits);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  };
  const int workers = std::max(1, limits.workers);
  if (workers == 1 || family.size() < 2) {
    for (std::size_t i = 0; i < family.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < family.size(); i = next++) work(i);
      });
    }
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (!errors[i].empty()) {
      if (on_error) on_error(family[i], errors[i]);
      continue;
    }
    for (PsiRecord& r : results[i]) {
      ledger.record(r);
      if (on_record) on_record(ledger.records().back());
    }
  }
}

// Rebuilds the witness from its recipe and recomputes |EC(G_e)|; true iff the
// graph6 text is bit-identical and the counts agree.
inline bool reverify(const PsiRecord& r) {
  const Graph g = evaluate(parse_recipe(r.recipe));
  if (encode_graph6(g) != r.graph6) return false;
  if (!r.ok()) return true;
  const ContractedEdge ge = contract_removed_edge(g, r.edge);
  return count_colorings(ge.graph) == r.ec && r.psi && *r.psi * 18 == *r.ec;
}

// --- recipe families ---

inline std::vector<std::string> flower_family(int max_n) {
  std::vector<std::string> out;
  for (int n = 5; n <= max_n; n += 2) out.push_back("(flower n=" + std::to_string(n) + ")");
  return out;
}

// Pentagon joins among Petersen and J5 (first pentagon of each), all rotations.
inline std::vector<std::string> pentagon_join_family() {
  const std::vector<std::string> leaves = {"(petersen)", "(flower n=5)"};
  std::vector<std::string> out;
  for (const auto& a : leaves) {
    for (const auto& b : leaves) {
      for (int r = 0; r < 5; ++r) {
        out.push_back("(pentagonjoin " + a + " p=0 " + b + " q=0 r=" + std::to_string(r) + ")");
      }
    }
  }
  return out;
}

// Petersen superposed repeatedly: step j replaces edge 0 of a fresh Petersen
// by the step j-1 graph, split at its two least non-adjacent vertices.
// Those vertices lie in the outer block, so the original Petersen's kept
// edges survive every step.
inline std::vector<std::string> superposition_chain(int steps) {
  std::vector<std::string> out = {"(petersen)"};
  std::string current = "(petersen)";
  for (int j = 1; j <= steps; ++j) {
    const Graph inner = evaluate(parse_recipe(current));
    Vertex u = 0, v = -1;
    for (Vertex x = 1; x < inner.num_vertices(); ++x) {
      if (!inner.adjacent(u, x)) {
        v = x;
        break;
      }
    }
    current = "(superpose52 (petersen) e=0 " + current + " u=" + std::to_string(u) +
              " v=" + std::to_string(v) + ")";
    out.push_back(current);
  }
  return out;
}

}  // namespace snarkforge
