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

// Command-line driver. run() is the whole program; main() only forwards to
// it so tests can drive the CLI in-process.
//
// Exit codes: 0 success or pass, 1 verified fail (theorem or certificate),
// 2 usage or domain error.

#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "snarkforge/analyzer.hpp"
#include "snarkforge/graph6.hpp"
#include "snarkforge/isomorphism.hpp"
#include "snarkforge/ledger.hpp"
#include "snarkforge/recipe.hpp"

namespace snarkforge::cli {

inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

using Json = nlohmann::ordered_json;

inline Json to_json(const TheoremReport& r) {
  Json j;
  j["theorem"] = r.theorem;
  j["instance"] = r.instance;
  j["checks"] = Json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"holds", c.holds()}});
  }
  j["notes"] = Json::object();
  for (const auto& n : r.notes) j["notes"][n.name] = n.value;
  j["verdict"] = r.pass() ? "pass" : "fail";
  return j;
}

inline Json to_json(const SnarkCertificate& c) {
  Json j;
  j["girth"] = c.girth ? Json(*c.girth) : Json(nullptr);
  j["level"] = c.level;
  j["girth_ok"] = c.girth_ok;
  j["connectivity_defined"] = c.connectivity_defined;
  j["connectivity_ok"] = c.connectivity_ok;
  j["colorings"] = c.colorings;
  j["snark"] = c.valid();
  return j;
}

// Maps theorem names (and their numeric aliases) to canonical names.
inline std::optional<std::string> canonical_theorem(const std::string& id) {
  static const std::vector<std::pair<std::string, std::string>> kAliases = {
      {"kaszonyi-counts", "kaszonyi-counts"}, {"3.3", "kaszonyi-counts"},
      {"cycle-cover", "cycle-cover"},         {"3.7", "cycle-cover"},
      {"pentagon", "pentagon"},               {"4.5", "pentagon"},
      {"pentagon-join", "pentagon-join"},     {"4.8", "pentagon-join"},
      {"superposition", "superposition"},     {"5.3", "superposition"},
  };
  for (const auto& [alias, name] : kAliases) {
    if (alias == id) return name;
  }
  return std::nullopt;
}

struct Options {
  std::string recipe;
  std::string graph6;
  std::vector<int> edges;
  std::string theorem;
  int level = 4;
  int pentagon = -1;
  bool json = false;
  bool dot = false;
  bool all_edges = false;
  std::string ledger;
  int budget_edges = 80;
  std::uint64_t budget_nodes = 100000000;
  int workers = 1;
  std::string family;
  std::string file;
  long long query = -1;
};

class Runner {
 public:
  Runner(Options opts, std::ostream& out, std::ostream& err)
      : o_(std::move(opts)), out_(out), err_(err) {}

  Graph input_graph() const {
    if (!o_.recipe.empty() && !o_.graph6.empty()) {
      throw DomainError("give either --recipe or --graph6, not both");
    }
    if (!o_.recipe.empty()) return evaluate(parse_recipe(o_.recipe));
    if (!o_.graph6.empty()) return decode_graph6(o_.graph6);
    throw DomainError("an input graph is required (--recipe or --graph6)");
  }

  std::string instance() const {
    return o_.recipe.empty() ? "(graph6 \"" + o_.graph6 + "\")" : to_string(parse_recipe(o_.recipe));
  }

  int build() {
    const Graph g = input_graph();
    if (o_.json) {
      out_ << Json{{"recipe", instance()},
                   {"graph6", encode_graph6(g)},
                   {"vertices", g.num_vertices()},
                   {"edges", g.num_edges()}}
                  .dump()
           << "\n";
    } else if (o_.dot) {
      out_ << to_dot(g);
    } else {
      out_ << "graph6 = " << encode_graph6(g) << "\n";
      out_ << "vertices = " << g.num_vertices() << "\n";
      out_ << "edges = " << g.num_edges() << "\n";
    }
    return kOk;
  }

  int certify() {
    const Graph g = input_graph();
    const SnarkCertificate cert = certify_snark(g, o_.level);
    if (o_.json) {
      out_ << to_json(cert).dump() << "\n";
    } else {
      out_ << "certificate = " << cert.summary() << "\n";
    }
    return cert.valid() ? kOk : kFail;
  }

  int count() {
    const Graph g = input_graph();
    const Count ec = count_colorings(g);
    std::optional<Count> ed;
    if (first_trivalent_vertex(g)) ed = count_decompositions(g);
    if (o_.json) {
      out_ << Json{{"colorings", ec}, {"decompositions", ed ? Json(*ed) : Json(nullptr)}}.dump()
           << "\n";
    } else {
      out_ << "colorings = " << ec << "\n";
      if (ed) out_ << "decompositions = " << *ed << "\n";
    }
    return kOk;
  }

  std::vector<int> chosen_edges(const Graph& g) const {
    if (!o_.edges.empty()) {
      for (int e : o_.edges) {
        if (e < 0 || e >= g.num_edges()) throw DomainError("edge " + std::to_string(e) + " out of range");
      }
      return o_.edges;
    }
    std::vector<int> out;
    if (o_.all_edges) {
      for (int e = 0; e < g.num_edges(); ++e) out.push_back(e);
    } else {
      for (const auto& orbit : edge_orbits(g)) out.push_back(orbit.front());
    }
    return out;
  }

  int psi_command() {
    const Graph g = input_graph();
    Json rows = Json::array();
    for (int e : chosen_edges(g)) {
      const PsiResult r = psi_detailed(g, e, {PsiMode::kAssumeSnark, {}});
      if (o_.json) {
        rows.push_back({{"edge", e}, {"psi", *r.value}, {"decompositions", r.decompositions}});
      } else if (o_.edges.size() == 1) {
        out_ << "psi = " << *r.value << "\n";
      } else {
        out_ << "psi(e" << e << ") = " << *r.value << "\n";
      }
    }
    if (o_.json) out_ << rows.dump() << "\n";
    return kOk;
  }

  int orthogonal() {
    const Graph g = input_graph();
    const auto pairs = orthogonal_pairs(g);
    if (o_.json) {
      Json rows = Json::array();
      for (auto [a, b] : pairs) rows.push_back({a, b});
      out_ << rows.dump() << "\n";
    } else {
      out_ << "orthogonal pairs = " << pairs.size() << "\n";
      for (auto [a, b] : pairs) out_ << a << " " << b << "\n";
    }
    return kOk;
  }

  int pentagons() {
    const Graph g = input_graph();
    const auto ps = list_pentagons(g);
    Json rows = Json::array();
    if (!o_.json) out_ << "pentagons = " << ps.size() << "\n";
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (o_.json) {
        rows.push_back({{"index", i}, {"vertices", ps[i].vertices}});
      } else {
        out_ << i << ":";
        for (Vertex v : ps[i].vertices) out_ << " " << v;
        out_ << "\n";
      }
    }
    if (o_.json) out_ << rows.dump() << "\n";
    return kOk;
  }

  int orbits() {
    const Graph g = input_graph();
    const auto orbits = edge_orbits(g);
    if (o_.json) {
      out_ << Json(orbits).dump() << "\n";
    } else {
      out_ << "edge orbits = " << orbits.size() << "\n";
      for (const auto& orbit : orbits) {
        for (std::size_t i = 0; i < orbit.size(); ++i) out_ << (i ? " " : "") << orbit[i];
        out_ << "\n";
      }
    }
    return kOk;
  }

  int verify() {
    const auto theorem = canonical_theorem(o_.theorem);
    if (!theorem) throw DomainError("unknown theorem id '" + o_.theorem + "'");
    std::vector<TheoremReport> reports;
    if (*theorem == "pentagon-join" || *theorem == "superposition") {
      if (o_.recipe.empty()) throw DomainError("--theorem " + o_.theorem + " needs --recipe");
      const Recipe r = parse_recipe(o_.recipe);
      const Graph left = evaluate(r.children.empty() ? r : r.children[0]);
      if (*theorem == "pentagon-join") {
        if (r.kind != Recipe::Kind::kPentagonJoin) throw DomainError("recipe must be a pentagonjoin");
        const Graph right = evaluate(r.children[1]);
        const auto lp = list_pentagons(left);
        const auto rp = list_pentagons(right);
        reports.push_back(verify_pentagon_join(
            left, detail::pentagon_at(lp, detail::as_int(r, "p")), right,
            detail::pentagon_at(rp, detail::as_int(r, "q")), detail::as_int(r, "r"), to_string(r)));
      } else {
        if (r.kind != Recipe::Kind::kSuperpose52) throw DomainError("recipe must be a superpose52");
        const Graph right = evaluate(r.children[1]);
        reports.push_back(verify_superposition(left, detail::as_int(r, "e"), right,
                                               detail::as_int(r, "u"), detail::as_int(r, "v"),
                                               to_string(r)));
      }
    } else {
      const Graph g = input_graph();
      if (*theorem == "pentagon") {
        const auto ps = list_pentagons(g);
        if (ps.empty()) throw DomainError("graph has no pentagon");
        for (std::size_t i = 0; i < ps.size(); ++i) {
          if (o_.pentagon >= 0 && static_cast<int>(i) != o_.pentagon) continue;
          reports.push_back(verify_pentagon_counts(g, ps[i], instance()));
        }
        if (reports.empty()) throw DomainError("pentagon index out of range");
      } else {
        for (int e : chosen_edges(g)) {
          reports.push_back(*theorem == "kaszonyi-counts"
                                ? verify_kaszonyi_counts(g, e, instance())
                                : verify_cycle_cover_identity(g, e, instance()));
        }
      }
    }
    bool pass = true;
    Json rows = Json::array();
    for (const auto& r : reports) {
      pass = pass && r.pass();
      if (o_.json) {
        rows.push_back(to_json(r));
      } else {
        out_ << r.to_text();
      }
    }
    if (o_.json) out_ << rows.dump() << "\n";
    if (!o_.json) out_ << (pass ? "pass" : "fail") << "\n";
    return pass ? kOk : kFail;
  }

  std::string ledger_path() const {
    if (!o_.ledger.empty()) return o_.ledger;
    if (const char* env = std::getenv("SNARKFORGE_LEDGER")) return env;
    return "";
  }

  Ledger open_ledger() const {
    const std::string path = ledger_path();
    return path.empty() ? Ledger() : Ledger::open(path);
  }

  static std::vector<std::string> family_recipes(const std::string& family) {
    const auto colon = family.find(':');
    const std::string name = family.substr(0, colon);
    const int arg = colon == std::string::npos ? -1 : std::stoi(family.substr(colon + 1));
    if (name == "flowers") return flower_family(arg < 0 ? 9 : arg);
    if (name == "joins") return pentagon_join_family();
    if (name == "chain") return superposition_chain(arg < 0 ? 2 : arg);
    if (name == "recipe") return {family.substr(colon + 1)};
    throw DomainError("unknown family '" + family + "' (flowers[:n], joins, chain[:j], recipe:<r>)");
  }

  int search_command() {
    std::vector<std::string> family;
    if (!o_.family.empty()) family = family_recipes(o_.family);
    if (!o_.recipe.empty()) family.push_back(o_.recipe);
    if (family.empty()) throw DomainError("search needs --family or --recipe");
    Ledger ledger = open_ledger();
    SearchLimits limits{o_.budget_edges, o_.budget_nodes, o_.workers};
    Json rows = Json::array();
    snarkforge::search(family, limits, ledger,
           [&](const PsiRecord& r) {
             if (o_.json) {
               rows.push_back(snarkforge::to_json(r));
             } else {
               out_ << r.id << " " << r.kind << " " << r.recipe << " e" << r.edge << " psi="
                    << (r.psi ? std::to_string(*r.psi) : std::string("?")) << " " << r.status
                    << "\n";
             }
           },
           [&](const std::string& recipe, const std::string& what) {
             err_ << "error: " << recipe << ": " << what << "\n";
           });
    if (o_.json) {
      out_ << rows.dump() << "\n";
    } else {
      out_ << "achieved =";
      for (Count n : ledger.achieved()) out_ << " " << n;
      out_ << "\n";
    }
    return kOk;
  }

  int export_command() {
    Ledger ledger = open_ledger();
    if (o_.query >= 0) {
      const auto witnesses = ledger.query(static_cast<Count>(o_.query));
      Json rows = Json::array();
      for (const auto& r : witnesses) {
        if (o_.json) {
          rows.push_back(snarkforge::to_json(r));
        } else {
          out_ << r.id << " " << r.vertices << " " << r.recipe << " e" << r.edge << "\n";
        }
      }
      if (o_.json) out_ << rows.dump() << "\n";
      return kOk;
    }
    if (o_.json) {
      out_ << Json(ledger.achieved()).dump() << "\n";
    } else {
      out_ << ledger.export_csv();
    }
    return kOk;
  }

  // Reads graph6 lines; snarks are evaluated into the ledger, other cubic
  // graphs of girth >= 5 that are cyclically 4-edge-connected get a
  // Condition K census.
  int import_command() {
    if (o_.file.empty()) throw DomainError("import needs --file");
    std::ifstream in(o_.file);
    if (!in) throw DomainError("cannot read " + o_.file);
    Ledger ledger = open_ledger();
    SearchLimits limits{o_.budget_edges, o_.budget_nodes, o_.workers};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (line.back() == '\r') line.pop_back();
      const Graph g = decode_graph6(line);
      const std::string recipe = "(graph6 \"" + line + "\")";
      if (!is_cubic(g)) {
        out_ << line << " skipped: not cubic\n";
        continue;
      }
      const SnarkCertificate cert = certify_snark(g);
      if (cert.valid()) {
        snarkforge::search({recipe}, limits, ledger, [&](const PsiRecord& r) {
          out_ << line << " e" << r.edge << " psi="
               << (r.psi ? std::to_string(*r.psi) : std::string("?")) << "\n";
        });
      } else if (cert.girth_ok && cert.connectivity_ok) {
        int holds = 0;
        for (int e = 0; e < g.num_edges(); ++e) holds += condition_k(g, e) ? 1 : 0;
        out_ << line << " colorable; condition K on " << holds << "/" << g.num_edges()
             << " edges\n";
      } else {
        out_ << line << " skipped: " << cert.summary() << "\n";
      }
    }
    return kOk;
  }

 private:
  Options o_;
  std::ostream& out_;
  std::ostream& err_;
};

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"snarkforge: Kaszonyi numbers of snarks"};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub) {
    sub->add_option("--recipe", o.recipe, "recipe s-expression");
    sub->add_option("--graph6", o.graph6, "graph6 string");
    sub->add_flag("--json", o.json, "machine-readable output");
  };
  auto ledger_flags = [&](CLI::App* sub) {
    sub->add_option("--ledger", o.ledger, "ledger file (default $SNARKFORGE_LEDGER)");
    sub->add_option("--budget-edges", o.budget_edges, "skip graphs with more edges");
    sub->add_option("--budget-nodes", o.budget_nodes, "backtracking nodes per count");
    sub->add_option("--workers", o.workers, "parallel recipe evaluation");
  };

  auto* build = app.add_subcommand("build", "construct a graph and print graph6");
  input(build);
  build->add_flag("--dot", o.dot, "print DOT instead");
  auto* certify = app.add_subcommand("certify", "check the snark conditions");
  input(certify);
  certify->add_option("--level", o.level, "cyclic edge-connectivity level (>= 4)");
  auto* count = app.add_subcommand("count", "count colorings and decompositions");
  input(count);
  auto* psi = app.add_subcommand("psi", "Kaszonyi number per edge");
  input(psi);
  psi->add_option("--edge", o.edges, "edge index (repeatable; default one per orbit)");
  psi->add_flag("--all-edges", o.all_edges, "every edge instead of one per orbit");
  auto* orth = app.add_subcommand("orthogonal", "list orthogonal edge pairs");
  input(orth);
  auto* verify = app.add_subcommand("verify", "check a counting identity");
  input(verify);
  verify->add_option("--theorem", o.theorem, "kaszonyi-counts|cycle-cover|pentagon|pentagon-join|superposition")
      ->required();
  verify->add_option("--edge", o.edges, "edge index (repeatable)");
  verify->add_option("--pentagon", o.pentagon, "pentagon index");
  verify->add_flag("--all-edges", o.all_edges, "every edge instead of one per orbit");
  auto* pent = app.add_subcommand("pentagons", "list pentagons");
  input(pent);
  auto* orb = app.add_subcommand("orbits", "edge orbits under automorphisms");
  input(orb);
  auto* srch = app.add_subcommand("search", "evaluate a recipe family into the ledger");
  input(srch);
  ledger_flags(srch);
  srch->add_option("--family", o.family, "flowers[:n] | joins | chain[:j] | recipe:<r>");
  auto* exp = app.add_subcommand("export", "achieved values as CSV, or witnesses for --n");
  exp->add_option("--ledger", o.ledger, "ledger file (default $SNARKFORGE_LEDGER)");
  exp->add_option("--n", o.query, "list witnesses for this value");
  exp->add_flag("--json", o.json, "machine-readable output");
  auto* imp = app.add_subcommand("import", "evaluate graph6 lines from a file");
  ledger_flags(imp);
  imp->add_option("--file", o.file, "file with one graph6 per line")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  Runner runner(o, out, err);
  try {
    if (*build) return runner.build();
    if (*certify) return runner.certify();
    if (*count) return runner.count();
    if (*psi) return runner.psi_command();
    if (*orth) return runner.orthogonal();
    if (*verify) return runner.verify();
    if (*pent) return runner.pentagons();
    if (*orb) return runner.orbits();
    if (*srch) return runner.search_command();
    if (*exp) return runner.export_command();
    if (*imp) return runner.import_command();
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kFail;
  } catch (const IntegrityError& e) {
    err << "ledger integrity error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace snarkforge::cli
