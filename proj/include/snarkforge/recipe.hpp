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

// Recipes: reproducible names for constructed graphs.
//
// Grammar (whitespace separates items; keys may appear in any order):
//
//   recipe := "(" head item* ")"
//   item   := recipe | key "=" integer | '"' graph6 '"'
//
//   (petersen)
//   (flower n=<odd >= 5>)
//   (wheel8)
//   (graph6 "<graph6 string>")
//   (pentagonjoin <L> p=<i> <R> q=<j> [r=<rotation>])  i, j index list_pentagons
//   (superpose52 <outer> e=<edge> <inner> u=<vertex> v=<vertex>)
//   (dot <G1> e1=<edge> e2=<edge> <G2> x=<vertex> y=<vertex> [w=<wiring>])
//
// to_string() prints the canonical form: keys in the order shown above,
// optional keys always written, single spaces.

#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "snarkforge/constructions.hpp"
#include "snarkforge/graph6.hpp"

namespace snarkforge {

struct Recipe {
  enum class Kind { kPetersen, kFlower, kWheel8, kGraph6, kPentagonJoin, kSuperpose52, kDot };

  Kind kind = Kind::kPetersen;
  std::vector<Recipe> children;
  std::map<std::string, long long> params;
  std::string payload;  // graph6 text for kGraph6

  long long param(const std::string& key) const { return params.at(key); }

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

namespace detail {

struct RecipeShape {
  std::string_view head;
  Recipe::Kind kind;
  int children;
  std::vector<std::string> required;
  std::vector<std::pair<std::string, long long>> optional;
};

inline const std::vector<RecipeShape>& recipe_shapes() {
  static const std::vector<RecipeShape> shapes = {
      {"petersen", Recipe::Kind::kPetersen, 0, {}, {}},
      {"flower", Recipe::Kind::kFlower, 0, {"n"}, {}},
      {"wheel8", Recipe::Kind::kWheel8, 0, {}, {}},
      {"graph6", Recipe::Kind::kGraph6, 0, {}, {}},
      {"pentagonjoin", Recipe::Kind::kPentagonJoin, 2, {"p", "q"}, {{"r", 0}}},
      {"superpose52", Recipe::Kind::kSuperpose52, 2, {"e", "u", "v"}, {}},
      {"dot", Recipe::Kind::kDot, 2, {"e1", "e2", "x", "y"}, {{"w", 0}}},
  };
  return shapes;
}

inline const RecipeShape& shape_of(Recipe::Kind kind) {
  for (const auto& s : recipe_shapes()) {
    if (s.kind == kind) return s;
  }
  throw InternalError("unknown recipe kind");
}

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) : text_(text) {}

  Recipe parse() {
    skip_space();
    Recipe r = parse_node();
    skip_space();
    if (pos_ != text_.size()) throw ParseError("trailing characters after recipe", pos_);
    return r;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        ++pos_;
      } else {
        break;
      }
    }
    return text_.substr(start, pos_ - start);
  }

  Recipe parse_node() {
    const std::size_t open = pos_;
    if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected '('", pos_);
    ++pos_;
    skip_space();
    const std::size_t head_at = pos_;
    const std::string_view head = word();
    const RecipeShape* shape = nullptr;
    for (const auto& s : recipe_shapes()) {
      if (s.head == head) shape = &s;
    }
    if (!shape) throw ParseError("unknown recipe head '" + std::string(head) + "'", head_at);
    Recipe r;
    r.kind = shape->kind;
    bool have_payload = false;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) throw ParseError("unterminated recipe", open);
      const char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        r.children.push_back(parse_node());
        continue;
      }
      if (c == '"') {
        const std::size_t start = ++pos_;
        while (pos_ < text_.size() && text_[pos_] != '"') ++pos_;
        if (pos_ >= text_.size()) throw ParseError("unterminated string", start - 1);
        r.payload = std::string(text_.substr(start, pos_ - start));
        have_payload = true;
        ++pos_;
        continue;
      }
      const std::size_t key_at = pos_;
      const std::string key(word());
      if (key.empty() || pos_ >= text_.size() || text_[pos_] != '=') {
        throw ParseError("expected key=value", key_at);
      }
      ++pos_;
      const std::size_t value_at = pos_;
      std::size_t digits = pos_;
      if (digits < text_.size() && text_[digits] == '-') ++digits;
      const std::size_t first_digit = digits;
      while (digits < text_.size() && std::isdigit(static_cast<unsigned char>(text_[digits]))) {
        ++digits;
      }
      if (digits == first_digit || digits - first_digit > 12) {
        throw ParseError("expected integer value", value_at);
      }
      const long long value = std::stoll(std::string(text_.substr(value_at, digits - value_at)));
      pos_ = digits;
      if (r.params.count(key)) throw ParseError("duplicate key '" + key + "'", key_at);
      r.params[key] = value;
    }
    if (static_cast<int>(r.children.size()) != shape->children) {
      throw ParseError("'" + std::string(head) + "' takes " + std::to_string(shape->children) +
                           " sub-recipes",
                       open);
    }
    if (have_payload != (r.kind == Recipe::Kind::kGraph6)) {
      throw ParseError(have_payload ? "unexpected string argument" : "graph6 needs a string",
                       open);
    }
    for (const auto& [key, value] : r.params) {
      bool known = false;
      for (const auto& k : shape->required) known = known || k == key;
      for (const auto& [k, dflt] : shape->optional) known = known || k == key;
      if (!known) throw ParseError("unknown key '" + key + "'", open);
    }
    for (const auto& k : shape->required) {
      if (!r.params.count(k)) throw ParseError("missing key '" + k + "'", open);
    }
    for (const auto& [k, dflt] : shape->optional) r.params.emplace(k, dflt);
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

inline int as_int(const Recipe& r, const std::string& key) {
  const long long v = r.param(key);
  if (v < -1000000 || v > 1000000) throw DomainError("recipe value out of range: " + key);
  return static_cast<int>(v);
}

inline const Cycle& pentagon_at(const std::vector<Cycle>& pentagons, int index) {
  if (index < 0 || index >= static_cast<int>(pentagons.size())) {
    throw DomainError("pentagon index " + std::to_string(index) + " out of range (graph has " +
                      std::to_string(pentagons.size()) + ")");
  }
  return pentagons[index];
}

}  // namespace detail

inline Recipe parse_recipe(std::string_view text) { return detail::RecipeParser(text).parse(); }

inline std::string to_string(const Recipe& r) {
  const auto& shape = detail::shape_of(r.kind);
  std::string out = "(" + std::string(shape.head);
  auto key = [&](const std::string& k) { out += " " + k + "=" + std::to_string(r.param(k)); };
  switch (r.kind) {
    case Recipe::Kind::kPetersen:
    case Recipe::Kind::kWheel8:
      break;
    case Recipe::Kind::kFlower:
      key("n");
      break;
    case Recipe::Kind::kGraph6:
      out += " \"" + r.payload + "\"";
      break;
    case Recipe::Kind::kPentagonJoin:
      out += " " + to_string(r.children[0]);
      key("p");
      out += " " + to_string(r.children[1]);
      key("q");
      key("r");
      break;
    case Recipe::Kind::kSuperpose52:
      out += " " + to_string(r.children[0]);
      key("e");
      out += " " + to_string(r.children[1]);
      key("u");
      key("v");
      break;
    case Recipe::Kind::kDot:
      out += " " + to_string(r.children[0]);
      key("e1");
      key("e2");
      out += " " + to_string(r.children[1]);
      key("x");
      key("y");
      key("w");
      break;
  }
  return out + ")";
}

// Builds the top-level composite for binary recipes; nullopt for leaves.
inline std::optional<Composite> evaluate_composite(const Recipe& r);

inline Graph evaluate(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::kPetersen:
      return petersen();
    case Recipe::Kind::kFlower:
      return flower(detail::as_int(r, "n"));
    case Recipe::Kind::kWheel8:
      return wheel_w8().graph;
    case Recipe::Kind::kGraph6:
      return decode_graph6(r.payload);
    default:
      return evaluate_composite(r)->graph;
  }
}

inline std::optional<Composite> evaluate_composite(const Recipe& r) {
  using detail::as_int;
  switch (r.kind) {
    case Recipe::Kind::kPentagonJoin: {
      const Graph left = evaluate(r.children[0]);
      const Graph right = evaluate(r.children[1]);
      const auto lp = list_pentagons(left);
      const auto rp = list_pentagons(right);
      return pentagon_join(left, detail::pentagon_at(lp, as_int(r, "p")), right,
                           detail::pentagon_at(rp, as_int(r, "q")), as_int(r, "r"));
    }
    case Recipe::Kind::kSuperpose52: {
      const Graph outer = evaluate(r.children[0]);
      const Graph inner = evaluate(r.children[1]);
      return superpose_52(outer, as_int(r, "e"), inner, as_int(r, "u"), as_int(r, "v"));
    }
    case Recipe::Kind::kDot: {
      const Graph g1 = evaluate(r.children[0]);
      const Graph g2 = evaluate(r.children[1]);
      return dot_product(g1, as_int(r, "e1"), as_int(r, "e2"), g2, as_int(r, "x"),
                         as_int(r, "y"), as_int(r, "w"));
    }
    default:
      return std::nullopt;
  }
}

inline Graph evaluate(std::string_view text) { return evaluate(parse_recipe(text)); }

}  // namespace snarkforge
