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

#include "snarkforge.hpp"

namespace snarkforge {
namespace {

TEST(RecipeTest, CanonicalFormRoundTrips) {
  const std::vector<std::string> canonical = {
      "(petersen)",
      "(flower n=7)",
      "(wheel8)",
      "(graph6 \"C~\")",
      "(pentagonjoin (petersen) p=0 (flower n=5) q=0 r=2)",
      "(superpose52 (petersen) e=7 (petersen) u=2 v=9)",
      "(dot (petersen) e1=0 e2=2 (petersen) x=0 y=1 w=3)",
  };
  for (const auto& text : canonical) EXPECT_EQ(to_string(parse_recipe(text)), text);
}

TEST(RecipeTest, OptionalKeysAndWhitespace) {
  EXPECT_EQ(to_string(parse_recipe("  ( pentagonjoin (petersen)  p=1 (petersen) q=2 ) ")),
            "(pentagonjoin (petersen) p=1 (petersen) q=2 r=0)");
  EXPECT_EQ(parse_recipe("(dot (petersen) e1=0 e2=2 (petersen) x=0 y=1)").param("w"), 0);
}

TEST(RecipeTest, ParseErrorsCarryOffsets) {
  auto offset_of = [](const std::string& text) -> long long {
    try {
      parse_recipe(text);
    } catch (const ParseError& e) {
      return static_cast<long long>(e.offset());
    }
    return -1;
  };
  EXPECT_EQ(offset_of("(petersen"), 0);
  EXPECT_EQ(offset_of("(flower n=5) x"), 13);
  EXPECT_GE(offset_of("(hexagon)"), 0);
  EXPECT_GE(offset_of("(flower)"), 0);
  EXPECT_GE(offset_of("(flower n=x)"), 0);
  EXPECT_GE(offset_of("(petersen) extra"), 0);
  EXPECT_GE(offset_of("(flower n=5 n=7)"), 0);
}

TEST(RecipeTest, EvaluationIsDeterministic) {
  const std::string text = "(superpose52 (petersen) e=7 (petersen) u=2 v=9)";
  const Graph a = evaluate(text);
  const Graph b = evaluate(text);
  EXPECT_EQ(encode_graph6(a), encode_graph6(b));
  EXPECT_EQ(a.num_vertices(), 22);
}

TEST(RecipeTest, LeavesMatchConstructors) {
  EXPECT_EQ(encode_graph6(evaluate("(petersen)")), encode_graph6(petersen()));
  EXPECT_EQ(encode_graph6(evaluate("(flower n=5)")), encode_graph6(flower(5)));
  EXPECT_EQ(encode_graph6(evaluate("(wheel8)")), encode_graph6(wheel_w8().graph));
  const std::string g6 = encode_graph6(petersen());
  EXPECT_EQ(encode_graph6(evaluate("(graph6 \"" + g6 + "\")")), g6);
}

TEST(RecipeTest, DomainErrorsFromConstructors) {
  EXPECT_THROW(evaluate("(flower n=6)"), DomainError);
  EXPECT_THROW(evaluate("(pentagonjoin (petersen) p=12 (petersen) q=0)"), DomainError);
  EXPECT_THROW(evaluate("(superpose52 (petersen) e=0 (petersen) u=0 v=1)"), DomainError);
}

TEST(RecipeTest, CompositeOnlyForBinaryRecipes) {
  EXPECT_FALSE(evaluate_composite(parse_recipe("(petersen)")).has_value());
  EXPECT_TRUE(evaluate_composite(parse_recipe("(dot (petersen) e1=0 e2=2 (petersen) x=0 y=1)"))
                  .has_value());
}

}  // namespace
}  // namespace snarkforge
