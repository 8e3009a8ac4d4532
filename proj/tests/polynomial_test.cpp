// Copyright 2026 The pbpseg Authors
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

#include "pbp/error.hpp"
#include "pbp/reduction.hpp"
#include "support/oracles.hpp"

namespace pbp {
namespace {

using Map = PseudoBooleanPolynomial::TermMap;

Term T(std::initializer_list<std::uint32_t> labels) { return Term::from_labels(labels); }

TEST(TermTest, CanonicalOrderIsSizeThenColex) {
  EXPECT_LT(T({}), T({4}));
  EXPECT_LT(T({3}), T({4}));
  EXPECT_LT(T({4}), T({1, 3}));
  EXPECT_LT(T({1, 3}), T({2, 3}));
  EXPECT_LT(T({2, 3}), T({1, 4}));
  EXPECT_LT(T({1, 2, 3}), T({1, 2, 4}));
}

TEST(TermTest, RejectsDuplicatesAndZeroLabels) {
  EXPECT_THROW(T({2, 2}), ConsistencyError);
  EXPECT_THROW(T({0}), ConsistencyError);
  EXPECT_EQ(T({3, 1}), T({1, 3}));
}

TEST(PolynomialTest, ConstructorDropsZerosAndChecksBounds) {
  const PseudoBooleanPolynomial p(3, Map{{T({}), 0}, {T({1}), 4}});
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_THROW(PseudoBooleanPolynomial(3, Map{{T({1, 2, 3}), 1}}), ConsistencyError);
  EXPECT_THROW(PseudoBooleanPolynomial(3, Map{{T({5}), 1}}), ConsistencyError);
  EXPECT_THROW(PseudoBooleanPolynomial(3, Map{{T({1}), -2}}), ConsistencyError);
  EXPECT_THROW(PseudoBooleanPolynomial(0), ConsistencyError);
}

TEST(TextFormTest, WorkedExampleString) {
  const CostMatrix c{{8, 8, 8, 5}, {12, 7, 5, 7}, {18, 2, 3, 1}, {5, 18, 9, 8}};
  EXPECT_EQ(to_text(reduce(c)),
            "11 + 11*y3 + 3*y4 + 2*y1*y3 + 4*y2*y3 + 4*y1*y4 + 12*y1*y2*y3 + 6*y1*y2*y4");
  EXPECT_EQ(to_text(reduce(CostMatrix(4, 4, std::vector<Cost>(16, 99)))), "396");
}

TEST(TextFormTest, ParsesLooseSpacingAndSumsLikeTerms) {
  const auto p = parse_text(" 3*y1*y2 +1+ 2*y2*y1 ", 3);
  EXPECT_EQ(p, PseudoBooleanPolynomial(3, Map{{T({}), 1}, {T({1, 2}), 5}}));
  EXPECT_TRUE(parse_text("0", 2).empty());
}

TEST(TextFormTest, RejectsMalformedInput) {
  EXPECT_THROW(parse_text("", 3), ParseError);
  EXPECT_THROW(parse_text("3 +", 3), ParseError);
  EXPECT_THROW(parse_text("y1", 3), ParseError);
  EXPECT_THROW(parse_text("2*x1", 3), ParseError);
  EXPECT_THROW(parse_text("2*y0", 3), ParseError);
  EXPECT_THROW(parse_text("2*y4", 3), ParseError);
  EXPECT_THROW(parse_text("2*y1*y2*y3", 3), ParseError);
  EXPECT_THROW(parse_text("2*y1*y1", 3), ParseError);
  EXPECT_THROW(parse_text("-2", 3), ParseError);
}

TEST(JsonFormTest, ShapeAndErrors) {
  const PseudoBooleanPolynomial p(4, Map{{T({}), 531}, {T({1, 2, 3}), 106}});
  EXPECT_EQ(to_json(p).dump(),
            R"([{"coeff":531,"rows":[]},{"coeff":106,"rows":[1,2,3]}])");
  EXPECT_THROW(from_json(nlohmann::json::object(), 4), ParseError);
  EXPECT_THROW(from_json(nlohmann::json::parse(R"([{"rows":[1]}])"), 4), ParseError);
  EXPECT_THROW(from_json(nlohmann::json::parse(R"([{"coeff":1,"rows":[0]}])"), 4), ParseError);
}

// Both serializations are inverse to their printers on every reduced patch.
TEST(SerializationProperty, RoundTripsOnRandomReductions) {
  std::mt19937_64 rng(2026);
  for (int i = 0; i < 300; ++i) {
    const auto c = testing::random_matrix(rng, 6, 6, 255);
    const auto p = reduce(c);
    EXPECT_EQ(parse_text(to_text(p), c.rows()), p);
    EXPECT_EQ(from_json(nlohmann::json::parse(to_json(p).dump()), c.rows()), p);
  }
}

}  // namespace
}  // namespace pbp
