// Copyright 2026 The Heyting Toolkit Authors
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

#include "heyting/families.h"

#include <gtest/gtest.h>

#include "../support/fixtures.h"
#include "heyting/catalog.h"
#include "heyting/duality.h"
#include "heyting/errors.h"
#include "heyting/semantics.h"

namespace heyting {
namespace {

TEST(FamiliesTest, SmallInstances) {
  EXPECT_EQ(depth_formula(1), parse_formula("p1 | ~p1"));
  EXPECT_EQ(depth_formula(2), parse_formula("p2 | (p2 -> p1 | ~p1)"));
  EXPECT_EQ(width_formula(1), parse_formula("(p0 -> p1) | (p1 -> p0)"));
  EXPECT_EQ(width_formula(2),
            parse_formula("(p0 -> p1 | p2) | (p1 -> p0 | p2) | (p2 -> p0 | p1)"));
  EXPECT_EQ(depth_formula(4).variables(), (std::vector<std::string>{"p1", "p2", "p3", "p4"}));
  EXPECT_EQ(width_formula(3).variables().size(), 4u);
  EXPECT_THROW(depth_formula(0), BadSpec);
  EXPECT_THROW(width_formula(0), BadSpec);
}

TEST(FamiliesTest, NamedExamples) {
  Poset c2 = Poset::chain(2);
  EXPECT_TRUE(valid_on_poset(c2, depth_formula(2)).valid);
  EXPECT_FALSE(valid_on_poset(c2, depth_formula(1)).valid);
  Poset p1 = named("P1");
  EXPECT_FALSE(valid_on_poset(p1, width_formula(2)).valid);
  EXPECT_TRUE(valid_on_poset(p1, width_formula(3)).valid);
  EXPECT_TRUE(valid_on_poset(named("P2"), godel_dummett()).valid == false);
}

// Depth and width formulas track the brute-force invariants.
TEST(FamiliesPropertyTest, DepthAndWidthCharacterisation) {
  for (const Poset& x : testing::small_posets(5)) {
    if (x.empty()) continue;
    oracle::Rel r = oracle::relation(x);
    std::size_t d = oracle::depth(r), w = oracle::width(r);
    for (std::size_t n = 1; n <= 3; ++n) {
      EXPECT_EQ(valid_on_poset(x, depth_formula(n)).valid, d <= n);
    }
    for (std::size_t n = 1; n <= 2; ++n) {
      EXPECT_EQ(valid_on_poset(x, width_formula(n)).valid, w <= n);
    }
  }
}

TEST(JankovTest, SyntacticShape) {
  HeytingAlgebra a = HeytingAlgebra::from_upsets(Poset::chain(2));
  Formula j = jankov_syntactic(a);
  EXPECT_EQ(j.variables(), (std::vector<std::string>{"x0", "x1", "x2"}));
  EXPECT_EQ(j.kind(), Formula::Kind::kImp);
  EXPECT_EQ(j.rhs(), Formula::var("x1"));
  // The algebra refutes its own formula.
  EXPECT_FALSE(valid_in(a, j).valid);
  EXPECT_THROW(jankov_syntactic(HeytingAlgebra::from_upsets(Poset::antichain(2))), NotSI);
  EXPECT_THROW(jankov_syntactic(HeytingAlgebra::from_upsets(Poset::chain(5))), BudgetExceeded);
}

TEST(JankovTest, ChainsExample) {
  HeytingAlgebra c3 = HeytingAlgebra::from_upsets(Poset::chain(3));
  HeytingAlgebra c4 = HeytingAlgebra::from_upsets(Poset::chain(4));
  // A longer chain is not in SH of a shorter one; the shorter one is in SH of the longer.
  EXPECT_TRUE(valid_in(c3, jankov_syntactic(c4)).valid);
  EXPECT_FALSE(valid_in(c4, jankov_syntactic(c3)).valid);
}

// Syntactic and dual Jankov tests agree on every SI algebra with at most five
// elements against every dual of a poset with at most three points.
TEST(JankovPropertyTest, SyntacticMatchesSemantic) {
  std::vector<HeytingAlgebra> si;
  for (const Poset& x : testing::small_posets(4)) {
    if (x.empty() || !x.is_rooted()) continue;
    HeytingAlgebra a = HeytingAlgebra::from_upsets(x);
    if (a.size() <= 5) si.push_back(a);
  }
  ASSERT_EQ(si.size(), 5u);
  for (const HeytingAlgebra& a : si) {
    Formula j = jankov_syntactic(a);
    for (const Poset& y : testing::small_posets(3)) {
      HeytingAlgebra b = HeytingAlgebra::from_upsets(y);
      bool syn = valid_in(b, j).valid;
      EXPECT_EQ(syn, jankov_valid(b, a).valid);
      EXPECT_EQ(syn, !in_SH_oracle(a, b));
    }
  }
}

}  // namespace
}  // namespace heyting
