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

#include "heyting/semantics.h"

#include <gtest/gtest.h>

#include "../support/fixtures.h"
#include "heyting/catalog.h"
#include "heyting/errors.h"
#include "heyting/families.h"

namespace heyting {
namespace {

using testing::labeled;

TEST(EvalTest, ExcludedMiddleOnThreeElementFan) {
  Poset x = named("P3");
  HeytingAlgebra a = HeytingAlgebra::from_upsets(x);
  std::size_t p = *a.element_of(labeled(x, {"v1"}));
  std::size_t r = eval(a, excluded_middle(), {{"p", p}});
  EXPECT_EQ(a.upset(r), labeled(x, {"v1", "v3"}));
  EXPECT_EQ(eval(x, excluded_middle(), {{"p", labeled(x, {"v1"})}}), labeled(x, {"v1", "v3"}));
}

TEST(EvalTest, Constants) {
  HeytingAlgebra a = HeytingAlgebra::from_upsets(named("P1"));
  EXPECT_EQ(eval(a, parse_formula("1"), {}), a.top());
  EXPECT_EQ(eval(a, parse_formula("0"), {}), a.bot());
  EXPECT_EQ(eval(a, parse_formula("0 -> 0"), {}), a.top());
}

TEST(EvalTest, UnboundAndNonUpsetValues) {
  Poset x = named("P1");
  HeytingAlgebra a = HeytingAlgebra::from_upsets(x);
  EXPECT_THROW(eval(a, parse_formula("p & q"), {{"p", 0}}), UnboundVariable);
  EXPECT_THROW(eval(x, parse_formula("p"), {{"p", labeled(x, {"0"})}}), InputError);
}

TEST(ValidityTest, GodelDummettOnP1HasCanonicalRefutation) {
  Poset x = named("P1");
  HeytingAlgebra a = HeytingAlgebra::from_upsets(x);
  AlgebraValidity v = valid_in(a, godel_dummett());
  ASSERT_FALSE(v.valid);
  ASSERT_TRUE(v.refutation);
  const auto& asg = v.refutation->assignment;
  ASSERT_EQ(asg.size(), 2u);
  EXPECT_EQ(asg[0].first, "p");
  EXPECT_EQ(a.upset(asg[0].second), labeled(x, {"v1", "1"}));
  EXPECT_EQ(asg[1].first, "q");
  EXPECT_EQ(a.upset(asg[1].second), labeled(x, {"v2", "1"}));
  EXPECT_NE(v.refutation->lhs, a.top());

  PosetValidity pv = valid_on_poset(x, godel_dummett());
  ASSERT_FALSE(pv.valid);
  EXPECT_EQ(pv.refutation->assignment[0].second, labeled(x, {"v1", "1"}));
  EXPECT_EQ(pv.refutation->assignment[1].second, labeled(x, {"v2", "1"}));
}

TEST(ValidityTest, TopIsValidEverywhere) {
  for (const Poset& x : testing::small_posets(4)) {
    EXPECT_TRUE(valid_in(HeytingAlgebra::from_upsets(x), parse_formula("1")).valid);
    EXPECT_TRUE(valid_on_poset(x, parse_formula("p -> p")).valid);
  }
}

TEST(ValidityTest, EquationsCompareBothSides) {
  HeytingAlgebra a = HeytingAlgebra::from_upsets(named("P3"));
  EXPECT_TRUE(holds_equation(a, parse_equation("p & q = q & p")).valid);
  EXPECT_TRUE(holds_equation(a, parse_equation("~~~p = ~p")).valid);
  AlgebraValidity v = holds_equation(a, parse_equation("~~p = p"));
  ASSERT_FALSE(v.valid);
  EXPECT_NE(v.refutation->lhs, v.refutation->rhs);
}

TEST(ValidityTest, BudgetIsEnforced) {
  HeytingAlgebra a = HeytingAlgebra::from_upsets(Poset::antichain(4));
  Limits l;
  l.max_assignments = 100;
  // 16^3 assignments exceed the cap before anything is evaluated.
  EXPECT_THROW(valid_in(a, parse_formula("p | q | r"), l), BudgetExceeded);
  EXPECT_NO_THROW(valid_in(a, parse_formula("p | ~p"), l));
}

const char* kCorpus[] = {
    "p | ~p",
    "~p | ~~p",
    "(p -> q) | (q -> p)",
    "(p -> q) | (((q -> p) -> q) -> q)",
    "((p -> q) -> p) -> p",
    "~~p -> p",
    "(p -> q) -> (~q -> ~p)",
    "(p <-> q) | (q <-> r) | (p <-> r)",
    "p & (q | r) <-> p & q | p & r",
    "(~p -> q | r) -> (~p -> q) | (~p -> r)",
};

// Algebra, poset and brute-force Kripke evaluation agree on validity and the
// canonical refutation lines up between algebra and poset.
TEST(ValidityPropertyTest, AgreesWithOracleOnSmallPosets) {
  for (const Poset& x : testing::small_posets(5)) {
    HeytingAlgebra a = HeytingAlgebra::from_upsets(x);
    oracle::Rel r = oracle::relation(x);
    for (const char* s : kCorpus) {
      Formula f = parse_formula(s);
      AlgebraValidity av = valid_in(a, f);
      PosetValidity pv = valid_on_poset(x, f);
      ASSERT_EQ(av.valid, oracle::valid(r, f)) << s;
      ASSERT_EQ(av.valid, pv.valid) << s;
      if (!av.valid) {
        const auto& aa = av.refutation->assignment;
        const auto& pa = pv.refutation->assignment;
        ASSERT_EQ(aa.size(), pa.size());
        std::map<std::string, oracle::Mask> env;
        for (std::size_t i = 0; i < aa.size(); ++i) {
          EXPECT_EQ(a.upset(aa[i].second), pa[i].second);
          env[pa[i].first] = testing::mask_of(pa[i].second);
        }
        EXPECT_NE(oracle::eval(r, f, env), oracle::full(x.size())) << s;
      }
    }
  }
}

TEST(ValidityPropertyTest, EvalMatchesOracleValueByValue) {
  Poset x = named("P7");
  HeytingAlgebra a = HeytingAlgebra::from_upsets(x);
  oracle::Rel r = oracle::relation(x);
  Formula f = parse_formula("(p -> q) | ~(q & ~p)");
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < a.size(); ++q) {
      std::size_t v = eval(a, f, {{"p", p}, {"q", q}});
      oracle::Mask m = oracle::eval(
          r, f, {{"p", testing::mask_of(a.upset(p))}, {"q", testing::mask_of(a.upset(q))}});
      ASSERT_EQ(testing::mask_of(a.upset(v)), m);
    }
  }
}

}  // namespace
}  // namespace heyting
