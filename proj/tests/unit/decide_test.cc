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

#include "heyting/decide.h"

#include <gtest/gtest.h>

#include "heyting/errors.h"
#include "heyting/families.h"

namespace heyting {
namespace {

HeytingAlgebra up(const Poset& x) { return HeytingAlgebra::from_upsets(x); }

TEST(DecideEquationsTest, Examples) {
  std::vector<Equation> gd{parse_equation("(p -> q) | (q -> p)")};
  Verdict v = decide_equations(gd);
  EXPECT_TRUE(v.yes);
  ASSERT_EQ(v.equations.size(), 4u);
  for (const auto& e : v.equations) EXPECT_EQ(e.equation, std::optional<std::size_t>(0));
  EXPECT_TRUE(verify_verdict(v, gd));
  EXPECT_EQ(v.to_json()["answer"], "yes");

  Verdict none = decide_equations({});
  EXPECT_FALSE(none.yes);
  EXPECT_TRUE(verify_verdict(none, std::vector<Equation>{}));
  EXPECT_EQ(none.to_json()["answer"], "no");

  std::vector<Equation> em{parse_equation("p | ~p")};
  EXPECT_TRUE(decide_equations(em).yes);
}

TEST(DecideEquationsTest, TamperedVerdictFailsVerification) {
  std::vector<Equation> gd{parse_equation("(p -> q) | (q -> p)")};
  Verdict v = decide_equations(gd);
  Verdict flipped = v;
  flipped.yes = false;
  EXPECT_FALSE(verify_verdict(flipped, gd));
  Verdict wrong = v;
  wrong.equations[0].assignment[0].second = 0;
  EXPECT_FALSE(verify_verdict(wrong, gd));
}

TEST(DecideGeneratedTest, Examples) {
  std::vector<HeytingAlgebra> c4{up(Poset::chain(4))};
  Verdict v = decide_generated(c4);
  EXPECT_TRUE(v.yes);
  EXPECT_EQ(v.jankov.size(), 4u);
  EXPECT_TRUE(verify_verdict(v, c4));

  std::vector<HeytingAlgebra> p1{up(named("P1"))};
  Verdict n = decide_generated(p1);
  EXPECT_FALSE(n.yes);
  bool found = false;
  for (const auto& j : n.jankov) {
    if (j.target == "P1") {
      EXPECT_FALSE(j.verdict.valid);
      ASSERT_TRUE(j.verdict.witness);
      EXPECT_EQ(j.verdict.witness->domain.size(), 5u);
      found = true;
    }
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(verify_verdict(n, p1));

  std::vector<HeytingAlgebra> mixed{up(named("D2")), up(Poset::chain(3))};
  EXPECT_TRUE(decide_generated(mixed).yes);
  for (const char* p : {"P1", "P2", "P3", "P4"}) {
    std::vector<HeytingAlgebra> k{up(named(p))};
    Verdict r = decide_generated(k);
    EXPECT_FALSE(r.yes) << p;
    EXPECT_TRUE(verify_verdict(r, k));
  }
}

TEST(DecideRepresentableTest, Examples) {
  Verdict v = decide_representable_generated({up(Poset::chain(4))});
  EXPECT_TRUE(v.yes);
  EXPECT_EQ(v.depth_bound, std::optional<std::size_t>(4));
  EXPECT_EQ(v.to_json()["evidence"].back()["depth_bound"], 4);
  EXPECT_FALSE(decide_representable_generated({up(named("P3"))}).yes);
  Verdict empty = decide_representable_generated({});
  EXPECT_TRUE(empty.yes);
  EXPECT_EQ(empty.depth_bound, std::optional<std::size_t>(1));
}

TEST(DecidePrimitiveTest, Examples) {
  std::vector<HeytingAlgebra> c{up(Poset::chain(5))};
  Verdict v = decide_primitive_generated(c);
  EXPECT_TRUE(v.yes);
  EXPECT_TRUE(verify_verdict(v, c));
  std::vector<HeytingAlgebra> p7{up(named("P7"))};
  Verdict n = decide_primitive_generated(p7);
  EXPECT_FALSE(n.yes);
  EXPECT_TRUE(verify_verdict(n, p7));
}

}  // namespace
}  // namespace heyting
