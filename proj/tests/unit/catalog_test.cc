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

#include "heyting/catalog.h"

#include <gtest/gtest.h>

#include "../support/fixtures.h"
#include "heyting/algebra.h"
#include "heyting/duality.h"
#include "heyting/errors.h"
#include "heyting/isomorphism.h"

namespace heyting {
namespace {

TEST(NamedTest, Registry) {
  for (const std::string& n : fixed_names()) EXPECT_NO_THROW(named(n)) << n;
  EXPECT_EQ(named("P1").size(), 5u);
  EXPECT_EQ(named("P4").depth(), 4u);
  EXPECT_EQ(named("P4").width(), 2u);
  EXPECT_EQ(named("P1").depth(), 3u);
  EXPECT_EQ(named("P1").width(), 3u);
  EXPECT_TRUE(named("P3").is_rooted());
  EXPECT_EQ(named("chain(1)").size(), 1u);
  EXPECT_EQ(named("antichain0").size(), 0u);
  EXPECT_EQ(named("F(4)"), named("F4"));
  EXPECT_THROW(named("P8"), UnknownName);
  EXPECT_THROW(named("F"), UnknownName);
  EXPECT_THROW(named("chain(x)"), UnknownName);
}

TEST(NamedTest, FansAndDiamonds) {
  Poset f = fan(3);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(f.upper_covers(*f.index_of("b")).size(), 3u);
  EXPECT_EQ(f.maximal().count(), 3u);
  EXPECT_TRUE(isomorphic(diamond(3), named("P1")));
  EXPECT_TRUE(isomorphic(named("D1"), Poset::chain(3)));
  EXPECT_EQ(HeytingAlgebra::from_upsets(named("P1")).size(), 10u);
  EXPECT_EQ(HeytingAlgebra::from_upsets(named("P2")).size(), 8u);
  EXPECT_EQ(HeytingAlgebra::from_upsets(named("P4")).size(), 9u);
  EXPECT_EQ(HeytingAlgebra::from_upsets(named("P3")).size(), 5u);
}

TEST(DiamondSequenceTest, Specs) {
  EXPECT_EQ(diamond_sequence({{1}}).size(), 1u);
  EXPECT_TRUE(isomorphic(diamond_sequence({{1, 2, 1}}), diamond(2)));
  Poset v = diamond_sequence({{1, 2}});
  EXPECT_EQ(v.maximal().count(), 1u);
  EXPECT_EQ(v.minimal().count(), 2u);
  EXPECT_THROW(diamond_sequence({{1, 2, 2}}), BadSpec);
  EXPECT_THROW(diamond_sequence({{2, 1}}), BadSpec);
  EXPECT_THROW(diamond_sequence({{1, 3}}), BadSpec);
  EXPECT_THROW(diamond_sequence({{}}), BadSpec);
}

TEST(CaseTest, Names) {
  for (Case c : {Case::kP1, Case::kP2, Case::kP3, Case::kP4}) {
    EXPECT_EQ(case_from_string(to_string(c)), c);
    EXPECT_EQ(case_poset(c), named(to_string(c)));
  }
  EXPECT_THROW(case_from_string("P5"), UnknownName);
}

TEST(TruncationTest, Examples) {
  TruncationWitness p3 = truncated_counterexample(Case::kP3, 5);
  EXPECT_EQ(p3.poset.maximal().count(), 5u);
  EXPECT_EQ(p3.poset.size(), 5u + 6u);
  EXPECT_TRUE(verify_truncation(p3));

  TruncationWitness p1 = truncated_counterexample(Case::kP1, 4);
  EXPECT_EQ(p1.poset.size(), 4u + 1u + 4u);
  EXPECT_EQ(p1.copies, 4u);
  EXPECT_TRUE(verify_truncation(p1));

  for (Case c : {Case::kP1, Case::kP2, Case::kP3, Case::kP4}) {
    EXPECT_THROW(truncated_counterexample(c, 3), TooSmall);
  }
}

TEST(TruncationPropertyTest, EveryMinimalUpsetIsACopy) {
  for (Case c : {Case::kP1, Case::kP2, Case::kP3, Case::kP4}) {
    for (std::size_t n = 4; n <= 6; ++n) {
      TruncationWitness w = truncated_counterexample(c, n);
      ASSERT_TRUE(verify_truncation(w)) << to_string(c) << " " << n;
      EXPECT_TRUE(w.morphism.surjective());
      EXPECT_EQ(w.copies, w.poset.minimal().count());
      for (std::size_t m : w.poset.minimal().members()) {
        EXPECT_TRUE(isomorphic(w.poset.subposet(w.poset.up(m)), case_poset(c)));
      }
    }
  }
}

TEST(TruncationTest, TamperedWitnessIsRejected) {
  TruncationWitness w = truncated_counterexample(Case::kP4, 4);
  TruncationWitness bad = w;
  bad.copies += 1;
  EXPECT_FALSE(verify_truncation(bad));
}

TEST(EnumerationTest, CountsUpToIsomorphism) {
  const std::size_t expected[] = {1, 1, 2, 5, 16, 63, 318};
  for (std::size_t n = 0; n <= 6; ++n) {
    auto all = posets_up_to_iso(n);
    EXPECT_EQ(all.size(), expected[n]) << n;
    if (n <= 4) {
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(isomorphic(all[i], all[j]));
      }
    }
  }
}

TEST(RandomTest, Deterministic) {
  EXPECT_EQ(random_poset(12, 0.3, 7), random_poset(12, 0.3, 7));
  EXPECT_TRUE(isomorphic(random_poset(6, 0.0, 1), Poset::antichain(6)));
  EXPECT_TRUE(isomorphic(random_poset(6, 1.0, 1), Poset::chain(6)));
  int differ = 0;
  for (std::uint64_t s = 0; s < 10; ++s) differ += !(random_poset(10, 0.3, s) == random_poset(10, 0.3, s + 100));
  EXPECT_GT(differ, 0);
}

}  // namespace
}  // namespace heyting
