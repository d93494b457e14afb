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

#include "heyting/classifiers.h"

#include <gtest/gtest.h>

#include "../support/fixtures.h"
#include "heyting/catalog.h"
#include "heyting/errors.h"
#include "heyting/isomorphism.h"

namespace heyting {
namespace {

using testing::at;

HeytingAlgebra up(const Poset& x) { return HeytingAlgebra::from_upsets(x); }

TEST(ThreePointTest, Examples) {
  EXPECT_FALSE(three_point_violation(Poset::chain(4)));
  EXPECT_FALSE(three_point_violation(named("P3")));
  Poset p2 = named("P2");
  auto t = three_point_violation(p2);
  ASSERT_TRUE(t);
  EXPECT_EQ(*t, (Triple{at(p2, "v2"), at(p2, "v1"), at(p2, "v3")}));
  ClassifierReport r = three_point_rule(p2);
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.route("spectrum").witness["x"], "v2");
  EXPECT_THROW(r.route("jankov"), InputError);
}

TEST(ThreePointPropertyTest, MatchesOracle) {
  for (const Poset& x : testing::small_posets(5)) {
    oracle::Rel r = oracle::relation(x);
    EXPECT_EQ(!three_point_violation(x), oracle::three_point(r, oracle::full(x.size())));
  }
}

TEST(CascadeTest, Examples) {
  EXPECT_TRUE(is_cascade(up(Poset::chain(3))).verdict);
  ClassifierReport p3 = is_cascade(up(named("P3")));
  EXPECT_TRUE(p3.verdict);
  EXPECT_EQ(p3.routes.size(), 2u);
  ClassifierReport p2 = is_cascade(up(named("P2")));
  EXPECT_FALSE(p2.verdict);
  EXPECT_FALSE(p2.route("principal-upsets").verdict);
  EXPECT_FALSE(p2.route("jankov").verdict);
  EXPECT_FALSE(p2.route("jankov").witness.is_null());
  nlohmann::json j = p2.to_json();
  EXPECT_EQ(j["property"], "cascade");
  EXPECT_EQ(j["verdict"], false);
}

// Both routes agree (a disagreement would throw) and follow the three point
// rule inside every principal upset.
TEST(CascadePropertyTest, RoutesAgreeWithOracle) {
  for (const Poset& x : testing::small_posets(5)) {
    oracle::Rel r = oracle::relation(x);
    bool expected = true;
    for (std::size_t b = 0; b < x.size(); ++b) expected &= oracle::three_point(r, oracle::up(r, b));
    EXPECT_EQ(is_cascade(x).verdict, expected);
  }
}

TEST(CascadeWidthTest, Examples) {
  EXPECT_FALSE(is_cascade_width(up(diamond(3)), 2).verdict);
  EXPECT_TRUE(is_cascade_width(up(Poset::chain(4)), 1).verdict);
  EXPECT_TRUE(is_cascade_width(up(named("P3")), 2).verdict);
  EXPECT_FALSE(is_cascade_width(up(named("P3")), 1).verdict);
  EXPECT_THROW(is_cascade_width(up(named("P7")), 1), NotCascade);
}

TEST(CascadeWidthPropertyTest, MatchesWidth) {
  for (const Poset& x : testing::small_posets(5)) {
    if (!is_cascade(x)) continue;
    std::size_t w = x.empty() ? 0 : oracle::width(oracle::relation(x));
    for (std::size_t n = 1; n <= 2; ++n) {
      EXPECT_EQ(is_cascade_width(up(x), n).verdict, w <= n);
    }
  }
}

TEST(DiamondTest, SystemExamples) {
  EXPECT_FALSE(diamond_system_failure(Poset::chain(5)));
  Poset p4 = named("P4");
  auto f = diamond_system_failure(p4);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->condition, 4);
  EXPECT_EQ(f->witness, (std::vector<std::size_t>{at(p4, "0"), at(p4, "v1"), at(p4, "v2"),
                                                  at(p4, "v3"), at(p4, "v4"), at(p4, "1")}));
  Poset p3 = named("P3");
  f = diamond_system_failure(p3);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->condition, 3);
  EXPECT_EQ(f->witness, (std::vector<std::size_t>{at(p3, "v2"), at(p3, "v1"), at(p3, "v3")}));
  EXPECT_EQ(diamond_system_failure(named("P2"))->condition, 1);
  EXPECT_EQ(diamond_system_failure(named("P1"))->condition, 2);
  EXPECT_FALSE(is_diamond_system(p4).verdict);
  EXPECT_EQ(is_diamond_system(p4).route("spectrum").witness["condition"], "D4");
}

TEST(DiamondTest, Sequences) {
  EXPECT_TRUE(is_diamond_sequence(diamond(2)));
  EXPECT_TRUE(is_diamond_sequence(Poset::chain(3)));
  EXPECT_FALSE(is_diamond_sequence(Poset::antichain(2)));
  EXPECT_FALSE(is_downward_directed(Poset()));
  EXPECT_TRUE(is_downward_directed(named("P1")));
}

TEST(DiamondTest, Algebras) {
  EXPECT_TRUE(is_diamond_algebra(up(Poset::chain(4))).verdict);
  EXPECT_TRUE(is_diamond_algebra(up(diamond(2))).verdict);
  for (const char* p : {"P1", "P2", "P3", "P4"}) {
    ClassifierReport r = is_diamond_algebra(up(named(p)));
    EXPECT_FALSE(r.verdict) << p;
    EXPECT_EQ(r.routes.size(), 3u);
  }
}

TEST(DiamondPropertyTest, RoutesAgree) {
  for (const Poset& x : testing::small_posets(5)) {
    EXPECT_NO_THROW(is_diamond_algebra(up(x)));
  }
}

TEST(DecomposeTest, Examples) {
  Decomposition c = decompose_shapes(Poset::chain(3));
  ASSERT_EQ(c.blocks.size(), 3u);
  for (const Block& b : c.blocks) EXPECT_EQ(b.kind, Block::Kind::kSingleton);

  Poset d2 = diamond(2);
  Decomposition d = decompose_shapes(d2);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0].kind, Block::Kind::kSingleton);
  EXPECT_EQ(d.blocks[0].elements, (std::vector<std::size_t>{at(d2, "t")}));
  EXPECT_EQ(d.blocks[1].kind, Block::Kind::kPair);
  EXPECT_EQ(d.blocks[1].elements,
            (std::vector<std::size_t>{at(d2, "1"), at(d2, "2"), at(d2, "b")}));
  EXPECT_EQ(d.to_json(d2)["blocks"][1]["kind"], "pair");

  try {
    decompose_shapes(named("P4"));
    FAIL();
  } catch (const NotDecomposable& e) {
    EXPECT_EQ(e.level(), 3u);
  }
  try {
    decompose_shapes(Poset::antichain(2));
    FAIL();
  } catch (const NotDecomposable& e) {
    EXPECT_EQ(e.level(), 0u);
  }
}

// A rooted poset decomposes exactly when it is a diamond sequence, and the
// blocks reassemble into the input.
TEST(DecomposePropertyTest, RoundTrip) {
  for (const Poset& x : testing::small_posets(6)) {
    if (x.empty() || !x.is_rooted()) continue;
    bool seq = is_diamond_sequence(x);
    try {
      Decomposition d = decompose_shapes(x);
      EXPECT_TRUE(seq);
      std::vector<Poset> levels;
      for (const Block& b : d.blocks) {
        if (b.kind == Block::Kind::kPair) {
          levels.push_back(Poset::antichain(2));
        }
        levels.push_back(Poset::chain(1));
      }
      EXPECT_TRUE(isomorphic(linear_sum(std::span<const Poset>(levels)), x));
    } catch (const NotDecomposable&) {
      EXPECT_FALSE(seq);
    }
  }
}

TEST(RootSystemTest, Examples) {
  EXPECT_TRUE(is_root_system(Poset::chain(4)));
  EXPECT_FALSE(is_root_system(named("P3")));
  EXPECT_TRUE(is_root_system(disjoint_union({Poset::chain(2), Poset::chain(3)})));
  EXPECT_TRUE(is_root_system(Poset()));
  ClassifierReport r = root_system(named("P3"));
  EXPECT_FALSE(r.verdict);
  EXPECT_EQ(r.route("spectrum").witness["base"], "v2");
}

TEST(RootSystemPropertyTest, MatchesOracle) {
  for (const Poset& x : testing::small_posets(5)) {
    oracle::Rel r = oracle::relation(x);
    bool expected = true;
    for (std::size_t b = 0; b < x.size(); ++b) expected &= oracle::width_of(r, b) <= 1;
    EXPECT_EQ(is_root_system(x), expected);
    EXPECT_EQ(root_system(x).verdict, expected);
  }
}

}  // namespace
}  // namespace heyting
