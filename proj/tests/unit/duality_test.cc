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

#include "heyting/duality.h"

#include <gtest/gtest.h>

#include "fixtures.h"
#include "heyting/catalog.h"
#include "heyting/errors.h"
#include "heyting/isomorphism.h"
#include "oracles.h"

namespace heyting {
namespace {

using testing::at;

HeytingAlgebra up(const Poset& p) { return HeytingAlgebra::from_upsets(p); }

TEST(SpectrumTest, RoundTripsOnNamedPosets) {
  for (const auto& name : fixed_names()) {
    EXPECT_TRUE(isomorphic(prime_spectrum(up(named(name))), named(name))) << name;
  }
  EXPECT_EQ(prime_spectrum(up(Poset::chain(1))).size(), 1u);
  for (std::size_t n = 1; n <= 5; ++n) {
    EXPECT_TRUE(isomorphic(prime_spectrum(up(Poset::chain(n))), Poset::chain(n)));
  }
  EXPECT_TRUE(prime_spectrum(up(Poset())).empty());
}

TEST(SpectrumTest, KeepsSourceLabels) {
  Poset s = prime_spectrum(up(named("P3")));
  EXPECT_TRUE(s.index_of("v1").has_value());
  EXPECT_TRUE(s.index_of("v2").has_value());
}

// Independent check that gamma is a Heyting isomorphism.
void expect_gamma(const HeytingAlgebra& a) {
  GammaIso g = gamma_iso(a);
  const Poset& x = g.spectrum;
  ASSERT_EQ(g.image.size(), a.size());
  EXPECT_TRUE(g.image[a.bot()].empty());
  EXPECT_TRUE(g.image[a.top()].all());
  auto ups = oracle::upsets(oracle::relation(x));
  EXPECT_EQ(ups.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_TRUE(x.is_upset(g.image[i]));
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (i != j) EXPECT_NE(g.image[i], g.image[j]);
      EXPECT_EQ(g.image[a.meet(i, j)], g.image[i] & g.image[j]);
      EXPECT_EQ(g.image[a.join(i, j)], g.image[i] | g.image[j]);
      EXPECT_EQ(testing::mask_of(g.image[a.implies(i, j)]),
                oracle::implies(oracle::relation(x), testing::mask_of(g.image[i]),
                                testing::mask_of(g.image[j])));
    }
  }
}

TEST(GammaTest, CertifiedOnExamples) {
  expect_gamma(up(Poset::antichain(3)));
  expect_gamma(up(named("P1")));
  expect_gamma(up(Poset()));
  EXPECT_TRUE(isomorphic(gamma_iso(up(named("P1"))).spectrum, named("P1")));
  EXPECT_TRUE(gamma_iso(up(Poset())).spectrum.empty());
}

TEST(GammaTest, CertifiedOnRandomPosets) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    expect_gamma(up(random_poset(1 + seed % 6, 0.4, seed)));
  }
}

TEST(PMorphismTest, IdentityAndConstant) {
  Poset p3 = named("P3");
  EXPECT_NO_THROW(check_pmorphism({0, 1, 2}, p3, p3));
  PMorphism c = check_pmorphism({0, 0}, Poset::chain(2), Poset::chain(1));
  EXPECT_TRUE(c.surjective());
}

TEST(PMorphismTest, FiveOntoFork) {
  Poset p5 = named("P5"), p3 = named("P3");
  std::vector<std::size_t> f(4);
  f[at(p5, "0")] = at(p3, "v2");
  f[at(p5, "v2")] = at(p3, "v3");
  f[at(p5, "v1")] = at(p3, "v1");
  f[at(p5, "1")] = at(p3, "v1");
  EXPECT_TRUE(oracle::is_pmorphism(f, oracle::relation(p5), oracle::relation(p3)));
  PMorphism m = check_pmorphism(f, p5, p3);
  EXPECT_TRUE(m.surjective());
}

TEST(PMorphismTest, NamedViolations) {
  Poset c2 = Poset::chain(2), p3 = named("P3");
  // 0 <= 1 but f(0) = 1 is not below f(1) = 0.
  auto v = find_pmorphism_violation({1, 0}, c2, c2);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, PMorphismViolation::Kind::kNotMonotone);
  // Monotone into the fork but the other top has no preimage above the root.
  v = find_pmorphism_violation({0, 1}, c2, p3);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, PMorphismViolation::Kind::kNotBack);
  EXPECT_EQ(v->x, 0u);
  EXPECT_EQ(v->y, 2u);
  EXPECT_THROW(check_pmorphism({0, 1}, c2, p3), PMorphismError);
  EXPECT_EQ(find_pmorphism_violation({0}, c2, c2)->kind, PMorphismViolation::Kind::kWrongArity);
  EXPECT_EQ(find_pmorphism_violation({0, 7}, c2, c2)->kind, PMorphismViolation::Kind::kOutOfRange);
}

TEST(ImageSearchTest, Examples) {
  auto r = pmorphic_image_of_upset(named("P3"), named("P5"));
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(verify_image_witness(*r.witness, named("P3"), named("P5")));
  EXPECT_EQ(r.witness->domain.size(), 4u);

  EXPECT_FALSE(pmorphic_image_of_upset(named("P3"), Poset::chain(5)).found());
  EXPECT_FALSE(oracle::image_of_upset(oracle::relation(named("P3")),
                                      oracle::relation(Poset::chain(5))));

  auto id = pmorphic_image_of_upset(named("P1"), named("P1"));
  ASSERT_TRUE(id.found());
  EXPECT_TRUE(verify_image_witness(*id.witness, named("P1"), named("P1")));
}

TEST(ImageSearchTest, EmptyTargetIsImageOfEmptyUpset) {
  auto r = pmorphic_image_of_upset(Poset(), named("P3"));
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(r.witness->domain.empty());
}

TEST(ImageSearchTest, BudgetIsReported) {
  Limits tiny;
  tiny.max_search_nodes = 3;
  Poset host = disjoint_union({Poset::antichain(6), Poset::chain(3)});
  EXPECT_THROW(pmorphic_image_of_upset(disjoint_union({named("P3"), named("P3")}), host, tiny),
               BudgetExceeded);
}

TEST(ImageSearchPropertyTest, AgreesWithBruteForce) {
  // Every target with at most 3 points against every host with at most 4,
  // plus random hosts of size 5.
  auto targets = testing::small_posets(3);
  std::vector<Poset> hosts = testing::small_posets(4);
  for (std::uint64_t seed = 0; seed < 8; ++seed) hosts.push_back(random_poset(5, 0.35, seed));
  for (const auto& t : targets) {
    for (const auto& h : hosts) {
      auto r = pmorphic_image_of_upset(t, h);
      auto ref = oracle::image_of_upset(oracle::relation(t), oracle::relation(h));
      ASSERT_EQ(r.found(), ref.has_value());
      if (r.found()) EXPECT_TRUE(verify_image_witness(*r.witness, t, h));
    }
  }
}

TEST(JankovTest, Examples) {
  JankovVerdict self = jankov_valid(up(named("P3")), up(named("P3")));
  EXPECT_FALSE(self.valid);
  ASSERT_TRUE(self.witness);
  EXPECT_EQ(self.witness->domain.size(), 3u);

  EXPECT_TRUE(jankov_valid(up(Poset::chain(3)), up(named("P3"))).valid);
  JankovVerdict fan = jankov_valid(up(named("F3")), up(named("P3")));
  EXPECT_FALSE(fan.valid);
  // Witnesses live on the spectra of the two algebras.
  EXPECT_TRUE(verify_image_witness(*fan.witness, prime_spectrum(up(named("P3"))),
                                   prime_spectrum(up(named("F3")))));
}

TEST(JankovTest, RequiresSubdirectlyIrreducibleTarget) {
  EXPECT_THROW(jankov_valid(named("P3"), Poset::antichain(2)), NotSI);
  EXPECT_THROW(jankov_valid(up(named("P3")), up(Poset::antichain(2))), NotSI);
}

TEST(ShOracleTest, Examples) {
  HeytingAlgebra two = up(Poset::chain(1));
  for (const char* b : {"P3", "P5", "chain2", "antichain2"}) {
    EXPECT_TRUE(in_SH_oracle(two, up(named(b)))) << b;
  }
  EXPECT_FALSE(in_SH_oracle(up(named("P3")), up(Poset::chain(3))));
  EXPECT_TRUE(in_SH_oracle(up(named("P3")), up(named("P5"))));
}

TEST(ShOracleTest, AgreesWithJankovOnSmallDuals) {
  std::vector<Poset> rooted;
  for (const auto& p : testing::small_posets(3)) {
    if (p.is_rooted()) rooted.push_back(p);
  }
  for (const auto& b : testing::small_posets(3)) {
    HeytingAlgebra bb = up(b);
    auto pool = sh_closure(bb);
    for (const auto& a : rooted) {
      HeytingAlgebra aa = up(a);
      EXPECT_EQ(jankov_valid(bb, aa).valid, !in_SH_pool(aa, pool));
    }
  }
}

}  // namespace
}  // namespace heyting
