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

#ifndef HEYTING_CATALOG_H_
#define HEYTING_CATALOG_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "heyting/duality.h"
#include "heyting/poset.h"

namespace heyting {

// Registry of named posets. Accepted names: P1..P7, F<m> or F(m),
// D<m> or D(m) for m >= 1, chain<n> or chain(n), antichain<n> or
// antichain(n) for n >= 0. Throws UnknownName otherwise.
Poset named(std::string_view name);
// The names above that take no parameter, in registry order.
std::vector<std::string> fixed_names();

// Root "b" with m maximal covers labeled 1..m.
Poset fan(std::size_t m);
// Root "b", middle antichain 1..m, top "t".
Poset diamond(std::size_t m);

// Antichain sizes listed top to bottom. Valid specs start with 1 and contain
// only 1s and 2s with no two adjacent 2s.
struct DiamondSpec {
  std::vector<std::size_t> levels;
};

// Linear sum of the listed antichains. Throws BadSpec for invalid specs.
Poset diamond_sequence(const DiamondSpec& spec);

enum class Case { kP1, kP2, kP3, kP4 };
std::string to_string(Case c);
Case case_from_string(std::string_view s);
// The poset a case is modeled on.
Poset case_poset(Case c);

struct TruncationWitness {
  Case which;
  Poset poset;
  std::size_t copies = 0;
  // Disjoint union of `copies` copies of case_poset(which), copy i mapped onto
  // the principal upset of the i-th minimal element.
  Poset domain;
  PMorphism morphism;
};

// Finite restriction of the counterexample family to N top-row points, with
// all induced bottom elements. Throws TooSmall when N < 4.
TruncationWitness truncated_counterexample(Case c, std::size_t n);

// Rechecks the morphism, its surjectivity and every minimal principal upset.
bool verify_truncation(const TruncationWitness& w);

// One representative per isomorphism class of posets with n elements, in a
// fixed deterministic order.
std::vector<Poset> posets_up_to_iso(std::size_t n);

// Random poset: each pair i < j is related with probability p before taking
// the transitive closure. Deterministic in (n, p, seed).
Poset random_poset(std::size_t n, double p, std::uint64_t seed);

}  // namespace heyting

#endif  // HEYTING_CATALOG_H_
