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

#ifndef HEYTING_CLASSIFIERS_H_
#define HEYTING_CLASSIFIERS_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "heyting/algebra.h"
#include "heyting/duality.h"
#include "heyting/element_set.h"
#include "heyting/limits.h"
#include "heyting/poset.h"

namespace heyting {

// Route names used in reports.
inline constexpr const char* kRouteSpectrum = "spectrum";
inline constexpr const char* kRoutePrincipalUpsets = "principal-upsets";
inline constexpr const char* kRouteJankov = "jankov";

struct RouteResult {
  std::string route;
  bool verdict = true;
  // Violating tuple or Jankov witnesses; null when the verdict is positive.
  nlohmann::json witness;
};

// Result of a classifier. With several routes the verdicts agree; a
// disagreement raises InternalInconsistency instead of producing a report.
struct ClassifierReport {
  std::string property;
  bool verdict = true;
  std::vector<RouteResult> routes;

  explicit operator bool() const { return verdict; }
  const RouteResult& route(const std::string& name) const;
  nlohmann::json to_json() const;
};

// {"upset": [host indices], "map": [target index per upset member],
//  "labels": [[host label, target label], ...]}
nlohmann::json image_witness_json(const ImageWitness& w, const Poset& host, const Poset& target);

// (x, y, z): distinct, x and y incomparable, x <= z and not y <= z.
using Triple = std::array<std::size_t, 3>;

// First violation in lexicographic (x, y, z) order among members of `within`.
std::optional<Triple> three_point_violation(const Poset& x, const ElementSet& within);
std::optional<Triple> three_point_violation(const Poset& x);

ClassifierReport three_point_rule(const Poset& x);
// The rule inside every principal upset; the witness names the base point.
ClassifierReport three_point_rule_principal(const Poset& x);

// Cascade test on the spectrum: three point rule in every principal upset,
// and validity of the Jankov formulas of P2, P5 and P6.
ClassifierReport is_cascade(const HeytingAlgebra& a, const Limits& limits = {});
ClassifierReport is_cascade(const Poset& x, const Limits& limits = {});

// Width at most n for cascades: spectrum width, and the Jankov formulas of
// F(n+1) and D(n+1). Throws NotCascade for non-cascade input.
ClassifierReport is_cascade_width(const HeytingAlgebra& a, std::size_t n,
                                  const Limits& limits = {});

// First failing diamond condition (1..4) with its witness elements:
//   D1: base x, then the violating triple inside its principal upset;
//   D2: base x, then a 3-antichain above it;
//   D3: base x, then two points above it with no common upper bound;
//   D4: (bot, x, y, z, v, top) with no w between {x, y} and {z, v}.
struct DiamondFailure {
  int condition = 0;
  std::vector<std::size_t> witness;
};
std::optional<DiamondFailure> diamond_system_failure(const Poset& x);

ClassifierReport is_diamond_system(const Poset& x);
bool is_downward_directed(const Poset& x);
bool is_diamond_sequence(const Poset& x);

// Three routes on the spectrum: it is a diamond system; every principal
// upset is a diamond sequence; the Jankov formulas of P1..P4 hold.
ClassifierReport is_diamond_algebra(const HeytingAlgebra& a, const Limits& limits = {});

// Width at most one. The empty poset qualifies.
bool is_root_system(const Poset& x);
ClassifierReport root_system(const Poset& x);

struct Block {
  enum class Kind { kSingleton, kPair };
  Kind kind;
  // Pair blocks list the two upper points before the point below them.
  std::vector<std::size_t> elements;
};

// Top-to-bottom blocks whose linear sum is the input.
struct Decomposition {
  std::vector<Block> blocks;
  nlohmann::json to_json(const Poset& x) const;
};

// Splits a rooted diamond sequence into singletons and pair blocks by depth
// level. Throws NotDecomposable naming the first offending level (1 = top,
// 0 when the input is not rooted).
Decomposition decompose_shapes(const Poset& x);

}  // namespace heyting

#endif  // HEYTING_CLASSIFIERS_H_
