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

#ifndef HEYTING_SEMANTICS_H_
#define HEYTING_SEMANTICS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "heyting/algebra.h"
#include "heyting/element_set.h"
#include "heyting/formula.h"
#include "heyting/limits.h"
#include "heyting/poset.h"

namespace heyting {

// Evaluates f homomorphically. Throws UnboundVariable for a missing name.
std::size_t eval(const HeytingAlgebra& a, const Formula& f,
                 const std::map<std::string, std::size_t>& assignment);

// Kripke evaluation: variables denote upsets, the result is an upset.
// Throws InputError when an assigned set is not an upset of x.
ElementSet eval(const Poset& x, const Formula& f,
                const std::map<std::string, ElementSet>& assignment);

template <class Value>
struct Refutation {
  // Variables in natural order with their values.
  std::vector<std::pair<std::string, Value>> assignment;
  Value lhs;
  Value rhs;
};

// Outcome of an exhaustive search. Assignments are enumerated in mixed-radix
// lexicographic order, first variable most significant, so the refutation is
// the least one in that order.
template <class Value>
struct Validity {
  bool valid = true;
  std::optional<Refutation<Value>> refutation;
  std::uint64_t assignments = 0;
  explicit operator bool() const { return valid; }
};

using AlgebraValidity = Validity<std::size_t>;
using PosetValidity = Validity<ElementSet>;

// Throws BudgetExceeded when |A|^|vars| exceeds limits.max_assignments.
AlgebraValidity valid_in(const HeytingAlgebra& a, const Formula& f, const Limits& limits = {});
AlgebraValidity holds_equation(const HeytingAlgebra& a, const Equation& e,
                               const Limits& limits = {});

// Same search with values ranging over Up(x) and connectives computed on sets;
// no algebra is built. Values are visited in the order Up(x) is indexed.
PosetValidity valid_on_poset(const Poset& x, const Formula& f, const Limits& limits = {});
PosetValidity holds_equation_on_poset(const Poset& x, const Equation& e,
                                      const Limits& limits = {});

}  // namespace heyting

#endif  // HEYTING_SEMANTICS_H_
