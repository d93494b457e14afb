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

#ifndef HEYTING_FAMILIES_H_
#define HEYTING_FAMILIES_H_

#include "heyting/algebra.h"
#include "heyting/formula.h"
#include "heyting/limits.h"

namespace heyting {

// d_1 = p1 | ~p1 and d_{m+1} = p_{m+1} | (p_{m+1} -> d_m). Valid exactly on
// posets of depth at most n. Throws BadSpec for n == 0.
Formula depth_formula(std::size_t n);

// w_n = OR_{i=0..n} (p_i -> OR_{j != i} p_j). Valid exactly on posets of
// width at most n. Throws BadSpec for n == 0.
Formula width_formula(std::size_t n);

// (p -> q) | (((q -> p) -> q) -> q)
Formula weak_peirce();

// (p -> q) | (q -> p)
Formula godel_dummett();

// p | ~p
Formula excluded_middle();

// Diagram formula of a subdirectly irreducible algebra A with elements
// indexed 0..n-1: variables x0..x{n-1}, premise the conjunction of
//   x_{a&b} <-> x_a & x_b and x_{a|b} <-> x_a | x_b   for a < b,
//   x_{a->b} <-> (x_a -> x_b)                         for all a, b,
//   x_bot <-> 0,
// conclusion x_s for the second largest element s. It is refuted in B exactly
// when A is in SH(B). Throws NotSI, or BudgetExceeded past
// limits.syntactic_jankov_size.
Formula jankov_syntactic(const HeytingAlgebra& a, const Limits& limits = {});

}  // namespace heyting

#endif  // HEYTING_FAMILIES_H_
