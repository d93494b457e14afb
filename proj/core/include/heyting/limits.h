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

#ifndef HEYTING_LIMITS_H_
#define HEYTING_LIMITS_H_

#include <cstddef>
#include <cstdint>

namespace heyting {

// Caps shared by every exponential operation. Exceeding any of them raises
// BudgetExceeded instead of running unbounded.
struct Limits {
  // Largest poset whose full upset lattice may be materialized.
  std::size_t max_materialized_poset = 20;
  // Largest algebra built with explicit operation tables.
  std::size_t max_algebra_size = 1024;
  // Cap on the number of upsets a single enumeration may yield.
  std::uint64_t max_upsets = std::uint64_t{1} << 20;
  // Algebras handed to the quotient/subalgebra oracle.
  std::size_t oracle_algebra_size = 12;
  // Algebras whose Jankov formula is built syntactically.
  std::size_t syntactic_jankov_size = 5;
  // Assignments examined by one validity check.
  std::uint64_t max_assignments = 200'000'000;
  // Nodes expanded by one backtracking search.
  std::uint64_t max_search_nodes = 1'000'000;
};

}  // namespace heyting

#endif  // HEYTING_LIMITS_H_
