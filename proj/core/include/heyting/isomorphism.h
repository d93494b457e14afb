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

#ifndef HEYTING_ISOMORPHISM_H_
#define HEYTING_ISOMORPHISM_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "heyting/poset.h"

namespace heyting {

// Order-isomorphism search. Returns a bijection f with f[x] the image of x
// in `to`, or nullopt. Candidates are filtered by per-element invariants
// (depth, width, cover degrees, principal up/down sizes) and the search is
// deterministic for fixed inputs.
std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& from, const Poset& to);

bool isomorphic(const Poset& a, const Poset& b);

// Cheap isomorphism-invariant fingerprint; equal posets up to isomorphism
// always share it.
std::uint64_t invariant_hash(const Poset& p);

}  // namespace heyting

#endif  // HEYTING_ISOMORPHISM_H_
