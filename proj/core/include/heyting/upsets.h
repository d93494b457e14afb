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

#ifndef HEYTING_UPSETS_H_
#define HEYTING_UPSETS_H_

#include <cstdint>
#include <functional>
#include <vector>

#include "heyting/element_set.h"
#include "heyting/poset.h"

namespace heyting {

// Streams every upset of `poset` exactly once (the empty set and the whole
// poset included). The callback returns false to stop early. Throws
// BudgetExceeded once more than `cap` upsets would be produced.
void for_each_upset(const Poset& poset, const std::function<bool(const ElementSet&)>& visit,
                    std::uint64_t cap);

// All upsets sorted by (cardinality, bit pattern): the empty set comes first
// and the whole poset last.
std::vector<ElementSet> enumerate_upsets(const Poset& poset, std::uint64_t cap);

std::uint64_t count_upsets(const Poset& poset, std::uint64_t cap);

}  // namespace heyting

#endif  // HEYTING_UPSETS_H_
