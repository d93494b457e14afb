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

#ifndef HEYTING_TESTS_FIXTURES_H_
#define HEYTING_TESTS_FIXTURES_H_

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "heyting/element_set.h"
#include "heyting/poset.h"
#include "oracles.h"

namespace heyting::testing {

// Set of the elements carrying the given labels.
inline ElementSet labeled(const Poset& p, std::initializer_list<const char*> labels) {
  ElementSet s(p.size());
  for (const char* l : labels) s.insert(p.index_of(l).value());
  return s;
}

inline std::size_t at(const Poset& p, const char* label) { return p.index_of(label).value(); }

inline oracle::Mask mask_of(const ElementSet& s) { return static_cast<oracle::Mask>(s.word0()); }

inline ElementSet set_of(std::size_t n, oracle::Mask m) {
  ElementSet s(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (m >> i & 1) s.insert(i);
  }
  return s;
}

// Every poset with at most `max_n` elements, up to isomorphism.
std::vector<Poset> small_posets(std::size_t max_n);

}  // namespace heyting::testing

#endif  // HEYTING_TESTS_FIXTURES_H_
