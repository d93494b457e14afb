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

#include "heyting/element_set.h"

#include <algorithm>

namespace heyting {

ElementSet::ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

ElementSet::ElementSet(std::size_t universe, std::initializer_list<std::size_t> members)
    : ElementSet(universe) {
  for (std::size_t m : members) insert(m);
}

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  s.trim();
  return s;
}

ElementSet ElementSet::from_indices(std::size_t universe,
                                    const std::vector<std::size_t>& members) {
  ElementSet s(universe);
  for (std::size_t m : members) s.insert(m);
  return s;
}

void ElementSet::trim() {
  const std::size_t rem = universe_ & 63;
  if (rem != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << rem) - 1;
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

ElementSet ElementSet::complement() const {
  ElementSet s = *this;
  for (auto& w : s.words_) w = ~w;
  s.trim();
  return s;
}

bool operator<(const ElementSet& a, const ElementSet& b) {
  const std::size_t ca = a.count();
  const std::size_t cb = b.count();
  if (ca != cb) return ca < cb;
  for (std::size_t i = a.words_.size(); i-- > 0;) {
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  }
  return false;
}

std::size_t ElementSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return universe_;
}

std::size_t ElementSet::next(std::size_t i) const {
  ++i;
  if (i >= universe_) return universe_;
  std::size_t w = i >> 6;
  std::uint64_t bits = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (bits != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
    if (++w >= words_.size()) return universe_;
    bits = words_[w];
  }
}

std::vector<std::size_t> ElementSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t i) { out.push_back(i); });
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = universe_ * 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : words_) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first_member = true;
  for_each([&](std::size_t i) {
    if (!first_member) out += ",";
    out += std::to_string(i);
    first_member = false;
  });
  return out + "}";
}

}  // namespace heyting
