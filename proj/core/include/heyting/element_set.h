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

#ifndef HEYTING_ELEMENT_SET_H_
#define HEYTING_ELEMENT_SET_H_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace heyting {

// A subset of the dense index range [0, universe) stored as a bit-vector.
// Binary operations require both operands to share the same universe.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe);
  ElementSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static ElementSet full(std::size_t universe);
  static ElementSet from_indices(std::size_t universe,
                                 const std::vector<std::size_t>& members);

  std::size_t universe() const { return universe_; }
  std::size_t count() const;
  bool empty() const;
  bool all() const { return count() == universe_; }

  bool contains(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  bool is_subset_of(const ElementSet& other) const;
  bool intersects(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  // Set difference.
  ElementSet& operator-=(const ElementSet& other);
  ElementSet complement() const;

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet& a, const ElementSet& b) = default;
  // Total order on sets of one universe: by cardinality, then by the members
  // read as a binary number with index 0 least significant.
  friend bool operator<(const ElementSet& a, const ElementSet& b);

  // Index of the first member, or universe() when empty.
  std::size_t first() const;
  // Next member strictly after i, or universe().
  std::size_t next(std::size_t i) const;
  std::vector<std::size_t> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  // Low 64 bits; exact when universe() <= 64.
  std::uint64_t word0() const { return words_.empty() ? 0 : words_[0]; }
  const std::vector<std::uint64_t>& words() const { return words_; }
  std::size_t hash() const;

  std::string to_string() const;

 private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace heyting

#endif  // HEYTING_ELEMENT_SET_H_
