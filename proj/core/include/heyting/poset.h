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

#ifndef HEYTING_POSET_H_
#define HEYTING_POSET_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "heyting/element_set.h"

namespace heyting {

class Upset;

// A finite partial order on the dense indices 0..n-1.
//
// Construction validates the relation and precomputes principal up/down sets
// and the covering relation. Values are immutable afterwards, so a Poset can be
// shared freely between threads.
class Poset {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  // The empty poset.
  Poset() = default;

  // Reflexive-transitive closure of `pairs` (each (a, b) meaning a <= b).
  // Throws InputError on out-of-range indices and CycleError when the closure
  // identifies two distinct elements. Missing labels default to the index.
  static Poset from_relation(std::size_t n, const std::vector<Pair>& pairs,
                             std::vector<std::string> labels = {});

  static Poset chain(std::size_t n);
  static Poset antichain(std::size_t n);

  std::size_t size() const { return up_.size(); }
  bool empty() const { return up_.empty(); }

  bool leq(std::size_t a, std::size_t b) const { return up_[a].contains(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  // Principal upset / downset (both include the element itself).
  const ElementSet& up(std::size_t x) const { return up_[x]; }
  const ElementSet& down(std::size_t x) const { return down_[x]; }

  const std::vector<std::size_t>& upper_covers(std::size_t x) const { return upper_covers_[x]; }
  const std::vector<std::size_t>& lower_covers(std::size_t x) const { return lower_covers_[x]; }
  // Transitive reduction as (lower, upper) pairs in index order.
  std::vector<Pair> cover_pairs() const;

  const std::string& label(std::size_t x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  ElementSet none() const { return ElementSet(size()); }
  ElementSet all() const { return ElementSet::full(size()); }

  Upset up_closure(const ElementSet& s) const;
  ElementSet down_closure(const ElementSet& s) const;
  bool is_upset(const ElementSet& s) const;
  bool is_downset(const ElementSet& s) const;

  // The Heyting implication of Up(X): X minus the downset of (u \ v).
  ElementSet implies(const ElementSet& u, const ElementSet& v) const;

  ElementSet minimal() const;
  ElementSet maximal() const;
  bool is_rooted() const { return root().has_value(); }
  std::optional<std::size_t> root() const;

  // Length of the longest chain in the principal upset of x.
  std::size_t depth_of(std::size_t x) const { return depth_of_[x]; }
  // Size of the largest antichain contained in the principal upset of x.
  std::size_t width_of(std::size_t x) const;
  // Largest antichain inside an arbitrary subset.
  std::size_t max_antichain(const ElementSet& s) const;
  // Global measures; both throw EmptyPoset on the empty poset.
  std::size_t depth() const;
  std::size_t width() const;

  // Elements ordered so that x < y implies x comes first.
  std::vector<std::size_t> bottom_up_order() const;

  // Induced subposet on s, keeping labels. If `origin` is given it receives,
  // for every new index, the index it came from.
  Poset subposet(const ElementSet& s, std::vector<std::size_t>* origin = nullptr) const;

  Poset with_labels(std::vector<std::string> labels) const;

  friend bool operator==(const Poset& a, const Poset& b) { return a.up_ == b.up_; }

 private:
  void finish(std::vector<std::string> labels);

  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<std::vector<std::size_t>> upper_covers_;
  std::vector<std::vector<std::size_t>> lower_covers_;
  std::vector<std::size_t> depth_of_;
  std::vector<std::string> labels_;
};

// An upward closed subset of a particular poset.
class Upset {
 public:
  // Throws InputError unless `set` is an upset of `poset`.
  static Upset of(const Poset& poset, ElementSet set);

  const ElementSet& set() const { return set_; }
  std::size_t count() const { return set_.count(); }
  bool contains(std::size_t x) const { return set_.contains(x); }

  friend bool operator==(const Upset&, const Upset&) = default;

 private:
  friend class Poset;
  explicit Upset(ElementSet s) : set_(std::move(s)) {}
  ElementSet set_;
};

// Tower of the parts with parts.front() on top and parts.back() at the bottom.
// Elements keep the part order: part 0 occupies the first indices.
Poset linear_sum(std::span<const Poset> parts);
Poset linear_sum(std::initializer_list<Poset> parts);
Poset disjoint_union(std::span<const Poset> parts);
Poset disjoint_union(std::initializer_list<Poset> parts);

}  // namespace heyting

#endif  // HEYTING_POSET_H_
