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

#ifndef HEYTING_ALGEBRA_H_
#define HEYTING_ALGEBRA_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "heyting/element_set.h"
#include "heyting/limits.h"
#include "heyting/poset.h"

namespace heyting {

class HeytingAlgebra;

// A filter of a finite Heyting algebra: contains top, upward closed, closed
// under meet. Every such filter is principal.
class Filter {
 public:
  static Filter principal(const HeytingAlgebra& a, std::size_t generator);
  // Throws InputError unless `set` is a filter of `a`.
  static Filter of(const HeytingAlgebra& a, ElementSet set);

  const ElementSet& set() const { return set_; }
  // The least element of the filter.
  std::size_t generator() const { return generator_; }

 private:
  Filter(ElementSet s, std::size_t g) : set_(std::move(s)), generator_(g) {}
  ElementSet set_;
  std::size_t generator_;
};

// A finite Heyting algebra stored as explicit operation tables over the
// carrier 0..size-1.
class HeytingAlgebra {
 public:
  enum class Origin { kFromUpsets, kAbstract };

  // Up(X) with union, intersection and U -> V = X \ down(U \ V). Elements
  // are the upsets sorted by (cardinality, bits), so bot() == 0 and
  // top() == size() - 1.
  static HeytingAlgebra from_upsets(const Poset& x, const Limits& limits = {});

  // Validates a raw order and implication table; meet and join are derived
  // from the order. Throws NotLattice, NotDistributive or AdjunctionFails
  // naming the offending elements.
  static HeytingAlgebra from_tables(std::size_t size, const std::vector<std::vector<bool>>& leq,
                                    const std::vector<std::vector<std::size_t>>& implies,
                                    std::size_t bot, std::size_t top,
                                    const Limits& limits = {});

  std::size_t size() const { return size_; }
  std::size_t bot() const { return bot_; }
  std::size_t top() const { return top_; }
  Origin origin() const { return origin_; }
  bool trivial() const { return size_ == 1; }

  bool leq(std::size_t a, std::size_t b) const { return above_[a].contains(b); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size_ + b]; }
  std::size_t implies(std::size_t a, std::size_t b) const { return imp_[a * size_ + b]; }
  std::size_t neg(std::size_t a) const { return implies(a, bot_); }

  // Elements above / below a (inclusive).
  const ElementSet& above(std::size_t a) const { return above_[a]; }
  const ElementSet& below(std::size_t a) const { return below_[a]; }

  // Raw tables, row-major, for tight evaluation loops.
  const std::vector<std::uint16_t>& meet_table() const { return meet_; }
  const std::vector<std::uint16_t>& join_table() const { return join_; }
  const std::vector<std::uint16_t>& implies_table() const { return imp_; }

  // Only for from_upsets algebras: the underlying poset and the upset each
  // element stands for.
  const Poset* source() const { return source_ ? &*source_ : nullptr; }
  const ElementSet& upset(std::size_t a) const { return upsets_.at(a); }
  std::optional<std::size_t> element_of(const ElementSet& upset) const;

  // Exhaustive lattice, distributivity and adjunction check.
  void validate() const;

  std::vector<std::size_t> lower_covers(std::size_t a) const;
  // Elements other than bot with exactly one lower cover.
  std::vector<std::size_t> join_irreducibles() const;

  // Nontrivial and top is join-prime.
  bool is_fsi() const;
  // Nontrivial and a largest element below top exists.
  bool is_si() const;
  std::optional<std::size_t> second_largest() const;

  // A/F, with each class represented by its least-index member. Classes are
  // ordered by representative.
  HeytingAlgebra quotient(const Filter& f) const;
  // The algebra on a subuniverse; elements keep their relative order.
  HeytingAlgebra subalgebra(const ElementSet& subuniverse) const;
  // Smallest subuniverse containing `generators`, bot and top.
  ElementSet closure(const ElementSet& generators) const;
  bool is_subuniverse(const ElementSet& s) const;

  // The carrier as a poset (labels are element indices).
  Poset order() const;

 private:
  HeytingAlgebra() = default;
  void index_order();

  std::size_t size_ = 0;
  std::size_t bot_ = 0;
  std::size_t top_ = 0;
  Origin origin_ = Origin::kAbstract;
  std::vector<ElementSet> above_;
  std::vector<ElementSet> below_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::vector<std::uint16_t> imp_;
  std::optional<Poset> source_;
  std::vector<ElementSet> upsets_;
};

// One quotient per filter, in generator order. Requires
// size <= limits.oracle_algebra_size.
std::vector<HeytingAlgebra> quotients(const HeytingAlgebra& a, const Limits& limits = {});

// Every subuniverse, each exactly once, in discovery order starting with {0,1}.
std::vector<ElementSet> subuniverses(const HeytingAlgebra& a, const Limits& limits = {});
// Subalgebras up to isomorphism.
std::vector<HeytingAlgebra> subalgebras(const HeytingAlgebra& a, const Limits& limits = {});

std::optional<std::vector<std::size_t>> find_algebra_isomorphism(const HeytingAlgebra& a,
                                                                 const HeytingAlgebra& b);
bool isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b);

// SH(B) up to isomorphism: subalgebras of all quotients of B.
std::vector<HeytingAlgebra> sh_closure(const HeytingAlgebra& b, const Limits& limits = {});

}  // namespace heyting

#endif  // HEYTING_ALGEBRA_H_
