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

#include "heyting/algebra.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include "heyting/errors.h"
#include "heyting/isomorphism.h"
#include "heyting/upsets.h"

namespace heyting {
namespace {

constexpr std::size_t kHardMaxSize = std::numeric_limits<std::uint16_t>::max();

void check_size(std::size_t size, const Limits& limits) {
  const std::size_t cap = std::min(limits.max_algebra_size, kHardMaxSize);
  if (size > cap) throw BudgetExceeded("algebra size", cap, size);
}

// Validation is cubic; algebras built from upsets are correct by
// construction, so only small ones are re-checked on the spot.
constexpr std::size_t kEagerValidationSize = 128;

}  // namespace

Filter Filter::principal(const HeytingAlgebra& a, std::size_t generator) {
  return Filter(a.above(generator), generator);
}

Filter Filter::of(const HeytingAlgebra& a, ElementSet set) {
  if (set.universe() != a.size() || set.empty()) throw InputError("filter must be a nonempty subset");
  std::size_t g = set.first();
  set.for_each([&](std::size_t x) { g = a.meet(g, x); });
  if (set != a.above(g)) throw InputError("set " + set.to_string() + " is not a filter");
  return Filter(std::move(set), g);
}

HeytingAlgebra HeytingAlgebra::from_upsets(const Poset& x, const Limits& limits) {
  if (x.size() > limits.max_materialized_poset)
    throw BudgetExceeded("poset size for Up(X)", limits.max_materialized_poset, x.size());
  const std::uint64_t cap =
      std::min<std::uint64_t>(limits.max_upsets, std::min(limits.max_algebra_size, kHardMaxSize));
  auto ups = enumerate_upsets(x, cap);

  HeytingAlgebra a;
  a.size_ = ups.size();
  a.origin_ = Origin::kFromUpsets;
  a.bot_ = 0;
  a.top_ = a.size_ - 1;
  const std::size_t n = a.size_;
  std::unordered_map<ElementSet, std::uint16_t, ElementSetHash> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(ups[i], static_cast<std::uint16_t>(i));

  a.above_.assign(n, ElementSet(n));
  a.meet_.resize(n * n);
  a.join_.resize(n * n);
  a.imp_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (ups[i].is_subset_of(ups[j])) a.above_[i].insert(j);
      a.meet_[i * n + j] = index.at(ups[i] & ups[j]);
      a.join_[i * n + j] = index.at(ups[i] | ups[j]);
      a.imp_[i * n + j] = index.at(x.implies(ups[i], ups[j]));
    }
  }
  a.index_order();
  a.source_ = x;
  a.upsets_ = std::move(ups);
  if (n <= kEagerValidationSize) a.validate();
  return a;
}

HeytingAlgebra HeytingAlgebra::from_tables(std::size_t size,
                                           const std::vector<std::vector<bool>>& leq,
                                           const std::vector<std::vector<std::size_t>>& implies,
                                           std::size_t bot, std::size_t top,
                                           const Limits& limits) {
  if (size == 0) throw InputError("algebra must have at least one element");
  check_size(size, limits);
  if (leq.size() != size || implies.size() != size) throw InputError("table row count differs from size");
  for (std::size_t i = 0; i < size; ++i) {
    if (leq[i].size() != size || implies[i].size() != size)
      throw InputError("table column count differs from size");
  }
  if (bot >= size || top >= size) throw InputError("bot/top out of range");

  HeytingAlgebra a;
  a.size_ = size;
  a.bot_ = bot;
  a.top_ = top;
  a.origin_ = Origin::kAbstract;
  a.above_.assign(size, ElementSet(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      if (leq[i][j]) a.above_[i].insert(j);

  // Partial order and bounds.
  for (std::size_t i = 0; i < size; ++i) {
    if (!a.leq(i, i)) throw NotLattice(i, i);
    if (!a.leq(bot, i)) throw NotLattice(bot, i);
    if (!a.leq(i, top)) throw NotLattice(i, top);
    for (std::size_t j = 0; j < size; ++j) {
      if (i != j && a.leq(i, j) && a.leq(j, i)) throw NotLattice(i, j);
      if (a.leq(i, j) && !a.above_[j].is_subset_of(a.above_[i])) throw NotLattice(i, j);
    }
  }
  a.index_order();

  // Meet and join from the order.
  a.meet_.resize(size * size);
  a.join_.resize(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      const ElementSet lower = a.below_[i] & a.below_[j];
      const ElementSet upper = a.above_[i] & a.above_[j];
      std::optional<std::size_t> glb, lub;
      lower.for_each([&](std::size_t m) {
        if (lower.is_subset_of(a.below_[m])) glb = m;
      });
      upper.for_each([&](std::size_t m) {
        if (upper.is_subset_of(a.above_[m])) lub = m;
      });
      if (!glb || !lub) throw NotLattice(i, j);
      a.meet_[i * size + j] = static_cast<std::uint16_t>(*glb);
      a.join_[i * size + j] = static_cast<std::uint16_t>(*lub);
    }
  }
  a.imp_.resize(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      if (implies[i][j] >= size) throw InputError("implies entry out of range");
      a.imp_[i * size + j] = static_cast<std::uint16_t>(implies[i][j]);
    }
  }
  a.validate();
  return a;
}

void HeytingAlgebra::index_order() {
  below_.assign(size_, ElementSet(size_));
  for (std::size_t i = 0; i < size_; ++i) above_[i].for_each([&](std::size_t j) { below_[j].insert(i); });
}

std::optional<std::size_t> HeytingAlgebra::element_of(const ElementSet& upset) const {
  auto it = std::lower_bound(upsets_.begin(), upsets_.end(), upset);
  if (it == upsets_.end() || *it != upset) return std::nullopt;
  return static_cast<std::size_t>(it - upsets_.begin());
}

void HeytingAlgebra::validate() const {
  const std::size_t n = size_;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t m = meet(a, b);
      const std::size_t j = join(a, b);
      if (!(leq(m, a) && leq(m, b)) || !(below_[a] & below_[b]).is_subset_of(below_[m]))
        throw NotLattice(a, b);
      if (!(leq(a, j) && leq(b, j)) || !(above_[a] & above_[b]).is_subset_of(above_[j]))
        throw NotLattice(a, b);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) throw NotDistributive(a, b, c);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = meet(a, b);
      for (std::size_t c = 0; c < n; ++c)
        if (leq(ab, c) != leq(a, implies(b, c))) throw AdjunctionFails(a, b, c);
    }
}

std::vector<std::size_t> HeytingAlgebra::lower_covers(std::size_t a) const {
  std::vector<std::size_t> out;
  ElementSet strict = below_[a];
  strict.erase(a);
  strict.for_each([&](std::size_t b) {
    ElementSet between = strict & above_[b];
    between.erase(b);
    if (between.empty()) out.push_back(b);
  });
  return out;
}

std::vector<std::size_t> HeytingAlgebra::join_irreducibles() const {
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < size_; ++a)
    if (a != bot_ && lower_covers(a).size() == 1) out.push_back(a);
  return out;
}

bool HeytingAlgebra::is_fsi() const {
  if (trivial()) return false;
  for (std::size_t a = 0; a < size_; ++a)
    for (std::size_t b = a; b < size_; ++b)
      if (join(a, b) == top_ && a != top_ && b != top_) return false;
  return true;
}

std::optional<std::size_t> HeytingAlgebra::second_largest() const {
  if (trivial()) return std::nullopt;
  const auto covers = lower_covers(top_);
  if (covers.size() != 1) return std::nullopt;
  ElementSet rest = ElementSet::full(size_);
  rest.erase(top_);
  if (rest != below_[covers[0]]) return std::nullopt;
  return covers[0];
}

bool HeytingAlgebra::is_si() const { return second_largest().has_value(); }

HeytingAlgebra HeytingAlgebra::quotient(const Filter& f) const {
  const std::size_t g = f.generator();
  // a ~ b iff a & g == b & g.
  std::vector<std::size_t> cls(size_, size_);
  std::vector<std::size_t> reps;
  std::unordered_map<std::size_t, std::size_t> by_key;
  for (std::size_t a = 0; a < size_; ++a) {
    const std::size_t key = meet(a, g);
    auto [it, inserted] = by_key.emplace(key, reps.size());
    if (inserted) reps.push_back(a);
    cls[a] = it->second;
  }
  const std::size_t k = reps.size();
  HeytingAlgebra q;
  q.size_ = k;
  q.origin_ = Origin::kAbstract;
  q.bot_ = cls[bot_];
  q.top_ = cls[top_];
  q.above_.assign(k, ElementSet(k));
  q.meet_.resize(k * k);
  q.join_.resize(k * k);
  q.imp_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t a = reps[i], b = reps[j];
      if (leq(meet(a, g), b)) q.above_[i].insert(j);
      q.meet_[i * k + j] = static_cast<std::uint16_t>(cls[meet(a, b)]);
      q.join_[i * k + j] = static_cast<std::uint16_t>(cls[join(a, b)]);
      q.imp_[i * k + j] = static_cast<std::uint16_t>(cls[implies(a, b)]);
    }
  }
  q.index_order();
  return q;
}

bool HeytingAlgebra::is_subuniverse(const ElementSet& s) const {
  if (!s.contains(bot_) || !s.contains(top_)) return false;
  bool ok = true;
  s.for_each([&](std::size_t a) {
    s.for_each([&](std::size_t b) {
      ok = ok && s.contains(meet(a, b)) && s.contains(join(a, b)) && s.contains(implies(a, b));
    });
  });
  return ok;
}

ElementSet HeytingAlgebra::closure(const ElementSet& generators) const {
  ElementSet s = generators;
  s.insert(bot_);
  s.insert(top_);
  std::vector<std::size_t> members = s.members();
  // Each new element is combined with everything already present.
  for (std::size_t idx = 0; idx < members.size(); ++idx) {
    const std::size_t a = members[idx];
    for (std::size_t jdx = 0; jdx <= idx; ++jdx) {
      const std::size_t b = members[jdx];
      for (std::size_t c : {meet(a, b), join(a, b), implies(a, b), implies(b, a)}) {
        if (!s.contains(c)) {
          s.insert(c);
          members.push_back(c);
        }
      }
    }
  }
  return s;
}

HeytingAlgebra HeytingAlgebra::subalgebra(const ElementSet& subuniverse) const {
  if (!is_subuniverse(subuniverse)) throw InputError("not a subuniverse: " + subuniverse.to_string());
  const auto items = subuniverse.members();
  const std::size_t k = items.size();
  std::vector<std::size_t> pos(size_, k);
  for (std::size_t i = 0; i < k; ++i) pos[items[i]] = i;
  HeytingAlgebra s;
  s.size_ = k;
  s.origin_ = Origin::kAbstract;
  s.bot_ = pos[bot_];
  s.top_ = pos[top_];
  s.above_.assign(k, ElementSet(k));
  s.meet_.resize(k * k);
  s.join_.resize(k * k);
  s.imp_.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t a = items[i], b = items[j];
      if (leq(a, b)) s.above_[i].insert(j);
      s.meet_[i * k + j] = static_cast<std::uint16_t>(pos[meet(a, b)]);
      s.join_[i * k + j] = static_cast<std::uint16_t>(pos[join(a, b)]);
      s.imp_[i * k + j] = static_cast<std::uint16_t>(pos[implies(a, b)]);
    }
  }
  s.index_order();
  return s;
}

Poset HeytingAlgebra::order() const {
  std::vector<Poset::Pair> pairs;
  for (std::size_t a = 0; a < size_; ++a)
    above_[a].for_each([&](std::size_t b) {
      if (a != b) pairs.emplace_back(a, b);
    });
  return Poset::from_relation(size_, pairs);
}

namespace {

void check_oracle(const HeytingAlgebra& a, const Limits& limits) {
  if (a.size() > limits.oracle_algebra_size)
    throw BudgetExceeded("oracle algebra size", limits.oracle_algebra_size, a.size());
}

void add_up_to_iso(std::vector<HeytingAlgebra>& pool, std::vector<Poset>& orders,
                   std::vector<std::uint64_t>& hashes, const HeytingAlgebra& candidate) {
  Poset ord = candidate.order();
  const std::uint64_t h = invariant_hash(ord);
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (hashes[i] == h && isomorphic(orders[i], ord)) return;
  pool.push_back(candidate);
  orders.push_back(std::move(ord));
  hashes.push_back(h);
}

}  // namespace

std::vector<HeytingAlgebra> quotients(const HeytingAlgebra& a, const Limits& limits) {
  check_oracle(a, limits);
  std::vector<HeytingAlgebra> out;
  for (std::size_t g = 0; g < a.size(); ++g) out.push_back(a.quotient(Filter::principal(a, g)));
  return out;
}

std::vector<ElementSet> subuniverses(const HeytingAlgebra& a, const Limits& limits) {
  check_oracle(a, limits);
  std::vector<ElementSet> out;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::deque<ElementSet> queue;
  ElementSet base = a.closure(ElementSet(a.size()));
  seen.insert(base);
  queue.push_back(base);
  while (!queue.empty()) {
    ElementSet s = std::move(queue.front());
    queue.pop_front();
    for (std::size_t x = 0; x < a.size(); ++x) {
      if (s.contains(x)) continue;
      ElementSet t = s;
      t.insert(x);
      t = a.closure(t);
      if (seen.insert(t).second) queue.push_back(t);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<HeytingAlgebra> subalgebras(const HeytingAlgebra& a, const Limits& limits) {
  std::vector<HeytingAlgebra> pool;
  std::vector<Poset> orders;
  std::vector<std::uint64_t> hashes;
  for (const auto& s : subuniverses(a, limits)) add_up_to_iso(pool, orders, hashes, a.subalgebra(s));
  return pool;
}

std::optional<std::vector<std::size_t>> find_algebra_isomorphism(const HeytingAlgebra& a,
                                                                 const HeytingAlgebra& b) {
  // Lattice isomorphisms are exactly order isomorphisms, and they preserve
  // the implication since it is determined by the order.
  if (a.size() != b.size()) return std::nullopt;
  return find_isomorphism(a.order(), b.order());
}

bool isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  return find_algebra_isomorphism(a, b).has_value();
}

std::vector<HeytingAlgebra> sh_closure(const HeytingAlgebra& b, const Limits& limits) {
  std::vector<HeytingAlgebra> qs_pool;
  std::vector<Poset> q_orders;
  std::vector<std::uint64_t> q_hashes;
  for (const auto& q : quotients(b, limits)) add_up_to_iso(qs_pool, q_orders, q_hashes, q);

  std::vector<HeytingAlgebra> pool;
  std::vector<Poset> orders;
  std::vector<std::uint64_t> hashes;
  for (const auto& q : qs_pool)
    for (const auto& s : subalgebras(q, limits)) add_up_to_iso(pool, orders, hashes, s);
  return pool;
}

}  // namespace heyting
