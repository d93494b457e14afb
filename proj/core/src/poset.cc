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

#include "heyting/poset.h"

#include <algorithm>
#include <numeric>

#include "heyting/errors.h"

namespace heyting {

CycleError::CycleError(std::size_t a, std::size_t b)
    : InputError("CycleError: elements " + std::to_string(a) + " and " +
                 std::to_string(b) + " lie on a cycle"),
      first_(a),
      second_(b) {}

BudgetExceeded::BudgetExceeded(std::string what, std::uint64_t limit, std::uint64_t used)
    : Error("BudgetExceeded: " + what + " (limit " + std::to_string(limit) + ", reached " +
            std::to_string(used) + ")"),
      limit_(limit),
      used_(used) {}

namespace {

std::string join_witness(const std::vector<std::size_t>& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out;
}

}  // namespace

AlgebraError::AlgebraError(const std::string& kind, std::vector<std::size_t> witness)
    : InputError(kind + ": witness (" + join_witness(witness) + ")"),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::size_t position, std::vector<std::string> expected,
                       const std::string& found)
    : InputError([&] {
        std::string msg = "ParseError at " + std::to_string(position) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
          if (i) msg += " | ";
          msg += expected[i];
        }
        return msg + ", found " + found;
      }()),
      position_(position),
      expected_(std::move(expected)) {}

Poset Poset::from_relation(std::size_t n, const std::vector<Pair>& pairs,
                           std::vector<std::string> labels) {
  Poset p;
  p.up_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].insert(i);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw InputError("relation pair (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range for n=" + std::to_string(n));
    }
    p.up_[a].insert(b);
  }
  // Warshall closure on rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && p.up_[i].contains(k)) p.up_[i] |= p.up_[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = p.up_[i].next(i); j < n; j = p.up_[i].next(j)) {
      if (p.up_[j].contains(i)) throw CycleError(i, j);
    }
  }
  p.finish(std::move(labels));
  return p;
}

void Poset::finish(std::vector<std::string> labels) {
  const std::size_t n = up_.size();
  down_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) up_[i].for_each([&](std::size_t j) { down_[j].insert(i); });

  upper_covers_.assign(n, {});
  lower_covers_.assign(n, {});
  for (std::size_t x = 0; x < n; ++x) {
    ElementSet strict = up_[x];
    strict.erase(x);
    strict.for_each([&](std::size_t y) {
      ElementSet between = strict & down_[y];
      between.erase(y);
      if (between.empty()) {
        upper_covers_[x].push_back(y);
        lower_covers_[y].push_back(x);
      }
    });
  }

  depth_of_.assign(n, 1);
  auto order = bottom_up_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (std::size_t y : upper_covers_[*it]) depth_of_[*it] = std::max(depth_of_[*it], depth_of_[y] + 1);
  }

  if (labels.size() > n) throw InputError("more labels than elements");
  labels_ = std::move(labels);
  for (std::size_t i = labels_.size(); i < n; ++i) labels_.push_back(std::to_string(i));
}

Poset Poset::chain(std::size_t n) {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_relation(n, pairs);
}

Poset Poset::antichain(std::size_t n) { return from_relation(n, {}); }

std::vector<Poset::Pair> Poset::cover_pairs() const {
  std::vector<Pair> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y : upper_covers_[x]) out.emplace_back(x, y);
  return out;
}

std::optional<std::size_t> Poset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Upset Poset::up_closure(const ElementSet& s) const {
  ElementSet out(size());
  s.for_each([&](std::size_t x) { out |= up_[x]; });
  return Upset(std::move(out));
}

ElementSet Poset::down_closure(const ElementSet& s) const {
  ElementSet out(size());
  s.for_each([&](std::size_t x) { out |= down_[x]; });
  return out;
}

bool Poset::is_upset(const ElementSet& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && up_[x].is_subset_of(s); });
  return ok;
}

bool Poset::is_downset(const ElementSet& s) const {
  bool ok = true;
  s.for_each([&](std::size_t x) { ok = ok && down_[x].is_subset_of(s); });
  return ok;
}

ElementSet Poset::implies(const ElementSet& u, const ElementSet& v) const {
  return down_closure(u - v).complement();
}

ElementSet Poset::minimal() const {
  ElementSet out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (lower_covers_[x].empty()) out.insert(x);
  return out;
}

ElementSet Poset::maximal() const {
  ElementSet out(size());
  for (std::size_t x = 0; x < size(); ++x)
    if (upper_covers_[x].empty()) out.insert(x);
  return out;
}

std::optional<std::size_t> Poset::root() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (up_[x].all()) return x;
  return std::nullopt;
}

std::size_t Poset::max_antichain(const ElementSet& s) const {
  // Dilworth: the largest antichain equals |s| minus a maximum matching in
  // the bipartite graph of strict comparabilities.
  const auto items = s.members();
  const std::size_t k = items.size();
  std::vector<std::size_t> match_right(k, k);
  std::vector<char> seen;
  auto augment = [&](auto&& self, std::size_t u) -> bool {
    for (std::size_t v = 0; v < k; ++v) {
      if (seen[v] || !less(items[u], items[v])) continue;
      seen[v] = 1;
      if (match_right[v] == k || self(self, match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  std::size_t matching = 0;
  for (std::size_t u = 0; u < k; ++u) {
    seen.assign(k, 0);
    if (augment(augment, u)) ++matching;
  }
  return k - matching;
}

std::size_t Poset::width_of(std::size_t x) const { return max_antichain(up_[x]); }

std::size_t Poset::depth() const {
  if (empty()) throw EmptyPoset();
  return *std::max_element(depth_of_.begin(), depth_of_.end());
}

std::size_t Poset::width() const {
  if (empty()) throw EmptyPoset();
  std::size_t w = 0;
  // Only minimal elements matter: up-sets shrink as we move up.
  minimal().for_each([&](std::size_t x) { w = std::max(w, width_of(x)); });
  return w;
}

std::vector<std::size_t> Poset::bottom_up_order() const {
  std::vector<std::size_t> order(size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> below(size());
  for (std::size_t x = 0; x < size(); ++x) below[x] = down_[x].count();
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
  return order;
}

Poset Poset::subposet(const ElementSet& s, std::vector<std::size_t>* origin) const {
  const auto items = s.members();
  std::vector<Pair> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < items.size(); ++i) {
    labels.push_back(labels_[items[i]]);
    for (std::size_t j = 0; j < items.size(); ++j)
      if (i != j && leq(items[i], items[j])) pairs.emplace_back(i, j);
  }
  if (origin) *origin = items;
  return from_relation(items.size(), pairs, std::move(labels));
}

Poset Poset::with_labels(std::vector<std::string> labels) const {
  Poset p = *this;
  if (labels.size() != size()) throw InputError("label count does not match poset size");
  p.labels_ = std::move(labels);
  return p;
}

Upset Upset::of(const Poset& poset, ElementSet set) {
  if (set.universe() != poset.size() || !poset.is_upset(set))
    throw InputError("set " + set.to_string() + " is not an upset");
  return Upset(std::move(set));
}

namespace {

Poset combine(std::span<const Poset> parts, bool stacked) {
  std::size_t n = 0;
  std::vector<std::size_t> offset;
  for (const auto& p : parts) {
    offset.push_back(n);
    n += p.size();
  }
  std::vector<Poset::Pair> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& [a, b] : parts[i].cover_pairs()) pairs.emplace_back(offset[i] + a, offset[i] + b);
    for (const auto& l : parts[i].labels()) labels.push_back(l);
    // Part i sits below every part j < i; linking maxima of i to minima of
    // i-1 generates all cross pairs through transitivity.
    if (stacked && i > 0) {
      parts[i].maximal().for_each([&](std::size_t a) {
        parts[i - 1].minimal().for_each(
            [&](std::size_t b) { pairs.emplace_back(offset[i] + a, offset[i - 1] + b); });
      });
    }
  }
  if (stacked) {
    // Empty parts break the adjacency chain; link across them explicitly.
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i].empty()) continue;
      std::size_t j = i;
      while (j > 0 && parts[j - 1].empty()) --j;
      if (j == 0 || j == i) continue;
      const std::size_t above = j - 1;
      parts[i].maximal().for_each([&](std::size_t a) {
        parts[above].minimal().for_each(
            [&](std::size_t b) { pairs.emplace_back(offset[i] + a, offset[above] + b); });
      });
    }
  }
  return Poset::from_relation(n, pairs, std::move(labels));
}

}  // namespace

Poset linear_sum(std::span<const Poset> parts) { return combine(parts, true); }
Poset linear_sum(std::initializer_list<Poset> parts) {
  return combine(std::span<const Poset>(parts.begin(), parts.size()), true);
}
Poset disjoint_union(std::span<const Poset> parts) { return combine(parts, false); }
Poset disjoint_union(std::initializer_list<Poset> parts) {
  return combine(std::span<const Poset>(parts.begin(), parts.size()), false);
}

}  // namespace heyting
