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

#include "heyting/catalog.h"

#include <cctype>
#include <cmath>
#include <map>
#include <random>

#include "heyting/errors.h"
#include "heyting/isomorphism.h"
#include "heyting/upsets.h"

namespace heyting {
namespace {

using Pairs = std::vector<Poset::Pair>;

Poset p1() {
  return Poset::from_relation(5, Pairs{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                              {"0", "v1", "v2", "v3", "1"});
}

Poset p2() {
  return Poset::from_relation(5, Pairs{{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}},
                              {"0", "v1", "v2", "v3", "1"});
}

Poset p3() { return Poset::from_relation(3, Pairs{{0, 1}, {0, 2}}, {"v2", "v1", "v3"}); }

Poset p4() {
  return Poset::from_relation(
      6, Pairs{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
      {"0", "v1", "v2", "v3", "v4", "1"});
}

Poset p5() {
  return Poset::from_relation(4, Pairs{{0, 1}, {1, 3}, {0, 2}}, {"0", "v1", "v2", "1"});
}

Poset p6() {
  return Poset::from_relation(5, Pairs{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 4}},
                              {"0", "v1", "v2", "1a", "1b"});
}

Poset p7() {
  return Poset::from_relation(6, Pairs{{0, 1}, {0, 3}, {1, 2}, {3, 2}, {1, 4}, {3, 5}},
                              {"0", "v1", "v2", "v3", "d1", "d3"});
}

// Splits "F3" or "F(3)" into ("F", 3).
bool split_param(std::string_view name, std::string_view* head, std::size_t* value) {
  std::size_t i = 0;
  while (i < name.size() && std::isalpha(static_cast<unsigned char>(name[i]))) ++i;
  if (i == 0 || i == name.size()) return false;
  *head = name.substr(0, i);
  std::string_view rest = name.substr(i);
  if (rest.front() == '(') {
    if (rest.back() != ')') return false;
    rest = rest.substr(1, rest.size() - 2);
  }
  if (rest.empty() || rest.size() > 6) return false;
  std::size_t v = 0;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    v = v * 10 + static_cast<std::size_t>(c - '0');
  }
  *value = v;
  return true;
}

}  // namespace

Poset fan(std::size_t m) {
  std::vector<std::string> labels{"b"};
  Pairs pairs;
  for (std::size_t i = 1; i <= m; ++i) {
    labels.push_back(std::to_string(i));
    pairs.emplace_back(0, i);
  }
  return Poset::from_relation(m + 1, pairs, labels);
}

Poset diamond(std::size_t m) {
  std::vector<std::string> labels{"b"};
  Pairs pairs;
  for (std::size_t i = 1; i <= m; ++i) {
    labels.push_back(std::to_string(i));
    pairs.emplace_back(0, i);
    pairs.emplace_back(i, m + 1);
  }
  labels.push_back("t");
  return Poset::from_relation(m + 2, pairs, labels);
}

Poset named(std::string_view name) {
  if (name == "P1") return p1();
  if (name == "P2") return p2();
  if (name == "P3") return p3();
  if (name == "P4") return p4();
  if (name == "P5") return p5();
  if (name == "P6") return p6();
  if (name == "P7") return p7();
  std::string_view head;
  std::size_t v = 0;
  if (split_param(name, &head, &v)) {
    if (head == "F" && v >= 1) return fan(v);
    if (head == "D" && v >= 1) return diamond(v);
    if (head == "chain") return Poset::chain(v);
    if (head == "antichain") return Poset::antichain(v);
  }
  throw UnknownName(std::string(name));
}

std::vector<std::string> fixed_names() { return {"P1", "P2", "P3", "P4", "P5", "P6", "P7"}; }

Poset diamond_sequence(const DiamondSpec& spec) {
  if (spec.levels.empty()) throw BadSpec("diamond sequence needs at least one level");
  if (spec.levels.front() != 1) throw BadSpec("top level must be a singleton");
  std::vector<Poset> parts;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    std::size_t l = spec.levels[i];
    if (l != 1 && l != 2) throw BadSpec("levels must be 1 or 2");
    if (l == 2 && i > 0 && spec.levels[i - 1] == 2) throw BadSpec("adjacent 2-antichains");
    parts.push_back(Poset::antichain(l));
  }
  Poset sum = linear_sum(parts);
  // Label top to bottom: s<level> for singletons, a<level>/b<level> for pairs.
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < spec.levels.size(); ++i) {
    if (spec.levels[i] == 1) {
      labels.push_back("s" + std::to_string(i));
    } else {
      labels.push_back("a" + std::to_string(i));
      labels.push_back("b" + std::to_string(i));
    }
  }
  return sum.with_labels(std::move(labels));
}

std::vector<Poset> posets_up_to_iso(std::size_t n) {
  std::vector<Poset> layer{Poset()};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Poset> next;
    std::map<std::uint64_t, std::vector<std::size_t>> by_hash;
    for (const Poset& q : layer) {
      Pairs base = q.cover_pairs();
      for (const ElementSet& up : enumerate_upsets(q, std::uint64_t{1} << 24)) {
        // The new element sits exactly above the downset complementary to `up`.
        Pairs pairs = base;
        for (std::size_t d = 0; d < k; ++d) {
          if (!up.contains(d)) pairs.emplace_back(d, k);
        }
        Poset cand = Poset::from_relation(k + 1, pairs);
        auto& bucket = by_hash[invariant_hash(cand)];
        bool seen = false;
        for (std::size_t idx : bucket) {
          if (isomorphic(next[idx], cand)) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          bucket.push_back(next.size());
          next.push_back(std::move(cand));
        }
      }
    }
    layer = std::move(next);
  }
  return layer;
}

Poset random_poset(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uint64_t threshold;
  if (p <= 0.0) {
    threshold = 0;
  } else if (p >= 1.0) {
    threshold = ~std::uint64_t{0};
  } else {
    threshold = static_cast<std::uint64_t>(std::ldexp(p, 64));
  }
  Pairs pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() < threshold || threshold == ~std::uint64_t{0}) pairs.emplace_back(i, j);
    }
  }
  return Poset::from_relation(n, pairs);
}

}  // namespace heyting
