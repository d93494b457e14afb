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

#include <string>
#include <vector>

#include "heyting/catalog.h"
#include "heyting/errors.h"
#include "heyting/isomorphism.h"

namespace heyting {
namespace {

using Pairs = std::vector<Poset::Pair>;

// Incrementally built poset with string labels.
struct Builder {
  std::vector<std::string> labels;
  Pairs pairs;
  std::size_t add(std::string label) {
    labels.push_back(std::move(label));
    return labels.size() - 1;
  }
  void le(std::size_t a, std::size_t b) { pairs.emplace_back(a, b); }
  Poset build() const { return Poset::from_relation(labels.size(), pairs, labels); }
};

std::vector<std::size_t> naturals(Builder& b, std::size_t n, const std::string& suffix = "") {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(b.add(std::to_string(i) + suffix));
  return out;
}

Poset truncate_p1(std::size_t n) {
  Builder b;
  auto nat = naturals(b, n);
  std::size_t top = b.add("top");
  for (std::size_t i : nat) b.le(i, top);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        std::size_t bot = b.add("bot{" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + "}");
        b.le(bot, nat[i]);
        b.le(bot, nat[j]);
        b.le(bot, nat[k]);
      }
    }
  }
  return b.build();
}

Poset truncate_p2(std::size_t n) {
  Builder b;
  auto nat = naturals(b, n);
  auto primed = naturals(b, n, "'");
  std::size_t top = b.add("top");
  std::size_t sigma = b.add("sigma");
  b.le(sigma, top);
  for (std::size_t i : nat) b.le(i, sigma);
  for (std::size_t i : primed) b.le(i, top);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (i == k) continue;
      std::size_t bot = b.add("bot(" + std::to_string(i) + "," + std::to_string(k) + ")");
      b.le(bot, nat[i]);
      b.le(bot, primed[k]);
    }
  }
  return b.build();
}

void add_p3_part(Builder& b, std::size_t n) {
  auto ints = naturals(b, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k < n; ++k) {
      std::size_t bot = b.add("bot{" + std::to_string(i) + "," + std::to_string(k) + "}");
      b.le(bot, ints[i]);
      b.le(bot, ints[k]);
    }
  }
}

Poset truncate_p3(std::size_t n) {
  Builder b;
  add_p3_part(b, n);
  return b.build();
}

Poset truncate_p4(std::size_t n) {
  Builder b;
  add_p3_part(b, n);
  const std::size_t lower = b.labels.size();
  std::size_t sigma = b.add("sigma");
  std::size_t tau = b.add("tau");
  std::size_t top = b.add("top");
  for (std::size_t x = 0; x < lower; ++x) {
    b.le(x, sigma);
    b.le(x, tau);
  }
  b.le(sigma, top);
  b.le(tau, top);
  return b.build();
}

}  // namespace

std::string to_string(Case c) {
  switch (c) {
    case Case::kP1: return "P1";
    case Case::kP2: return "P2";
    case Case::kP3: return "P3";
    case Case::kP4: return "P4";
  }
  return "?";
}

Case case_from_string(std::string_view s) {
  if (s == "P1") return Case::kP1;
  if (s == "P2") return Case::kP2;
  if (s == "P3") return Case::kP3;
  if (s == "P4") return Case::kP4;
  throw UnknownName(std::string(s));
}

Poset case_poset(Case c) { return named(to_string(c)); }

TruncationWitness truncated_counterexample(Case c, std::size_t n) {
  if (n < 4) throw TooSmall(n);
  Poset x;
  switch (c) {
    case Case::kP1: x = truncate_p1(n); break;
    case Case::kP2: x = truncate_p2(n); break;
    case Case::kP3: x = truncate_p3(n); break;
    case Case::kP4: x = truncate_p4(n); break;
  }
  const Poset model = case_poset(c);
  const std::vector<std::size_t> mins = x.minimal().members();
  std::vector<Poset> copies(mins.size(), model);
  Poset domain = disjoint_union(copies);
  std::vector<std::size_t> map;
  map.reserve(domain.size());
  for (std::size_t m : mins) {
    std::vector<std::size_t> origin;
    Poset up = x.subposet(x.up(m), &origin);
    auto iso = find_isomorphism(model, up);
    if (!iso) {
      throw InternalInconsistency("truncation: principal upset of " + x.label(m) +
                                  " is not a copy of " + to_string(c));
    }
    for (std::size_t i = 0; i < model.size(); ++i) map.push_back(origin[(*iso)[i]]);
  }
  PMorphism f = check_pmorphism(std::move(map), domain, x);
  if (!f.surjective()) throw InternalInconsistency("truncation: witness is not onto");
  return TruncationWitness{c, x, mins.size(), std::move(domain), std::move(f)};
}

bool verify_truncation(const TruncationWitness& w) {
  const Poset model = case_poset(w.which);
  if (w.domain.size() != w.copies * model.size()) return false;
  if (!(w.morphism.source() == w.domain) || !(w.morphism.target() == w.poset)) return false;
  if (find_pmorphism_violation(w.morphism.map(), w.domain, w.poset)) return false;
  ElementSet image(w.poset.size());
  for (std::size_t y : w.morphism.map()) image.insert(y);
  if (!image.all()) return false;
  const auto mins = w.poset.minimal().members();
  if (mins.size() != w.copies) return false;
  for (std::size_t m : mins) {
    if (!isomorphic(w.poset.subposet(w.poset.up(m)), model)) return false;
  }
  return true;
}

}  // namespace heyting
