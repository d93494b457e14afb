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

#include "heyting/families.h"

#include <string>
#include <vector>

#include "heyting/errors.h"

namespace heyting {
namespace {

Formula p(std::size_t i) { return Formula::var("p" + std::to_string(i)); }

}  // namespace

Formula depth_formula(std::size_t n) {
  if (n == 0) throw BadSpec("depth formula needs n >= 1");
  Formula d = Formula::disj(p(1), Formula::neg(p(1)));
  for (std::size_t m = 2; m <= n; ++m) d = Formula::disj(p(m), Formula::imp(p(m), d));
  return d;
}

Formula width_formula(std::size_t n) {
  if (n == 0) throw BadSpec("width formula needs n >= 1");
  std::vector<Formula> outer;
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<Formula> others;
    for (std::size_t j = 0; j <= n; ++j) {
      if (j != i) others.push_back(p(j));
    }
    outer.push_back(Formula::imp(p(i), Formula::big_or(others)));
  }
  return Formula::big_or(outer);
}

Formula weak_peirce() {
  Formula pv = Formula::var("p"), qv = Formula::var("q");
  return Formula::disj(Formula::imp(pv, qv),
                       Formula::imp(Formula::imp(Formula::imp(qv, pv), qv), qv));
}

Formula godel_dummett() {
  Formula pv = Formula::var("p"), qv = Formula::var("q");
  return Formula::disj(Formula::imp(pv, qv), Formula::imp(qv, pv));
}

Formula excluded_middle() {
  Formula pv = Formula::var("p");
  return Formula::disj(pv, Formula::neg(pv));
}

Formula jankov_syntactic(const HeytingAlgebra& a, const Limits& limits) {
  if (a.size() > limits.syntactic_jankov_size) {
    throw BudgetExceeded("syntactic Jankov algebra size", limits.syntactic_jankov_size, a.size());
  }
  auto s = a.second_largest();
  if (!a.is_si() || !s) throw NotSI("Jankov formula needs a subdirectly irreducible algebra");
  auto x = [](std::size_t i) { return Formula::var("x" + std::to_string(i)); };
  std::vector<Formula> diagram;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      diagram.push_back(Formula::iff(x(a.meet(i, j)), Formula::conj(x(i), x(j))));
      diagram.push_back(Formula::iff(x(a.join(i, j)), Formula::disj(x(i), x(j))));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      diagram.push_back(Formula::iff(x(a.implies(i, j)), Formula::imp(x(i), x(j))));
    }
  }
  diagram.push_back(Formula::iff(x(a.bot()), Formula::bot()));
  return Formula::imp(Formula::big_and(diagram), x(*s));
}

}  // namespace heyting
