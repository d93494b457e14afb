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

#ifndef HEYTING_DECIDE_H_
#define HEYTING_DECIDE_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "heyting/algebra.h"
#include "heyting/catalog.h"
#include "heyting/duality.h"
#include "heyting/formula.h"
#include "heyting/limits.h"

namespace heyting {

// Outcome of Up(P_i) against an equation set.
struct EquationEvidence {
  Case target;
  // Index of the first refuted equation, if any.
  std::optional<std::size_t> equation;
  std::vector<std::pair<std::string, std::size_t>> assignment;
};

// Outcome of one Jankov test of algebra `algebra` against `target`.
struct JankovEvidence {
  std::size_t algebra = 0;
  std::string target;
  Poset spectrum;
  JankovVerdict verdict;
};

struct Verdict {
  bool yes = false;
  std::vector<EquationEvidence> equations;
  std::vector<JankovEvidence> jankov;
  // Depth bound for the representable procedure.
  std::optional<std::size_t> depth_bound;

  explicit operator bool() const { return yes; }
  // {"answer": "yes"|"no", "evidence": [...]}
  nlohmann::json to_json() const;
};

// Yes iff every Up(P_i), i = 1..4, refutes some equation of the set.
Verdict decide_equations(const std::vector<Equation>& sigma, const Limits& limits = {});
// Yes iff every algebra validates the Jankov formulas of P1..P4.
Verdict decide_generated(const std::vector<HeytingAlgebra>& k, const Limits& limits = {});
// As decide_generated, reporting the largest spectrum depth (at least 1).
Verdict decide_representable_generated(const std::vector<HeytingAlgebra>& k,
                                       const Limits& limits = {});
// Yes iff every algebra validates the Jankov formulas of P1, P2, P5, F3, P7.
Verdict decide_primitive_generated(const std::vector<HeytingAlgebra>& k,
                                   const Limits& limits = {});

// Re-checks every piece of evidence from scratch against the inputs.
bool verify_verdict(const Verdict& v, const std::vector<Equation>& sigma, const Limits& limits = {});
bool verify_verdict(const Verdict& v, const std::vector<HeytingAlgebra>& k,
                    const Limits& limits = {});

}  // namespace heyting

#endif  // HEYTING_DECIDE_H_
