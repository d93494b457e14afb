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

#include "heyting/decide.h"

#include <algorithm>
#include <map>

#include "heyting/classifiers.h"
#include "heyting/semantics.h"

namespace heyting {
namespace {

using nlohmann::json;

constexpr Case kCases[] = {Case::kP1, Case::kP2, Case::kP3, Case::kP4};

json upset_json(const HeytingAlgebra& a, std::size_t e) {
  json out = json::array();
  const Poset& x = *a.source();
  a.upset(e).for_each([&](std::size_t i) { out.push_back(x.label(i)); });
  return out;
}

Verdict run_jankov(const std::vector<HeytingAlgebra>& k, const std::vector<std::string>& targets,
                   const Limits& limits) {
  Verdict v;
  v.yes = true;
  for (std::size_t i = 0; i < k.size(); ++i) {
    Poset spectrum = prime_spectrum(k[i]);
    for (const auto& name : targets) {
      JankovVerdict jv = jankov_valid(spectrum, named(name), limits);
      if (!jv.valid) v.yes = false;
      v.jankov.push_back({i, name, spectrum, std::move(jv)});
    }
  }
  return v;
}

}  // namespace

json Verdict::to_json() const {
  json evidence = json::array();
  if (!equations.empty()) {
    std::map<Case, HeytingAlgebra> algebras;
    for (const auto& e : equations) {
      json item = {{"target", to_string(e.target)}, {"refuted", e.equation.has_value()}};
      if (e.equation) {
        auto it = algebras.find(e.target);
        if (it == algebras.end()) {
          it = algebras.emplace(e.target, HeytingAlgebra::from_upsets(case_poset(e.target))).first;
        }
        json assignment = json::array();
        for (const auto& [name, value] : e.assignment) {
          assignment.push_back({name, upset_json(it->second, value)});
        }
        item["equation"] = *e.equation;
        item["assignment"] = std::move(assignment);
      }
      evidence.push_back(std::move(item));
    }
  }
  for (const auto& j : jankov) {
    json item = {{"algebra", j.algebra}, {"target", j.target}, {"valid", j.verdict.valid}};
    if (j.verdict.witness) {
      item["witness"] = image_witness_json(*j.verdict.witness, j.spectrum, named(j.target));
    }
    evidence.push_back(std::move(item));
  }
  if (depth_bound) evidence.push_back({{"depth_bound", *depth_bound}});
  return {{"answer", yes ? "yes" : "no"}, {"evidence", std::move(evidence)}};
}

Verdict decide_equations(const std::vector<Equation>& sigma, const Limits& limits) {
  Verdict v;
  v.yes = true;
  for (Case c : kCases) {
    HeytingAlgebra a = HeytingAlgebra::from_upsets(case_poset(c), limits);
    EquationEvidence ev{c, std::nullopt, {}};
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      AlgebraValidity r = holds_equation(a, sigma[i], limits);
      if (!r.valid) {
        ev.equation = i;
        ev.assignment = r.refutation->assignment;
        break;
      }
    }
    if (!ev.equation) v.yes = false;
    v.equations.push_back(std::move(ev));
  }
  return v;
}

Verdict decide_generated(const std::vector<HeytingAlgebra>& k, const Limits& limits) {
  return run_jankov(k, {"P1", "P2", "P3", "P4"}, limits);
}

Verdict decide_representable_generated(const std::vector<HeytingAlgebra>& k,
                                       const Limits& limits) {
  Verdict v = decide_generated(k, limits);
  std::size_t n = 1;
  for (const auto& j : v.jankov) {
    if (!j.spectrum.empty()) n = std::max(n, j.spectrum.depth());
  }
  v.depth_bound = n;
  return v;
}

Verdict decide_primitive_generated(const std::vector<HeytingAlgebra>& k, const Limits& limits) {
  return run_jankov(k, {"P1", "P2", "P5", "F3", "P7"}, limits);
}

bool verify_verdict(const Verdict& v, const std::vector<Equation>& sigma, const Limits& limits) {
  if (v.equations.size() != std::size(kCases)) return false;
  bool all_refuted = true;
  for (std::size_t i = 0; i < v.equations.size(); ++i) {
    const auto& e = v.equations[i];
    if (e.target != kCases[i]) return false;
    HeytingAlgebra a = HeytingAlgebra::from_upsets(case_poset(e.target), limits);
    if (e.equation) {
      if (*e.equation >= sigma.size()) return false;
      std::map<std::string, std::size_t> env(e.assignment.begin(), e.assignment.end());
      const Equation& eq = sigma[*e.equation];
      if (eval(a, eq.lhs, env) == eval(a, eq.rhs, env)) return false;
    } else {
      all_refuted = false;
      for (const auto& eq : sigma) {
        if (!holds_equation(a, eq, limits).valid) return false;
      }
    }
  }
  return v.yes == all_refuted;
}

bool verify_verdict(const Verdict& v, const std::vector<HeytingAlgebra>& k, const Limits& limits) {
  bool all_valid = true;
  std::vector<bool> seen(k.size(), false);
  for (const auto& j : v.jankov) {
    if (j.algebra >= k.size()) return false;
    seen[j.algebra] = true;
    if (!(prime_spectrum(k[j.algebra]) == j.spectrum)) return false;
    Poset target = named(j.target);
    if (j.verdict.valid) {
      if (!jankov_valid(j.spectrum, target, limits).valid) return false;
    } else {
      all_valid = false;
      if (!j.verdict.witness || !verify_image_witness(*j.verdict.witness, target, j.spectrum)) {
        return false;
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
  if (v.depth_bound) {
    std::size_t n = 1;
    for (const auto& a : k) {
      Poset s = prime_spectrum(a);
      if (!s.empty()) n = std::max(n, s.depth());
    }
    if (n != *v.depth_bound) return false;
  }
  return v.yes == all_valid;
}

}  // namespace heyting
