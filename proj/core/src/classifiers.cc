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

#include "heyting/classifiers.h"

#include <string>
#include <utility>

#include "heyting/catalog.h"
#include "heyting/duality.h"
#include "heyting/errors.h"

namespace heyting {
namespace {

using nlohmann::json;

json labels_of(const Poset& x, const std::vector<std::size_t>& items) {
  json out = json::array();
  for (std::size_t i : items) out.push_back(x.label(i));
  return out;
}

// Collapses the routes into one report, failing loudly on disagreement.
ClassifierReport agree(std::string property, std::vector<RouteResult> routes) {
  ClassifierReport r{std::move(property), routes.front().verdict, std::move(routes)};
  for (const auto& route : r.routes) {
    if (route.verdict != r.verdict) {
      std::string msg = r.property + ": routes disagree (";
      for (std::size_t i = 0; i < r.routes.size(); ++i) {
        if (i) msg += ", ";
        msg += r.routes[i].route + "=" + (r.routes[i].verdict ? "yes" : "no");
      }
      throw InternalInconsistency(msg + ")");
    }
  }
  return r;
}

// Jankov route over the named targets, keeping every refutation.
RouteResult jankov_route(const Poset& spectrum, const std::vector<std::string>& targets,
                         const Limits& limits) {
  RouteResult r{kRouteJankov, true, nullptr};
  json refuted = json::array();
  for (const auto& name : targets) {
    Poset t = named(name);
    JankovVerdict v = jankov_valid(spectrum, t, limits);
    if (!v.valid) {
      r.verdict = false;
      json w = image_witness_json(*v.witness, spectrum, t);
      w["target"] = name;
      refuted.push_back(std::move(w));
    }
  }
  if (!r.verdict) r.witness = {{"refuted", std::move(refuted)}};
  return r;
}

RouteResult three_point_principal_route(const Poset& x) {
  RouteResult r{kRoutePrincipalUpsets, true, nullptr};
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (auto t = three_point_violation(x, x.up(b))) {
      r.verdict = false;
      r.witness = {{"base", x.label(b)},
                   {"x", x.label((*t)[0])},
                   {"y", x.label((*t)[1])},
                   {"z", x.label((*t)[2])}};
      break;
    }
  }
  return r;
}

// A 3-antichain inside s, first in lexicographic order.
std::optional<std::array<std::size_t, 3>> antichain3(const Poset& x, const ElementSet& s) {
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (x.comparable(m[i], m[j])) continue;
      for (std::size_t k = j + 1; k < m.size(); ++k) {
        if (!x.comparable(m[i], m[k]) && !x.comparable(m[j], m[k])) {
          return std::array<std::size_t, 3>{m[i], m[j], m[k]};
        }
      }
    }
  }
  return std::nullopt;
}

const char* condition_name(int c) {
  static const char* names[] = {"", "D1", "D2", "D3", "D4"};
  return names[c];
}

}  // namespace

json image_witness_json(const ImageWitness& w, const Poset& host, const Poset& target) {
  json map = json::array();
  for (std::size_t i = 0; i < w.domain.size(); ++i) map.push_back(w.morphism(i));
  json names = json::array();
  for (std::size_t i = 0; i < w.domain.size(); ++i) {
    names.push_back({host.label(w.domain[i]), target.label(w.morphism(i))});
  }
  return {{"upset", w.domain}, {"map", std::move(map)}, {"labels", std::move(names)}};
}

const RouteResult& ClassifierReport::route(const std::string& name) const {
  for (const auto& r : routes) {
    if (r.route == name) return r;
  }
  throw InputError("report has no route " + name);
}

json ClassifierReport::to_json() const {
  json rs = json::array();
  for (const auto& r : routes) {
    rs.push_back({{"route", r.route}, {"verdict", r.verdict}, {"witness", r.witness}});
  }
  return {{"property", property}, {"verdict", verdict}, {"routes", std::move(rs)}};
}

std::optional<Triple> three_point_violation(const Poset& x, const ElementSet& within) {
  const auto m = within.members();
  for (std::size_t a : m) {
    for (std::size_t b : m) {
      if (a == b || x.comparable(a, b)) continue;
      for (std::size_t c : m) {
        if (c == a || c == b) continue;
        if (x.leq(a, c) && !x.leq(b, c)) return Triple{a, b, c};
      }
    }
  }
  return std::nullopt;
}

std::optional<Triple> three_point_violation(const Poset& x) {
  return three_point_violation(x, x.all());
}

ClassifierReport three_point_rule(const Poset& x) {
  RouteResult r{kRouteSpectrum, true, nullptr};
  if (auto t = three_point_violation(x)) {
    r.verdict = false;
    r.witness = {{"x", x.label((*t)[0])}, {"y", x.label((*t)[1])}, {"z", x.label((*t)[2])}};
  }
  return agree("three-point-rule", {std::move(r)});
}

ClassifierReport three_point_rule_principal(const Poset& x) {
  return agree("three-point-rule-principal", {three_point_principal_route(x)});
}

ClassifierReport is_cascade(const Poset& x, const Limits& limits) {
  return agree("cascade",
               {three_point_principal_route(x), jankov_route(x, {"P2", "P5", "P6"}, limits)});
}

ClassifierReport is_cascade(const HeytingAlgebra& a, const Limits& limits) {
  return is_cascade(prime_spectrum(a), limits);
}

ClassifierReport is_cascade_width(const HeytingAlgebra& a, std::size_t n, const Limits& limits) {
  Poset x = prime_spectrum(a);
  if (!is_cascade(x, limits)) throw NotCascade();
  RouteResult width{kRouteSpectrum, true, nullptr};
  for (std::size_t b = 0; b < x.size(); ++b) {
    std::size_t w = x.width_of(b);
    if (w > n) {
      width.verdict = false;
      width.witness = {{"base", x.label(b)}, {"width", w}};
      break;
    }
  }
  std::string f = "F" + std::to_string(n + 1), d = "D" + std::to_string(n + 1);
  return agree("width-cascade", {std::move(width), jankov_route(x, {f, d}, limits)});
}

std::optional<DiamondFailure> diamond_system_failure(const Poset& x) {
  const std::size_t n = x.size();
  for (std::size_t b = 0; b < n; ++b) {
    if (auto t = three_point_violation(x, x.up(b))) {
      return DiamondFailure{1, {b, (*t)[0], (*t)[1], (*t)[2]}};
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    if (x.width_of(b) <= 2) continue;
    auto t = antichain3(x, x.up(b));
    if (!t) throw InternalInconsistency("width above two without a 3-antichain");
    return DiamondFailure{2, {b, (*t)[0], (*t)[1], (*t)[2]}};
  }
  for (std::size_t b = 0; b < n; ++b) {
    const auto m = x.up(b).members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!x.up(m[i]).intersects(x.up(m[j]))) return DiamondFailure{3, {b, m[i], m[j]}};
      }
    }
  }
  for (std::size_t bot = 0; bot < n; ++bot) {
    const auto above = x.up(bot).members();
    for (std::size_t a : above) {
      for (std::size_t c : above) {
        ElementSet both = x.up(a);
        both &= x.up(c);
        const auto uppers = both.members();
        for (std::size_t z : uppers) {
          for (std::size_t v : uppers) {
            ElementSet tops = x.up(z);
            tops &= x.up(v);
            if (tops.empty()) continue;
            ElementSet mid = both;
            mid &= x.down(z);
            mid &= x.down(v);
            if (mid.empty()) return DiamondFailure{4, {bot, a, c, z, v, tops.first()}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

ClassifierReport is_diamond_system(const Poset& x) {
  RouteResult r{kRouteSpectrum, true, nullptr};
  if (auto f = diamond_system_failure(x)) {
    r.verdict = false;
    r.witness = {{"condition", condition_name(f->condition)}, {"tuple", labels_of(x, f->witness)}};
  }
  return agree("diamond-system", {std::move(r)});
}

bool is_downward_directed(const Poset& x) {
  if (x.empty()) return false;
  for (std::size_t a = 0; a < x.size(); ++a) {
    for (std::size_t b = a + 1; b < x.size(); ++b) {
      if (!x.down(a).intersects(x.down(b))) return false;
    }
  }
  return true;
}

bool is_diamond_sequence(const Poset& x) {
  return is_downward_directed(x) && !diamond_system_failure(x);
}

ClassifierReport is_diamond_algebra(const HeytingAlgebra& a, const Limits& limits) {
  Poset x = prime_spectrum(a);
  RouteResult system{kRouteSpectrum, true, nullptr};
  if (auto f = diamond_system_failure(x)) {
    system.verdict = false;
    system.witness = {{"condition", condition_name(f->condition)},
                      {"tuple", labels_of(x, f->witness)}};
  }
  RouteResult principal{kRoutePrincipalUpsets, true, nullptr};
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (!is_diamond_sequence(x.subposet(x.up(b)))) {
      principal.verdict = false;
      principal.witness = {{"base", x.label(b)}};
      break;
    }
  }
  return agree("diamond-algebra", {std::move(system), std::move(principal),
                                   jankov_route(x, {"P1", "P2", "P3", "P4"}, limits)});
}

bool is_root_system(const Poset& x) {
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x.width_of(b) > 1) return false;
  }
  return true;
}

ClassifierReport root_system(const Poset& x) {
  RouteResult r{kRouteSpectrum, true, nullptr};
  for (std::size_t b = 0; b < x.size() && r.verdict; ++b) {
    const auto m = x.up(b).members();
    for (std::size_t i = 0; i < m.size() && r.verdict; ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!x.comparable(m[i], m[j])) {
          r.verdict = false;
          r.witness = {{"base", x.label(b)}, {"antichain", labels_of(x, {m[i], m[j]})}};
          break;
        }
      }
    }
  }
  return agree("root-system", {std::move(r)});
}

json Decomposition::to_json(const Poset& x) const {
  json out = json::array();
  for (const auto& b : blocks) {
    out.push_back({{"kind", b.kind == Block::Kind::kSingleton ? "singleton" : "pair"},
                   {"elements", labels_of(x, b.elements)}});
  }
  return {{"blocks", std::move(out)}};
}

Decomposition decompose_shapes(const Poset& x) {
  if (!x.is_rooted()) throw NotDecomposable(0, "poset is not rooted");
  const std::size_t depth = x.depth();
  std::vector<std::vector<std::size_t>> levels(depth + 1);
  for (std::size_t i = 0; i < x.size(); ++i) levels[x.depth_of(i)].push_back(i);
  for (std::size_t k = 1; k <= depth; ++k) {
    if (levels[k].size() > 2) throw NotDecomposable(k, "level has more than two points");
    if (k == 1 && levels[k].size() != 1) throw NotDecomposable(k, "no top element");
    if (k > 1 && levels[k].size() == 2 && levels[k - 1].size() == 2) {
      throw NotDecomposable(k, "two adjacent 2-antichains");
    }
    if (k < depth) {
      for (std::size_t lo : levels[k + 1]) {
        for (std::size_t hi : levels[k]) {
          if (!x.leq(lo, hi)) throw NotDecomposable(k + 1, "level is not below the one above");
        }
      }
    }
  }
  Decomposition d;
  for (std::size_t k = 1; k <= depth;) {
    if (levels[k].size() == 1) {
      d.blocks.push_back({Block::Kind::kSingleton, levels[k]});
      ++k;
    } else {
      std::vector<std::size_t> e = levels[k];
      e.push_back(levels[k + 1].front());
      d.blocks.push_back({Block::Kind::kPair, std::move(e)});
      k += 2;
    }
  }
  return d;
}

}  // namespace heyting
