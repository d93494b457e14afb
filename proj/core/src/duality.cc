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

#include "heyting/duality.h"

#include <algorithm>

#include "heyting/isomorphism.h"
#include "heyting/upsets.h"

namespace heyting {

Poset prime_spectrum(const HeytingAlgebra& a) {
  const auto points = a.join_irreducibles();
  const std::size_t k = points.size();
  std::vector<Poset::Pair> pairs;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && a.leq(points[j], points[i])) pairs.emplace_back(i, j);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    if (const Poset* src = a.source()) {
      // A join-irreducible upset is principal; name it by its generator.
      const ElementSet& u = a.upset(points[i]);
      const ElementSet gen = u - [&] {
        ElementSet strict(src->size());
        u.for_each([&](std::size_t x) {
          ElementSet s = src->up(x);
          s.erase(x);
          strict |= s;
        });
        return strict;
      }();
      labels.push_back(gen.count() == 1 ? src->label(gen.first()) : "j" + std::to_string(points[i]));
    } else {
      labels.push_back("j" + std::to_string(points[i]));
    }
  }
  return Poset::from_relation(k, pairs, std::move(labels));
}

GammaIso gamma_iso(const HeytingAlgebra& a, const Limits& limits) {
  GammaIso g{prime_spectrum(a), a.join_irreducibles(), {}};
  const Poset& x = g.spectrum;
  const std::size_t k = g.points.size();
  g.image.assign(a.size(), ElementSet(k));
  for (std::size_t e = 0; e < a.size(); ++e)
    for (std::size_t i = 0; i < k; ++i)
      if (a.leq(g.points[i], e)) g.image[e].insert(i);

  auto fail = [](const std::string& what) { throw InternalInconsistency("gamma certification: " + what); };
  for (std::size_t e = 0; e < a.size(); ++e)
    if (!x.is_upset(g.image[e])) fail("image of " + std::to_string(e) + " is not an upset");

  auto ups = enumerate_upsets(x, limits.max_upsets);
  auto sorted = g.image;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("not injective");
  if (sorted != ups) fail("not onto Up(spectrum)");

  if (!g.image[a.bot()].empty()) fail("bottom");
  if (!g.image[a.top()].all()) fail("top");
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (g.image[a.meet(p, q)] != (g.image[p] & g.image[q])) fail("meet");
      if (g.image[a.join(p, q)] != (g.image[p] | g.image[q])) fail("join");
      if (g.image[a.implies(p, q)] != x.implies(g.image[p], g.image[q])) fail("implication");
    }
  }
  return g;
}

std::string PMorphismViolation::describe() const {
  switch (kind) {
    case Kind::kWrongArity:
      return "WrongArity: map size differs from source size";
    case Kind::kOutOfRange:
      return "OutOfRange(" + std::to_string(x) + ")";
    case Kind::kNotMonotone:
      return "NotMonotone(" + std::to_string(x) + "," + std::to_string(y) + ")";
    case Kind::kNotBack:
      return "NotBack(" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  return "unknown violation";
}

ElementSet PMorphism::image() const {
  ElementSet s(target_.size());
  for (std::size_t v : map_) s.insert(v);
  return s;
}

std::optional<PMorphismViolation> find_pmorphism_violation(const std::vector<std::size_t>& f,
                                                           const Poset& from, const Poset& to) {
  using Kind = PMorphismViolation::Kind;
  if (f.size() != from.size()) return PMorphismViolation{Kind::kWrongArity, f.size(), from.size()};
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] >= to.size()) return PMorphismViolation{Kind::kOutOfRange, x, f[x]};
  for (std::size_t x = 0; x < from.size(); ++x) {
    ElementSet image(to.size());
    std::optional<PMorphismViolation> bad;
    from.up(x).for_each([&](std::size_t y) {
      if (!bad && !to.leq(f[x], f[y])) bad = PMorphismViolation{Kind::kNotMonotone, x, y};
      image.insert(f[y]);
    });
    if (bad) return bad;
    const ElementSet missing = to.up(f[x]) - image;
    if (!missing.empty()) return PMorphismViolation{Kind::kNotBack, x, missing.first()};
  }
  return std::nullopt;
}

PMorphism check_pmorphism(std::vector<std::size_t> f, const Poset& from, const Poset& to) {
  if (auto v = find_pmorphism_violation(f, from, to)) throw PMorphismError(*v);
  return PMorphism(from, to, std::move(f));
}

namespace {

// Backtracking for a surjective p-morphism from `dom` onto `target`.
// Elements are assigned top-down, so when u is reached every element above
// it already has an image and the p-morphism law at u can be checked in
// full: f(u) must lie below the images of u's upper covers, and the strict
// upset of f(u) must equal the union of their principal upsets.
class SurjectionSearch {
 public:
  SurjectionSearch(const Poset& dom, const Poset& target, std::uint64_t& nodes,
                   std::uint64_t budget)
      : dom_(dom), target_(target), nodes_(nodes), budget_(budget) {
    order_ = dom.bottom_up_order();
    std::reverse(order_.begin(), order_.end());
    dom_width_.resize(dom.size());
    for (std::size_t u = 0; u < dom.size(); ++u) dom_width_[u] = dom.width_of(u);
    tgt_width_.resize(target.size());
    for (std::size_t t = 0; t < target.size(); ++t) tgt_width_[t] = target.width_of(t);
    strict_up_.resize(target.size());
    for (std::size_t t = 0; t < target.size(); ++t) {
      strict_up_[t] = target.up(t);
      strict_up_[t].erase(t);
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    if (dom_.size() < target_.size()) return std::nullopt;
    map_.assign(dom_.size(), target_.size());
    hits_.assign(target_.size(), 0);
    covered_ = 0;
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  bool extend(std::size_t k) {
    if (k == order_.size()) return covered_ == target_.size();
    const std::size_t remaining = order_.size() - k;
    if (remaining < target_.size() - covered_) return false;

    const std::size_t u = order_[k];
    ElementSet above_images(target_.size());
    ElementSet candidates = target_.all();
    for (std::size_t c : dom_.upper_covers(u)) {
      above_images |= target_.up(map_[c]);
      candidates &= target_.down(map_[c]);
    }
    for (std::size_t t = candidates.first(); t < target_.size(); t = candidates.next(t)) {
      if (target_.depth_of(t) > dom_.depth_of(u) || tgt_width_[t] > dom_width_[u]) continue;
      if (!strict_up_[t].is_subset_of(above_images)) continue;
      if (++nodes_ > budget_) throw BudgetExceeded("p-morphism search nodes", budget_, nodes_);
      map_[u] = t;
      if (hits_[t]++ == 0) ++covered_;
      if (extend(k + 1)) return true;
      if (--hits_[t] == 0) --covered_;
    }
    map_[u] = target_.size();
    return false;
  }

  const Poset& dom_;
  const Poset& target_;
  std::uint64_t& nodes_;
  std::uint64_t budget_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> dom_width_, tgt_width_;
  std::vector<ElementSet> strict_up_;
  std::vector<std::size_t> map_;
  std::vector<std::size_t> hits_;
  std::size_t covered_ = 0;
};

std::optional<ImageWitness> try_upset(const ElementSet& u, const Poset& target, const Poset& host,
                                      std::uint64_t& nodes, std::uint64_t budget) {
  std::vector<std::size_t> domain;
  Poset dom = host.subposet(u, &domain);
  auto map = SurjectionSearch(dom, target, nodes, budget).run();
  if (!map) return std::nullopt;
  return ImageWitness{std::move(domain), check_pmorphism(std::move(*map), dom, target)};
}

}  // namespace

ImageSearchResult pmorphic_image_of_upset(const Poset& target, const Poset& host,
                                          const Limits& limits) {
  ImageSearchResult result;
  if (target.empty()) {
    result.witness = ImageWitness{{}, check_pmorphism({}, Poset(), target)};
    return result;
  }
  if (auto root = target.root()) {
    const std::size_t need_depth = target.depth_of(*root);
    const std::size_t need_width = target.width_of(*root);
    for (std::size_t y = 0; y < host.size(); ++y) {
      if (host.up(y).count() < target.size() || host.depth_of(y) < need_depth ||
          host.width_of(y) < need_width)
        continue;
      result.witness = try_upset(host.up(y), target, host, result.nodes, limits.max_search_nodes);
      if (result.witness) return result;
    }
    return result;
  }
  for_each_upset(
      host,
      [&](const ElementSet& u) {
        if (u.count() < target.size()) return true;
        result.witness = try_upset(u, target, host, result.nodes, limits.max_search_nodes);
        return !result.witness;
      },
      limits.max_upsets);
  return result;
}

bool verify_image_witness(const ImageWitness& w, const Poset& target, const Poset& host) {
  ElementSet u(host.size());
  for (std::size_t x : w.domain) {
    if (x >= host.size()) return false;
    u.insert(x);
  }
  if (!host.is_upset(u) || u.count() != w.domain.size()) return false;
  std::vector<std::size_t> origin;
  const Poset dom = host.subposet(u, &origin);
  if (origin != w.domain || !(dom == w.morphism.source()) || !(target == w.morphism.target()))
    return false;
  if (find_pmorphism_violation(w.morphism.map(), dom, target)) return false;
  return w.morphism.surjective();
}

JankovVerdict jankov_valid(const Poset& b_dual, const Poset& a_dual, const Limits& limits) {
  if (!a_dual.is_rooted()) throw NotSI("dual poset is not rooted");
  auto search = pmorphic_image_of_upset(a_dual, b_dual, limits);
  JankovVerdict v;
  v.nodes = search.nodes;
  if (search.witness) {
    if (!verify_image_witness(*search.witness, a_dual, b_dual))
      throw InternalInconsistency("Jankov witness failed re-verification");
    v.valid = false;
    v.witness = std::move(search.witness);
  }
  return v;
}

JankovVerdict jankov_valid(const HeytingAlgebra& b, const Poset& a_dual, const Limits& limits) {
  return jankov_valid(prime_spectrum(b), a_dual, limits);
}

JankovVerdict jankov_valid(const HeytingAlgebra& b, const HeytingAlgebra& a, const Limits& limits) {
  if (!a.is_si()) throw NotSI("algebra has no second-largest element");
  return jankov_valid(prime_spectrum(b), prime_spectrum(a), limits);
}

bool in_SH_pool(const HeytingAlgebra& a, const std::vector<HeytingAlgebra>& sh_of_b) {
  return std::any_of(sh_of_b.begin(), sh_of_b.end(),
                     [&](const HeytingAlgebra& c) { return isomorphic(a, c); });
}

bool in_SH_oracle(const HeytingAlgebra& a, const HeytingAlgebra& b, const Limits& limits) {
  if (a.size() > limits.oracle_algebra_size)
    throw BudgetExceeded("oracle algebra size", limits.oracle_algebra_size, a.size());
  return in_SH_pool(a, sh_closure(b, limits));
}

}  // namespace heyting
