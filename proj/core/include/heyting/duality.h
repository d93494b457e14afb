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

#ifndef HEYTING_DUALITY_H_
#define HEYTING_DUALITY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "heyting/algebra.h"
#include "heyting/errors.h"
#include "heyting/limits.h"
#include "heyting/poset.h"

namespace heyting {

// Prime filters of a finite algebra are the principal filters of its
// join-irreducibles. The spectrum has one point per join-irreducible j (in
// increasing element order) and j is below k exactly when k <= j in the
// algebra, i.e. when the filter of j is contained in the filter of k.
Poset prime_spectrum(const HeytingAlgebra& a);

// gamma(a) = set of prime filters containing a, as upsets of the spectrum.
struct GammaIso {
  Poset spectrum;
  // points[i] is the join-irreducible behind spectrum point i.
  std::vector<std::size_t> points;
  // image[a] = gamma(a).
  std::vector<ElementSet> image;
};

// Builds gamma and certifies it is a bijection onto Up(spectrum) preserving
// meet, join, implication, bottom and top. Throws InternalInconsistency if
// any check fails.
GammaIso gamma_iso(const HeytingAlgebra& a, const Limits& limits = {});

struct PMorphismViolation {
  enum class Kind {
    kWrongArity,   // map size differs from the source size
    kOutOfRange,   // x maps outside the target
    kNotMonotone,  // x <= y but f(x) is not below f(y)
    kNotBack,      // point y >= f(x) has no preimage above x
  };
  Kind kind;
  std::size_t x = 0;
  std::size_t y = 0;
  std::string describe() const;
};

class PMorphismError : public InputError {
 public:
  explicit PMorphismError(PMorphismViolation v) : InputError(v.describe()), violation_(v) {}
  const PMorphismViolation& violation() const { return violation_; }

 private:
  PMorphismViolation violation_;
};

// A map between posets that has been checked to satisfy up(f(x)) = f(up(x)).
class PMorphism {
 public:
  const Poset& source() const { return source_; }
  const Poset& target() const { return target_; }
  const std::vector<std::size_t>& map() const { return map_; }
  std::size_t operator()(std::size_t x) const { return map_[x]; }
  ElementSet image() const;
  bool surjective() const { return image().all(); }

 private:
  friend PMorphism check_pmorphism(std::vector<std::size_t>, const Poset&, const Poset&);
  PMorphism(Poset s, Poset t, std::vector<std::size_t> m)
      : source_(std::move(s)), target_(std::move(t)), map_(std::move(m)) {}
  Poset source_;
  Poset target_;
  std::vector<std::size_t> map_;
};

std::optional<PMorphismViolation> find_pmorphism_violation(const std::vector<std::size_t>& f,
                                                           const Poset& from, const Poset& to);
// Throws PMorphismError naming the first violation.
PMorphism check_pmorphism(std::vector<std::size_t> f, const Poset& from, const Poset& to);

// Evidence that `target` is a p-morphic image of an upset of some poset.
struct ImageWitness {
  // Members of the upset, in increasing index order of the host poset.
  std::vector<std::size_t> domain;
  // From the induced subposet on `domain` onto the target.
  PMorphism morphism;
};

struct ImageSearchResult {
  std::optional<ImageWitness> witness;
  std::uint64_t nodes = 0;
  bool found() const { return witness.has_value(); }
};

// Searches for an upset U of `host` and a surjective p-morphism U -> target.
// For rooted targets only principal upsets are tried: if f maps U onto a
// rooted target, restricting f to the principal upset of any preimage of the
// root is again onto. Other targets walk every upset of the host.
// Throws BudgetExceeded when limits.max_search_nodes is exhausted.
ImageSearchResult pmorphic_image_of_upset(const Poset& target, const Poset& host,
                                          const Limits& limits = {});

// Re-checks a witness against its host and target; false on any defect.
bool verify_image_witness(const ImageWitness& w, const Poset& target, const Poset& host);

struct JankovVerdict {
  // True when the Jankov formula of A holds in B.
  bool valid = true;
  // Present exactly when !valid.
  std::optional<ImageWitness> witness;
  std::uint64_t nodes = 0;
};

// Semantic Jankov test on duals: valid iff the rooted poset `a_dual` is not a
// p-morphic image of an upset of `b_dual`. Throws NotSI if a_dual is not
// rooted.
JankovVerdict jankov_valid(const Poset& b_dual, const Poset& a_dual, const Limits& limits = {});
JankovVerdict jankov_valid(const HeytingAlgebra& b, const Poset& a_dual, const Limits& limits = {});
// Throws NotSI unless `a` is subdirectly irreducible.
JankovVerdict jankov_valid(const HeytingAlgebra& b, const HeytingAlgebra& a,
                           const Limits& limits = {});

// Algebraic oracle: A is isomorphic to a subalgebra of a quotient of B.
bool in_SH_oracle(const HeytingAlgebra& a, const HeytingAlgebra& b, const Limits& limits = {});
// Same test against a precomputed sh_closure(B).
bool in_SH_pool(const HeytingAlgebra& a, const std::vector<HeytingAlgebra>& sh_of_b);

}  // namespace heyting

#endif  // HEYTING_DUALITY_H_
