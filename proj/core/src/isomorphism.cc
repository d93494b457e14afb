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

#include "heyting/isomorphism.h"

#include <algorithm>
#include <array>
#include <numeric>

namespace heyting {
namespace {

using Profile = std::array<std::size_t, 6>;

std::vector<Profile> profiles(const Poset& p) {
  std::vector<Profile> out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    out[x] = {p.depth_of(x), p.width_of(x), p.upper_covers(x).size(),
              p.lower_covers(x).size(), p.up(x).count(), p.down(x).count()};
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const Poset& a, const Poset& b) : a_(a), b_(b) {}

  std::optional<std::vector<std::size_t>> run() {
    const std::size_t n = a_.size();
    if (n != b_.size()) return std::nullopt;
    pa_ = profiles(a_);
    pb_ = profiles(b_);
    {
      auto sa = pa_, sb = pb_;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    // Rarest profile first, then by index for determinism.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> freq(n, 0);
    for (std::size_t x = 0; x < n; ++x)
      freq[x] = static_cast<std::size_t>(std::count(pa_.begin(), pa_.end(), pa_[x]));
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return freq[x] < freq[y]; });
    map_.assign(n, n);
    used_.assign(n, 0);
    if (!extend(0)) return std::nullopt;
    return map_;
  }

 private:
  bool extend(std::size_t k) {
    if (k == order_.size()) return true;
    const std::size_t x = order_[k];
    for (std::size_t y = 0; y < b_.size(); ++y) {
      if (used_[y] || pb_[y] != pa_[x]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t u = order_[j];
        const std::size_t v = map_[u];
        ok = a_.leq(x, u) == b_.leq(y, v) && a_.leq(u, x) == b_.leq(v, y);
      }
      if (!ok) continue;
      map_[x] = y;
      used_[y] = 1;
      if (extend(k + 1)) return true;
      used_[y] = 0;
      map_[x] = b_.size();
    }
    return false;
  }

  const Poset& a_;
  const Poset& b_;
  std::vector<Profile> pa_, pb_;
  std::vector<std::size_t> order_, map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Poset& from, const Poset& to) {
  return IsoSearch(from, to).run();
}

bool isomorphic(const Poset& a, const Poset& b) { return find_isomorphism(a, b).has_value(); }

std::uint64_t invariant_hash(const Poset& p) {
  auto pr = profiles(p);
  std::sort(pr.begin(), pr.end());
  std::uint64_t h = 1469598103934665603ull ^ p.size();
  for (const auto& prof : pr) {
    for (std::size_t v : prof) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
  }
  return h;
}

}  // namespace heyting
