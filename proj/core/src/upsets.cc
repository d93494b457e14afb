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

#include "heyting/upsets.h"

#include <algorithm>

#include "heyting/errors.h"

namespace heyting {
namespace {

// Decides membership top-down: an element may join only once all of its
// upper covers are in, so every branch ends in a distinct upset.
class UpsetWalker {
 public:
  UpsetWalker(const Poset& p, const std::function<bool(const ElementSet&)>& visit,
              std::uint64_t cap)
      : p_(p), visit_(visit), cap_(cap), current_(p.size()) {
    order_ = p.bottom_up_order();
    std::reverse(order_.begin(), order_.end());
  }

  void run() { walk(0); }

 private:
  bool walk(std::size_t k) {
    if (k == order_.size()) {
      if (++produced_ > cap_) throw BudgetExceeded("upset enumeration", cap_, produced_);
      return visit_(current_);
    }
    const std::size_t x = order_[k];
    if (!walk(k + 1)) return false;
    const auto& covers = p_.upper_covers(x);
    if (std::all_of(covers.begin(), covers.end(),
                    [&](std::size_t y) { return current_.contains(y); })) {
      current_.insert(x);
      const bool go_on = walk(k + 1);
      current_.erase(x);
      return go_on;
    }
    return true;
  }

  const Poset& p_;
  const std::function<bool(const ElementSet&)>& visit_;
  std::uint64_t cap_;
  std::uint64_t produced_ = 0;
  ElementSet current_;
  std::vector<std::size_t> order_;
};

}  // namespace

void for_each_upset(const Poset& poset, const std::function<bool(const ElementSet&)>& visit,
                    std::uint64_t cap) {
  UpsetWalker(poset, visit, cap).run();
}

std::vector<ElementSet> enumerate_upsets(const Poset& poset, std::uint64_t cap) {
  std::vector<ElementSet> out;
  for_each_upset(
      poset,
      [&](const ElementSet& s) {
        out.push_back(s);
        return true;
      },
      cap);
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t count_upsets(const Poset& poset, std::uint64_t cap) {
  std::uint64_t n = 0;
  for_each_upset(
      poset,
      [&](const ElementSet&) {
        ++n;
        return true;
      },
      cap);
  return n;
}

}  // namespace heyting
