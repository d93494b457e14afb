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

#include "heyting/formula.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <unordered_set>

namespace heyting {

Formula Formula::make(Kind k, std::string name, const Formula* a, const Formula* b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->name = std::move(name);
  if (a) n->lhs = a->node_;
  if (b) n->rhs = b->node_;
  return Formula(std::move(n));
}

Formula Formula::var(std::string name) { return make(Kind::kVar, std::move(name), nullptr, nullptr); }

Formula Formula::bot() {
  static const Formula f = make(Kind::kBot, "", nullptr, nullptr);
  return f;
}

Formula Formula::top() {
  static const Formula f = make(Kind::kTop, "", nullptr, nullptr);
  return f;
}

Formula Formula::conj(Formula a, Formula b) { return make(Kind::kAnd, "", &a, &b); }
Formula Formula::disj(Formula a, Formula b) { return make(Kind::kOr, "", &a, &b); }
Formula Formula::imp(Formula a, Formula b) { return make(Kind::kImp, "", &a, &b); }
Formula Formula::iff(Formula a, Formula b) { return conj(imp(a, b), imp(b, a)); }

Formula Formula::big_or(const std::vector<Formula>& parts) {
  if (parts.empty()) return bot();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

Formula Formula::big_and(const std::vector<Formula>& parts) {
  if (parts.empty()) return top();
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

std::vector<std::string> Formula::variables() const {
  std::set<std::string> names;
  std::unordered_set<const Node*> seen;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (n->kind == Kind::kVar) names.insert(n->name);
    if (n->lhs) stack.push_back(n->lhs.get());
    if (n->rhs) stack.push_back(n->rhs.get());
  }
  std::vector<std::string> out(names.begin(), names.end());
  std::sort(out.begin(), out.end(), [](const std::string& a, const std::string& b) {
    return natural_less(a, b);
  });
  return out;
}

std::size_t Formula::node_count() const {
  std::size_t count = 0;
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    ++count;
    if (n->lhs) stack.push_back(n->lhs.get());
    if (n->rhs) stack.push_back(n->rhs.get());
  }
  return count;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.name() != b.name()) return false;
  if (static_cast<bool>(a.node_->lhs) != static_cast<bool>(b.node_->lhs)) return false;
  if (a.node_->lhs && !(a.lhs() == b.lhs())) return false;
  if (a.node_->rhs && !(a.rhs() == b.rhs())) return false;
  return true;
}

bool natural_less(std::string_view a, std::string_view b) {
  auto split = [](std::string_view s) {
    std::size_t i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    return std::pair{s.substr(0, i), s.substr(i)};
  };
  auto [pa, na] = split(a);
  auto [pb, nb] = split(b);
  if (pa != pb) return pa < pb;
  // Compare digit runs numerically, ignoring leading zeros first.
  auto strip = [](std::string_view d) {
    std::size_t i = 0;
    while (i + 1 < d.size() && d[i] == '0') ++i;
    return d.substr(i);
  };
  auto sa = strip(na), sb = strip(nb);
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  if (sa != sb) return sa < sb;
  return na < nb;
}

}  // namespace heyting
