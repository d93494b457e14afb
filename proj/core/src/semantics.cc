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

#include "heyting/semantics.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>
#include <tuple>
#include <unordered_map>

#include "heyting/errors.h"
#include "heyting/upsets.h"

namespace heyting {
namespace {

using Kind = Formula::Kind;

// Hash-consed straight-line program. Every op sits at the level of the
// highest variable it depends on (variable i has level i + 1, constants 0),
// so fixing variable i only recomputes ops at level i + 1.
struct Program {
  struct Op {
    Kind kind;
    std::size_t a = 0, b = 0;
    std::size_t var = 0;
  };
  std::vector<std::string> vars;
  std::vector<Op> ops;
  std::vector<std::vector<std::size_t>> by_level;
  std::vector<std::size_t> roots;
};

class Compiler {
 public:
  explicit Compiler(std::vector<std::string> vars) {
    prog_.vars = std::move(vars);
    for (std::size_t i = 0; i < prog_.vars.size(); ++i) var_index_[prog_.vars[i]] = i;
    prog_.by_level.resize(prog_.vars.size() + 1);
  }

  void add_root(const Formula& f) { prog_.roots.push_back(compile(f)); }
  Program finish() { return std::move(prog_); }

 private:
  std::size_t compile(const Formula& f) {
    if (auto it = by_node_.find(f.id()); it != by_node_.end()) return it->second;
    Program::Op op{f.kind()};
    std::size_t level = 0;
    std::string name;
    switch (f.kind()) {
      case Kind::kVar:
        op.var = var_index_.at(f.name());
        level = op.var + 1;
        name = f.name();
        break;
      case Kind::kBot:
      case Kind::kTop:
        break;
      default:
        op.a = compile(f.lhs());
        op.b = compile(f.rhs());
        level = std::max(level_[op.a], level_[op.b]);
    }
    auto key = std::make_tuple(static_cast<int>(op.kind), name, op.a, op.b);
    auto [it, fresh] = by_shape_.emplace(key, prog_.ops.size());
    if (fresh) {
      prog_.ops.push_back(op);
      level_.push_back(level);
      prog_.by_level[level].push_back(it->second);
    }
    by_node_[f.id()] = it->second;
    return it->second;
  }

  Program prog_;
  std::map<std::string, std::size_t> var_index_;
  std::unordered_map<const void*, std::size_t> by_node_;
  std::map<std::tuple<int, std::string, std::size_t, std::size_t>, std::size_t> by_shape_;
  std::vector<std::size_t> level_;
};

std::vector<std::string> merged_vars(const Formula& a, const Formula& b) {
  std::vector<std::string> va = a.variables(), vb = b.variables(), out;
  std::merge(va.begin(), va.end(), vb.begin(), vb.end(), std::back_inserter(out),
             [](const std::string& x, const std::string& y) { return natural_less(x, y); });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_budget(std::uint64_t domain, std::size_t vars, const Limits& limits) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    if (domain != 0 && total > limits.max_assignments / domain) {
      throw BudgetExceeded("assignments", limits.max_assignments, limits.max_assignments + 1);
    }
    total *= domain;
  }
  if (total > limits.max_assignments) {
    throw BudgetExceeded("assignments", limits.max_assignments, total);
  }
}

// Semantics over explicit algebra tables.
struct TableSem {
  using Value = std::uint16_t;
  const HeytingAlgebra& a;
  std::size_t n;
  Value bot() const { return static_cast<Value>(a.bot()); }
  Value top() const { return static_cast<Value>(a.top()); }
  Value conj(Value x, Value y) const { return a.meet_table()[x * n + y]; }
  Value disj(Value x, Value y) const { return a.join_table()[x * n + y]; }
  Value imp(Value x, Value y) const { return a.implies_table()[x * n + y]; }
};

// Upsets of a poset with at most 64 points, one machine word each.
struct WordSem {
  using Value = std::uint64_t;
  std::vector<std::uint64_t> down;
  std::uint64_t full;
  Value bot() const { return 0; }
  Value top() const { return full; }
  Value conj(Value x, Value y) const { return x & y; }
  Value disj(Value x, Value y) const { return x | y; }
  Value imp(Value x, Value y) const {
    std::uint64_t bad = x & ~y, out = full;
    while (bad) {
      out &= ~down[std::countr_zero(bad)];
      bad &= bad - 1;
    }
    return out;
  }
};

struct SetSem {
  using Value = ElementSet;
  const Poset& x;
  Value bot() const { return x.none(); }
  Value top() const { return x.all(); }
  Value conj(Value u, const Value& v) const { return u &= v; }
  Value disj(Value u, const Value& v) const { return u |= v; }
  Value imp(const Value& u, const Value& v) const { return x.implies(u, v); }
};

template <class Sem>
class Runner {
 public:
  using Value = typename Sem::Value;

  Runner(const Program& p, const Sem& sem, const std::vector<Value>& domain)
      : p_(p), sem_(sem), domain_(domain), slots_(p.ops.size(), sem.bot()),
        current_(p.vars.size(), 0) {}

  // Returns the refuting assignment as domain indices, if any.
  std::optional<std::vector<std::size_t>> run() {
    run_level(0);
    if (p_.vars.empty()) {
      ++count_;
      if (!holds()) return current_;
      return std::nullopt;
    }
    if (domain_.empty()) return std::nullopt;
    if (descend(0)) return current_;
    return std::nullopt;
  }

  std::uint64_t count() const { return count_; }
  const Value& slot(std::size_t i) const { return slots_[i]; }

 private:
  bool holds() const {
    if (p_.roots.size() == 1) return slots_[p_.roots[0]] == sem_.top();
    return slots_[p_.roots[0]] == slots_[p_.roots[1]];
  }

  void run_level(std::size_t level) {
    for (std::size_t i : p_.by_level[level]) {
      const auto& op = p_.ops[i];
      switch (op.kind) {
        case Kind::kVar: slots_[i] = domain_[current_[op.var]]; break;
        case Kind::kBot: slots_[i] = sem_.bot(); break;
        case Kind::kTop: slots_[i] = sem_.top(); break;
        case Kind::kAnd: slots_[i] = sem_.conj(slots_[op.a], slots_[op.b]); break;
        case Kind::kOr: slots_[i] = sem_.disj(slots_[op.a], slots_[op.b]); break;
        case Kind::kImp: slots_[i] = sem_.imp(slots_[op.a], slots_[op.b]); break;
      }
    }
  }

  // True once a refutation is found; current_ then holds it.
  bool descend(std::size_t var) {
    const bool last = var + 1 == p_.vars.size();
    for (std::size_t v = 0; v < domain_.size(); ++v) {
      current_[var] = v;
      run_level(var + 1);
      if (last) {
        ++count_;
        if (!holds()) return true;
      } else if (descend(var + 1)) {
        return true;
      }
    }
    return false;
  }

  const Program& p_;
  const Sem& sem_;
  const std::vector<Value>& domain_;
  std::vector<Value> slots_;
  std::vector<std::size_t> current_;
  std::uint64_t count_ = 0;
};

// Runs the search and converts the refutation back to caller values.
template <class Sem, class Out, class Convert>
Validity<Out> search(const Program& p, const Sem& sem,
                     const std::vector<typename Sem::Value>& domain, Convert convert) {
  Runner<Sem> runner(p, sem, domain);
  auto bad = runner.run();
  Validity<Out> result;
  result.assignments = runner.count();
  if (!bad) return result;
  result.valid = false;
  Refutation<Out> r;
  for (std::size_t i = 0; i < p.vars.size(); ++i) {
    r.assignment.emplace_back(p.vars[i], convert(domain[(*bad)[i]]));
  }
  r.lhs = convert(runner.slot(p.roots[0]));
  r.rhs = p.roots.size() > 1 ? convert(runner.slot(p.roots[1])) : convert(sem.top());
  result.refutation = std::move(r);
  return result;
}

Program compile(const Equation& e, bool bare) {
  Compiler c(bare ? e.lhs.variables() : merged_vars(e.lhs, e.rhs));
  c.add_root(e.lhs);
  if (!bare) c.add_root(e.rhs);
  return c.finish();
}

AlgebraValidity algebra_search(const HeytingAlgebra& a, const Equation& e, bool bare,
                               const Limits& limits) {
  Program p = compile(e, bare);
  check_budget(a.size(), p.vars.size(), limits);
  TableSem sem{a, a.size()};
  std::vector<std::uint16_t> domain(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) domain[i] = static_cast<std::uint16_t>(i);
  return search<TableSem, std::size_t>(p, sem, domain,
                                       [](std::uint16_t v) { return std::size_t{v}; });
}

PosetValidity poset_search(const Poset& x, const Equation& e, bool bare, const Limits& limits) {
  Program p = compile(e, bare);
  std::vector<ElementSet> ups;
  if (!p.vars.empty()) {
    ups = enumerate_upsets(x, limits.max_upsets);
    check_budget(ups.size(), p.vars.size(), limits);
  }
  if (x.size() <= 64) {
    WordSem sem;
    sem.full = x.size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << x.size()) - 1;
    for (std::size_t i = 0; i < x.size(); ++i) sem.down.push_back(x.down(i).word0());
    std::vector<std::uint64_t> domain;
    for (const auto& u : ups) domain.push_back(u.word0());
    const std::size_t n = x.size();
    return search<WordSem, ElementSet>(p, sem, domain, [n](std::uint64_t w) {
      ElementSet s(n);
      for (; w; w &= w - 1) s.insert(std::countr_zero(w));
      return s;
    });
  }
  SetSem sem{x};
  return search<SetSem, ElementSet>(p, sem, ups, [](const ElementSet& s) { return s; });
}

}  // namespace

std::size_t eval(const HeytingAlgebra& a, const Formula& f,
                 const std::map<std::string, std::size_t>& assignment) {
  switch (f.kind()) {
    case Kind::kVar: {
      auto it = assignment.find(f.name());
      if (it == assignment.end()) throw UnboundVariable(f.name());
      if (it->second >= a.size()) throw InputError("assignment out of range for " + f.name());
      return it->second;
    }
    case Kind::kBot: return a.bot();
    case Kind::kTop: return a.top();
    case Kind::kAnd: return a.meet(eval(a, f.lhs(), assignment), eval(a, f.rhs(), assignment));
    case Kind::kOr: return a.join(eval(a, f.lhs(), assignment), eval(a, f.rhs(), assignment));
    case Kind::kImp:
      return a.implies(eval(a, f.lhs(), assignment), eval(a, f.rhs(), assignment));
  }
  return a.top();
}

ElementSet eval(const Poset& x, const Formula& f,
                const std::map<std::string, ElementSet>& assignment) {
  switch (f.kind()) {
    case Kind::kVar: {
      auto it = assignment.find(f.name());
      if (it == assignment.end()) throw UnboundVariable(f.name());
      if (it->second.universe() != x.size() || !x.is_upset(it->second)) {
        throw InputError("value of " + f.name() + " is not an upset");
      }
      return it->second;
    }
    case Kind::kBot: return x.none();
    case Kind::kTop: return x.all();
    case Kind::kAnd: {
      ElementSet l = eval(x, f.lhs(), assignment);
      return l &= eval(x, f.rhs(), assignment);
    }
    case Kind::kOr: {
      ElementSet l = eval(x, f.lhs(), assignment);
      return l |= eval(x, f.rhs(), assignment);
    }
    case Kind::kImp: return x.implies(eval(x, f.lhs(), assignment), eval(x, f.rhs(), assignment));
  }
  return x.all();
}

AlgebraValidity valid_in(const HeytingAlgebra& a, const Formula& f, const Limits& limits) {
  return algebra_search(a, {f, Formula::top()}, true, limits);
}

AlgebraValidity holds_equation(const HeytingAlgebra& a, const Equation& e, const Limits& limits) {
  return algebra_search(a, e, false, limits);
}

PosetValidity valid_on_poset(const Poset& x, const Formula& f, const Limits& limits) {
  return poset_search(x, {f, Formula::top()}, true, limits);
}

PosetValidity holds_equation_on_poset(const Poset& x, const Equation& e, const Limits& limits) {
  return poset_search(x, e, false, limits);
}

}  // namespace heyting
