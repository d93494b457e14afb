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

#ifndef HEYTING_FORMULA_H_
#define HEYTING_FORMULA_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace heyting {

// Immutable intuitionistic propositional formula. Negation and the
// biconditional are sugar: ~a is a -> 0 and a <-> b is (a -> b) & (b -> a).
class Formula {
 public:
  enum class Kind { kVar, kBot, kTop, kAnd, kOr, kImp };

  static Formula var(std::string name);
  static Formula bot();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula neg(Formula a) { return imp(std::move(a), bot()); }
  static Formula iff(Formula a, Formula b);
  // Left-nested folds; the empty join is 0 and the empty meet is 1.
  static Formula big_or(const std::vector<Formula>& parts);
  static Formula big_and(const std::vector<Formula>& parts);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }

  // Distinct variable names, sorted so that p2 < p10.
  std::vector<std::string> variables() const;
  std::size_t node_count() const;

  friend bool operator==(const Formula& a, const Formula& b);

  // Identity of the shared node, for hash-consing.
  const void* id() const { return node_.get(); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Kind k, std::string name, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

// An equation lhs = rhs; a bare formula f stands for f = 1.
struct Equation {
  Formula lhs;
  Formula rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

// Natural ordering on identifiers: alphabetic prefix, then trailing number.
bool natural_less(std::string_view a, std::string_view b);

// Grammar, loosest binding first:
//   formula := iff
//   iff     := imp ("<->" imp)*        left associative
//   imp     := or ("->" imp)?          right associative
//   or      := and ("|" and)*
//   and     := neg ("&" neg)*
//   neg     := "~" neg | atom
//   atom    := ident | "0" | "1" | "(" formula ")"
// Unicode connectives (¬ ∧ ∨ → ↔ ⊥ ⊤) are accepted on input.
// Throws ParseError with the byte offset and the expected tokens.
Formula parse_formula(std::string_view text);
// "f = g" or a bare "f" (meaning f = 1).
Equation parse_equation(std::string_view text);

// Canonical ASCII form with minimal parentheses. parse_formula(print(f)) == f.
std::string print(const Formula& f);
std::string print(const Equation& e);

}  // namespace heyting

#endif  // HEYTING_FORMULA_H_
