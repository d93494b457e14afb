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

#include <cctype>
#include <string>
#include <vector>

#include "heyting/errors.h"
#include "heyting/formula.h"

namespace heyting {
namespace {

enum class Tok { kIdent, kZero, kOne, kLParen, kRParen, kNeg, kAnd, kOr, kImp, kIff, kEq, kEnd };

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kZero: return "'0'";
    case Tok::kOne: return "'1'";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kNeg: return "'~'";
    case Tok::kAnd: return "'&'";
    case Tok::kOr: return "'|'";
    case Tok::kImp: return "'->'";
    case Tok::kIff: return "'<->'";
    case Tok::kEq: return "'='";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t pos;
  std::string text;
};

struct Unicode {
  const char* bytes;
  Tok kind;
};

constexpr Unicode kUnicode[] = {
    {"\xC2\xAC", Tok::kNeg},      // ¬
    {"\xE2\x88\xA7", Tok::kAnd},  // ∧
    {"\xE2\x88\xA8", Tok::kOr},   // ∨
    {"\xE2\x86\x92", Tok::kImp},  // →
    {"\xE2\x86\x94", Tok::kIff},  // ↔
    {"\xE2\x8A\xA5", Tok::kZero}, // ⊥
    {"\xE2\x8A\xA4", Tok::kOne},  // ⊤
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < s.size() && ident_char(s[i])) ++i;
      out.push_back({Tok::kIdent, start, std::string(s.substr(start, i - start))});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      std::string_view num = s.substr(start, i - start);
      if (num == "0") {
        out.push_back({Tok::kZero, start, "0"});
      } else if (num == "1") {
        out.push_back({Tok::kOne, start, "1"});
      } else {
        throw ParseError(start, {"identifier", "'0'", "'1'"}, std::string(num));
      }
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::kIff, start, "<->"});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::kImp, start, "->"});
      i += 2;
      continue;
    }
    bool matched = true;
    switch (c) {
      case '(': out.push_back({Tok::kLParen, start, "("}); break;
      case ')': out.push_back({Tok::kRParen, start, ")"}); break;
      case '~': out.push_back({Tok::kNeg, start, "~"}); break;
      case '&': out.push_back({Tok::kAnd, start, "&"}); break;
      case '|': out.push_back({Tok::kOr, start, "|"}); break;
      case '=': out.push_back({Tok::kEq, start, "="}); break;
      default: matched = false;
    }
    if (matched) {
      ++i;
      continue;
    }
    for (const auto& u : kUnicode) {
      std::string_view b(u.bytes);
      if (s.substr(i, b.size()) == b) {
        out.push_back({u.kind, start, std::string(b)});
        i += b.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError(start, {"identifier", "'0'", "'1'", "'('", "')'", "'~'", "'&'", "'|'", "'->'", "'<->'", "'='"},
                                   std::string(1, c));
  }
  out.push_back({Tok::kEnd, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Formula formula() { return iff(); }

  Equation equation() {
    Formula lhs = formula();
    if (peek().kind == Tok::kEq) {
      ++at_;
      Formula rhs = formula();
      return {lhs, rhs};
    }
    return {lhs, Formula::top()};
  }

  void expect_end(std::vector<std::string> alternatives) {
    if (peek().kind != Tok::kEnd) fail(std::move(alternatives));
  }

 private:
  const Token& peek() const { return toks_[at_]; }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    throw ParseError(t.pos, std::move(expected), t.kind == Tok::kEnd ? describe(Tok::kEnd) : t.text);
  }

  Formula iff() {
    Formula acc = imp();
    while (peek().kind == Tok::kIff) {
      ++at_;
      acc = Formula::iff(acc, imp());
    }
    return acc;
  }

  Formula imp() {
    Formula lhs = disj();
    if (peek().kind == Tok::kImp) {
      ++at_;
      return Formula::imp(lhs, imp());
    }
    return lhs;
  }

  Formula disj() {
    Formula acc = conj();
    while (peek().kind == Tok::kOr) {
      ++at_;
      acc = Formula::disj(acc, conj());
    }
    return acc;
  }

  Formula conj() {
    Formula acc = neg();
    while (peek().kind == Tok::kAnd) {
      ++at_;
      acc = Formula::conj(acc, neg());
    }
    return acc;
  }

  Formula neg() {
    if (peek().kind == Tok::kNeg) {
      ++at_;
      return Formula::neg(neg());
    }
    return atom();
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kIdent:
        ++at_;
        return Formula::var(t.text);
      case Tok::kZero:
        ++at_;
        return Formula::bot();
      case Tok::kOne:
        ++at_;
        return Formula::top();
      case Tok::kLParen: {
        ++at_;
        Formula inner = formula();
        if (peek().kind != Tok::kRParen) fail({"')'", "'&'", "'|'", "'->'", "'<->'"});
        ++at_;
        return inner;
      }
      default:
        fail({"identifier", "'0'", "'1'", "'('", "'~'"});
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

// Binding strength used by the printer.
enum Prec { kIffPrec = 0, kImpPrec = 1, kOrPrec = 2, kAndPrec = 3, kNegPrec = 4, kAtomPrec = 5 };

bool is_neg(const Formula& f) {
  return f.kind() == Formula::Kind::kImp && f.rhs().kind() == Formula::Kind::kBot;
}

// Matches (a -> b) & (b -> a), the shape produced by Formula::iff.
bool is_iff(const Formula& f, Formula* a, Formula* b) {
  if (f.kind() != Formula::Kind::kAnd) return false;
  Formula l = f.lhs(), r = f.rhs();
  if (l.kind() != Formula::Kind::kImp || r.kind() != Formula::Kind::kImp) return false;
  if (is_neg(l) || is_neg(r)) return false;
  if (!(l.lhs() == r.rhs()) || !(l.rhs() == r.lhs())) return false;
  *a = l.lhs();
  *b = l.rhs();
  return true;
}

int prec_of(const Formula& f) {
  Formula a = f, b = f;
  switch (f.kind()) {
    case Formula::Kind::kVar:
    case Formula::Kind::kBot:
    case Formula::Kind::kTop:
      return kAtomPrec;
    case Formula::Kind::kAnd:
      return is_iff(f, &a, &b) ? kIffPrec : kAndPrec;
    case Formula::Kind::kOr:
      return kOrPrec;
    case Formula::Kind::kImp:
      return is_neg(f) ? kNegPrec : kImpPrec;
  }
  return kAtomPrec;
}

void emit(const Formula& f, int min_prec, std::string& out);

void emit_child(const Formula& f, int min_prec, std::string& out) {
  if (prec_of(f) < min_prec) {
    out += '(';
    emit(f, 0, out);
    out += ')';
  } else {
    emit(f, min_prec, out);
  }
}

void emit(const Formula& f, int /*min_prec*/, std::string& out) {
  Formula a = f, b = f;
  switch (f.kind()) {
    case Formula::Kind::kVar:
      out += f.name();
      return;
    case Formula::Kind::kBot:
      out += '0';
      return;
    case Formula::Kind::kTop:
      out += '1';
      return;
    case Formula::Kind::kAnd:
      if (is_iff(f, &a, &b)) {
        emit_child(a, kIffPrec, out);
        out += " <-> ";
        emit_child(b, kImpPrec, out);
        return;
      }
      emit_child(f.lhs(), kAndPrec, out);
      out += " & ";
      emit_child(f.rhs(), kNegPrec, out);
      return;
    case Formula::Kind::kOr:
      emit_child(f.lhs(), kOrPrec, out);
      out += " | ";
      emit_child(f.rhs(), kAndPrec, out);
      return;
    case Formula::Kind::kImp:
      if (is_neg(f)) {
        out += '~';
        emit_child(f.lhs(), kNegPrec, out);
        return;
      }
      emit_child(f.lhs(), kOrPrec, out);
      out += " -> ";
      emit_child(f.rhs(), kImpPrec, out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.formula();
  p.expect_end({"'&'", "'|'", "'->'", "'<->'", "end of input"});
  return f;
}

Equation parse_equation(std::string_view text) {
  Parser p(text);
  Equation e = p.equation();
  p.expect_end({"'&'", "'|'", "'->'", "'<->'", "'='", "end of input"});
  return e;
}

std::string print(const Formula& f) {
  std::string out;
  emit(f, 0, out);
  return out;
}

std::string print(const Equation& e) {
  if (e.rhs.kind() == Formula::Kind::kTop) return print(e.lhs);
  return print(e.lhs) + " = " + print(e.rhs);
}

}  // namespace heyting
