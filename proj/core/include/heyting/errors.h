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

#ifndef HEYTING_ERRORS_H_
#define HEYTING_ERRORS_H_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace heyting {

// Base class of every error the library throws. Callers that only need a
// message can catch this; the CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (bad JSON, out-of-range indices, bad names).
class InputError : public Error {
 public:
  using Error::Error;
};

// The reflexive-transitive closure of a relation is not antisymmetric.
class CycleError : public InputError {
 public:
  CycleError(std::size_t a, std::size_t b);
  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class EmptyPoset : public InputError {
 public:
  EmptyPoset() : InputError("operation requires a nonempty poset") {}
};

// A configured search or materialization cap was hit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string what, std::uint64_t limit, std::uint64_t used);
  std::uint64_t limit() const { return limit_; }
  std::uint64_t used() const { return used_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_;
};

// Validation failures for abstract algebra tables. Each names the elements
// that witness the violation.
class AlgebraError : public InputError {
 public:
  AlgebraError(const std::string& kind, std::vector<std::size_t> witness);
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class NotLattice : public AlgebraError {
 public:
  NotLattice(std::size_t a, std::size_t b) : AlgebraError("NotLattice", {a, b}) {}
  explicit NotLattice(std::vector<std::size_t> w)
      : AlgebraError("NotLattice", std::move(w)) {}
};

class NotDistributive : public AlgebraError {
 public:
  NotDistributive(std::size_t a, std::size_t b, std::size_t c)
      : AlgebraError("NotDistributive", {a, b, c}) {}
};

class AdjunctionFails : public AlgebraError {
 public:
  AdjunctionFails(std::size_t a, std::size_t b, std::size_t c)
      : AlgebraError("AdjunctionFails", {a, b, c}) {}
};

class NotSI : public InputError {
 public:
  explicit NotSI(const std::string& what) : InputError("NotSI: " + what) {}
};

class NotCascade : public InputError {
 public:
  NotCascade() : InputError("NotCascade: algebra is not a cascade Heyting algebra") {}
};

class ParseError : public InputError {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& found);
  std::size_t position() const { return position_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

class UnboundVariable : public InputError {
 public:
  explicit UnboundVariable(const std::string& name)
      : InputError("UnboundVariable: " + name), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class NotDecomposable : public InputError {
 public:
  NotDecomposable(std::size_t level, const std::string& why)
      : InputError("NotDecomposable at level " + std::to_string(level) + ": " + why),
        level_(level) {}
  std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

class UnknownName : public InputError {
 public:
  explicit UnknownName(const std::string& name) : InputError("UnknownName: " + name) {}
};

class BadSpec : public InputError {
 public:
  explicit BadSpec(const std::string& why) : InputError("BadSpec: " + why) {}
};

class TooSmall : public InputError {
 public:
  explicit TooSmall(std::size_t n)
      : InputError("TooSmall: truncation size " + std::to_string(n) + " < 4") {}
};

// Raised when a self-certification step fails. Never the result of bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace heyting

#endif  // HEYTING_ERRORS_H_
