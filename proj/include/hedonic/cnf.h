// Copyright 2026 The Hedonic Authors
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

#ifndef HEDONIC_CNF_H_
#define HEDONIC_CNF_H_

#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

namespace hedonic {

// Signed DIMACS literal: +v is variable v, -v its negation. Never 0.
using Literal = int;

inline int VariableOf(Literal literal) { return std::abs(literal); }

using Clause = std::vector<Literal>;

struct CnfFormula {
  int variables = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

// Truth assignment to variables 1..size().
class Valuation {
 public:
  Valuation() = default;
  explicit Valuation(int variables)
      : values_(static_cast<std::size_t>(variables), false) {}
  explicit Valuation(std::vector<bool> values) : values_(std::move(values)) {}

  int size() const { return static_cast<int>(values_.size()); }
  bool operator[](int variable) const { return values_[variable - 1]; }
  void set(int variable, bool value) { values_[variable - 1] = value; }

  bool Satisfies(Literal literal) const {
    return literal > 0 ? (*this)[literal] : !(*this)[-literal];
  }

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  std::vector<bool> values_;
};

// "10" -> x1 = true, x2 = false. Throws InputError unless the string is
// exactly `variables` characters of '0'/'1'.
Valuation ParseAssignment(std::string_view text, int variables);
std::string FormatAssignment(const Valuation& valuation);

// Every clause has a literal made true. Throws InputError if the valuation
// does not cover the formula's variables.
bool Evaluate(const CnfFormula& formula, const Valuation& valuation);

// Accepts `c` comment lines, a `p cnf <vars> <clauses>` header and clauses
// of nonzero integers terminated by 0 (possibly spanning lines). Throws
// ParseError on a malformed header, an empty clause, an out-of-range
// literal or a clause count that disagrees with the header.
CnfFormula ParseDimacs(std::string_view text);

std::string FormatDimacs(const CnfFormula& formula);

}  // namespace hedonic

#endif  // HEDONIC_CNF_H_
