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

// CNF formulas compiled into hedonic games whose stable partitions exist
// exactly when the formula is satisfiable, plus the two small games with no
// stable outcome that the gadgets are built from.
//
// Nash gadget (variant BB or W), players in id order:
//   one, zero, p1, ~p1, ..., pm, ~pm, X1, ..., Xk
// Clause players stalk `one`; a satisfying valuation sends true literals to
// `one`, false literals to `zero` and keeps clause players together.
//
// Individual-stability gadget (strict BB, or W with some ties), in id order:
//   per clause c: 1^Xc .. 5^Xc; then 0_p per variable; then one occurrence
//   player per literal of each clause, clause by clause.
// Each clause carries a copy of the five-player cycling game whose cycle is
// broken only if 1^X is joined by an occurrence player of a true literal.
//
// Orders inside sets that the construction leaves arbitrary are ascending id.

#ifndef HEDONIC_REDUCTIONS_H_
#define HEDONIC_REDUCTIONS_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hedonic/cnf.h"
#include "hedonic/model.h"

namespace hedonic {

// Bidirectional name <-> id table over ids 1..size().
class NameTable {
 public:
  // Returns the new id. Throws InputError on a duplicate name.
  PlayerId Add(std::string name);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(PlayerId id) const { return names_.at(id - 1); }
  // Throws InputError for unknown names.
  PlayerId id(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, PlayerId, std::less<>> ids_;
};

struct NashGadgetLayout {
  NameTable names;
  PlayerId one = 0;
  PlayerId zero = 0;
  std::vector<PlayerId> positive_literal;  // [v - 1] is p_v
  std::vector<PlayerId> negative_literal;  // [v - 1] is ~p_v
  std::vector<PlayerId> clause;            // [c] is X_{c+1}

  PlayerId literal(Literal l) const {
    return l > 0 ? positive_literal[l - 1] : negative_literal[-l - 1];
  }
};

struct IndividualGadgetLayout {
  NameTable names;
  std::vector<std::array<PlayerId, 5>> cycle;  // [c][r] is (r+1)^X_{c+1}
  std::vector<PlayerId> anchor;                // [v - 1] is 0_{p_v}
  // C_p and C_~p: occurrence players of each literal, ascending.
  std::vector<std::vector<PlayerId>> positive_occurrences;
  std::vector<std::vector<PlayerId>> negative_occurrences;
  // L^X: occurrence players of each clause in literal order.
  std::vector<std::vector<PlayerId>> clause_occurrences;
  // Literal carried by each occurrence player, keyed by id.
  std::map<PlayerId, Literal> occurrence_literal;
  // Clause index of each occurrence player.
  std::map<PlayerId, int> occurrence_clause;
};

struct NashReduction {
  GameInstance game;
  NashGadgetLayout layout;
};

struct IndividualReduction {
  GameInstance game;
  IndividualGadgetLayout layout;
};

// Nash gadget with n = k + 2m + 2. `variant` must be BB, W or WW.
// Throws InputError otherwise or if a literal is out of range.
NashReduction ReduceSatNs(const CnfFormula& formula, Variant variant);

// Checks the gadget's assumptions: every clause nonempty with distinct
// literals, no clause holding both p and ~p, every variable occurring in
// both polarities. Throws InputError naming the first violation.
void RequireIsReducible(const CnfFormula& formula);

// Strict BB gadget with n = 5k + m + (literal occurrences).
IndividualGadgetLayout MakeIndividualGadgetLayout(const CnfFormula& formula);
IndividualReduction ReduceSatIsBB(const CnfFormula& formula);
// Same players; the occurrence and 0_p lists gain ties. Variant W.
IndividualReduction ReduceSatIsW(const CnfFormula& formula);

// {one + true literals}, {zero + false literals}, {all clause players}.
// Throws InputError unless `valuation` satisfies `formula`.
Partition NsWitnessFromValuation(const CnfFormula& formula,
                                 const NashGadgetLayout& layout,
                                 const Valuation& valuation);

// v(x) = true iff p_x shares a block with `one`. Throws InputError if the
// partition is not individually rational in `game`.
Valuation ValuationFromNsPartition(const CnfFormula& formula,
                                   const NashReduction& reduction,
                                   const Partition& partition);

// {2^X, 3^X}, {4^X, 5^X}, {1^X + occurrences of X made true} per clause and
// {0_p + every occurrence of p's false literal} per variable. Throws
// InputError unless `valuation` satisfies `formula`.
Partition IsWitnessFromValuation(const CnfFormula& formula,
                                 const IndividualGadgetLayout& layout,
                                 const Valuation& valuation);

// v(p) = true iff some positive occurrence player of p shares a block with
// its clause's 1^X. Throws InputError if the partition is not IS in `game`.
Valuation ValuationFromIsPartition(const CnfFormula& formula,
                                   const IndividualReduction& reduction,
                                   const Partition& partition);

// Two players: 1 finds 2 unacceptable, 2 likes 1. No NS partition.
GameInstance StalkerGame(Variant variant = Variant::kBB);

// Five strict players, each accepting exactly two others; IS deviations
// cycle through every individually rational candidate.
GameInstance ExtendedStalkerGame(Variant variant = Variant::kBB);

// Comment lines `# name <name> -> id <id>` for every player.
std::string FormatLayout(const NameTable& names);

}  // namespace hedonic

#endif  // HEDONIC_REDUCTIONS_H_
