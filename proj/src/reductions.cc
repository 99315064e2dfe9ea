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

#include "hedonic/reductions.h"

#include <algorithm>
#include <set>

#include "hedonic/error.h"
#include "hedonic/stability.h"

namespace hedonic {
namespace {

// Assembles one player's classes; ids not placed yet can be appended at the
// end as a single class or as ascending singletons.
class ListBuilder {
 public:
  explicit ListBuilder(int n) : placed_(static_cast<std::size_t>(n), false) {}

  ListBuilder& Class(std::vector<PlayerId> members) {
    members.erase(std::remove_if(members.begin(), members.end(),
                                 [&](PlayerId j) { return placed_[j - 1]; }),
                  members.end());
    if (members.empty()) return *this;
    for (PlayerId j : members) placed_[j - 1] = true;
    classes_.push_back(std::move(members));
    return *this;
  }

  ListBuilder& Singletons(std::vector<PlayerId> members) {
    std::sort(members.begin(), members.end());
    for (PlayerId j : members) Class({j});
    return *this;
  }

  ListBuilder& RestAsClass() { return Class(Rest()); }
  ListBuilder& RestAsSingletons() { return Singletons(Rest()); }

  std::vector<IndifferenceClass> Build() { return std::move(classes_); }

 private:
  std::vector<PlayerId> Rest() const {
    std::vector<PlayerId> rest;
    for (std::size_t k = 0; k < placed_.size(); ++k) {
      if (!placed_[k]) rest.push_back(static_cast<PlayerId>(k + 1));
    }
    return rest;
  }

  std::vector<bool> placed_;
  std::vector<IndifferenceClass> classes_;
};

void RequireValidLiterals(const CnfFormula& formula) {
  if (formula.variables < 0) throw InputError("negative variable count");
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    if (formula.clauses[c].empty()) {
      throw InputError("clause " + std::to_string(c + 1) + " is empty");
    }
    for (Literal l : formula.clauses[c]) {
      if (l == 0 || VariableOf(l) > formula.variables) {
        throw InputError("literal " + std::to_string(l) + " in clause " +
                         std::to_string(c + 1) + " out of range");
      }
    }
  }
}

void RequireSatisfying(const CnfFormula& formula, const Valuation& valuation) {
  if (valuation.size() != formula.variables) {
    throw InputError("valuation has " + std::to_string(valuation.size()) +
                     " variables, formula has " +
                     std::to_string(formula.variables));
  }
  if (!Evaluate(formula, valuation)) {
    throw InputError("valuation " + FormatAssignment(valuation) +
                     " does not satisfy the formula");
  }
}

std::string LiteralName(Literal l) {
  return (l > 0 ? "p" : "~p") + std::to_string(VariableOf(l));
}

std::vector<PlayerId> Concat(std::vector<PlayerId> a,
                             const std::vector<PlayerId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Occurrence players of all variables other than `variable`.
std::vector<PlayerId> OtherOccurrences(const IndividualGadgetLayout& layout,
                                       int variable) {
  std::vector<PlayerId> out;
  for (const auto& [id, literal] : layout.occurrence_literal) {
    if (VariableOf(literal) != variable) out.push_back(id);
  }
  return out;
}

IndividualReduction BuildIndividualGadget(const CnfFormula& formula,
                                          bool with_ties) {
  RequireIsReducible(formula);
  IndividualGadgetLayout layout = MakeIndividualGadgetLayout(formula);
  const int n = layout.names.size();
  std::vector<std::vector<IndifferenceClass>> ranks(static_cast<std::size_t>(n));

  for (std::size_t c = 0; c < layout.cycle.size(); ++c) {
    const auto& x = layout.cycle[c];
    // r^X ranks (r+1)^X first, then (r-1)^X, then itself; 1^X puts L^X
    // between 2^X and 5^X.
    for (int r = 0; r < 5; ++r) {
      ListBuilder list(n);
      list.Class({x[(r + 1) % 5]});
      if (r == 0) list.Singletons(layout.clause_occurrences[c]);
      list.Class({x[(r + 4) % 5]}).Class({x[r]}).RestAsSingletons();
      ranks[x[r] - 1] = list.Build();
    }
  }

  for (int v = 1; v <= formula.variables; ++v) {
    const PlayerId anchor = layout.anchor[v - 1];
    const auto all = Concat(layout.positive_occurrences[v - 1],
                            layout.negative_occurrences[v - 1]);
    ListBuilder list(n);
    if (with_ties) {
      list.Class(Concat(all, {anchor}));
    } else {
      list.Singletons(all).Class({anchor});
    }
    ranks[anchor - 1] = list.RestAsSingletons().Build();
  }

  for (const auto& [o, literal] : layout.occurrence_literal) {
    const int v = VariableOf(literal);
    const int c = layout.occurrence_clause.at(o);
    std::vector<PlayerId> same;
    for (PlayerId p : literal > 0 ? layout.positive_occurrences[v - 1]
                                  : layout.negative_occurrences[v - 1]) {
      if (p != o) same.push_back(p);
    }
    const auto others = OtherOccurrences(layout, v);
    const PlayerId anchor = layout.anchor[v - 1];
    const PlayerId head = layout.cycle[c][0];
    ListBuilder list(n);
    if (with_ties) {
      list.Class(Concat({anchor}, same)).Class(Concat({head}, others));
    } else {
      list.Class({anchor}).Singletons(same).Class({head}).Singletons(others);
    }
    ranks[o - 1] = list.Class({o}).RestAsSingletons().Build();
  }

  return IndividualReduction{
      GameInstance{with_ties ? Variant::kW : Variant::kBB,
                   PrefProfile(std::move(ranks))},
      std::move(layout)};
}

}  // namespace

PlayerId NameTable::Add(std::string name) {
  const PlayerId id = size() + 1;
  if (!ids_.emplace(name, id).second) {
    throw InputError("duplicate player name '" + name + "'");
  }
  names_.push_back(std::move(name));
  return id;
}

PlayerId NameTable::id(std::string_view name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) {
    throw InputError("unknown player name '" + std::string(name) + "'");
  }
  return it->second;
}

NashReduction ReduceSatNs(const CnfFormula& formula, Variant variant) {
  if (variant == Variant::kB) {
    throw InputError("the Nash gadget is defined for BB, W and WW games");
  }
  RequireValidLiterals(formula);
  NashGadgetLayout layout;
  layout.one = layout.names.Add("one");
  layout.zero = layout.names.Add("zero");
  for (int v = 1; v <= formula.variables; ++v) {
    layout.positive_literal.push_back(layout.names.Add(LiteralName(v)));
    layout.negative_literal.push_back(layout.names.Add(LiteralName(-v)));
  }
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    layout.clause.push_back(layout.names.Add("X" + std::to_string(c + 1)));
  }
  const int n = layout.names.size();
  const auto literals =
      Concat(layout.positive_literal, layout.negative_literal);
  std::vector<std::vector<IndifferenceClass>> ranks(static_cast<std::size_t>(n));

  // one/zero: every literal player and itself, then the other anchor and
  // all clause players.
  ranks[layout.one - 1] = ListBuilder(n)
                              .Class(Concat(literals, {layout.one}))
                              .RestAsClass()
                              .Build();
  ranks[layout.zero - 1] = ListBuilder(n)
                               .Class(Concat(literals, {layout.zero}))
                               .RestAsClass()
                               .Build();

  // A literal player is indifferent between everyone except its complement
  // and the clause players, which it rejects.
  const std::set<PlayerId> clause_players(layout.clause.begin(),
                                          layout.clause.end());
  for (int v = 1; v <= formula.variables; ++v) {
    for (Literal l : {v, -v}) {
      std::vector<PlayerId> accepted;
      for (PlayerId j = 1; j <= n; ++j) {
        if (j != layout.literal(-l) && !clause_players.count(j)) {
          accepted.push_back(j);
        }
      }
      ranks[layout.literal(l) - 1] =
          ListBuilder(n).Class(accepted).RestAsClass().Build();
    }
  }

  // Clause X: `one` and literals outside X, then all clause players, then
  // `zero` and X's own literals (unacceptable).
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    std::set<PlayerId> own;
    for (Literal l : formula.clauses[c]) own.insert(layout.literal(l));
    std::vector<PlayerId> top{layout.one};
    for (PlayerId p : literals) {
      if (!own.count(p)) top.push_back(p);
    }
    ranks[layout.clause[c] - 1] = ListBuilder(n)
                                      .Class(top)
                                      .Class(layout.clause)
                                      .RestAsClass()
                                      .Build();
  }

  return NashReduction{GameInstance{variant, PrefProfile(std::move(ranks))},
                       std::move(layout)};
}

void RequireIsReducible(const CnfFormula& formula) {
  RequireValidLiterals(formula);
  std::vector<bool> positive(static_cast<std::size_t>(formula.variables), false);
  std::vector<bool> negative(static_cast<std::size_t>(formula.variables), false);
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    std::set<Literal> seen;
    for (Literal l : formula.clauses[c]) {
      if (!seen.insert(l).second) {
        throw InputError("clause " + std::to_string(c + 1) +
                         " repeats literal " + std::to_string(l));
      }
      if (seen.count(-l)) {
        throw InputError("clause " + std::to_string(c + 1) +
                         " contains both literals of variable " +
                         std::to_string(VariableOf(l)));
      }
      (l > 0 ? positive : negative)[VariableOf(l) - 1] = true;
    }
  }
  for (int v = 1; v <= formula.variables; ++v) {
    if (!positive[v - 1] || !negative[v - 1]) {
      throw InputError("variable " + std::to_string(v) +
                       " does not occur in both polarities");
    }
  }
}

IndividualGadgetLayout MakeIndividualGadgetLayout(const CnfFormula& formula) {
  IndividualGadgetLayout layout;
  const int k = static_cast<int>(formula.clauses.size());
  for (int c = 1; c <= k; ++c) {
    std::array<PlayerId, 5> ids{};
    for (int r = 1; r <= 5; ++r) {
      ids[r - 1] = layout.names.Add(std::to_string(r) + "^X" + std::to_string(c));
    }
    layout.cycle.push_back(ids);
  }
  for (int v = 1; v <= formula.variables; ++v) {
    layout.anchor.push_back(layout.names.Add("0_p" + std::to_string(v)));
  }
  layout.positive_occurrences.assign(static_cast<std::size_t>(formula.variables), {});
  layout.negative_occurrences.assign(static_cast<std::size_t>(formula.variables), {});
  for (int c = 0; c < k; ++c) {
    std::vector<PlayerId> occurrences;
    for (Literal l : formula.clauses[c]) {
      const PlayerId id =
          layout.names.Add(LiteralName(l) + "^X" + std::to_string(c + 1));
      occurrences.push_back(id);
      layout.occurrence_literal[id] = l;
      layout.occurrence_clause[id] = c;
      (l > 0 ? layout.positive_occurrences : layout.negative_occurrences)
          [VariableOf(l) - 1]
              .push_back(id);
    }
    layout.clause_occurrences.push_back(std::move(occurrences));
  }
  return layout;
}

IndividualReduction ReduceSatIsBB(const CnfFormula& formula) {
  return BuildIndividualGadget(formula, /*with_ties=*/false);
}

IndividualReduction ReduceSatIsW(const CnfFormula& formula) {
  return BuildIndividualGadget(formula, /*with_ties=*/true);
}

Partition NsWitnessFromValuation(const CnfFormula& formula,
                                 const NashGadgetLayout& layout,
                                 const Valuation& valuation) {
  RequireSatisfying(formula, valuation);
  std::vector<PlayerId> with_one{layout.one};
  std::vector<PlayerId> with_zero{layout.zero};
  for (int v = 1; v <= formula.variables; ++v) {
    const bool value = valuation[v];
    with_one.push_back(layout.literal(value ? v : -v));
    with_zero.push_back(layout.literal(value ? -v : v));
  }
  std::vector<std::vector<PlayerId>> blocks{with_one, with_zero};
  if (!layout.clause.empty()) blocks.push_back(layout.clause);
  return Partition(layout.names.size(), std::move(blocks));
}

Valuation ValuationFromNsPartition(const CnfFormula& formula,
                                   const NashReduction& reduction,
                                   const Partition& partition) {
  if (auto bad = FindIrViolation(reduction.game, partition)) {
    throw InputError("partition is not individually rational (player " +
                     reduction.layout.names.name(*bad) + ")");
  }
  const auto& layout = reduction.layout;
  Valuation v(formula.variables);
  const std::size_t one_block = partition.block_index(layout.one);
  for (int var = 1; var <= formula.variables; ++var) {
    v.set(var, partition.block_index(layout.literal(var)) == one_block);
  }
  return v;
}

Partition IsWitnessFromValuation(const CnfFormula& formula,
                                 const IndividualGadgetLayout& layout,
                                 const Valuation& valuation) {
  RequireSatisfying(formula, valuation);
  std::vector<std::vector<PlayerId>> blocks;
  for (std::size_t c = 0; c < layout.cycle.size(); ++c) {
    const auto& x = layout.cycle[c];
    blocks.push_back({x[1], x[2]});
    blocks.push_back({x[3], x[4]});
    std::vector<PlayerId> head{x[0]};
    for (PlayerId o : layout.clause_occurrences[c]) {
      if (valuation.Satisfies(layout.occurrence_literal.at(o))) head.push_back(o);
    }
    blocks.push_back(std::move(head));
  }
  for (int v = 1; v <= formula.variables; ++v) {
    std::vector<PlayerId> block{layout.anchor[v - 1]};
    const auto& false_side = valuation[v] ? layout.negative_occurrences[v - 1]
                                          : layout.positive_occurrences[v - 1];
    block.insert(block.end(), false_side.begin(), false_side.end());
    blocks.push_back(std::move(block));
  }
  return Partition(layout.names.size(), std::move(blocks));
}

Valuation ValuationFromIsPartition(const CnfFormula& formula,
                                   const IndividualReduction& reduction,
                                   const Partition& partition) {
  if (!IsStable(reduction.game, partition, DeviationKind::kIndividual)) {
    throw InputError("partition is not individually stable");
  }
  const auto& layout = reduction.layout;
  Valuation v(formula.variables);
  for (int var = 1; var <= formula.variables; ++var) {
    for (PlayerId o : layout.positive_occurrences[var - 1]) {
      const PlayerId head = layout.cycle[layout.occurrence_clause.at(o)][0];
      if (partition.block_index(o) == partition.block_index(head)) {
        v.set(var, true);
        break;
      }
    }
  }
  return v;
}

GameInstance StalkerGame(Variant variant) {
  return GameInstance{variant, PrefProfile({{{1}, {2}}, {{1}, {2}}})};
}

GameInstance ExtendedStalkerGame(Variant variant) {
  constexpr int n = 5;
  std::vector<std::vector<IndifferenceClass>> ranks;
  for (PlayerId i = 1; i <= n; ++i) {
    const PlayerId next = i % n + 1;
    const PlayerId previous = (i + n - 2) % n + 1;
    ranks.push_back(ListBuilder(n)
                        .Class({next})
                        .Class({previous})
                        .Class({i})
                        .RestAsSingletons()
                        .Build());
  }
  return GameInstance{variant, PrefProfile(std::move(ranks))};
}

std::string FormatLayout(const NameTable& names) {
  std::string out;
  for (PlayerId id = 1; id <= names.size(); ++id) {
    out += "# name " + names.name(id) + " -> id " + std::to_string(id) + "\n";
  }
  return out;
}

}  // namespace hedonic
