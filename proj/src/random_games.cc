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

#include "hedonic/random_games.h"

#include <algorithm>
#include <string>
#include <utility>

#include "hedonic/error.h"

namespace hedonic {
namespace {

void RequireProbability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError(std::string(what) + " must lie in [0, 1]");
  }
}

// Splits a tied favorite class that excludes the player itself.
void IsolateFavorite(std::vector<IndifferenceClass>& classes, PlayerId self) {
  IndifferenceClass& top = classes.front();
  if (top.size() < 2 || std::count(top.begin(), top.end(), self)) return;
  IndifferenceClass rest(top.begin() + 1, top.end());
  top.resize(1);
  classes.insert(classes.begin() + 1, std::move(rest));
}

// Lifts one other player into a new top class when `self` is among the
// favorites.
void LiftSomeone(std::vector<IndifferenceClass>& classes, PlayerId self) {
  IndifferenceClass& top = classes.front();
  if (!std::count(top.begin(), top.end(), self)) return;
  PlayerId lifted = 0;
  for (PlayerId j : top) {
    if (j != self) {
      lifted = j;
      break;
    }
  }
  if (lifted != 0) {
    top.erase(std::find(top.begin(), top.end(), lifted));
  } else {
    IndifferenceClass& next = classes[1];
    lifted = next.front();
    next.erase(next.begin());
    if (next.empty()) classes.erase(classes.begin() + 1);
  }
  classes.insert(classes.begin(), IndifferenceClass{lifted});
}

}  // namespace

std::uint64_t Rng::Below(std::uint64_t bound) {
  if (bound == 0) throw InputError("Rng::Below needs a positive bound");
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

int Rng::Between(int lo, int hi) {
  return lo + static_cast<int>(Below(static_cast<std::uint64_t>(hi - lo) + 1));
}

double Rng::Unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

GameInstance RandomGame(const RandomGameOptions& options) {
  const int n = options.n;
  if (n < 1) throw InputError("random games need at least one player");
  if (options.everyone_likes_someone && n < 2) {
    throw InputError("nobody can like someone in a one-player game");
  }
  RequireProbability(options.tie_probability, "tie probability");
  RequireProbability(options.unacceptability_probability,
                     "unacceptability probability");
  Rng rng(options.seed);
  const double tie = options.strict ? 0.0 : options.tie_probability;

  std::vector<std::vector<IndifferenceClass>> ranks;
  ranks.reserve(static_cast<std::size_t>(n));
  for (PlayerId i = 1; i <= n; ++i) {
    std::vector<PlayerId> others;
    for (PlayerId j = 1; j <= n; ++j) {
      if (j != i) others.push_back(j);
    }
    rng.Shuffle(others);
    // Acceptable players keep their shuffled order ahead of the self cut.
    std::vector<PlayerId> above;
    std::vector<PlayerId> below;
    for (PlayerId j : others) {
      (rng.Bernoulli(options.unacceptability_probability) ? below : above)
          .push_back(j);
    }
    std::vector<PlayerId> sequence = std::move(above);
    sequence.push_back(i);
    sequence.insert(sequence.end(), below.begin(), below.end());

    std::vector<IndifferenceClass> classes;
    for (PlayerId j : sequence) {
      if (!classes.empty() && rng.Bernoulli(tie)) {
        classes.back().push_back(j);
      } else {
        classes.push_back({j});
      }
    }
    if (options.everyone_likes_someone) LiftSomeone(classes, i);
    if (options.unique_favorite) IsolateFavorite(classes, i);
    ranks.push_back(std::move(classes));
  }
  return GameInstance{options.variant, PrefProfile(std::move(ranks))};
}

PlantedCnf RandomPlantedCnf(const RandomCnfOptions& options) {
  const int m = options.variables;
  if (m < 2) throw InputError("planted formulas need at least two variables");
  if (options.clauses < 1) throw InputError("planted formulas need a clause");
  if (options.max_clause_length < 1) {
    throw InputError("clause length must be positive");
  }
  Rng rng(options.seed);
  PlantedCnf out{CnfFormula{m, {}}, Valuation(m)};
  for (int v = 1; v <= m; ++v) out.planted.set(v, rng.Bernoulli(0.5));

  std::vector<int> variables;
  for (int v = 1; v <= m; ++v) variables.push_back(v);
  const int max_length = std::min(options.max_clause_length, m);
  for (int c = 0; c < options.clauses; ++c) {
    rng.Shuffle(variables);
    const int length = rng.Between(1, max_length);
    Clause clause;
    bool satisfied = false;
    for (int k = 0; k < length; ++k) {
      const Literal l = rng.Bernoulli(0.5) ? variables[k] : -variables[k];
      satisfied = satisfied || out.planted.Satisfies(l);
      clause.push_back(l);
    }
    if (!satisfied) {
      Literal& flipped = clause[rng.Below(clause.size())];
      flipped = -flipped;
    }
    out.formula.clauses.push_back(std::move(clause));
  }

  std::vector<bool> seen_positive(static_cast<std::size_t>(m), false);
  std::vector<bool> seen_negative(static_cast<std::size_t>(m), false);
  for (const Clause& clause : out.formula.clauses) {
    for (Literal l : clause) {
      (l > 0 ? seen_positive : seen_negative)[VariableOf(l) - 1] = true;
    }
  }
  for (int v = 1; v <= m; ++v) {
    for (Literal l : {v, -v}) {
      const bool seen = (l > 0 ? seen_positive : seen_negative)[v - 1];
      if (seen) continue;
      // Pair the missing literal with a true literal of another variable.
      int w = rng.Between(1, m - 1);
      if (w >= v) ++w;
      const Literal partner = out.planted[w] ? w : -w;
      out.formula.clauses.push_back({l, partner});
    }
  }
  return out;
}

}  // namespace hedonic
