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

// Constructive procedures for stable partitions.

#ifndef HEDONIC_ALGORITHMS_H_
#define HEDONIC_ALGORITHMS_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "hedonic/model.h"
#include "hedonic/stability.h"

namespace hedonic {

struct CisIrResult {
  Partition partition;
  // Executed CIS deviations, in order, starting from all singletons.
  std::vector<Deviation> deviations;
};

// Upper bound on CIS deviations from the singletons: n(n-1), or n^2(n-1)
// for B-games where coalition size also matters.
std::uint64_t CisDeviationBound(Variant variant, int n);

// Starts from all singletons and executes FindDeviation(kContractual) until
// none is left. The result is IR and CIS for every variant.
CisIrResult ComputeCisIr(const GameInstance& game);

// The grand coalition when it is Nash stable, nullopt otherwise. W/BB/WW
// games without unacceptable players and B-games where everyone likes
// someone are answered without a check.
std::optional<Partition> GrandCoalitionIfNs(const GameInstance& game);

struct NsAnswer {
  std::optional<Partition> partition;  // nullopt: no NS partition exists

  bool exists() const { return partition.has_value(); }
};

// Decides NS existence for B-games with the unique-favorite property in
// O(n + size of the rank tables). Let A be the players who like nobody; no NS
// partition exists iff some player outside A has its favorite inside A,
// otherwise {N \ A} plus singletons of A is NS. Throws InputError for other
// variants or profiles without unique favorites.
NsAnswer SolveNsBUniqueFavorite(const GameInstance& game);

// Moves every class ranked after a player's own class into that class, so
// formerly unacceptable players become acceptable but not liked.
PrefProfile CollapseUnacceptable(const PrefProfile& profile);

struct IsBResult {
  Partition partition;
  // Players moved out of the large block after the initial set of players
  // who like nobody, in removal order.
  std::vector<PlayerId> removal_order;
  // Size of the initial set (players who like nobody).
  std::size_t initially_isolated = 0;
};

// Individually stable partition for any B-game. Starting from the players who
// like nobody, repeatedly isolates a player who likes nobody among the
// players still grouped (smallest id first) and returns the remaining group
// plus singletons. Linear up to the heap used for the smallest-id rule.
// Throws InputError for non-B games.
IsBResult ComputeIsB(const GameInstance& game);

}  // namespace hedonic

#endif  // HEDONIC_ALGORITHMS_H_
