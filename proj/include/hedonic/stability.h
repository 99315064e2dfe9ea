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

// Stability checks for a fixed partition.
//
// A deviation moves one player from its block S to another block T of the
// partition, or out on its own (target Empty). It is feasible when:
//   NS   the mover strictly prefers T + {mover} to S;
//   IS   additionally, every member of T weakly prefers T + {mover} to T;
//   CIS  additionally, every member of S - {mover} weakly prefers
//        S - {mover} to S. Source approval applies to Empty targets too.
//
// Deviations are scanned deterministically: movers by ascending id, then for
// each mover the other blocks in canonical order, then Empty. Joining one's
// own block is never considered and a player already alone never proposes
// Empty.

#ifndef HEDONIC_STABILITY_H_
#define HEDONIC_STABILITY_H_

#include <optional>
#include <string_view>

#include "hedonic/model.h"

namespace hedonic {

enum class DeviationKind { kNash, kIndividual, kContractual };

// "NS", "IS", "CIS".
std::string_view ToString(DeviationKind kind);
// Accepts ns/is/cis in any case. Throws InputError.
DeviationKind ParseDeviationKind(std::string_view text);

struct Deviation {
  PlayerId mover = 0;
  std::optional<Coalition> target;  // nullopt: leave and stay alone
  DeviationKind kind = DeviationKind::kNash;

  friend bool operator==(const Deviation&, const Deviation&) = default;
};

// `player 5 -> {1}` or `player 1 -> empty`.
std::string FormatDeviation(const Deviation& deviation);

// Partition after executing `deviation`. Throws InputError if the target is
// not a block of `partition` or contains the mover.
Partition ApplyDeviation(const Partition& partition,
                         const Deviation& deviation);

// The first player (ascending) whose block is unacceptable to it.
std::optional<PlayerId> FindIrViolation(const GameInstance& game,
                                        const Partition& partition);
bool IsIndividuallyRational(const GameInstance& game,
                            const Partition& partition);

std::optional<Deviation> FindDeviation(const GameInstance& game,
                                       const Partition& partition,
                                       DeviationKind kind);

bool IsStable(const GameInstance& game, const Partition& partition,
              DeviationKind kind);

// Checks that `deviation` is feasible and improving in `partition`.
bool IsFeasibleDeviation(const GameInstance& game, const Partition& partition,
                         const Deviation& deviation);

struct CoreOptions {
  int max_players = 20;
};

// The first (weakly, if `strict`) blocking coalition, scanning subsets by
// ascending size and then lexicographically. Throws CapacityError when the
// game has more than `options.max_players` players.
std::optional<Coalition> FindBlockingCoalition(const GameInstance& game,
                                               const Partition& partition,
                                               bool strict,
                                               CoreOptions options = {});

bool IsCoreStable(const GameInstance& game, const Partition& partition,
                  bool strict, CoreOptions options = {});

}  // namespace hedonic

#endif  // HEDONIC_STABILITY_H_
