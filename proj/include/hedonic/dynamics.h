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

#ifndef HEDONIC_DYNAMICS_H_
#define HEDONIC_DYNAMICS_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hedonic/model.h"
#include "hedonic/stability.h"

namespace hedonic {

// Which deviation is executed when several are feasible. Only the scan order
// of FindDeviation (smallest mover, canonical target order, Empty last) is
// provided.
enum class MoverRule { kSmallestMoverFirst };

MoverRule ParseMoverRule(std::string_view text);

struct DynamicsStep {
  Partition before;
  Deviation deviation;
};

struct DynamicsTrace {
  enum class Terminal { kStabilized, kCycleDetected, kTruncated };

  DeviationKind kind = DeviationKind::kNash;
  std::vector<DynamicsStep> steps;
  Terminal terminal = Terminal::kStabilized;
  // Partition reached after the last step (the start if there were none).
  Partition final_partition = Partition::Singletons(0);
  // For kCycleDetected: index of the step whose `before` equals
  // final_partition. Undefined otherwise.
  std::size_t cycle_start = 0;
  std::size_t max_steps = 0;
};

// Repeatedly executes FindDeviation's choice. Stops when no deviation is
// left, when a partition repeats, or after `max_steps` deviations with one
// still available. Throws InputError for max_steps == 0 or a start that does
// not fit the game.
DynamicsTrace RunDynamics(const GameInstance& game, const Partition& start,
                          DeviationKind kind, std::size_t max_steps,
                          MoverRule rule = MoverRule::kSmallestMoverFirst);

// One line per step, `step <k>: player <i> -> {<target>}` or
// `step <k>: player <i> -> empty`, then `stabilized`, `cycle at <k>` or
// `truncated`.
std::string FormatTrace(const DynamicsTrace& trace);

}  // namespace hedonic

#endif  // HEDONIC_DYNAMICS_H_
