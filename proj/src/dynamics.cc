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

#include "hedonic/dynamics.h"

#include <map>
#include <string>

#include "hedonic/error.h"

namespace hedonic {
namespace {

std::vector<std::size_t> Key(const Partition& partition) {
  const auto labels = partition.labels();
  return {labels.begin(), labels.end()};
}

}  // namespace

MoverRule ParseMoverRule(std::string_view text) {
  if (text == "smallest-mover-first") return MoverRule::kSmallestMoverFirst;
  throw InputError("unknown mover rule '" + std::string(text) + "'");
}

DynamicsTrace RunDynamics(const GameInstance& game, const Partition& start,
                          DeviationKind kind, std::size_t max_steps,
                          MoverRule /*rule*/) {
  if (max_steps == 0) throw InputError("max_steps must be at least 1");
  if (start.size() != game.size()) {
    throw InputError("start partition covers " + std::to_string(start.size()) +
                     " players but the game has " +
                     std::to_string(game.size()));
  }
  DynamicsTrace trace;
  trace.kind = kind;
  trace.max_steps = max_steps;

  std::map<std::vector<std::size_t>, std::size_t> visited;
  Partition current = start;
  visited.emplace(Key(current), 0);
  while (true) {
    auto deviation = FindDeviation(game, current, kind);
    if (!deviation) {
      trace.terminal = DynamicsTrace::Terminal::kStabilized;
      break;
    }
    if (trace.steps.size() == max_steps) {
      trace.terminal = DynamicsTrace::Terminal::kTruncated;
      break;
    }
    Partition next = ApplyDeviation(current, *deviation);
    trace.steps.push_back({std::move(current), std::move(*deviation)});
    current = std::move(next);
    auto [it, inserted] = visited.emplace(Key(current), trace.steps.size());
    if (!inserted) {
      trace.terminal = DynamicsTrace::Terminal::kCycleDetected;
      trace.cycle_start = it->second;
      break;
    }
  }
  trace.final_partition = std::move(current);
  return trace;
}

std::string FormatTrace(const DynamicsTrace& trace) {
  std::string out;
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    out += "step " + std::to_string(k) + ": " +
           FormatDeviation(trace.steps[k].deviation) + "\n";
  }
  switch (trace.terminal) {
    case DynamicsTrace::Terminal::kStabilized:
      out += "stabilized\n";
      break;
    case DynamicsTrace::Terminal::kCycleDetected:
      out += "cycle at " + std::to_string(trace.cycle_start) + "\n";
      break;
    case DynamicsTrace::Terminal::kTruncated:
      out += "truncated\n";
      break;
  }
  return out;
}

}  // namespace hedonic
