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

#include "hedonic/stability.h"

#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "hedonic/error.h"
#include "hedonic/extensions.h"
#include "hedonic/text_format.h"

namespace hedonic {
namespace {

void RequireMatchingSize(const GameInstance& game, const Partition& partition) {
  if (partition.size() != game.size()) {
    throw InputError("partition covers " + std::to_string(partition.size()) +
                     " players but the game has " +
                     std::to_string(game.size()));
  }
}

// Every player's assessment of its current block, plus the move tests that
// reuse them.
class DeviationScanner {
 public:
  DeviationScanner(const GameInstance& game, const Partition& partition)
      : game_(game), partition_(partition) {
    RequireMatchingSize(game, partition);
    current_.reserve(static_cast<std::size_t>(game.size()));
    for (PlayerId i = 1; i <= game.size(); ++i) {
      current_.push_back(
          Assess(game.profile, i, partition.block_of(i).members()));
    }
  }

  const Assessment& current(PlayerId i) const { return current_[i - 1]; }

  bool Improves(PlayerId mover, const Assessment& destination) const {
    return CompareAssessments(game_.variant, destination, current(mover)) ==
           Ordering::kGreater;
  }

  // Members of `target` do not lose by admitting `mover`.
  bool TargetApproves(PlayerId mover, const Coalition& target) const {
    for (PlayerId j : target) {
      const Assessment grown = WithMember(game_.profile, j, current(j), mover);
      if (CompareAssessments(game_.variant, grown, current(j)) ==
          Ordering::kLess) {
        return false;
      }
    }
    return true;
  }

  // Members left behind in the mover's block do not lose by its departure.
  bool SourceApproves(PlayerId mover) const {
    const Coalition& source = partition_.block_of(mover);
    std::vector<PlayerId> rest;
    rest.reserve(source.size());
    for (PlayerId j : source) {
      if (j != mover) rest.push_back(j);
    }
    for (PlayerId j : rest) {
      const Assessment shrunk = Assess(game_.profile, j, rest);
      if (CompareAssessments(game_.variant, shrunk, current(j)) ==
          Ordering::kLess) {
        return false;
      }
    }
    return true;
  }

  // `target_block` is an index into the partition's blocks, or -1 for Empty.
  bool Feasible(PlayerId mover, long target_block, DeviationKind kind) const {
    const std::size_t own = partition_.block_index(mover);
    if (target_block < 0) {
      if (partition_.block_of(mover).size() == 1) return false;
      if (!Improves(mover, Assess(game_.profile, mover, {}))) return false;
    } else {
      if (static_cast<std::size_t>(target_block) == own) return false;
      const Coalition& target = partition_.blocks()[target_block];
      if (!Improves(mover, Assess(game_.profile, mover, target.members()))) {
        return false;
      }
      if (kind != DeviationKind::kNash && !TargetApproves(mover, target)) {
        return false;
      }
    }
    return kind != DeviationKind::kContractual || SourceApproves(mover);
  }

 private:
  const GameInstance& game_;
  const Partition& partition_;
  std::vector<Assessment> current_;
};

bool NextCombination(std::vector<int>& index, int n) {
  const int k = static_cast<int>(index.size());
  int pos = k - 1;
  while (pos >= 0 && index[pos] == n - k + pos) --pos;
  if (pos < 0) return false;
  ++index[pos];
  for (int q = pos + 1; q < k; ++q) index[q] = index[q - 1] + 1;
  return true;
}

}  // namespace

std::string_view ToString(DeviationKind kind) {
  switch (kind) {
    case DeviationKind::kNash:
      return "NS";
    case DeviationKind::kIndividual:
      return "IS";
    case DeviationKind::kContractual:
      return "CIS";
  }
  return "?";
}

DeviationKind ParseDeviationKind(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "ns") return DeviationKind::kNash;
  if (lower == "is") return DeviationKind::kIndividual;
  if (lower == "cis") return DeviationKind::kContractual;
  throw InputError("unknown deviation kind '" + std::string(text) +
                   "' (expected ns, is or cis)");
}

std::string FormatDeviation(const Deviation& deviation) {
  return "player " + std::to_string(deviation.mover) + " -> " +
         (deviation.target ? FormatCoalition(*deviation.target) : "empty");
}

Partition ApplyDeviation(const Partition& partition,
                         const Deviation& deviation) {
  const PlayerId mover = deviation.mover;
  if (mover < 1 || mover > partition.size()) {
    throw InputError("mover " + std::to_string(mover) + " out of range");
  }
  std::vector<Coalition> blocks;
  blocks.reserve(partition.block_count() + 1);
  bool target_found = !deviation.target.has_value();
  for (const Coalition& block : partition.blocks()) {
    if (deviation.target && block == *deviation.target) {
      if (block.contains(mover)) {
        throw InputError("deviation target already contains the mover");
      }
      blocks.push_back(block.With(mover));
      target_found = true;
    } else if (block.contains(mover)) {
      std::vector<PlayerId> rest;
      for (PlayerId j : block) {
        if (j != mover) rest.push_back(j);
      }
      if (!rest.empty()) blocks.emplace_back(std::move(rest));
    } else {
      blocks.push_back(block);
    }
  }
  if (!target_found) {
    throw InputError("deviation target is not a block of the partition");
  }
  if (!deviation.target) blocks.push_back(Coalition{mover});
  return Partition(partition.size(), std::move(blocks));
}

std::optional<PlayerId> FindIrViolation(const GameInstance& game,
                                        const Partition& partition) {
  RequireMatchingSize(game, partition);
  for (PlayerId i = 1; i <= game.size(); ++i) {
    const Assessment here =
        Assess(game.profile, i, partition.block_of(i).members());
    const Assessment alone = Assess(game.profile, i, {});
    if (CompareAssessments(game.variant, here, alone) == Ordering::kLess) {
      return i;
    }
  }
  return std::nullopt;
}

bool IsIndividuallyRational(const GameInstance& game,
                            const Partition& partition) {
  return !FindIrViolation(game, partition).has_value();
}

std::optional<Deviation> FindDeviation(const GameInstance& game,
                                       const Partition& partition,
                                       DeviationKind kind) {
  const DeviationScanner scanner(game, partition);
  const auto blocks = partition.blocks();
  for (PlayerId mover = 1; mover <= game.size(); ++mover) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (scanner.Feasible(mover, static_cast<long>(b), kind)) {
        return Deviation{mover, blocks[b], kind};
      }
    }
    if (scanner.Feasible(mover, -1, kind)) {
      return Deviation{mover, std::nullopt, kind};
    }
  }
  return std::nullopt;
}

bool IsStable(const GameInstance& game, const Partition& partition,
              DeviationKind kind) {
  return !FindDeviation(game, partition, kind).has_value();
}

bool IsFeasibleDeviation(const GameInstance& game, const Partition& partition,
                         const Deviation& deviation) {
  if (deviation.mover < 1 || deviation.mover > game.size()) return false;
  const DeviationScanner scanner(game, partition);
  if (!deviation.target) {
    return scanner.Feasible(deviation.mover, -1, deviation.kind);
  }
  const auto blocks = partition.blocks();
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b] == *deviation.target) {
      return scanner.Feasible(deviation.mover, static_cast<long>(b),
                              deviation.kind);
    }
  }
  return false;
}

std::optional<Coalition> FindBlockingCoalition(const GameInstance& game,
                                               const Partition& partition,
                                               bool strict,
                                               CoreOptions options) {
  RequireMatchingSize(game, partition);
  const int n = game.size();
  if (n > options.max_players) {
    throw CapacityError("core check over " + std::to_string(n) + " players",
                        options.max_players);
  }
  const DeviationScanner scanner(game, partition);
  std::vector<PlayerId> members;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> index(static_cast<std::size_t>(k));
    for (int q = 0; q < k; ++q) index[q] = q;
    do {
      members.clear();
      for (int q : index) members.push_back(q + 1);
      bool blocks = true;
      bool some_strict = false;
      for (PlayerId i : members) {
        const Ordering o = CompareAssessments(
            game.variant, Assess(game.profile, i, members), scanner.current(i));
        if (o == Ordering::kGreater) {
          some_strict = true;
        } else if (!strict || o == Ordering::kLess) {
          blocks = false;
          break;
        }
      }
      if (blocks && some_strict) return Coalition(members);
    } while (NextCombination(index, n));
  }
  return std::nullopt;
}

bool IsCoreStable(const GameInstance& game, const Partition& partition,
                  bool strict, CoreOptions options) {
  return !FindBlockingCoalition(game, partition, strict, options).has_value();
}

}  // namespace hedonic
