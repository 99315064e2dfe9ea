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

#include "hedonic/algorithms.h"

#include <functional>
#include <queue>
#include <string>

#include "hedonic/error.h"

namespace hedonic {
namespace {

void RequireB(const GameInstance& game, const char* what) {
  if (game.variant != Variant::kB) {
    throw InputError(std::string(what) + " applies to B-games only, got " +
                     std::string(ToString(game.variant)));
  }
}

// {group} plus singletons of everyone outside it; no empty block.
Partition GroupPlusSingletons(int n, const std::vector<bool>& in_group) {
  std::vector<std::vector<PlayerId>> blocks;
  std::vector<PlayerId> group;
  for (PlayerId i = 1; i <= n; ++i) {
    if (in_group[i - 1]) {
      group.push_back(i);
    } else {
      blocks.push_back({i});
    }
  }
  if (!group.empty()) blocks.push_back(std::move(group));
  return Partition(n, std::move(blocks));
}

bool LikesNobody(const PrefProfile& profile, PlayerId i) {
  return profile.self_rank(i) == 0;
}

}  // namespace

std::uint64_t CisDeviationBound(Variant variant, int n) {
  const auto m = static_cast<std::uint64_t>(n);
  const std::uint64_t base = m * (m == 0 ? 0 : m - 1);
  return variant == Variant::kB ? base * m : base;
}

CisIrResult ComputeCisIr(const GameInstance& game) {
  CisIrResult result{Partition::Singletons(game.size()), {}};
  while (auto deviation =
             FindDeviation(game, result.partition, DeviationKind::kContractual)) {
    result.partition = ApplyDeviation(result.partition, *deviation);
    result.deviations.push_back(std::move(*deviation));
  }
  return result;
}

std::optional<Partition> GrandCoalitionIfNs(const GameInstance& game) {
  const int n = game.size();
  Partition grand = Partition::GrandCoalition(n);
  if (n <= 1) return grand;
  const PrefProfile& profile = game.profile;
  if (game.variant == Variant::kB) {
    bool everyone_likes_someone = true;
    for (PlayerId i = 1; i <= n && everyone_likes_someone; ++i) {
      everyone_likes_someone = !LikesNobody(profile, i);
    }
    if (everyone_likes_someone) return grand;
  } else if (!HasUnacceptability(profile)) {
    return grand;
  }
  if (IsStable(game, grand, DeviationKind::kNash)) return grand;
  return std::nullopt;
}

NsAnswer SolveNsBUniqueFavorite(const GameInstance& game) {
  RequireB(game, "the unique-favorite NS solver");
  const PrefProfile& profile = game.profile;
  if (!HasUniqueFavorites(profile)) {
    throw InputError(
        "profile lacks the unique-favorite property; use the exhaustive "
        "oracle instead");
  }
  const int n = game.size();
  std::vector<bool> in_group(static_cast<std::size_t>(n));
  for (PlayerId i = 1; i <= n; ++i) in_group[i - 1] = !LikesNobody(profile, i);
  for (PlayerId j = 1; j <= n; ++j) {
    if (!in_group[j - 1]) continue;
    const PlayerId favorite = profile.classes(j).front().front();
    if (!in_group[favorite - 1]) return NsAnswer{std::nullopt};
  }
  return NsAnswer{GroupPlusSingletons(n, in_group)};
}

PrefProfile CollapseUnacceptable(const PrefProfile& profile) {
  std::vector<std::vector<IndifferenceClass>> ranks;
  ranks.reserve(static_cast<std::size_t>(profile.size()));
  for (PlayerId i = 1; i <= profile.size(); ++i) {
    const auto classes = profile.classes(i);
    const int self = profile.self_rank(i);
    std::vector<IndifferenceClass> collapsed(classes.begin(),
                                             classes.begin() + self + 1);
    for (std::size_t c = self + 1; c < classes.size(); ++c) {
      collapsed.back().insert(collapsed.back().end(), classes[c].begin(),
                              classes[c].end());
    }
    ranks.push_back(std::move(collapsed));
  }
  return PrefProfile(std::move(ranks));
}

IsBResult ComputeIsB(const GameInstance& game) {
  RequireB(game, "the IS construction");
  const PrefProfile& profile = game.profile;
  const int n = game.size();

  // liked_by[x - 1]: players who like x. remaining[j - 1]: players j likes
  // that are still in the group.
  std::vector<std::vector<PlayerId>> liked_by(static_cast<std::size_t>(n));
  std::vector<int> remaining(static_cast<std::size_t>(n), 0);
  for (PlayerId j = 1; j <= n; ++j) {
    const auto classes = profile.classes(j);
    for (int c = 0; c < profile.self_rank(j); ++c) {
      for (PlayerId x : classes[c]) {
        liked_by[x - 1].push_back(j);
        ++remaining[j - 1];
      }
    }
  }

  IsBResult result{Partition::Singletons(0), {}, 0};
  std::vector<bool> in_group(static_cast<std::size_t>(n), true);
  std::priority_queue<PlayerId, std::vector<PlayerId>, std::greater<>> ready;

  auto isolate = [&](PlayerId x) {
    in_group[x - 1] = false;
    for (PlayerId j : liked_by[x - 1]) {
      if (in_group[j - 1] && --remaining[j - 1] == 0) ready.push(j);
    }
  };

  std::vector<PlayerId> initial;
  for (PlayerId i = 1; i <= n; ++i) {
    if (remaining[i - 1] == 0) initial.push_back(i);
  }
  result.initially_isolated = initial.size();
  for (PlayerId i : initial) in_group[i - 1] = false;
  for (PlayerId i : initial) {
    for (PlayerId j : liked_by[i - 1]) {
      if (in_group[j - 1] && --remaining[j - 1] == 0) ready.push(j);
    }
  }
  while (!ready.empty()) {
    const PlayerId x = ready.top();
    ready.pop();
    if (!in_group[x - 1]) continue;
    result.removal_order.push_back(x);
    isolate(x);
  }
  result.partition = GroupPlusSingletons(n, in_group);
  return result;
}

}  // namespace hedonic
