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

#include "hedonic/extensions.h"

#include <algorithm>
#include <string>

#include "hedonic/error.h"

namespace hedonic {
namespace {

// Lower rank is better, so a smaller rank compares Greater.
Ordering CompareRanks(int a, int b) {
  if (a < b) return Ordering::kGreater;
  if (a > b) return Ordering::kLess;
  return Ordering::kEqual;
}

Ordering FromWeakPreference(bool s_over_t, bool t_over_s) {
  if (s_over_t && t_over_s) return Ordering::kEqual;
  return s_over_t ? Ordering::kGreater : Ordering::kLess;
}

void RequireMember(const PrefProfile& profile, PlayerId i,
                   const Coalition& s) {
  if (!profile.contains(i)) {
    throw InputError("player id " + std::to_string(i) + " out of range");
  }
  if (!s.contains(i)) {
    throw InputError("player " + std::to_string(i) +
                     " is not a member of the coalition");
  }
  if (s.members().back() > profile.size()) {
    throw InputError("coalition member " + std::to_string(s.members().back()) +
                     " out of range");
  }
}

std::vector<PlayerId> ExtremeSet(const PrefProfile& profile, PlayerId i,
                                 const Coalition& s, bool best) {
  RequireMember(profile, i, s);
  const Assessment a = Assess(profile, i, s.members());
  if (a.size == 1) return {i};
  const int target = best ? a.best_rank : a.worst_rank;
  std::vector<PlayerId> out;
  for (PlayerId j : s) {
    if (j != i && profile.rank(i, j) == target) out.push_back(j);
  }
  return out;
}

}  // namespace

Assessment Assess(const PrefProfile& profile, PlayerId viewer,
                  std::span<const PlayerId> members) {
  const int self = profile.self_rank(viewer);
  Assessment a{self, self, false, 1};
  bool any = false;
  for (PlayerId j : members) {
    if (j == viewer) continue;
    const int r = profile.rank(viewer, j);
    if (!any) {
      a.best_rank = a.worst_rank = r;
      any = true;
    } else {
      a.best_rank = std::min(a.best_rank, r);
      a.worst_rank = std::max(a.worst_rank, r);
    }
    a.has_unacceptable = a.has_unacceptable || r > self;
    ++a.size;
  }
  return a;
}

Assessment WithMember(const PrefProfile& profile, PlayerId viewer,
                      Assessment base, PlayerId newcomer) {
  const int r = profile.rank(viewer, newcomer);
  if (base.size == 1) {
    base.best_rank = base.worst_rank = r;
  } else {
    base.best_rank = std::min(base.best_rank, r);
    base.worst_rank = std::max(base.worst_rank, r);
  }
  base.has_unacceptable =
      base.has_unacceptable || r > profile.self_rank(viewer);
  ++base.size;
  return base;
}

Ordering CompareAssessments(Variant variant, const Assessment& s,
                            const Assessment& t) {
  switch (variant) {
    case Variant::kBB: {
      const bool s_over_t =
          t.has_unacceptable || (!s.has_unacceptable && s.best_rank <= t.best_rank);
      const bool t_over_s =
          s.has_unacceptable || (!t.has_unacceptable && t.best_rank <= s.best_rank);
      return FromWeakPreference(s_over_t, t_over_s);
    }
    case Variant::kWW: {
      const bool s_over_t = t.has_unacceptable || s.worst_rank <= t.worst_rank;
      const bool t_over_s = s.has_unacceptable || t.worst_rank <= s.worst_rank;
      return FromWeakPreference(s_over_t, t_over_s);
    }
    case Variant::kW:
      return CompareRanks(s.worst_rank, t.worst_rank);
    case Variant::kB: {
      const Ordering by_best = CompareRanks(s.best_rank, t.best_rank);
      if (by_best != Ordering::kEqual) return by_best;
      if (s.size < t.size) return Ordering::kGreater;
      if (s.size > t.size) return Ordering::kLess;
      return Ordering::kEqual;
    }
  }
  return Ordering::kEqual;
}

std::vector<PlayerId> BestSet(const PrefProfile& profile, PlayerId i,
                              const Coalition& s) {
  return ExtremeSet(profile, i, s, /*best=*/true);
}

std::vector<PlayerId> WorstSet(const PrefProfile& profile, PlayerId i,
                               const Coalition& s) {
  return ExtremeSet(profile, i, s, /*best=*/false);
}

bool CoalitionHasUnacceptable(const PrefProfile& profile, PlayerId i,
                              const Coalition& s) {
  RequireMember(profile, i, s);
  return Assess(profile, i, s.members()).has_unacceptable;
}

Ordering Compare(const GameInstance& game, PlayerId i, const Coalition& s,
                 const Coalition& t) {
  RequireMember(game.profile, i, s);
  RequireMember(game.profile, i, t);
  return CompareAssessments(game.variant, Assess(game.profile, i, s.members()),
                            Assess(game.profile, i, t.members()));
}

bool IsAcceptableCoalition(const GameInstance& game, PlayerId i,
                           const Coalition& s) {
  RequireMember(game.profile, i, s);
  const Assessment alone = Assess(game.profile, i, {});
  return CompareAssessments(game.variant, Assess(game.profile, i, s.members()),
                            alone) != Ordering::kLess;
}

}  // namespace hedonic
