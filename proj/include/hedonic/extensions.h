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

// Lifting a ranking over players to a comparison over coalitions.
//
// Every variant only needs a handful of facts about how player i sees a
// coalition S containing i: the class of the best and of the worst member of
// S \ {i} (both default to i's own class when S = {i}), whether S holds a
// player unacceptable to i, and |S|. Assessment packs those facts so the
// stability checkers can grow or shrink coalitions without materializing
// them.
//
//   BB: S >= T  iff  T has an unacceptable player, or neither does and
//                    best(S) >= best(T).
//   WW: S >= T  iff  T has an unacceptable player, or worst(S) >= worst(T).
//   W:  S >= T  iff  worst(S) >= worst(T).
//   B:  S > T   iff  best(S) > best(T), or best(S) ~ best(T) and |S| < |T|;
//       S ~ T   iff  best(S) ~ best(T) and |S| = |T|.

#ifndef HEDONIC_EXTENSIONS_H_
#define HEDONIC_EXTENSIONS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "hedonic/model.h"

namespace hedonic {

struct Assessment {
  int best_rank = 0;
  int worst_rank = 0;
  bool has_unacceptable = false;
  std::size_t size = 1;
};

// How `viewer` sees the coalition `members` + {viewer}. `members` may or may
// not list the viewer; it is skipped either way.
Assessment Assess(const PrefProfile& profile, PlayerId viewer,
                  std::span<const PlayerId> members);

// `base` extended by one newcomer (not already counted).
Assessment WithMember(const PrefProfile& profile, PlayerId viewer,
                      Assessment base, PlayerId newcomer);

Ordering CompareAssessments(Variant variant, const Assessment& s,
                            const Assessment& t);

// max over S \ {i} in i's order, or {i} when S = {i}.
std::vector<PlayerId> BestSet(const PrefProfile& profile, PlayerId i,
                              const Coalition& s);
std::vector<PlayerId> WorstSet(const PrefProfile& profile, PlayerId i,
                               const Coalition& s);

bool CoalitionHasUnacceptable(const PrefProfile& profile, PlayerId i,
                              const Coalition& s);

// How i ranks S against T. Throws InputError unless i is in both.
Ordering Compare(const GameInstance& game, PlayerId i, const Coalition& s,
                 const Coalition& t);

// S is at least as good for i as being alone.
bool IsAcceptableCoalition(const GameInstance& game, PlayerId i,
                           const Coalition& s);

}  // namespace hedonic

#endif  // HEDONIC_EXTENSIONS_H_
