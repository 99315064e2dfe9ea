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

// Deliberately naive reimplementations used as independent oracles: every
// relation is written straight from its set-based definition, player
// comparisons go through PlayerCompare only, and partitions are generated by
// recursive insertion rather than growth strings.

#ifndef HEDONIC_TESTS_REFERENCE_H_
#define HEDONIC_TESTS_REFERENCE_H_

#include <algorithm>
#include <set>
#include <vector>

#include "hedonic/model.h"

namespace hedonic::reference {

using Set = std::vector<PlayerId>;
using Blocks = std::vector<Set>;

// i weakly prefers j to k.
inline bool AtLeast(const PrefProfile& p, PlayerId i, PlayerId j, PlayerId k) {
  return PlayerCompare(p, i, j, k) != Ordering::kLess;
}

inline Set Others(const Set& s, PlayerId i) {
  Set out;
  for (PlayerId j : s) {
    if (j != i) out.push_back(j);
  }
  return out;
}

// max/min of S \ {i} under i's ranking; {i} itself when S = {i}.
inline Set Extreme(const PrefProfile& p, PlayerId i, const Set& s, bool best) {
  Set rest = Others(s, i);
  if (rest.empty()) return {i};
  Set out;
  for (PlayerId a : rest) {
    bool extreme = true;
    for (PlayerId b : rest) {
      const Ordering o = PlayerCompare(p, i, b, a);
      if ((best && o == Ordering::kGreater) || (!best && o == Ordering::kLess)) {
        extreme = false;
      }
    }
    if (extreme) out.push_back(a);
  }
  return out;
}

inline bool AllPairs(const PrefProfile& p, PlayerId i, const Set& ss,
                     const Set& ts, Ordering wanted, bool weak) {
  for (PlayerId s : ss) {
    for (PlayerId t : ts) {
      const Ordering o = PlayerCompare(p, i, s, t);
      if (weak ? o == Ordering::kLess : o != wanted) return false;
    }
  }
  return true;
}

inline bool HasUnacceptable(const PrefProfile& p, PlayerId i, const Set& s) {
  for (PlayerId j : s) {
    if (PlayerCompare(p, i, j, i) == Ordering::kLess) return true;
  }
  return false;
}

// S weakly preferred to T by i, per extension.
inline bool WeaklyPrefers(const GameInstance& g, PlayerId i, const Set& s,
                          const Set& t) {
  const PrefProfile& p = g.profile;
  switch (g.variant) {
    case Variant::kBB:
      if (HasUnacceptable(p, i, t)) return true;
      return !HasUnacceptable(p, i, s) &&
             AllPairs(p, i, Extreme(p, i, s, true), Extreme(p, i, t, true),
                      Ordering::kEqual, /*weak=*/true);
    case Variant::kWW:
      if (HasUnacceptable(p, i, t)) return true;
      return AllPairs(p, i, Extreme(p, i, s, false), Extreme(p, i, t, false),
                      Ordering::kEqual, /*weak=*/true);
    case Variant::kW:
      return AllPairs(p, i, Extreme(p, i, s, false), Extreme(p, i, t, false),
                      Ordering::kEqual, /*weak=*/true);
    case Variant::kB: {
      // Only the strict relation is defined; weak means "T not strictly
      // preferred".
      auto strictly = [&](const Set& a, const Set& b) {
        const Set ma = Extreme(p, i, a, true);
        const Set mb = Extreme(p, i, b, true);
        return AllPairs(p, i, ma, mb, Ordering::kGreater, false) ||
               (AllPairs(p, i, ma, mb, Ordering::kEqual, false) &&
                a.size() < b.size());
      };
      return !strictly(t, s);
    }
  }
  return false;
}

inline bool StrictlyPrefers(const GameInstance& g, PlayerId i, const Set& s,
                            const Set& t) {
  return WeaklyPrefers(g, i, s, t) && !WeaklyPrefers(g, i, t, s);
}

inline Set Add(Set s, PlayerId i) {
  s.push_back(i);
  std::sort(s.begin(), s.end());
  return s;
}

inline Set Remove(const Set& s, PlayerId i) { return Others(s, i); }

inline const Set& BlockOf(const Blocks& blocks, PlayerId i) {
  for (const Set& b : blocks) {
    if (std::count(b.begin(), b.end(), i)) return b;
  }
  return blocks.front();  // unreachable for valid partitions
}

inline bool IsIr(const GameInstance& g, const Blocks& blocks) {
  for (PlayerId i = 1; i <= g.size(); ++i) {
    if (!WeaklyPrefers(g, i, BlockOf(blocks, i), {i})) return false;
  }
  return true;
}

enum class Kind { kNash, kIndividual, kContractual };

inline bool IsStableUnder(const GameInstance& g, const Blocks& blocks,
                          Kind kind) {
  for (PlayerId i = 1; i <= g.size(); ++i) {
    const Set& own = BlockOf(blocks, i);
    std::vector<Set> targets;
    for (const Set& b : blocks) {
      if (b != own) targets.push_back(b);
    }
    targets.push_back({});
    for (const Set& t : targets) {
      const Set joined = Add(t, i);
      if (joined == own) continue;  // moving alone into the empty set
      if (!StrictlyPrefers(g, i, joined, own)) continue;
      bool allowed = true;
      if (kind != Kind::kNash) {
        for (PlayerId j : t) {
          allowed = allowed && WeaklyPrefers(g, j, joined, t);
        }
      }
      if (kind == Kind::kContractual) {
        const Set left = Remove(own, i);
        for (PlayerId j : left) {
          allowed = allowed && WeaklyPrefers(g, j, left, own);
        }
      }
      if (allowed) return false;
    }
  }
  return true;
}

inline bool IsCoreStable(const GameInstance& g, const Blocks& blocks,
                         bool strict) {
  const int n = g.size();
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Set s;
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) s.push_back(k + 1);
    }
    bool all_weak = true, all_strict = true, some_strict = false;
    for (PlayerId i : s) {
      const Set& own = BlockOf(blocks, i);
      const bool weak = WeaklyPrefers(g, i, s, own);
      const bool strict_i = weak && !WeaklyPrefers(g, i, own, s);
      all_weak = all_weak && weak;
      all_strict = all_strict && strict_i;
      some_strict = some_strict || strict_i;
    }
    if (strict ? (all_weak && some_strict) : all_strict) return false;
  }
  return true;
}

// All set partitions of {1..n} by inserting each player into an existing
// block or a new one.
inline std::vector<Blocks> AllPartitions(int n) {
  std::vector<Blocks> out{{}};
  for (PlayerId i = 1; i <= n; ++i) {
    std::vector<Blocks> next;
    for (const Blocks& b : out) {
      for (std::size_t k = 0; k < b.size(); ++k) {
        Blocks copy = b;
        copy[k].push_back(i);
        next.push_back(std::move(copy));
      }
      Blocks copy = b;
      copy.push_back({i});
      next.push_back(std::move(copy));
    }
    out = std::move(next);
  }
  return out;
}

inline Partition ToPartition(int n, const Blocks& blocks) {
  return Partition(n, blocks);
}

inline Blocks ToBlocks(const Partition& partition) {
  Blocks out;
  for (const Coalition& c : partition.blocks()) {
    out.emplace_back(c.members().begin(), c.members().end());
  }
  return out;
}

}  // namespace hedonic::reference

#endif  // HEDONIC_TESTS_REFERENCE_H_
