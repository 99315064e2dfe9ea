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

#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "hedonic/error.h"
#include "reference.h"
#include "test_util.h"

namespace hedonic {
namespace {

using Tiers = std::vector<std::vector<Coalition>>;

// Player 1 ranks 2 > 3 > 1 > 4; players 2..4 are irrelevant here.
GameInstance Example(Variant variant) {
  return GameInstance{variant, PrefProfile({{{2}, {3}, {1}, {4}},
                                            {{1, 2, 3, 4}},
                                            {{1, 2, 3, 4}},
                                            {{1, 2, 3, 4}}})};
}

// Player 1's induced orders over the eight coalitions containing it, best
// tier first.
std::map<Variant, Tiers> ExpectedOrders() {
  const Coalition c1{1}, c12{1, 2}, c13{1, 3}, c14{1, 4}, c123{1, 2, 3},
      c124{1, 2, 4}, c134{1, 3, 4}, c1234{1, 2, 3, 4};
  return {
      {Variant::kBB,
       {{c12, c123}, {c13}, {c1}, {c14, c124, c134, c1234}}},
      {Variant::kWW,
       {{c12}, {c123, c13}, {c1}, {c14, c124, c134, c1234}}},
      {Variant::kB,
       {{c12}, {c123, c124}, {c1234}, {c13}, {c134}, {c1}, {c14}}},
      {Variant::kW,
       {{c12}, {c123, c13}, {c1}, {c14, c124, c134, c1234}}},
  };
}

TEST(CompareTest, ReproducesTheFourInducedOrders) {
  int assertions = 0;
  for (const auto& [variant, tiers] : ExpectedOrders()) {
    const GameInstance game = Example(variant);
    std::vector<std::pair<Coalition, int>> ranked;
    for (std::size_t t = 0; t < tiers.size(); ++t) {
      for (const Coalition& c : tiers[t]) ranked.emplace_back(c, t);
    }
    ASSERT_EQ(ranked.size(), 8u);
    for (std::size_t a = 0; a < ranked.size(); ++a) {
      for (std::size_t b = a + 1; b < ranked.size(); ++b) {
        const auto& [s, ts] = ranked[a];
        const auto& [t, tt] = ranked[b];
        const Ordering want = ts < tt    ? Ordering::kGreater
                              : ts > tt ? Ordering::kLess
                                        : Ordering::kEqual;
        EXPECT_EQ(Compare(game, 1, s, t), want)
            << ToString(variant) << " " << ::testing::PrintToString(s.size());
        ++assertions;
      }
    }
  }
  EXPECT_EQ(assertions, 112);
}

TEST(CompareTest, MatchesSetDefinitionsOnRandomGames) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    for (Variant v : testing::kAllVariants) {
      const GameInstance g = testing::VariedGame(seed, v, 1, 5);
      const int n = g.size();
      for (PlayerId i = 1; i <= n; ++i) {
        std::vector<Coalition> with_i;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          if (!(mask & (1u << (i - 1)))) continue;
          std::vector<PlayerId> m;
          for (int k = 0; k < n; ++k) {
            if (mask & (1u << k)) m.push_back(k + 1);
          }
          with_i.emplace_back(m);
        }
        for (const Coalition& s : with_i) {
          for (const Coalition& t : with_i) {
            const reference::Set rs(s.begin(), s.end());
            const reference::Set rt(t.begin(), t.end());
            const bool st = reference::WeaklyPrefers(g, i, rs, rt);
            const bool ts = reference::WeaklyPrefers(g, i, rt, rs);
            ASSERT_TRUE(st || ts);  // every extension is complete
            const Ordering want = st && ts ? Ordering::kEqual
                                  : st     ? Ordering::kGreater
                                           : Ordering::kLess;
            ASSERT_EQ(Compare(g, i, s, t), want)
                << ToString(v) << " seed " << seed << " player " << i;
          }
        }
      }
    }
  }
}

TEST(CompareTest, WAndWwAgreeOnAcceptableCoalitions) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const GameInstance w = testing::VariedGame(seed, Variant::kW, 2, 6);
    const GameInstance ww{Variant::kWW, w.profile};
    const int n = w.size();
    for (PlayerId i = 1; i <= n; ++i) {
      std::vector<Coalition> acceptable;
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!(mask & (1u << (i - 1)))) continue;
        std::vector<PlayerId> m;
        for (int k = 0; k < n; ++k) {
          if (mask & (1u << k)) m.push_back(k + 1);
        }
        Coalition c(m);
        if (IsAcceptableCoalition(w, i, c)) acceptable.push_back(c);
      }
      for (const Coalition& s : acceptable) {
        for (const Coalition& t : acceptable) {
          EXPECT_EQ(Compare(w, i, s, t), Compare(ww, i, s, t));
        }
      }
    }
  }
}

TEST(ExtremeSetsTest, BestAndWorst) {
  const GameInstance g = Example(Variant::kW);
  const PrefProfile& p = g.profile;
  EXPECT_EQ(BestSet(p, 1, Coalition{1, 3, 4}), (std::vector<PlayerId>{3}));
  EXPECT_EQ(WorstSet(p, 1, Coalition{1, 3, 4}), (std::vector<PlayerId>{4}));
  EXPECT_EQ(BestSet(p, 1, Coalition{1}), (std::vector<PlayerId>{1}));
  EXPECT_EQ(WorstSet(p, 2, Coalition{1, 2, 3}), (std::vector<PlayerId>{1, 3}));
  EXPECT_TRUE(CoalitionHasUnacceptable(p, 1, Coalition{1, 2, 4}));
  EXPECT_FALSE(CoalitionHasUnacceptable(p, 1, Coalition{1, 2, 3}));
  EXPECT_THROW(BestSet(p, 1, Coalition{2, 3}), InputError);
  EXPECT_THROW(Compare(g, 1, Coalition{1}, Coalition{1, 5}), InputError);
}

TEST(AcceptabilityTest, MatchesComparisonWithSolitude) {
  for (Variant v : testing::kAllVariants) {
    const GameInstance g = Example(v);
    EXPECT_TRUE(IsAcceptableCoalition(g, 1, Coalition{1, 3}));
    EXPECT_TRUE(IsAcceptableCoalition(g, 1, Coalition{1}));
    EXPECT_FALSE(IsAcceptableCoalition(g, 1, Coalition{1, 4}));
  }
  // B ignores the unacceptable member when a better one is present.
  EXPECT_TRUE(IsAcceptableCoalition(Example(Variant::kB), 1,
                                    Coalition{1, 2, 4}));
  EXPECT_FALSE(IsAcceptableCoalition(Example(Variant::kBB), 1,
                                     Coalition{1, 2, 4}));
}

TEST(AssessmentTest, IncrementalMatchesBatch) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const GameInstance g = testing::VariedGame(seed, Variant::kB, 2, 8);
    const int n = g.size();
    for (PlayerId i = 1; i <= n; ++i) {
      std::vector<PlayerId> members{i};
      Assessment running = Assess(g.profile, i, members);
      for (PlayerId j = 1; j <= n; ++j) {
        if (j == i) continue;
        members.push_back(j);
        running = WithMember(g.profile, i, running, j);
        const Assessment batch = Assess(g.profile, i, members);
        EXPECT_EQ(running.best_rank, batch.best_rank);
        EXPECT_EQ(running.worst_rank, batch.worst_rank);
        EXPECT_EQ(running.has_unacceptable, batch.has_unacceptable);
        EXPECT_EQ(running.size, batch.size);
      }
    }
  }
}

}  // namespace
}  // namespace hedonic
