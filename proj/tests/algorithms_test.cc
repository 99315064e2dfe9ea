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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hedonic/error.h"
#include "hedonic/extensions.h"
#include "hedonic/oracle.h"
#include "hedonic/reductions.h"
#include "hedonic/text_format.h"
#include "test_util.h"

namespace hedonic {
namespace {

using testing::Game;
using testing::Parse;

TEST(ComputeCisIrTest, StalkerStaysApart) {
  const CisIrResult r = ComputeCisIr(StalkerGame());
  EXPECT_EQ(r.partition, Partition::Singletons(2));
  EXPECT_TRUE(r.deviations.empty());
}

TEST(ComputeCisIrTest, SinglePlayer) {
  const CisIrResult r = ComputeCisIr(Game("variant: W\nplayers: 1\npref 1: 1\n"));
  EXPECT_EQ(r.partition, Partition::Singletons(1));
}

TEST(ComputeCisIrTest, MutualLikingUnderW) {
  const GameInstance g = Game(
      "variant: W\nplayers: 3\npref 1: 2 3 ; 1\npref 2: 1 3 ; 2\n"
      "pref 3: 1 2 ; 3\n");
  const CisIrResult r = ComputeCisIr(g);
  EXPECT_TRUE(IsIndividuallyRational(g, r.partition));
  EXPECT_TRUE(IsStable(g, r.partition, DeviationKind::kContractual));
  EXPECT_EQ(r.partition, Partition::GrandCoalition(3));
}

TEST(ComputeCisIrTest, ExtendedStalkerIsVerified) {
  const GameInstance g = ExtendedStalkerGame();
  const CisIrResult r = ComputeCisIr(g);
  EXPECT_TRUE(IsIndividuallyRational(g, r.partition));
  EXPECT_TRUE(IsStable(g, r.partition, DeviationKind::kContractual));
}

// Replays the recorded deviations: each is feasible from the partition it
// was applied to and leads to the reported result.
TEST(ComputeCisIrTest, ReplayAndBounds) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    for (Variant v : testing::kAllVariants) {
      const GameInstance g = testing::VariedGame(seed, v, 1, 10);
      const CisIrResult r = ComputeCisIr(g);
      Partition current = Partition::Singletons(g.size());
      for (const Deviation& d : r.deviations) {
        ASSERT_EQ(d.kind, DeviationKind::kContractual);
        ASSERT_TRUE(IsFeasibleDeviation(g, current, d));
        current = ApplyDeviation(current, d);
      }
      EXPECT_EQ(current, r.partition);
      EXPECT_LE(r.deviations.size(), CisDeviationBound(v, g.size()));
      EXPECT_TRUE(IsIndividuallyRational(g, r.partition));
    }
  }
}

TEST(CisDeviationBoundTest, Values) {
  EXPECT_EQ(CisDeviationBound(Variant::kW, 4), 12u);
  EXPECT_EQ(CisDeviationBound(Variant::kB, 4), 48u);
  EXPECT_EQ(CisDeviationBound(Variant::kBB, 1), 0u);
}

TEST(GrandCoalitionIfNsTest, Observations) {
  const GameInstance bb = Game(
      "variant: BB\nplayers: 3\npref 1: 2 ; 1 3\npref 2: 3 ; 1 ; 2\n"
      "pref 3: 1 2 3\n");
  EXPECT_EQ(GrandCoalitionIfNs(bb), Partition::GrandCoalition(3));
  // B: 1 finds 2 merely acceptable, 2 likes 1.
  const GameInstance b =
      Game("variant: B\nplayers: 2\npref 1: 1 2\npref 2: 1 ; 2\n");
  EXPECT_FALSE(GrandCoalitionIfNs(b).has_value());
  EXPECT_EQ(GrandCoalitionIfNs(Game("variant: B\nplayers: 1\npref 1: 1\n")),
            Partition::Singletons(1));
  // Falls back to a check: the stalker grand coalition is not NS.
  EXPECT_FALSE(GrandCoalitionIfNs(StalkerGame()).has_value());
}

TEST(SolveNsBUniqueFavoriteTest, Examples) {
  const GameInstance everyone = Game(
      "variant: B\nplayers: 3\npref 1: 2 ; 1 ; 3\npref 2: 3 ; 2 ; 1\n"
      "pref 3: 1 ; 2 ; 3\n");
  EXPECT_EQ(SolveNsBUniqueFavorite(everyone).partition,
            Partition::GrandCoalition(3));

  EXPECT_FALSE(SolveNsBUniqueFavorite(StalkerGame(Variant::kB)).exists());

  const GameInstance pair = Game(
      "variant: B\nplayers: 3\npref 1: 2 ; 1 ; 3\npref 2: 1 ; 2 ; 3\n"
      "pref 3: 3 ; 1 2\n");
  const NsAnswer a = SolveNsBUniqueFavorite(pair);
  ASSERT_TRUE(a.exists());
  EXPECT_EQ(*a.partition, Parse("{1 2} {3}", 3));
  EXPECT_TRUE(IsStable(pair, *a.partition, DeviationKind::kNash));
  EXPECT_FALSE(FindStable(pair, StabilityConcept::kNS, SearchMode::kAll).empty());
}

TEST(SolveNsBUniqueFavoriteTest, AllLikeNobodyGivesSingletons) {
  const GameInstance g =
      Game("variant: B\nplayers: 2\npref 1: 1 ; 2\npref 2: 2 1\n");
  EXPECT_EQ(SolveNsBUniqueFavorite(g).partition, Partition::Singletons(2));
}

TEST(SolveNsBUniqueFavoriteTest, RejectsInapplicableInput) {
  EXPECT_THROW(SolveNsBUniqueFavorite(StalkerGame(Variant::kBB)), InputError);
  const GameInstance tied =
      Game("variant: B\nplayers: 3\npref 1: 2 3 ; 1\npref 2: *\npref 3: *\n");
  EXPECT_THROW(SolveNsBUniqueFavorite(tied), InputError);
}

TEST(CollapseUnacceptableTest, MergesTailIntoSelfClass) {
  const PrefProfile p({{{2}, {1}, {3}, {4}},
                       {{1, 2, 3, 4}},
                       {{1, 2, 3, 4}},
                       {{1, 2, 3, 4}}});
  const PrefProfile c = CollapseUnacceptable(p);
  EXPECT_EQ(FormatPreferences(c, 1), "2 ; 1 3 4");
  EXPECT_EQ(CollapseUnacceptable(c), c);

  const PrefProfile s = CollapseUnacceptable(StalkerGame().profile);
  EXPECT_EQ(FormatPreferences(s, 1), "1 2");
  EXPECT_EQ(FormatPreferences(s, 2), "1 ; 2");
  EXPECT_FALSE(HasUnacceptability(s));
}

TEST(ComputeIsBTest, Examples) {
  const GameInstance everyone = Game(
      "variant: B\nplayers: 3\npref 1: 2 ; 1 ; 3\npref 2: 3 ; 2 ; 1\n"
      "pref 3: 1 ; 2 ; 3\n");
  EXPECT_EQ(ComputeIsB(everyone).partition, Partition::GrandCoalition(3));

  const GameInstance nobody = Game(
      "variant: B\nplayers: 3\npref 1: 1 ; *\npref 2: 2 ; *\npref 3: 3 ; *\n");
  EXPECT_EQ(ComputeIsB(nobody).partition, Partition::Singletons(3));

  // Likes-graph 1->2, 2->1, 3->1, 4->nobody.
  const GameInstance four = Game(
      "variant: B\nplayers: 4\npref 1: 2 ; 1 ; *\npref 2: 1 ; 2 ; *\n"
      "pref 3: 1 ; 3 ; *\npref 4: 4 ; *\n");
  const IsBResult r = ComputeIsB(four);
  EXPECT_EQ(r.partition, Parse("{1 2 3} {4}", 4));
  EXPECT_EQ(r.initially_isolated, 1u);
  EXPECT_TRUE(r.removal_order.empty());
  EXPECT_TRUE(IsStable(four, r.partition, DeviationKind::kIndividual));

  EXPECT_THROW(ComputeIsB(StalkerGame(Variant::kW)), InputError);
}

TEST(ComputeIsBTest, PeelsChainsSmallestFirst) {
  // 3 likes nobody; 1 and 2 like only 3; 4 likes 1 and 5.
  const GameInstance g = Game(
      "variant: B\nplayers: 5\npref 1: 3 ; 1 ; *\npref 2: 3 ; 2 ; *\n"
      "pref 3: 3 ; *\npref 4: 1 5 ; 4 ; *\npref 5: 4 ; 5 ; *\n");
  const IsBResult r = ComputeIsB(g);
  EXPECT_EQ(r.removal_order, (std::vector<PlayerId>{1, 2}));
  EXPECT_EQ(r.partition, Parse("{1} {2} {3} {4 5}", 5));
  EXPECT_TRUE(IsStable(g, r.partition, DeviationKind::kIndividual));
}

TEST(ComputeIsBTest, RemovalOrderInvariant) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const GameInstance g = testing::VariedGame(seed, Variant::kB, 1, 12);
    const IsBResult r = ComputeIsB(g);
    ASSERT_TRUE(IsStable(g, r.partition, DeviationKind::kIndividual));
    // Each removed player likes nobody removed after it, and every member
    // of the remaining group likes someone inside it.
    for (std::size_t a = 0; a < r.removal_order.size(); ++a) {
      for (std::size_t b = a + 1; b < r.removal_order.size(); ++b) {
        EXPECT_FALSE(g.profile.likes(r.removal_order[a], r.removal_order[b]));
      }
    }
    for (const Coalition& c : r.partition.blocks()) {
      if (c.size() < 2) continue;
      for (PlayerId j : c) {
        EXPECT_TRUE(std::any_of(c.begin(), c.end(), [&](PlayerId x) {
          return g.profile.likes(j, x);
        }));
      }
    }
  }
}

}  // namespace
}  // namespace hedonic
