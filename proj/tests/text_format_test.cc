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

#include "hedonic/text_format.h"

#include <gtest/gtest.h>

#include <string>

#include "hedonic/error.h"
#include "test_util.h"

namespace hedonic {
namespace {

constexpr char kFourPlayers[] =
    "# player 1 ranks 2 > 3 > 1 > 4\n"
    "variant: BB\n"
    "players: 4\n"
    "pref 1: 2 ; 3 ; 1 ; 4\n"
    "\n"
    "pref 2: *\n"
    "pref 3: 3 ; *\n"
    "  pref 4: 4 1 ; 2 ; 3\n";

TEST(ParseGameTest, ReadsClassesAndStar) {
  const GameInstance g = ParseGame(kFourPlayers);
  EXPECT_EQ(g.variant, Variant::kBB);
  ASSERT_EQ(g.size(), 4);
  EXPECT_EQ(g.profile.rank(1, 4), 3);
  EXPECT_EQ(g.profile.classes(2).size(), 1u);
  EXPECT_EQ(g.profile.classes(3)[1], (IndifferenceClass{1, 2, 4}));
  EXPECT_EQ(g.profile.rank(4, 1), 0);
  EXPECT_EQ(g.profile.self_rank(4), 0);
}

TEST(FormatGameTest, RoundTripsCanonicalText) {
  const GameInstance g = ParseGame(kFourPlayers);
  const std::string text = FormatGame(g);
  EXPECT_EQ(text,
            "variant: BB\n"
            "players: 4\n"
            "pref 1: 2 ; 3 ; 1 ; 4\n"
            "pref 2: 1 2 3 4\n"
            "pref 3: 3 ; 1 2 4\n"
            "pref 4: 1 4 ; 2 ; 3\n");
  EXPECT_EQ(ParseGame(text), g);
  EXPECT_EQ(FormatGame(ParseGame(text)), text);
}

TEST(FormatGameTest, RoundTripsRandomProfiles) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    for (Variant v : testing::kAllVariants) {
      const GameInstance g = testing::VariedGame(seed, v, 1, 10);
      EXPECT_EQ(ParseGame(FormatGame(g)), g);
    }
  }
}

// Expects a ParseError whose message names the given position.
void ExpectParseError(const std::string& text, int line, int column) {
  try {
    ParseGame(text);
    ADD_FAILURE() << "no error for:\n" << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
  }
}

TEST(ParseGameTest, ReportsLineAndColumn) {
  ExpectParseError("variant: Q\n", 1, 10);
  ExpectParseError("variant: B\nplayer: 2\n", 2, 1);
  ExpectParseError("variant: B\nplayers: 0\n", 2, 10);
  ExpectParseError("variant: B\nplayers: 2\npref 1: 1 ; 3\npref 2: *\n", 3,
                   13);
  ExpectParseError("variant: B\nplayers: 2\npref 1: 1 ; 1\npref 2: *\n", 3,
                   13);
  ExpectParseError("variant: B\nplayers: 2\npref 1: 1 ;; 2\npref 2: *\n", 3,
                   12);
  ExpectParseError("variant: B\nplayers: 2\npref 1: * ; 2\npref 2: *\n", 3,
                   13);
  ExpectParseError("variant: B\nplayers: 2\npref 1: 1 *\npref 2: *\n", 3, 11);
  ExpectParseError("variant: B\nplayers: 2\npref 1: *\npref 1: *\n", 4, 6);
}

TEST(ParseGameTest, RejectsIncompleteFiles) {
  EXPECT_THROW(ParseGame(""), ParseError);
  EXPECT_THROW(ParseGame("variant: B\n"), ParseError);
  EXPECT_THROW(ParseGame("variant: B\nplayers: 2\npref 1: *\n"), ParseError);
  EXPECT_THROW(ParseGame("variant: B\nplayers: 2\npref 1: 1\npref 2: *\n"),
               ParseError);
}

TEST(ParseErrorTest, MessageCarriesPosition) {
  const ParseError e("bad token", 3, 7);
  EXPECT_EQ(std::string(e.what()), "line 3, column 7: bad token");
}

TEST(ParsePartitionTest, AcceptsAnyOrder) {
  const Partition p = ParsePartition("{4 5}\n{3 2} # tail\n{1}", 5);
  EXPECT_EQ(FormatPartition(p), "{1} {2 3} {4 5}");
  EXPECT_EQ(ParsePartition(FormatPartition(p), 5), p);
}

TEST(ParsePartitionTest, RejectsMalformedText) {
  EXPECT_THROW(ParsePartition("{1 2", 2), ParseError);
  EXPECT_THROW(ParsePartition("{1 {2}}", 2), ParseError);
  EXPECT_THROW(ParsePartition("1 2", 2), ParseError);
  EXPECT_THROW(ParsePartition("{}", 2), ParseError);
  EXPECT_THROW(ParsePartition("{1 x}", 2), ParseError);
  EXPECT_THROW(ParsePartition("{1 3}", 2), ParseError);
  EXPECT_THROW(ParsePartition("{1}", 2), InputError);        // 2 uncovered
  EXPECT_THROW(ParsePartition("{1 2} {2}", 2), InputError);  // overlap
}

TEST(ParseCoalitionTest, ReadsSingleBlock) {
  EXPECT_EQ(ParseCoalition("{3 1}", 3), (Coalition{1, 3}));
  EXPECT_THROW(ParseCoalition("{1} {2}", 3), InputError);
  EXPECT_THROW(ParseCoalition("{1 1}", 3), InputError);
}

TEST(FormatTest, CoalitionAndPreferences) {
  EXPECT_EQ(FormatCoalition(Coalition{2, 1}), "{1 2}");
  const GameInstance g = ParseGame(kFourPlayers);
  EXPECT_EQ(FormatPreferences(g.profile, 4), "1 4 ; 2 ; 3");
}

}  // namespace
}  // namespace hedonic
