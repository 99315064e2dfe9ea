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

// Line-oriented text formats.
//
// Game file:
//
//   # comment lines start with '#'
//   variant: BB
//   players: 2
//   pref 1: 1 ; 2
//   pref 2: 1 ; 2
//
// Each `pref` line lists one player's indifference classes, best first,
// separated by ';'. The player's own id must appear explicitly. A final
// class `*` stands for every id not listed elsewhere on that line.
//
// Partition: `{1 2} {3} {4 5}`; blocks may come in any order and span lines.

#ifndef HEDONIC_TEXT_FORMAT_H_
#define HEDONIC_TEXT_FORMAT_H_

#include <string>
#include <string_view>

#include "hedonic/model.h"

namespace hedonic {

// Throws ParseError with line/column on malformed input.
GameInstance ParseGame(std::string_view text);

// Canonical text: header lines, then one `pref` line per player with the
// members of each class ascending and no `*`.
std::string FormatGame(const GameInstance& game);

// `1 ; 2 3 ; 4` for a single player's classes.
std::string FormatPreferences(const PrefProfile& profile, PlayerId i);

// Throws ParseError on syntax errors and InputError when the blocks are not
// a disjoint cover of 1..n.
Partition ParsePartition(std::string_view text, int n);

// A single block such as "{1 3}". Throws ParseError on malformed text and
// InputError on duplicates or a block count other than one.
Coalition ParseCoalition(std::string_view text, int n);

std::string FormatCoalition(const Coalition& coalition);
std::string FormatPartition(const Partition& partition);

}  // namespace hedonic

#endif  // HEDONIC_TEXT_FORMAT_H_
