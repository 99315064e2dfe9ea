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

// Core value types: players, preference profiles over players, coalitions,
// partitions and game instances.
//
// Players are dense integers 1..n. A player's preferences are a weak order
// over all n players (including the player itself), given as indifference
// classes from most to least preferred. Player j is acceptable to i when j's
// class is at or before i's own class, and i likes j when j's class is
// strictly before it.

#ifndef HEDONIC_MODEL_H_
#define HEDONIC_MODEL_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace hedonic {

using PlayerId = int;

enum class Ordering { kLess = -1, kEqual = 0, kGreater = 1 };

std::string_view ToString(Ordering ordering);

// Reverses Less/Greater.
Ordering Flip(Ordering ordering);

enum class Variant { kB, kBB, kW, kWW };

std::string_view ToString(Variant variant);
// Accepts "B", "BB", "W", "WW" (case-insensitive). Throws InputError.
Variant ParseVariant(std::string_view text);

using IndifferenceClass = std::vector<PlayerId>;

// Immutable per-player weak orders with a precomputed rank table.
class PrefProfile {
 public:
  // ranks[i - 1] lists player i's indifference classes, best first. Every
  // id 1..n must appear in exactly one class of every player; no class may
  // be empty. Members are sorted within each class. Throws InputError.
  explicit PrefProfile(std::vector<std::vector<IndifferenceClass>> ranks);

  int size() const { return n_; }

  std::span<const IndifferenceClass> classes(PlayerId i) const {
    return classes_[i - 1];
  }

  // Index of j's class in i's order; 0 is the most preferred class.
  int rank(PlayerId i, PlayerId j) const {
    return rank_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
  }
  int self_rank(PlayerId i) const { return rank(i, i); }

  bool acceptable(PlayerId i, PlayerId j) const {
    return rank(i, j) <= self_rank(i);
  }
  bool likes(PlayerId i, PlayerId j) const {
    return rank(i, j) < self_rank(i);
  }

  bool contains(PlayerId i) const { return i >= 1 && i <= n_; }

  friend bool operator==(const PrefProfile& a, const PrefProfile& b) {
    return a.classes_ == b.classes_;
  }

 private:
  int n_ = 0;
  std::vector<std::vector<IndifferenceClass>> classes_;
  std::vector<int> rank_;
};

struct GameInstance {
  Variant variant;
  PrefProfile profile;

  int size() const { return profile.size(); }

  friend bool operator==(const GameInstance&, const GameInstance&) = default;
};

// A nonempty set of players, stored sorted and duplicate-free.
class Coalition {
 public:
  // Sorts; throws InputError on an empty list, duplicates or ids < 1.
  explicit Coalition(std::vector<PlayerId> members);
  Coalition(std::initializer_list<PlayerId> members)
      : Coalition(std::vector<PlayerId>(members)) {}

  std::span<const PlayerId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  PlayerId smallest() const { return members_.front(); }
  bool contains(PlayerId i) const;

  // New coalition with `player` added; no-op if already present.
  Coalition With(PlayerId player) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Coalition&, const Coalition&) = default;
  friend auto operator<=>(const Coalition&, const Coalition&) = default;

 private:
  std::vector<PlayerId> members_;
};

// A disjoint cover of 1..n by coalitions, always held in canonical form:
// blocks ordered by smallest member, members ascending within a block.
class Partition {
 public:
  // Throws InputError unless `blocks` is a disjoint cover of 1..n.
  Partition(int n, std::vector<Coalition> blocks);
  Partition(int n, std::vector<std::vector<PlayerId>> blocks);

  static Partition Singletons(int n);
  static Partition GrandCoalition(int n);

  int size() const { return n_; }
  std::span<const Coalition> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  // Index into blocks() of the block containing i.
  std::size_t block_index(PlayerId i) const { return block_of_[i - 1]; }
  // pi(i).
  const Coalition& block_of(PlayerId i) const {
    return blocks_[block_of_[i - 1]];
  }

  // Canonical block label per player (label[i - 1] == block_index(i)).
  std::span<const std::size_t> labels() const { return block_of_; }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }

 private:
  void Canonicalize();

  int n_ = 0;
  std::vector<Coalition> blocks_;
  std::vector<std::size_t> block_of_;
};

// Rank comparison of j and k in i's order: Greater iff i strictly prefers
// j. Throws InputError on out-of-range ids.
Ordering PlayerCompare(const PrefProfile& profile, PlayerId i, PlayerId j,
                       PlayerId k);

// Players strictly preferred by i to i itself, ascending.
std::vector<PlayerId> Likes(const PrefProfile& profile, PlayerId i);

// Every indifference class of every player is a singleton.
bool IsStrict(const PrefProfile& profile);

// Some player ranks some class strictly after its own.
bool HasUnacceptability(const PrefProfile& profile);

// Every player who likes someone has exactly one most-preferred player.
bool HasUniqueFavorites(const PrefProfile& profile);

}  // namespace hedonic

#endif  // HEDONIC_MODEL_H_
