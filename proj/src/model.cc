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

#include "hedonic/model.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "hedonic/error.h"

namespace hedonic {

std::string_view ToString(Ordering ordering) {
  switch (ordering) {
    case Ordering::kLess:
      return "Less";
    case Ordering::kEqual:
      return "Equal";
    case Ordering::kGreater:
      return "Greater";
  }
  return "?";
}

Ordering Flip(Ordering ordering) {
  return static_cast<Ordering>(-static_cast<int>(ordering));
}

std::string_view ToString(Variant variant) {
  switch (variant) {
    case Variant::kB:
      return "B";
    case Variant::kBB:
      return "BB";
    case Variant::kW:
      return "W";
    case Variant::kWW:
      return "WW";
  }
  return "?";
}

Variant ParseVariant(std::string_view text) {
  std::string upper(text);
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  if (upper == "B") return Variant::kB;
  if (upper == "BB") return Variant::kBB;
  if (upper == "W") return Variant::kW;
  if (upper == "WW") return Variant::kWW;
  throw InputError("unknown variant '" + std::string(text) +
                   "' (expected B, BB, W or WW)");
}

PrefProfile::PrefProfile(std::vector<std::vector<IndifferenceClass>> ranks)
    : n_(static_cast<int>(ranks.size())), classes_(std::move(ranks)) {
  const auto n = static_cast<std::size_t>(n_);
  rank_.assign(n * n, -1);
  for (int i = 1; i <= n_; ++i) {
    auto& player_classes = classes_[i - 1];
    for (std::size_t c = 0; c < player_classes.size(); ++c) {
      auto& cls = player_classes[c];
      if (cls.empty()) {
        throw InputError("player " + std::to_string(i) +
                         " has an empty indifference class");
      }
      std::sort(cls.begin(), cls.end());
      for (PlayerId j : cls) {
        if (j < 1 || j > n_) {
          throw InputError("player " + std::to_string(i) + " ranks id " +
                           std::to_string(j) + " outside 1.." +
                           std::to_string(n_));
        }
        int& slot = rank_[(i - 1) * n + (j - 1)];
        if (slot != -1) {
          throw InputError("player " + std::to_string(i) + " ranks id " +
                           std::to_string(j) + " more than once");
        }
        slot = static_cast<int>(c);
      }
    }
    for (int j = 1; j <= n_; ++j) {
      if (rank_[(i - 1) * n + (j - 1)] == -1) {
        throw InputError("player " + std::to_string(i) + " does not rank id " +
                         std::to_string(j));
      }
    }
  }
}

Coalition::Coalition(std::vector<PlayerId> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw InputError("coalition must be nonempty");
  std::sort(members_.begin(), members_.end());
  if (members_.front() < 1) {
    throw InputError("invalid player id " + std::to_string(members_.front()));
  }
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw InputError("player " + std::to_string(*dup) +
                     " listed twice in a coalition");
  }
}

bool Coalition::contains(PlayerId i) const {
  return std::binary_search(members_.begin(), members_.end(), i);
}

Coalition Coalition::With(PlayerId player) const {
  if (contains(player)) return *this;
  std::vector<PlayerId> members = members_;
  members.insert(std::upper_bound(members.begin(), members.end(), player),
                 player);
  return Coalition(std::move(members));
}

namespace {

std::vector<Coalition> ToCoalitions(std::vector<std::vector<PlayerId>> raw) {
  std::vector<Coalition> out;
  out.reserve(raw.size());
  for (auto& block : raw) out.emplace_back(std::move(block));
  return out;
}

}  // namespace

Partition::Partition(int n, std::vector<Coalition> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw InputError("negative player count");
  block_of_.assign(static_cast<std::size_t>(n), 0);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const Coalition& block : blocks_) {
    for (PlayerId i : block) {
      if (i > n) {
        throw InputError("player " + std::to_string(i) + " outside 1.." +
                         std::to_string(n));
      }
      if (seen[i - 1]) {
        throw InputError("player " + std::to_string(i) +
                         " appears in more than one block");
      }
      seen[i - 1] = true;
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (!seen[i - 1]) {
      throw InputError("player " + std::to_string(i) +
                       " is not covered by the partition");
    }
  }
  Canonicalize();
}

Partition::Partition(int n, std::vector<std::vector<PlayerId>> blocks)
    : Partition(n, ToCoalitions(std::move(blocks))) {}

Partition Partition::Singletons(int n) {
  std::vector<Coalition> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) blocks.push_back(Coalition{i});
  return Partition(n, std::move(blocks));
}

Partition Partition::GrandCoalition(int n) {
  if (n == 0) return Partition(0, std::vector<Coalition>{});
  std::vector<PlayerId> all(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) all[i - 1] = i;
  return Partition(n, std::vector<Coalition>{Coalition(std::move(all))});
}

void Partition::Canonicalize() {
  std::sort(blocks_.begin(), blocks_.end(),
            [](const Coalition& a, const Coalition& b) {
              return a.smallest() < b.smallest();
            });
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    for (PlayerId i : blocks_[b]) block_of_[i - 1] = b;
  }
}

Ordering PlayerCompare(const PrefProfile& profile, PlayerId i, PlayerId j,
                       PlayerId k) {
  for (PlayerId id : {i, j, k}) {
    if (!profile.contains(id)) {
      throw InputError("player id " + std::to_string(id) + " outside 1.." +
                       std::to_string(profile.size()));
    }
  }
  const int rj = profile.rank(i, j);
  const int rk = profile.rank(i, k);
  if (rj < rk) return Ordering::kGreater;
  if (rj > rk) return Ordering::kLess;
  return Ordering::kEqual;
}

std::vector<PlayerId> Likes(const PrefProfile& profile, PlayerId i) {
  if (!profile.contains(i)) {
    throw InputError("player id " + std::to_string(i) + " out of range");
  }
  std::vector<PlayerId> liked;
  const auto classes = profile.classes(i);
  for (int c = 0; c < profile.self_rank(i); ++c) {
    liked.insert(liked.end(), classes[c].begin(), classes[c].end());
  }
  std::sort(liked.begin(), liked.end());
  return liked;
}

bool IsStrict(const PrefProfile& profile) {
  for (int i = 1; i <= profile.size(); ++i) {
    for (const auto& cls : profile.classes(i)) {
      if (cls.size() != 1) return false;
    }
  }
  return true;
}

bool HasUnacceptability(const PrefProfile& profile) {
  for (int i = 1; i <= profile.size(); ++i) {
    const auto last = static_cast<int>(profile.classes(i).size()) - 1;
    if (profile.self_rank(i) < last) return true;
  }
  return false;
}

bool HasUniqueFavorites(const PrefProfile& profile) {
  for (int i = 1; i <= profile.size(); ++i) {
    // The top class lies before i's own class exactly when i likes someone.
    if (profile.self_rank(i) > 0 && profile.classes(i).front().size() != 1) {
      return false;
    }
  }
  return true;
}

}  // namespace hedonic
