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

// Seeded generators for random preference profiles and planted-satisfiable
// CNF formulas. Outputs depend only on the options, including the seed, and
// are identical across platforms: the draws below avoid the
// implementation-defined standard distributions.

#ifndef HEDONIC_RANDOM_GAMES_H_
#define HEDONIC_RANDOM_GAMES_H_

#include <cstdint>
#include <random>
#include <vector>

#include "hedonic/cnf.h"
#include "hedonic/model.h"

namespace hedonic {

// Thin wrapper over a 64-bit Mersenne twister with portable draws.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound). `bound` must be positive.
  std::uint64_t Below(std::uint64_t bound);
  // Uniform in [lo, hi].
  int Between(int lo, int hi);
  // Uniform in [0, 1) with 53 random bits.
  double Unit();
  bool Bernoulli(double p) { return Unit() < p; }

  template <typename T>
  void Shuffle(std::vector<T>& items) {
    for (std::size_t k = items.size(); k > 1; --k) {
      std::swap(items[k - 1], items[Below(k)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomGameOptions {
  int n = 6;
  Variant variant = Variant::kBB;
  // Strict profiles ignore `tie_probability`.
  bool strict = false;
  // Chance that two neighbors in a player's ranking share a class.
  double tie_probability = 0.3;
  // Chance that each other player is ranked below the player itself.
  double unacceptability_probability = 0.3;
  std::uint64_t seed = 1;
  // Repairs applied after drawing: split a tied top class so every player who
  // likes someone has a single favorite, and lift one other player above the
  // player's own class whenever it likes nobody (needs n >= 2).
  bool unique_favorite = false;
  bool everyone_likes_someone = false;
};

// Each player ranks a uniformly shuffled list of the others; every other
// player independently lands below the self cut with the unacceptability
// probability, and neighboring entries (self included) merge into one class
// with the tie probability. Throws InputError for invalid options.
GameInstance RandomGame(const RandomGameOptions& options);

struct RandomCnfOptions {
  int variables = 3;
  int clauses = 5;
  int max_clause_length = 3;
  std::uint64_t seed = 1;
};

struct PlantedCnf {
  CnfFormula formula;
  Valuation planted;  // satisfies `formula`
};

// Random clauses over distinct variables, each repaired to be satisfied by a
// random planted valuation. Every variable then gets both polarities (extra
// clauses are appended when needed), so the result also meets the
// individual-stability gadget's assumptions. Needs variables >= 2 and
// clauses >= 1; the clause count can grow by up to 2 * variables.
PlantedCnf RandomPlantedCnf(const RandomCnfOptions& options);

}  // namespace hedonic

#endif  // HEDONIC_RANDOM_GAMES_H_
