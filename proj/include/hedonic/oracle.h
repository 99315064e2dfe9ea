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

// Exhaustive ground truth for small instances.
//
// Set partitions of {1..n} are enumerated as restricted growth strings
// a_1..a_n (a_1 = 0, a_k <= 1 + max(a_1..a_{k-1})) in lexicographic order;
// player k goes to block a_k. Every partition appears once, so the number
// visited is the n-th Bell number.

#ifndef HEDONIC_ORACLE_H_
#define HEDONIC_ORACLE_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hedonic/cnf.h"
#include "hedonic/model.h"

namespace hedonic {

// B(0..25) fits in 64 bits. Throws InputError outside that range.
std::uint64_t BellNumber(int n);

class PartitionEnumerator {
 public:
  static constexpr int kDefaultCap = 14;

  // Throws CapacityError if n > cap, InputError if n < 1.
  explicit PartitionEnumerator(int n, int cap = kDefaultCap);

  // Advances to the next partition; false once all have been produced. The
  // first call yields the grand coalition.
  bool Next();

  // Valid after Next() returned true.
  std::span<const int> growth_string() const { return growth_; }
  Partition partition() const;

 private:
  int n_;
  bool started_ = false;
  std::vector<int> growth_;
  std::vector<int> prefix_max_;  // max(a_1..a_k)
};

enum class StabilityConcept { kIR, kNS, kIS, kCIS, kCisAndIr, kCore, kStrictCore };

// "IR", "NS", "IS", "CIS", "CIS_AND_IR", "CORE", "STRICT_CORE".
std::string_view ToString(StabilityConcept concept_tag);
// Accepts the tags above or cli spellings (ir, ns, is, cis, cis-ir, core,
// strict-core), case-insensitive. Throws InputError.
StabilityConcept ParseStabilityConcept(std::string_view text);

// Runs the single checker for `concept_tag` on one partition.
bool SatisfiesConcept(const GameInstance& game, const Partition& partition,
                      StabilityConcept concept_tag, int core_cap = 20);

enum class SearchMode { kAll, kFirstWitness };

struct OracleOptions {
  int partition_cap = PartitionEnumerator::kDefaultCap;
  int core_cap = 20;
  // Skip partitions with an unacceptable block before running the full
  // NS/IS/strict-core checker. Each of those concepts implies IR.
  bool ir_prefilter = true;
};

struct SearchStats {
  std::uint64_t visited = 0;     // partitions enumerated
  std::uint64_t ir_passed = 0;   // reached the full checker
  std::uint64_t stable = 0;
};

// Calls `visit` for each partition satisfying `concept_tag`, in enumeration
// order, until it returns false.
SearchStats ForEachStable(const GameInstance& game,
                          StabilityConcept concept_tag,
                          const std::function<bool(const Partition&)>& visit,
                          const OracleOptions& options = {});

std::vector<Partition> FindStable(const GameInstance& game,
                                  StabilityConcept concept_tag,
                                  SearchMode mode,
                                  const OracleOptions& options = {});

// First satisfying valuation when assignments are scanned as a binary
// counter with x1 as the lowest bit (all-false first). Throws CapacityError
// above `cap` variables.
std::optional<Valuation> BruteForceSat(const CnfFormula& formula,
                                       int cap = 20);

}  // namespace hedonic

#endif  // HEDONIC_ORACLE_H_
