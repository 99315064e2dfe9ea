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

#include "hedonic/oracle.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "hedonic/error.h"
#include "hedonic/extensions.h"
#include "hedonic/stability.h"

namespace hedonic {
namespace {

// Largest n for which the per-coalition acceptability table is built.
constexpr int kTableLimit = 20;

bool RequiresIr(StabilityConcept concept_tag) {
  return concept_tag != StabilityConcept::kCIS;
}

// acceptable[mask] is true iff every member of the coalition `mask`
// (bit k = player k + 1) finds it acceptable.
std::vector<bool> AcceptabilityTable(const GameInstance& game) {
  const int n = game.size();
  const std::uint32_t full = 1u << n;
  std::vector<bool> acceptable(full, false);
  std::vector<PlayerId> members;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    members.clear();
    for (int k = 0; k < n; ++k) {
      if (mask & (1u << k)) members.push_back(k + 1);
    }
    bool ok = true;
    for (PlayerId i : members) {
      const Assessment here = Assess(game.profile, i, members);
      const Assessment alone = Assess(game.profile, i, {});
      if (CompareAssessments(game.variant, here, alone) == Ordering::kLess) {
        ok = false;
        break;
      }
    }
    acceptable[mask] = ok;
  }
  return acceptable;
}

Partition FromGrowthString(std::span<const int> growth) {
  const int n = static_cast<int>(growth.size());
  int blocks = 0;
  for (int a : growth) blocks = std::max(blocks, a + 1);
  std::vector<std::vector<PlayerId>> members(static_cast<std::size_t>(blocks));
  for (int k = 0; k < n; ++k) members[growth[k]].push_back(k + 1);
  return Partition(n, std::move(members));
}

}  // namespace

std::uint64_t BellNumber(int n) {
  if (n < 0 || n > 25) {
    throw InputError("Bell number requested for n = " + std::to_string(n));
  }
  // B(m+1) = sum_k C(m, k) B(k).
  std::vector<std::uint64_t> bell(static_cast<std::size_t>(n) + 1, 0);
  bell[0] = 1;
  std::vector<std::uint64_t> binom{1};
  for (int m = 0; m < n; ++m) {
    std::uint64_t sum = 0;
    for (int k = 0; k <= m; ++k) sum += binom[k] * bell[k];
    bell[m + 1] = sum;
    std::vector<std::uint64_t> next(binom.size() + 1, 1);
    for (std::size_t k = 1; k < binom.size(); ++k) {
      next[k] = binom[k - 1] + binom[k];
    }
    binom = std::move(next);
  }
  return bell[n];
}

PartitionEnumerator::PartitionEnumerator(int n, int cap) : n_(n) {
  if (n < 1) throw InputError("partition enumeration needs n >= 1");
  if (n > cap) {
    throw CapacityError(
        "partition enumeration over " + std::to_string(n) + " players", cap);
  }
}

bool PartitionEnumerator::Next() {
  if (!started_) {
    started_ = true;
    growth_.assign(static_cast<std::size_t>(n_), 0);
    prefix_max_.assign(static_cast<std::size_t>(n_), 0);
    return true;
  }
  for (int k = n_ - 1; k >= 1; --k) {
    if (growth_[k] <= prefix_max_[k - 1]) {
      ++growth_[k];
      prefix_max_[k] = std::max(prefix_max_[k - 1], growth_[k]);
      for (int q = k + 1; q < n_; ++q) {
        growth_[q] = 0;
        prefix_max_[q] = prefix_max_[k];
      }
      return true;
    }
  }
  return false;
}

Partition PartitionEnumerator::partition() const {
  return FromGrowthString(growth_);
}

std::string_view ToString(StabilityConcept concept_tag) {
  switch (concept_tag) {
    case StabilityConcept::kIR:
      return "IR";
    case StabilityConcept::kNS:
      return "NS";
    case StabilityConcept::kIS:
      return "IS";
    case StabilityConcept::kCIS:
      return "CIS";
    case StabilityConcept::kCisAndIr:
      return "CIS_AND_IR";
    case StabilityConcept::kCore:
      return "CORE";
    case StabilityConcept::kStrictCore:
      return "STRICT_CORE";
  }
  return "?";
}

StabilityConcept ParseStabilityConcept(std::string_view text) {
  std::string key(text);
  for (char& c : key) {
    c = c == '-' ? '_' : static_cast<char>(std::toupper(c));
  }
  if (key == "IR") return StabilityConcept::kIR;
  if (key == "NS") return StabilityConcept::kNS;
  if (key == "IS") return StabilityConcept::kIS;
  if (key == "CIS") return StabilityConcept::kCIS;
  if (key == "CIS_AND_IR" || key == "CIS_IR") return StabilityConcept::kCisAndIr;
  if (key == "CORE" || key == "C") return StabilityConcept::kCore;
  if (key == "STRICT_CORE" || key == "SC") return StabilityConcept::kStrictCore;
  throw InputError("unknown stability concept '" + std::string(text) + "'");
}

bool SatisfiesConcept(const GameInstance& game, const Partition& partition,
                      StabilityConcept concept_tag, int core_cap) {
  switch (concept_tag) {
    case StabilityConcept::kIR:
      return IsIndividuallyRational(game, partition);
    case StabilityConcept::kNS:
      return IsStable(game, partition, DeviationKind::kNash);
    case StabilityConcept::kIS:
      return IsStable(game, partition, DeviationKind::kIndividual);
    case StabilityConcept::kCIS:
      return IsStable(game, partition, DeviationKind::kContractual);
    case StabilityConcept::kCisAndIr:
      return IsIndividuallyRational(game, partition) &&
             IsStable(game, partition, DeviationKind::kContractual);
    case StabilityConcept::kCore:
      return IsCoreStable(game, partition, /*strict=*/false, {core_cap});
    case StabilityConcept::kStrictCore:
      return IsCoreStable(game, partition, /*strict=*/true, {core_cap});
  }
  return false;
}

SearchStats ForEachStable(const GameInstance& game,
                          StabilityConcept concept_tag,
                          const std::function<bool(const Partition&)>& visit,
                          const OracleOptions& options) {
  const int n = game.size();
  PartitionEnumerator enumerator(n, options.partition_cap);
  const bool prefilter = options.ir_prefilter && RequiresIr(concept_tag) &&
                         n <= kTableLimit;
  std::vector<bool> acceptable;
  if (prefilter) acceptable = AcceptabilityTable(game);

  SearchStats stats;
  std::vector<std::uint32_t> masks(static_cast<std::size_t>(n));
  while (enumerator.Next()) {
    ++stats.visited;
    const auto growth = enumerator.growth_string();
    if (prefilter) {
      int blocks = 0;
      for (int k = 0; k < n; ++k) {
        const int b = growth[k];
        if (b == blocks) masks[blocks++] = 0;
        masks[b] |= 1u << k;
      }
      bool ir = true;
      for (int b = 0; b < blocks && ir; ++b) ir = acceptable[masks[b]];
      if (!ir) continue;
    }
    ++stats.ir_passed;
    const Partition partition = FromGrowthString(growth);
    if (!SatisfiesConcept(game, partition, concept_tag, options.core_cap)) {
      continue;
    }
    ++stats.stable;
    if (!visit(partition)) break;
  }
  return stats;
}

std::vector<Partition> FindStable(const GameInstance& game,
                                  StabilityConcept concept_tag,
                                  SearchMode mode,
                                  const OracleOptions& options) {
  std::vector<Partition> found;
  ForEachStable(
      game, concept_tag,
      [&](const Partition& p) {
        found.push_back(p);
        return mode == SearchMode::kAll;
      },
      options);
  return found;
}

std::optional<Valuation> BruteForceSat(const CnfFormula& formula, int cap) {
  const int m = formula.variables;
  if (m > cap) {
    throw CapacityError("brute-force SAT over " + std::to_string(m) +
                            " variables",
                        cap);
  }
  Valuation v(m);
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    for (int var = 1; var <= m; ++var) v.set(var, (bits >> (var - 1)) & 1u);
    if (Evaluate(formula, v)) return v;
  }
  return std::nullopt;
}

}  // namespace hedonic
