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

#include "cli.h"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hedonic/algorithms.h"
#include "hedonic/cnf.h"
#include "hedonic/dynamics.h"
#include "hedonic/error.h"
#include "hedonic/extensions.h"
#include "hedonic/model.h"
#include "hedonic/oracle.h"
#include "hedonic/random_games.h"
#include "hedonic/reductions.h"
#include "hedonic/stability.h"
#include "hedonic/text_format.h"

namespace hedonic::cli {
namespace {

// Raised when a constructed output fails its checker.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Config {
  std::string game_path;
  std::string partition_path;
  std::string variant;  // override; empty keeps the file's variant
  int cap = -1;         // -1: the command's default

  std::string concept_name = "ns";
  std::string algorithm;
  std::string mode = "all";
  std::string kind = "ns";
  std::size_t max_steps = 1000;
  std::string rule = "smallest-mover-first";

  int player = 0;
  std::string left;
  std::string right;

  std::string cnf_path = "-";
  std::string reduction;
  std::string witness;

  std::string generator;
  int n = 6;
  std::uint64_t seed = 1;
  bool strict = false;
  bool no_unacceptability = false;
  double tie_probability = 0.3;
  double unacceptability_probability = 0.3;
  bool unique_favorite = false;
  bool everyone_likes = false;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return text.str();
}

// Runs `parse` and prefixes any input error with the file name.
template <typename Fn>
auto WithPath(const std::string& path, Fn parse) {
  try {
    return parse();
  } catch (const InputError& e) {
    throw InputError((path == "-" ? "<stdin>" : path) + ": " + e.what());
  }
}

GameInstance LoadGame(const Config& config, std::istream& in) {
  const std::string text = ReadInput(config.game_path, in);
  GameInstance game = WithPath(config.game_path, [&] { return ParseGame(text); });
  if (!config.variant.empty()) game.variant = ParseVariant(config.variant);
  return game;
}

Partition LoadPartition(const std::string& path, int n, std::istream& in) {
  const std::string text = ReadInput(path, in);
  return WithPath(path, [&] { return ParsePartition(text, n); });
}

void Verify(bool ok, const std::string& what) {
  if (!ok) throw VerificationError(what);
}

int CmdCheck(const Config& config, std::istream& in, std::ostream& out) {
  const GameInstance game = LoadGame(config, in);
  const Partition partition =
      LoadPartition(config.partition_path, game.size(), in);
  const StabilityConcept concept_tag =
      ParseStabilityConcept(config.concept_name);
  const CoreOptions core{config.cap < 0 ? CoreOptions{}.max_players
                                        : config.cap};

  std::string witness;
  auto deviation_of = [&](DeviationKind kind) {
    if (auto d = FindDeviation(game, partition, kind)) {
      witness = "deviation: " + FormatDeviation(*d);
    }
  };
  auto ir_violation = [&] {
    if (auto i = FindIrViolation(game, partition)) {
      witness = "violation: player " + std::to_string(*i) +
                " prefers being alone";
    }
  };
  switch (concept_tag) {
    case StabilityConcept::kIR:
      ir_violation();
      break;
    case StabilityConcept::kNS:
      deviation_of(DeviationKind::kNash);
      break;
    case StabilityConcept::kIS:
      deviation_of(DeviationKind::kIndividual);
      break;
    case StabilityConcept::kCIS:
      deviation_of(DeviationKind::kContractual);
      break;
    case StabilityConcept::kCisAndIr:
      ir_violation();
      if (witness.empty()) deviation_of(DeviationKind::kContractual);
      break;
    case StabilityConcept::kCore:
    case StabilityConcept::kStrictCore: {
      const bool strict = concept_tag == StabilityConcept::kStrictCore;
      if (auto s = FindBlockingCoalition(game, partition, strict, core)) {
        witness = "blocking coalition: " + FormatCoalition(*s);
      }
      break;
    }
  }
  if (witness.empty()) {
    out << "stable: yes\n";
    return kExitOk;
  }
  out << "stable: no\n" << witness << "\n";
  return kExitUnstable;
}

int CmdCompare(const Config& config, std::istream& in, std::ostream& out) {
  const GameInstance game = LoadGame(config, in);
  if (!game.profile.contains(config.player)) {
    throw InputError("player " + std::to_string(config.player) +
                     " is not in the game");
  }
  const Coalition left = ParseCoalition(config.left, game.size());
  const Coalition right = ParseCoalition(config.right, game.size());
  const Ordering ordering = Compare(game, config.player, left, right);
  const char* symbol = ordering == Ordering::kGreater ? ">"
                       : ordering == Ordering::kLess  ? "<"
                                                      : "~";
  out << FormatCoalition(left) << ' ' << symbol << ' '
      << FormatCoalition(right) << "\n";
  return kExitOk;
}

int CmdSolve(const Config& config, std::istream& in, std::ostream& out) {
  const GameInstance game = LoadGame(config, in);
  const std::string& algorithm = config.algorithm;
  if (algorithm == "cis-ir") {
    const CisIrResult result = ComputeCisIr(game);
    const std::uint64_t bound = CisDeviationBound(game.variant, game.size());
    Verify(IsIndividuallyRational(game, result.partition) &&
               IsStable(game, result.partition, DeviationKind::kContractual),
           "cis-ir output is not IR and CIS");
    Verify(result.deviations.size() <= bound,
           "cis-ir exceeded its deviation bound");
    out << FormatPartition(result.partition) << "\n";
    out << "# deviations: " << result.deviations.size() << " (bound " << bound
        << ")\n";
    return kExitOk;
  }
  if (algorithm == "is-b") {
    const IsBResult result = ComputeIsB(game);
    Verify(IsStable(game, result.partition, DeviationKind::kIndividual),
           "is-b output is not IS");
    out << FormatPartition(result.partition) << "\n";
    return kExitOk;
  }
  if (algorithm == "ns-b-uf") {
    const NsAnswer answer = SolveNsBUniqueFavorite(game);
    if (!answer.exists()) {
      out << "no NS partition exists\n";
      return kExitNonexistent;
    }
    Verify(IsStable(game, *answer.partition, DeviationKind::kNash),
           "ns-b-uf output is not NS");
    out << FormatPartition(*answer.partition) << "\n";
    return kExitOk;
  }
  // grand-ns; CLI11 has already restricted the choices.
  const auto grand = GrandCoalitionIfNs(game);
  if (!grand) {
    out << "grand coalition is not Nash stable\n";
    return kExitUnstable;
  }
  Verify(IsStable(game, *grand, DeviationKind::kNash),
         "grand-ns output is not NS");
  out << FormatPartition(*grand) << "\n";
  return kExitOk;
}

int CmdEnumerate(const Config& config, std::istream& in, std::ostream& out) {
  const GameInstance game = LoadGame(config, in);
  const StabilityConcept concept_tag =
      ParseStabilityConcept(config.concept_name);
  OracleOptions options;
  if (config.cap >= 0) options.partition_cap = config.cap;
  const bool first_only = config.mode == "first";
  std::uint64_t count = 0;
  const std::string tag(ToString(concept_tag));
  ForEachStable(
      game, concept_tag,
      [&](const Partition& partition) {
        out << tag << ' ' << FormatPartition(partition) << "\n";
        ++count;
        return !first_only;
      },
      options);
  out << "count: " << count << " / " << BellNumber(game.size()) << "\n";
  return kExitOk;
}

int CmdDynamics(const Config& config, std::istream& in, std::ostream& out) {
  const GameInstance game = LoadGame(config, in);
  const Partition start =
      config.partition_path.empty()
          ? Partition::Singletons(game.size())
          : LoadPartition(config.partition_path, game.size(), in);
  const DynamicsTrace trace =
      RunDynamics(game, start, ParseDeviationKind(config.kind),
                  config.max_steps, ParseMoverRule(config.rule));
  out << FormatTrace(trace);
  return kExitOk;
}

// Emits the game with its layout and, optionally, the verified witness.
template <typename Reduction, typename WitnessFn, typename CheckFn,
          typename ExtractFn>
int EmitReduction(const CnfFormula& formula, const Reduction& reduction,
                  const Config& config, WitnessFn witness_of, CheckFn check,
                  ExtractFn extract, std::ostream& out) {
  std::optional<Partition> witness;
  if (!config.witness.empty()) {
    const Valuation valuation =
        ParseAssignment(config.witness, formula.variables);
    witness = witness_of(valuation);
    Verify(check(*witness), "witness partition failed its stability check");
    Verify(Evaluate(formula, extract(*witness)),
           "valuation extracted from the witness does not satisfy the formula");
  }
  out << "# reduction " << config.reduction << ": " << formula.variables
      << " variables, " << formula.clauses.size() << " clauses, "
      << reduction.game.size() << " players\n";
  out << FormatLayout(reduction.layout.names);
  out << FormatGame(reduction.game);
  if (witness) out << "# witness " << FormatPartition(*witness) << "\n";
  return kExitOk;
}

int CmdReduce(const Config& config, std::istream& in, std::ostream& out) {
  const std::string text = ReadInput(config.cnf_path, in);
  const CnfFormula formula =
      WithPath(config.cnf_path, [&] { return ParseDimacs(text); });
  const std::string& r = config.reduction;
  if (r == "ns-bb" || r == "ns-w") {
    const NashReduction reduction =
        ReduceSatNs(formula, r == "ns-bb" ? Variant::kBB : Variant::kW);
    return EmitReduction(
        formula, reduction, config,
        [&](const Valuation& v) {
          return NsWitnessFromValuation(formula, reduction.layout, v);
        },
        [&](const Partition& p) {
          return IsStable(reduction.game, p, DeviationKind::kNash);
        },
        [&](const Partition& p) {
          return ValuationFromNsPartition(formula, reduction, p);
        },
        out);
  }
  const bool bb = r == "is-bb";
  const IndividualReduction reduction =
      bb ? ReduceSatIsBB(formula) : ReduceSatIsW(formula);
  return EmitReduction(
      formula, reduction, config,
      [&](const Valuation& v) {
        return IsWitnessFromValuation(formula, reduction.layout, v);
      },
      [&](const Partition& p) {
        return IsStable(reduction.game, p, DeviationKind::kIndividual) &&
               (!bb || IsStable(reduction.game, p, DeviationKind::kNash));
      },
      [&](const Partition& p) {
        return ValuationFromIsPartition(formula, reduction, p);
      },
      out);
}

int CmdGenerate(const Config& config, std::ostream& out) {
  const Variant variant =
      config.variant.empty() ? Variant::kBB : ParseVariant(config.variant);
  if (config.generator == "stalker") {
    out << FormatGame(StalkerGame(variant));
  } else if (config.generator == "extended-stalker") {
    out << FormatGame(ExtendedStalkerGame(variant));
  } else {
    RandomGameOptions options;
    options.n = config.n;
    options.variant = variant;
    options.strict = config.strict;
    options.tie_probability = config.tie_probability;
    options.unacceptability_probability =
        config.no_unacceptability ? 0.0 : config.unacceptability_probability;
    options.seed = config.seed;
    options.unique_favorite = config.unique_favorite;
    options.everyone_likes_someone = config.everyone_likes;
    const GameInstance game = RandomGame(options);
    Verify(!config.strict || IsStrict(game.profile),
           "generated profile is not strict");
    Verify(!config.no_unacceptability || !HasUnacceptability(game.profile),
           "generated profile has unacceptable players");
    out << "# random game: n=" << options.n << " seed=" << options.seed
        << " strict=" << (options.strict ? 1 : 0)
        << " tie-prob=" << options.tie_probability
        << " unacc-prob=" << options.unacceptability_probability << "\n";
    out << FormatGame(game);
  }
  return kExitOk;
}

void AddVariantFlag(CLI::App* sub, Config& config) {
  sub->add_option("--variant", config.variant,
                  "Override the game's variant (B, BB, W or WW)");
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Hedonic games induced by rankings over players.", "hedonic"};
  app.require_subcommand(1);
  const std::vector<std::string> concepts = {
      "ir", "ns", "is", "cis", "cis-ir", "core", "strict-core"};
  const std::vector<std::string> kinds = {"ns", "is", "cis"};

  CLI::App* check = app.add_subcommand("check", "Test a partition for stability");
  check->add_option("--game", config.game_path, "Game file")->required();
  check->add_option("--partition", config.partition_path, "Partition file")
      ->required();
  check->add_option("--concept", config.concept_name, "Stability concept")
      ->check(CLI::IsMember(concepts));
  check->add_option("--cap", config.cap, "Largest game the core check accepts");
  AddVariantFlag(check, config);

  CLI::App* compare =
      app.add_subcommand("compare", "Compare two coalitions for one player");
  compare->add_option("--game", config.game_path, "Game file")->required();
  compare->add_option("--player", config.player, "Player id")->required();
  compare->add_option("--left", config.left, "Coalition, e.g. \"{1 2}\"")
      ->required();
  compare->add_option("--right", config.right, "Coalition")->required();
  AddVariantFlag(compare, config);

  CLI::App* solve = app.add_subcommand("solve", "Construct a stable partition");
  solve->add_option("--game", config.game_path, "Game file")->required();
  solve->add_option("--algorithm", config.algorithm, "Construction")
      ->required()
      ->check(CLI::IsMember({"cis-ir", "is-b", "ns-b-uf", "grand-ns"}));
  AddVariantFlag(solve, config);

  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List stable partitions exhaustively");
  enumerate->add_option("--game", config.game_path, "Game file")->required();
  enumerate->add_option("--concept", config.concept_name, "Stability concept")
      ->check(CLI::IsMember(concepts));
  enumerate->add_option("--mode", config.mode, "all or first")
      ->check(CLI::IsMember({"all", "first"}));
  enumerate->add_option("--cap", config.cap, "Largest game to enumerate");
  AddVariantFlag(enumerate, config);

  CLI::App* dynamics =
      app.add_subcommand("dynamics", "Follow deviations until they stop");
  dynamics->add_option("--game", config.game_path, "Game file")->required();
  dynamics->add_option("--partition", config.partition_path,
                       "Start partition file (default: singletons)");
  dynamics->add_option("--kind", config.kind, "Deviation kind")
      ->check(CLI::IsMember(kinds));
  dynamics->add_option("--max-steps", config.max_steps, "Step budget")
      ->check(CLI::PositiveNumber);
  dynamics->add_option("--rule", config.rule, "Mover selection rule")
      ->check(CLI::IsMember({"smallest-mover-first"}));
  AddVariantFlag(dynamics, config);

  CLI::App* reduce = app.add_subcommand("reduce", "Compile a CNF into a game");
  reduce->add_option("--cnf", config.cnf_path, "DIMACS file, - for stdin");
  reduce->add_option("--reduction", config.reduction, "Gadget")
      ->required()
      ->check(CLI::IsMember({"ns-bb", "ns-w", "is-bb", "is-w"}));
  reduce->add_option("--witness", config.witness,
                     "Satisfying assignment such as 10 (x1 true, x2 false)");

  CLI::App* generate = app.add_subcommand("generate", "Write a game file");
  generate->add_option("kind", config.generator, "Game family")
      ->required()
      ->check(CLI::IsMember({"stalker", "extended-stalker", "random"}));
  generate->add_option("--variant", config.variant, "B, BB, W or WW");
  generate->add_option("--n", config.n, "Players (random)")
      ->check(CLI::Range(1, 1000));
  generate->add_option("--seed", config.seed, "Seed (random)");
  generate->add_flag("--strict", config.strict, "No ties (random)");
  generate->add_flag("--no-unacceptability", config.no_unacceptability,
                     "Everyone acceptable to everyone (random)");
  generate->add_option("--tie-prob", config.tie_probability,
                       "Tie probability (random)")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--unacc-prob", config.unacceptability_probability,
                       "Unacceptability probability (random)")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_flag("--unique-favorite", config.unique_favorite,
                     "Repair to the unique-favorite property (random)");
  generate->add_flag("--everyone-likes", config.everyone_likes,
                     "Repair so every player likes someone (random)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitError;
  }

  try {
    if (check->parsed()) return CmdCheck(config, in, out);
    if (compare->parsed()) return CmdCompare(config, in, out);
    if (solve->parsed()) return CmdSolve(config, in, out);
    if (enumerate->parsed()) return CmdEnumerate(config, in, out);
    if (dynamics->parsed()) return CmdDynamics(config, in, out);
    if (reduce->parsed()) return CmdReduce(config, in, out);
    return CmdGenerate(config, out);
  } catch (const VerificationError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace hedonic::cli
