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

// Command-line front end. Run() is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
//   hedonic check     --game g --partition p --concept ns|is|cis|ir|cis-ir|core|strict-core
//   hedonic compare   --game g --player i --left "{1 2}" --right "{3}"
//   hedonic solve     --game g --algorithm cis-ir|is-b|ns-b-uf|grand-ns
//   hedonic enumerate --game g --concept c [--mode all|first] [--cap n]
//   hedonic dynamics  --game g [--partition p] --kind ns|is|cis [--max-steps n]
//   hedonic reduce    [--cnf f] --reduction ns-bb|ns-w|is-bb|is-w [--witness 10]
//   hedonic generate  stalker|extended-stalker|random [--n 6 --seed 7 ...]
//
// A path of "-" reads standard input. Exit codes: 0 success or stable,
// 1 usage or input error, 2 unstable, 3 proven nonexistence, 4 an output
// failed its own verification.

#ifndef HEDONIC_TOOLS_CLI_H_
#define HEDONIC_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hedonic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnstable = 2;
inline constexpr int kExitNonexistent = 3;
inline constexpr int kExitVerificationFailed = 4;

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace hedonic::cli

#endif  // HEDONIC_TOOLS_CLI_H_
