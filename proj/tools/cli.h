// Copyright 2026 The srte Authors.
//
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

// The srte command line: solve, sweep, centrality and oracle subcommands.
// Everything is reachable in-process through Run() so tests can capture the
// exact bytes a command writes.

#ifndef SRTE_TOOLS_CLI_H_
#define SRTE_TOOLS_CLI_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace srte::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitInfeasible = 2,
  kExitOracleFailure = 3,
};

// Methods accepted by --method. Besides the selection methods, "mp-baseline"
// solves the unrestricted arc-flow program and "all-nodes" offers every
// candidate as a middlepoint.
inline constexpr const char* kMethodNames[] = {
    "sp", "gsp", "degree", "random", "optimal", "greedy", "mp-baseline",
    "all-nodes"};

struct RunConfig {
  std::string topology_path;
  std::string demands_path;
  // Gravity demands are generated when no demands file is given.
  int flow_count = 0;
  std::optional<std::uint64_t> demand_seed;
  std::string objective = "lu";
  std::string method = "gsp";
  int k = 1;
  int m = 1;
  bool exactly_one_middlepoint = false;
  bool weighted = false;
  double scale = 1;
  std::uint64_t seed = 1;
  std::string format = "json";
  long budget = 10000;
  // Comma-separated candidate pool; empty means every node.
  std::string candidates;
  bool timing = false;
  std::string dump_lp_path;
};

// Parses `args` (without the program name) and runs the subcommand. Results
// go to `out`, diagnostics to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace srte::cli

#endif  // SRTE_TOOLS_CLI_H_
