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

#ifndef SRTE_TOOLS_ORACLE_SUITES_H_
#define SRTE_TOOLS_ORACLE_SUITES_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace srte::cli {

inline constexpr const char* kSuiteNames[] = {
    "maxflow-mincut", "submodularity", "saturation", "betweenness", "undirected"};

struct SuiteOptions {
  int nodes = 6;
  int trials = 10;
  std::uint64_t seed = 1;
};

// One row per checked instance; `failures` counts rows whose result column
// reads "fail".
struct SuiteReport {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int failures = 0;
};

// Trial i uses seed `options.seed + i`. Throws InvalidArgument for an unknown
// suite or an unusable node count.
//
//   maxflow-mincut  max s-w-t flow against the min s-w-t cut, exactly, plus an
//                   integral optimum, for every w of a random digraph.
//   submodularity   exhaustive monotonicity/submodularity check of the group
//                   flow, and greedy N=2 against the best pair.
//   saturation      arc-flow max flow meets all demand iff the arc-flow
//                   utilization optimum is at most 1.
//   betweenness     Brandes against per-source path counting.
//   undirected      auxiliary LP against the walk-pair path LP.
SuiteReport RunSuite(std::string_view name, const SuiteOptions& options);

}  // namespace srte::cli

#endif  // SRTE_TOOLS_ORACLE_SUITES_H_
