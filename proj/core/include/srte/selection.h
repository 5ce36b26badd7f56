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

#ifndef SRTE_SELECTION_H_
#define SRTE_SELECTION_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "srte/centrality.h"
#include "srte/parallel.h"
#include "srte/te_model.h"

namespace srte {

enum class SelectionMethod {
  kOptimal,
  kGreedy,
  kTopShortestPath,
  kTopGroupShortestPath,
  kTopDegree,
  kRandom,
};

std::string_view SelectionMethodName(SelectionMethod method);

// A global middlepoint set shared by all commodities, and the TE solution
// obtained with it.
struct SelectionResult {
  SelectionMethod method = SelectionMethod::kOptimal;
  std::vector<NodeIndex> middlepoints;
  // Greedy: size of the expanded set. Other methods: middlepoints that carry
  // flow in the final solution.
  int used_count = 0;
  TeSolution solution;
  long subproblems_solved = 0;
  // Greedy: theta of the starting set, then after every accepted round.
  std::vector<double> theta_trace;
};

struct SelectionOptions {
  TunnelOptions tunnels;
  // Optimal enumeration refuses to run more subproblems than this.
  long budget = 10000;
  int threads = DefaultThreadCount();
};

// Strict improvement a greedy round must achieve to be accepted.
inline constexpr double kGreedyImprovement = 1e-9;

// Solves TE_LU for every size-k subset of `candidates` (tunnels may only use
// middlepoints of the subset) and keeps the subset with minimum theta; within
// 1e-9 of the minimum the lexicographically smallest subset wins. Throws
// SizeLimitExceeded when C(|candidates|, k) exceeds the budget and
// NoTunnelError when no subset routes every positive demand.
SelectionResult OptimalSelect(const SegmentLoadCache& loads,
                              const DemandMatrix& demands,
                              std::span<const NodeIndex> candidates, int k,
                              const SelectionOptions& options = {});

// Greedy expansion from `initial` (default empty): each round tries every
// unexplored candidate and adds the one with the largest theta reduction
// (lowest index on ties). Stops at k middlepoints or when no candidate
// improves theta by more than kGreedyImprovement.
SelectionResult GreedySelect(const SegmentLoadCache& loads,
                             const DemandMatrix& demands,
                             std::span<const NodeIndex> candidates, int k,
                             const SelectionOptions& options = {},
                             std::span<const NodeIndex> initial = {});

// Top-k nodes by the given centrality (group centrality uses the greedy
// group order, random uses `seed`), then a single TE solve.
SelectionResult CentralitySelect(const SegmentLoadCache& loads,
                                 const DemandMatrix& demands,
                                 CentralityMethod method, bool weighted, int k,
                                 Objective objective,
                                 const SelectionOptions& options = {},
                                 std::uint64_t seed = 1);

// Middlepoints chosen by a centrality method, without solving anything.
std::vector<NodeIndex> CentralityTopK(const FlowNetwork& network,
                                      CentralityMethod method, bool weighted,
                                      int k, std::uint64_t seed = 1);

}  // namespace srte

#endif  // SRTE_SELECTION_H_
