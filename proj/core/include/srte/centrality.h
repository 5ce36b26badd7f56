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

#ifndef SRTE_CENTRALITY_H_
#define SRTE_CENTRALITY_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "srte/network.h"
#include "srte/shortest_paths.h"

namespace srte {

enum class CentralityMethod { kShortestPath, kGroupShortestPath, kDegree, kRandom };

std::string_view CentralityMethodName(CentralityMethod method);

// Per-node scores and the induced ranking. `exact` and `scores` are empty
// for methods that only produce an ordering (group and random).
struct CentralityScores {
  CentralityMethod method = CentralityMethod::kShortestPath;
  bool weighted = false;
  std::vector<Rational> exact;
  std::vector<double> scores;
  // Every node, descending by score, lower index first on ties.
  std::vector<NodeIndex> ordering;
};

// Shortest-path betweenness
//   delta(v) = sum over s != v != t with sigma_st > 0 of sigma_st(v)/sigma_st,
// computed exactly by Brandes dependency accumulation. With `weighted` every
// edge cost is replaced by 1/c(e).
CentralityScores Betweenness(const FlowNetwork& network, bool weighted);

// Group betweenness of `group`: sum over ordered pairs (s, t) with s, t
// outside the group and sigma_st > 0 of the share of shortest s-t paths that
// visit at least one group member. `index` must be built over the network
// whose costs are to be used.
Rational GroupBetweenness(const ShortestPathIndex& index,
                          std::span<const NodeIndex> group);
Rational GroupBetweenness(const FlowNetwork& network,
                          std::span<const NodeIndex> group, bool weighted);

struct GroupSelection {
  std::vector<NodeIndex> order;
  // Group betweenness of each prefix order[0..i].
  std::vector<Rational> prefix_values;
};

// Greedy incremental group selection: each step adds the node with the
// largest marginal group-betweenness gain (lowest index on ties).
GroupSelection GreedyGroupSelect(const FlowNetwork& network, int k,
                                 bool weighted);

// d(v) = (|out(v)| + |in(v)|) / 2, or with `weighted` the sum of 1/c(e) over
// the edges incident to v.
CentralityScores DegreeCentrality(const FlowNetwork& network, bool weighted);

// Uniform sample of k distinct nodes in draw order.
std::vector<NodeIndex> RandomSelect(const FlowNetwork& network, int k,
                                    std::uint64_t seed);

}  // namespace srte

#endif  // SRTE_CENTRALITY_H_
