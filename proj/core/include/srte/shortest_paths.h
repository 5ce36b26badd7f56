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

#ifndef SRTE_SHORTEST_PATHS_H_
#define SRTE_SHORTEST_PATHS_H_

#include <map>
#include <optional>
#include <vector>

#include "srte/network.h"

namespace srte {

// Single-source shortest-path DAG with exact distances and path counts.
// All comparisons are exact, so two paths are ECMP ties iff their summed
// rational costs are equal.
struct ShortestPathDag {
  NodeIndex source = 0;
  // nullopt marks an unreachable node.
  std::vector<std::optional<Rational>> dist;
  // Number of shortest source->v paths; 0 when unreachable.
  std::vector<BigInt> sigma;
  // Incoming DAG edges (u, v) with dist[v] == dist[u] + cost(u, v).
  std::vector<std::vector<EdgeIndex>> preds;
  // Reachable nodes in non-decreasing distance order (a topological order
  // of the DAG, since costs are positive).
  std::vector<NodeIndex> order;

  bool reachable(NodeIndex v) const { return dist[v].has_value(); }
};

ShortestPathDag ComputeShortestPathDag(const FlowNetwork& network,
                                       NodeIndex source);

// Raised when a segment's endpoint cannot be reached.
class UnreachableSegment : public Error {
 public:
  UnreachableSegment(NodeIndex from, NodeIndex to);
  NodeIndex from() const { return from_; }
  NodeIndex to() const { return to_; }

 private:
  NodeIndex from_;
  NodeIndex to_;
};

// Share of an ECMP segment's traffic carried by each edge: the number of
// shortest from->to paths through the edge divided by their total number.
struct SegmentFractions {
  NodeIndex from = 0;
  NodeIndex to = 0;
  std::map<EdgeIndex, Rational> fraction;
};

// Fractions of segment dag.source -> to, read off a precomputed DAG.
// Throws UnreachableSegment when `to` is not reachable.
SegmentFractions FractionsFromDag(const FlowNetwork& network,
                                  const ShortestPathDag& dag, NodeIndex to);

// Throws InvalidArgument if from == to, UnreachableSegment if unreachable.
SegmentFractions ComputeSegmentFractions(const FlowNetwork& network,
                                         NodeIndex from, NodeIndex to);

// All single-source DAGs of one network.
class ShortestPathIndex {
 public:
  explicit ShortestPathIndex(const FlowNetwork& network);

  const FlowNetwork& network() const { return *network_; }
  const ShortestPathDag& dag(NodeIndex source) const { return dags_[source]; }

  bool Reachable(NodeIndex from, NodeIndex to) const {
    return dags_[from].reachable(to);
  }
  const BigInt& PathCount(NodeIndex from, NodeIndex to) const {
    return dags_[from].sigma[to];
  }

  SegmentFractions Fractions(NodeIndex from, NodeIndex to) const;

 private:
  const FlowNetwork* network_;
  std::vector<ShortestPathDag> dags_;
};

}  // namespace srte

#endif  // SRTE_SHORTEST_PATHS_H_
