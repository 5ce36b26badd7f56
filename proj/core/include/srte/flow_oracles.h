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

// Brute-force flow objects for small instances: s-w-t flows and cuts, flow
// centralities, group flow and the undirected auxiliary program. Everything
// here enumerates paths explicitly and is meant for verification only.

#ifndef SRTE_FLOW_ORACLES_H_
#define SRTE_FLOW_ORACLES_H_

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "srte/common.h"
#include "srte/demands.h"
#include "srte/network.h"

namespace srte {

struct OracleLimits {
  int max_nodes = 12;
  long max_paths = 40000;
};

// Edge-distinct walk from its first tail to its last head. The sink appears
// only at the end; other nodes may repeat.
struct FlowPath {
  std::vector<EdgeIndex> edges;

  std::vector<NodeIndex> Nodes(const FlowNetwork& network) const;
  bool Visits(const FlowNetwork& network, NodeIndex node) const;
  std::string Label(const FlowNetwork& network) const;
};

// All paths from `source` to `sink`, in DFS order over out-edge lists.
// Throws SizeLimitExceeded past the limits.
std::vector<FlowPath> EnumeratePaths(const FlowNetwork& network,
                                     NodeIndex source, NodeIndex sink,
                                     const OracleLimits& limits = {});

struct SwtFlowResult {
  double value = 0;
  std::vector<std::pair<FlowPath, double>> path_flows;
  // Set when capacities are integral and an integral flow of the relaxation's
  // value was found; path_flows then holds that flow.
  bool integral = false;
  // The integral optimum (exact) when capacities are integral.
  Rational integral_value = 0;
};

// Maximum flow from s to t restricted to paths visiting w.
SwtFlowResult MaxSwtFlow(const FlowNetwork& network, NodeIndex s, NodeIndex w,
                         NodeIndex t, const OracleLimits& limits = {});

struct SwtCut {
  std::vector<EdgeIndex> edges;
  Rational capacity = 0;
};

// Cheapest edge set whose removal leaves no s-w-t path.
SwtCut MinSwtCut(const FlowNetwork& network, NodeIndex s, NodeIndex w,
                 NodeIndex t, const OracleLimits& limits = {});

// Unrestricted single-commodity maximum flow (exact, augmenting paths).
Rational MaxFlowValue(const FlowNetwork& network, NodeIndex s, NodeIndex t);

// Sum over ordered pairs (s, t) with s != w != t and positive max flow of
// MaxSwtFlow(s, w, t) / MaxFlowValue(s, t).
double FlowCentrality(const FlowNetwork& network, NodeIndex w,
                      const OracleLimits& limits = {},
                      int threads = 1);

class ZeroMaxFlow : public Error {
 public:
  ZeroMaxFlow() : Error("maximum multicommodity flow is zero") {}
};

// Maximum multicommodity flow, each commodity capped at its demand, over
// paths visiting at least one node of `group` (0 for an empty group).
double GroupFlow(const FlowNetwork& network, const DemandMatrix& demands,
                 std::span<const NodeIndex> group,
                 const OracleLimits& limits = {});

// Unrestricted counterpart of GroupFlow.
double MaxMulticommodityFlow(const FlowNetwork& network,
                             const DemandMatrix& demands,
                             const OracleLimits& limits = {});

// GroupFlow({w}) / MaxMulticommodityFlow. Throws ZeroMaxFlow.
double MulticommodityFlowCentrality(const FlowNetwork& network,
                                    const DemandMatrix& demands, NodeIndex w,
                                    const OracleLimits& limits = {});

struct GroupFlowSelection {
  std::vector<NodeIndex> order;
  std::vector<double> values;  // GF of every prefix, starting with size 1
  double value() const { return values.empty() ? 0 : values.back(); }
};

// Picks `count` nodes outside every commodity endpoint, each round adding the
// node of largest marginal group flow (lowest index on ties).
GroupFlowSelection GreedyGroupFlowSelect(const FlowNetwork& network,
                                         const DemandMatrix& demands,
                                         int count,
                                         const OracleLimits& limits = {});

// Nodes that are not an endpoint of any commodity.
std::vector<NodeIndex> NonEndpointNodes(const FlowNetwork& network,
                                        const DemandMatrix& demands);

// Undirected capacitated graph; each edge's capacity bounds the total flow
// in both directions.
struct UndirectedEdge {
  NodeIndex u = 0;
  NodeIndex v = 0;
  Rational capacity = 1;
};

class UndirectedNetwork {
 public:
  NodeIndex AddNode(std::string name);
  // Throws InvalidArgument on self-loops, duplicates or non-positive capacity.
  int AddEdge(NodeIndex u, NodeIndex v, const Rational& capacity);

  int node_count() const { return static_cast<int>(names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::string& node_name(NodeIndex v) const { return names_[v]; }
  const std::vector<UndirectedEdge>& edges() const { return edges_; }
  // Edge indices incident to v.
  const std::vector<int>& incident(NodeIndex v) const { return incident_[v]; }

 private:
  std::vector<std::string> names_;
  std::vector<UndirectedEdge> edges_;
  std::vector<std::vector<int>> incident_;
};

// Nodes "u0".. with each pair joined with probability p and an integral
// capacity in [1, max_capacity].
UndirectedNetwork RandomUndirected(int node_count, double edge_probability,
                                   std::uint64_t seed, int max_capacity = 3);

struct UndirectedCommodity {
  NodeIndex source = 0;
  NodeIndex sink = 0;
};

struct UndirectedSwtResult {
  double value = 0;      // maximum s-w-t flow
  double auxiliary = 0;  // optimum of the directed auxiliary program
};

// Maximum multicommodity flow through w (uncapped demands) via the directed
// auxiliary graph with per-commodity collectors z_i and a super sink z.
UndirectedSwtResult UndirectedMaxSwt(
    const UndirectedNetwork& network, NodeIndex w,
    std::span<const UndirectedCommodity> commodities);

// Same quantity by explicit enumeration: every routing is a simple s-w path
// followed by a simple w-t path; an edge used twice is charged twice.
double UndirectedMaxSwtByPaths(const UndirectedNetwork& network, NodeIndex w,
                               std::span<const UndirectedCommodity> commodities,
                               const OracleLimits& limits = {});

}  // namespace srte

#endif  // SRTE_FLOW_ORACLES_H_
