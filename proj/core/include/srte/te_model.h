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

#ifndef SRTE_TE_MODEL_H_
#define SRTE_TE_MODEL_H_

#include <memory>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "srte/demands.h"
#include "srte/lp.h"
#include "srte/network.h"
#include "srte/shortest_paths.h"

namespace srte {

// TE_LU minimizes the maximum link utilization while meeting every demand;
// TE_MF maximizes delivered flow under capacities and demand caps.
enum class Objective { kLinkUtilization, kMaxFlow };

std::string_view ObjectiveName(Objective objective);

// Ordered waypoint sequence (source, m_1, ..., m_j, sink) for one commodity.
// Consecutive waypoints form ECMP segments.
struct Tunnel {
  int commodity = 0;
  std::vector<NodeIndex> waypoints;

  int middlepoint_count() const {
    return static_cast<int>(waypoints.size()) - 2;
  }
  std::vector<std::pair<NodeIndex, NodeIndex>> segments() const;
  std::string Label(const FlowNetwork& network) const;
};

struct TunnelOptions {
  // Per-tunnel middlepoint cap (M).
  int max_middlepoints = 1;
  // Per-flow baseline: drop the direct tunnel and use exactly one middlepoint.
  bool exactly_one_middlepoint = false;
};

// Every ordered selection of up to M distinct middlepoints (never the
// commodity's own endpoints) whose segments are all reachable. The direct
// tunnel comes first; sequences follow in lexicographic order of node index.
// Returns an empty list when nothing connects the commodity.
std::vector<Tunnel> EnumerateTunnels(const ShortestPathIndex& paths,
                                     const Commodity& commodity,
                                     int commodity_index,
                                     std::span<const NodeIndex> middlepoints,
                                     const TunnelOptions& options = {});

// Tunnels for every commodity of `demands`, indexed like the commodities.
std::vector<std::vector<Tunnel>> EnumerateAllTunnels(
    const ShortestPathIndex& paths, const DemandMatrix& demands,
    std::span<const NodeIndex> middlepoints, const TunnelOptions& options = {});

using EdgeLoads = std::vector<std::pair<EdgeIndex, double>>;

// Thread-safe memo of per-segment ECMP fractions, converted to double. This
// is the single place where exact fractions become floating point.
class SegmentLoadCache {
 public:
  explicit SegmentLoadCache(const ShortestPathIndex& paths);

  const ShortestPathIndex& paths() const { return *paths_; }

  // Load placed on each edge by one unit of flow on segment from->to.
  // Throws UnreachableSegment.
  const EdgeLoads& Segment(NodeIndex from, NodeIndex to) const;

  // Sum of the tunnel's segment loads; an edge reused by several segments
  // accumulates.
  EdgeLoads TunnelLoads(const Tunnel& tunnel) const;

 private:
  const ShortestPathIndex* paths_;
  int n_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::unique_ptr<EdgeLoads>> table_;
};

// Raised when a commodity with positive demand has no usable tunnel.
class NoTunnelError : public Error {
 public:
  NoTunnelError(int commodity, const std::string& description);
  int commodity() const { return commodity_; }

 private:
  int commodity_;
};

// An LP plus the bookkeeping needed to read a TeSolution back out of it.
struct TeProgram {
  Objective objective = Objective::kLinkUtilization;
  bool arc_based = false;
  const FlowNetwork* network = nullptr;
  DemandMatrix demands;
  lp::Problem problem;
  lp::VariableIndex theta = -1;

  // Segment-routing programs: one flow variable per tunnel.
  std::vector<Tunnel> tunnels;
  std::vector<lp::VariableIndex> tunnel_vars;
  std::vector<EdgeLoads> tunnel_loads;
  // Capacity row per edge, -1 where no variable loads the edge.
  std::vector<lp::ConstraintIndex> capacity_rows;

  // Arc-based programs: flows aggregated per source node.
  std::vector<NodeIndex> arc_sources;
  std::vector<std::vector<lp::VariableIndex>> arc_vars;  // [source][edge]
  std::vector<lp::VariableIndex> delivered_vars;         // per commodity (MF)
};

// minimize theta
//   s.t. sum_t load_t(e) f(t) <= theta c(e)   for every edge
//        sum_{t in T_i} f(t) >= D_i           for every commodity
// Throws NoTunnelError when a positive-demand commodity has no tunnel.
TeProgram BuildTeLu(const SegmentLoadCache& loads, const DemandMatrix& demands,
                    const std::vector<std::vector<Tunnel>>& tunnels);

// maximize sum f(t) s.t. loads within capacity and sum_{t in T_i} f(t) <= D_i.
// Commodities without tunnels contribute nothing.
TeProgram BuildTeMf(const SegmentLoadCache& loads, const DemandMatrix& demands,
                    const std::vector<std::vector<Tunnel>>& tunnels);

// Unrestricted multipath (arc-flow) baseline for either objective.
// Commodities sharing a source are aggregated into one single-source flow,
// which leaves the optimum unchanged.
TeProgram BuildMpBaseline(const FlowNetwork& network,
                          const DemandMatrix& demands, Objective objective);

struct TeSolution {
  Objective objective = Objective::kLinkUtilization;
  lp::Status status = lp::Status::kInfeasible;
  double theta = 0;               // LU
  double satisfied_total = 0;     // MF
  double satisfaction_ratio = 0;  // MF; 1 when the total demand is 0
  std::vector<Tunnel> tunnels;
  std::vector<double> tunnel_flows;
  // f(t) / sum of the commodity's flows; 0 for commodities carrying nothing.
  std::vector<double> split_ratios;
  std::vector<double> edge_utilization;  // per edge
  std::vector<NodeIndex> middlepoints;
  double solve_ms = 0;
  int iterations = 0;

  bool optimal() const { return status == lp::Status::kOptimal; }
  double MaxUtilization() const;
  // Middlepoints appearing in some tunnel that carries flow.
  std::vector<NodeIndex> UsedMiddlepoints(double threshold = 1e-9) const;
};

// Solves the program and reconstructs utilizations from the flows. For an
// optimal LU program the reconstructed maximum must match theta within 1e-6
// (scaled by max(1, theta)); anything else raises Error.
TeSolution SolveTe(const TeProgram& program);

// Convenience: enumerate tunnels over `middlepoints`, build and solve.
TeSolution SolveSegmentRouting(const SegmentLoadCache& loads,
                               const DemandMatrix& demands,
                               std::span<const NodeIndex> middlepoints,
                               Objective objective,
                               const TunnelOptions& options = {});

}  // namespace srte

#endif  // SRTE_TE_MODEL_H_
