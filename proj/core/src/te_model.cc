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

#include "srte/te_model.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <set>

namespace srte {
namespace {

constexpr double kUtilizationTolerance = 1e-6;

std::vector<NodeIndex> SortedUnique(std::span<const NodeIndex> nodes) {
  std::vector<NodeIndex> out(nodes.begin(), nodes.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void AppendTunnels(const ShortestPathIndex& paths, const Commodity& commodity,
                   int commodity_index, const std::vector<NodeIndex>& candidates,
                   int remaining, std::vector<NodeIndex>& waypoints,
                   std::vector<char>& used, bool emit_here,
                   std::vector<Tunnel>& out) {
  const NodeIndex last = waypoints.back();
  if (emit_here && paths.Reachable(last, commodity.sink)) {
    Tunnel tunnel{commodity_index, waypoints};
    tunnel.waypoints.push_back(commodity.sink);
    out.push_back(std::move(tunnel));
  }
  if (remaining == 0) return;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const NodeIndex m = candidates[i];
    if (used[i] || m == last || !paths.Reachable(last, m)) continue;
    used[i] = 1;
    waypoints.push_back(m);
    AppendTunnels(paths, commodity, commodity_index, candidates, remaining - 1,
                  waypoints, used, /*emit_here=*/true, out);
    waypoints.pop_back();
    used[i] = 0;
  }
}

void Accumulate(EdgeLoads& into, const EdgeLoads& from, double factor) {
  for (const auto& [e, x] : from) into.emplace_back(e, x * factor);
}

EdgeLoads Merge(EdgeLoads loads) {
  std::sort(loads.begin(), loads.end());
  EdgeLoads merged;
  for (const auto& [e, x] : loads) {
    if (!merged.empty() && merged.back().first == e) {
      merged.back().second += x;
    } else {
      merged.emplace_back(e, x);
    }
  }
  return merged;
}

void FillCapacityRows(TeProgram& program, bool with_theta) {
  const FlowNetwork& network = *program.network;
  std::vector<std::vector<lp::Term>> per_edge(network.edge_count());
  for (std::size_t t = 0; t < program.tunnels.size(); ++t) {
    for (const auto& [e, x] : program.tunnel_loads[t]) {
      per_edge[e].push_back(lp::Term{program.tunnel_vars[t], x});
    }
  }
  program.capacity_rows.assign(network.edge_count(), -1);
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    if (per_edge[e].empty()) continue;
    double rhs = network.edge(e).capacity;
    if (with_theta) {
      per_edge[e].push_back(lp::Term{program.theta, -rhs});
      rhs = 0;
    }
    program.capacity_rows[e] = program.problem.AddConstraint(
        std::move(per_edge[e]), lp::Relation::kLessEqual, rhs,
        "cap_" + network.EdgeLabel(e));
  }
}

TeProgram BuildSegmentProgram(const SegmentLoadCache& loads,
                              const DemandMatrix& demands,
                              const std::vector<std::vector<Tunnel>>& tunnels,
                              Objective objective) {
  if (tunnels.size() != demands.commodities.size()) {
    throw InvalidArgument("need one tunnel list per commodity");
  }
  const FlowNetwork& network = loads.paths().network();
  const bool lu = objective == Objective::kLinkUtilization;
  TeProgram program;
  program.objective = objective;
  program.network = &network;
  program.demands = demands;
  program.problem.set_sense(lu ? lp::Sense::kMinimize : lp::Sense::kMaximize);
  if (lu) program.theta = program.problem.AddVariable("theta", 1.0);

  std::vector<std::vector<lp::Term>> demand_terms(demands.commodities.size());
  for (std::size_t i = 0; i < tunnels.size(); ++i) {
    const Commodity& c = demands.commodities[i];
    if (lu && c.demand > 0 && tunnels[i].empty()) {
      throw NoTunnelError(static_cast<int>(i),
                          network.node_name(c.source) + "->" +
                              network.node_name(c.sink));
    }
    for (const Tunnel& tunnel : tunnels[i]) {
      lp::VariableIndex var = program.problem.AddVariable(
          "f_" + tunnel.Label(network), lu ? 0.0 : 1.0);
      program.tunnels.push_back(tunnel);
      program.tunnel_vars.push_back(var);
      program.tunnel_loads.push_back(loads.TunnelLoads(tunnel));
      demand_terms[i].push_back(lp::Term{var, 1.0});
    }
  }
  FillCapacityRows(program, lu);
  for (std::size_t i = 0; i < demand_terms.size(); ++i) {
    const Commodity& c = demands.commodities[i];
    if (demand_terms[i].empty()) continue;
    const std::string label = "demand_" + network.node_name(c.source) + "->" +
                              network.node_name(c.sink);
    if (lu) {
      if (c.demand > 0) {
        program.problem.AddConstraint(std::move(demand_terms[i]),
                                      lp::Relation::kGreaterEqual, c.demand,
                                      label);
      }
    } else {
      program.problem.AddConstraint(std::move(demand_terms[i]),
                                    lp::Relation::kLessEqual, c.demand, label);
    }
  }
  return program;
}

}  // namespace

std::string_view ObjectiveName(Objective objective) {
  return objective == Objective::kLinkUtilization ? "lu" : "mf";
}

std::vector<std::pair<NodeIndex, NodeIndex>> Tunnel::segments() const {
  std::vector<std::pair<NodeIndex, NodeIndex>> out;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    out.emplace_back(waypoints[i], waypoints[i + 1]);
  }
  return out;
}

std::string Tunnel::Label(const FlowNetwork& network) const {
  std::string label;
  for (std::size_t i = 0; i < waypoints.size(); ++i) {
    if (i) label += ",";
    label += network.node_name(waypoints[i]);
  }
  return label;
}

std::vector<Tunnel> EnumerateTunnels(const ShortestPathIndex& paths,
                                     const Commodity& commodity,
                                     int commodity_index,
                                     std::span<const NodeIndex> middlepoints,
                                     const TunnelOptions& options) {
  if (options.max_middlepoints < 0) {
    throw InvalidArgument("max_middlepoints must be non-negative");
  }
  const int n = paths.network().node_count();
  std::vector<NodeIndex> candidates;
  for (NodeIndex m : SortedUnique(middlepoints)) {
    if (m < 0 || m >= n) throw InvalidArgument("middlepoint out of range");
    if (m != commodity.source && m != commodity.sink) candidates.push_back(m);
  }
  const int depth = options.exactly_one_middlepoint ? 1 : options.max_middlepoints;
  std::vector<Tunnel> out;
  std::vector<NodeIndex> waypoints{commodity.source};
  std::vector<char> used(candidates.size(), 0);
  AppendTunnels(paths, commodity, commodity_index, candidates, depth,
                waypoints, used, !options.exactly_one_middlepoint, out);
  if (options.exactly_one_middlepoint) {
    std::erase_if(out, [](const Tunnel& t) { return t.middlepoint_count() != 1; });
  }
  return out;
}

std::vector<std::vector<Tunnel>> EnumerateAllTunnels(
    const ShortestPathIndex& paths, const DemandMatrix& demands,
    std::span<const NodeIndex> middlepoints, const TunnelOptions& options) {
  std::vector<std::vector<Tunnel>> all;
  all.reserve(demands.commodities.size());
  for (std::size_t i = 0; i < demands.commodities.size(); ++i) {
    all.push_back(EnumerateTunnels(paths, demands.commodities[i],
                                   static_cast<int>(i), middlepoints, options));
  }
  return all;
}

SegmentLoadCache::SegmentLoadCache(const ShortestPathIndex& paths)
    : paths_(&paths), n_(paths.network().node_count()) {
  table_.resize(static_cast<std::size_t>(n_) * n_);
}

const EdgeLoads& SegmentLoadCache::Segment(NodeIndex from, NodeIndex to) const {
  const std::size_t slot = static_cast<std::size_t>(from) * n_ + to;
  {
    std::shared_lock lock(mutex_);
    if (table_[slot]) return *table_[slot];
  }
  SegmentFractions exact = paths_->Fractions(from, to);
  auto loads = std::make_unique<EdgeLoads>();
  for (const auto& [e, fraction] : exact.fraction) {
    loads->emplace_back(e, ToDouble(fraction));
  }
  std::unique_lock lock(mutex_);
  if (!table_[slot]) table_[slot] = std::move(loads);
  return *table_[slot];
}

EdgeLoads SegmentLoadCache::TunnelLoads(const Tunnel& tunnel) const {
  EdgeLoads loads;
  for (const auto& [u, v] : tunnel.segments()) {
    Accumulate(loads, Segment(u, v), 1.0);
  }
  return Merge(std::move(loads));
}

NoTunnelError::NoTunnelError(int commodity, const std::string& description)
    : Error("no tunnel connects commodity " + description),
      commodity_(commodity) {}

TeProgram BuildTeLu(const SegmentLoadCache& loads, const DemandMatrix& demands,
                    const std::vector<std::vector<Tunnel>>& tunnels) {
  return BuildSegmentProgram(loads, demands, tunnels,
                             Objective::kLinkUtilization);
}

TeProgram BuildTeMf(const SegmentLoadCache& loads, const DemandMatrix& demands,
                    const std::vector<std::vector<Tunnel>>& tunnels) {
  return BuildSegmentProgram(loads, demands, tunnels, Objective::kMaxFlow);
}

TeProgram BuildMpBaseline(const FlowNetwork& network,
                          const DemandMatrix& demands, Objective objective) {
  const bool lu = objective == Objective::kLinkUtilization;
  TeProgram program;
  program.objective = objective;
  program.arc_based = true;
  program.network = &network;
  program.demands = demands;
  program.problem.set_sense(lu ? lp::Sense::kMinimize : lp::Sense::kMaximize);
  if (lu) program.theta = program.problem.AddVariable("theta", 1.0);

  // Group commodities by source; zero-demand commodities never need flow.
  std::map<NodeIndex, std::vector<int>> by_source;
  for (std::size_t i = 0; i < demands.commodities.size(); ++i) {
    if (demands.commodities[i].demand > 0) {
      by_source[demands.commodities[i].source].push_back(static_cast<int>(i));
    }
  }
  program.delivered_vars.assign(demands.commodities.size(), -1);
  const int n = network.node_count();
  const int m = network.edge_count();
  std::vector<std::vector<lp::Term>> capacity_terms(m);
  for (const auto& [source, members] : by_source) {
    const std::string tag = network.node_name(source);
    std::vector<lp::VariableIndex> vars(m);
    for (EdgeIndex e = 0; e < m; ++e) {
      vars[e] = program.problem.AddVariable("x_" + tag + "_" + network.EdgeLabel(e));
      capacity_terms[e].push_back(lp::Term{vars[e], 1.0});
    }
    // Net inflow at each non-source node equals what it receives.
    std::vector<std::vector<lp::Term>> sink_terms(n);
    std::vector<double> sink_rhs(n, 0.0);
    for (int i : members) {
      const Commodity& c = demands.commodities[i];
      if (lu) {
        sink_rhs[c.sink] += c.demand;
      } else {
        lp::VariableIndex d = program.problem.AddVariable(
            "d_" + tag + "->" + network.node_name(c.sink), 1.0, 0.0, c.demand);
        program.delivered_vars[i] = d;
        sink_terms[c.sink].push_back(lp::Term{d, -1.0});
      }
    }
    for (NodeIndex v = 0; v < n; ++v) {
      if (v == source) continue;
      std::vector<lp::Term> terms = std::move(sink_terms[v]);
      for (EdgeIndex e : network.in_edges(v)) terms.push_back(lp::Term{vars[e], 1.0});
      for (EdgeIndex e : network.out_edges(v)) terms.push_back(lp::Term{vars[e], -1.0});
      if (terms.empty() && sink_rhs[v] == 0) continue;
      program.problem.AddConstraint(std::move(terms), lp::Relation::kEqual,
                                    sink_rhs[v],
                                    "flow_" + tag + "_" + network.node_name(v));
    }
    program.arc_sources.push_back(source);
    program.arc_vars.push_back(std::move(vars));
  }
  program.capacity_rows.assign(m, -1);
  for (EdgeIndex e = 0; e < m; ++e) {
    if (capacity_terms[e].empty()) continue;
    double rhs = network.edge(e).capacity;
    if (lu) {
      capacity_terms[e].push_back(lp::Term{program.theta, -rhs});
      rhs = 0;
    }
    program.capacity_rows[e] = program.problem.AddConstraint(
        std::move(capacity_terms[e]), lp::Relation::kLessEqual, rhs,
        "cap_" + network.EdgeLabel(e));
  }
  return program;
}

double TeSolution::MaxUtilization() const {
  double worst = 0;
  for (double u : edge_utilization) worst = std::max(worst, u);
  return worst;
}

std::vector<NodeIndex> TeSolution::UsedMiddlepoints(double threshold) const {
  std::set<NodeIndex> used;
  for (std::size_t t = 0; t < tunnels.size(); ++t) {
    if (tunnel_flows[t] <= threshold) continue;
    const auto& w = tunnels[t].waypoints;
    for (std::size_t i = 1; i + 1 < w.size(); ++i) used.insert(w[i]);
  }
  return {used.begin(), used.end()};
}

TeSolution SolveTe(const TeProgram& program) {
  const FlowNetwork& network = *program.network;
  TeSolution solution;
  solution.objective = program.objective;
  solution.tunnels = program.tunnels;

  const auto start = std::chrono::steady_clock::now();
  lp::Solution lp_solution = lp::Solve(program.problem);
  solution.solve_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  solution.status = lp_solution.status;
  solution.iterations = lp_solution.iterations;
  solution.edge_utilization.assign(network.edge_count(), 0.0);
  if (!lp_solution.optimal()) return solution;
  const std::vector<double>& x = lp_solution.values;

  std::vector<double> edge_flow(network.edge_count(), 0.0);
  if (program.arc_based) {
    for (const auto& vars : program.arc_vars) {
      for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
        edge_flow[e] += std::max(0.0, x[vars[e]]);
      }
    }
  } else {
    solution.tunnel_flows.resize(program.tunnels.size());
    std::vector<double> commodity_total(program.demands.commodities.size(), 0.0);
    for (std::size_t t = 0; t < program.tunnels.size(); ++t) {
      const double f = std::max(0.0, x[program.tunnel_vars[t]]);
      solution.tunnel_flows[t] = f;
      commodity_total[program.tunnels[t].commodity] += f;
      for (const auto& [e, load] : program.tunnel_loads[t]) {
        edge_flow[e] += f * load;
      }
    }
    solution.split_ratios.resize(program.tunnels.size());
    for (std::size_t t = 0; t < program.tunnels.size(); ++t) {
      const double total = commodity_total[program.tunnels[t].commodity];
      solution.split_ratios[t] = total > 0 ? solution.tunnel_flows[t] / total : 0.0;
    }
  }
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    solution.edge_utilization[e] = edge_flow[e] / network.edge(e).capacity;
  }

  const double total_demand = program.demands.TotalDemand();
  if (program.objective == Objective::kLinkUtilization) {
    solution.theta = x[program.theta];
    const double recomputed = solution.MaxUtilization();
    if (std::abs(recomputed - solution.theta) >
        kUtilizationTolerance * std::max(1.0, solution.theta)) {
      throw Error("reconstructed max utilization " + std::to_string(recomputed) +
                  " disagrees with theta " + std::to_string(solution.theta));
    }
    solution.satisfied_total = total_demand;
    solution.satisfaction_ratio = 1.0;
  } else {
    solution.satisfied_total = lp_solution.objective_value;
    solution.satisfaction_ratio =
        total_demand > 0 ? solution.satisfied_total / total_demand : 1.0;
    solution.theta = solution.MaxUtilization();
  }
  return solution;
}

TeSolution SolveSegmentRouting(const SegmentLoadCache& loads,
                               const DemandMatrix& demands,
                               std::span<const NodeIndex> middlepoints,
                               Objective objective,
                               const TunnelOptions& options) {
  auto tunnels =
      EnumerateAllTunnels(loads.paths(), demands, middlepoints, options);
  TeProgram program = objective == Objective::kLinkUtilization
                          ? BuildTeLu(loads, demands, tunnels)
                          : BuildTeMf(loads, demands, tunnels);
  TeSolution solution = SolveTe(program);
  solution.middlepoints = SortedUnique(middlepoints);
  return solution;
}

}  // namespace srte
