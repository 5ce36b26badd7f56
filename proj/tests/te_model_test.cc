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
#include <cmath>
#include <functional>
#include <map>

#include "gtest/gtest.h"
#include "srte/generators.h"
#include "test_util.h"

namespace srte {
namespace {

using ::srte::testing::AllShortestPaths;
using ::srte::testing::MakeDemands;
using ::srte::testing::MakeNetwork;

// Bundles a network with the shortest-path structures the solver needs.
struct Instance {
  explicit Instance(FlowNetwork net)
      : network(std::move(net)), paths(network), loads(paths) {}
  FlowNetwork network;
  ShortestPathIndex paths;
  SegmentLoadCache loads;
};

std::vector<NodeIndex> Nodes(const FlowNetwork& net,
                             std::initializer_list<const char*> names) {
  std::vector<NodeIndex> out;
  for (const char* name : names) out.push_back(*net.FindNode(name));
  return out;
}

TEST(TunnelTest, CountsOrderedSequences) {
  const FlowNetwork net = MakeNetwork({{"s", "a"}, {"a", "b"}, {"b", "t"},
                                       {"s", "b"}, {"a", "t"}, {"b", "a"}});
  const ShortestPathIndex paths(net);
  const Commodity c{*net.FindNode("s"), *net.FindNode("t"), 1};
  const auto mps = Nodes(net, {"a", "b"});
  EXPECT_EQ(EnumerateTunnels(paths, c, 0, mps, {1}).size(), 3u);
  const auto two = EnumerateTunnels(paths, c, 0, mps, {2});
  ASSERT_EQ(two.size(), 5u);
  EXPECT_EQ(two[0].Label(net), "s,t");
  EXPECT_EQ(two[1].Label(net), "s,a,t");
  EXPECT_EQ(two[2].Label(net), "s,a,b,t");
  EXPECT_EQ(two[3].Label(net), "s,b,t");
  EXPECT_EQ(two[4].Label(net), "s,b,a,t");
  EXPECT_EQ(two[2].middlepoint_count(), 2);
  EXPECT_EQ(two[2].segments().size(), 3u);
}

TEST(TunnelTest, SkipsEndpointsAndUnreachableSegments) {
  // m is reachable from s but cannot reach t.
  const FlowNetwork net = MakeNetwork({{"s", "t"}, {"s", "m"}});
  const ShortestPathIndex paths(net);
  const Commodity c{0, 1, 1};
  const std::vector<NodeIndex> mps = {0, 1, 2};
  const auto tunnels = EnumerateTunnels(paths, c, 0, mps, {2});
  ASSERT_EQ(tunnels.size(), 1u);
  EXPECT_EQ(tunnels[0].middlepoint_count(), 0);
}

TEST(TunnelTest, EmptyWhenDisconnected) {
  const FlowNetwork net = MakeNetwork({{"s", "m"}, {"t", "m"}});
  const ShortestPathIndex paths(net);
  const Commodity c{*net.FindNode("s"), *net.FindNode("t"), 1};
  const auto mps = Nodes(net, {"m"});
  EXPECT_TRUE(EnumerateTunnels(paths, c, 0, mps, {2}).empty());
}

TEST(TunnelTest, ExactlyOneMiddlepointMode) {
  const FlowNetwork net = MakeNetwork({{"s", "a"}, {"a", "b"}, {"b", "t"},
                                       {"s", "b"}, {"a", "t"}, {"b", "a"}});
  const ShortestPathIndex paths(net);
  const Commodity c{*net.FindNode("s"), *net.FindNode("t"), 1};
  TunnelOptions options;
  options.max_middlepoints = 3;
  options.exactly_one_middlepoint = true;
  const auto tunnels = EnumerateTunnels(paths, c, 0, Nodes(net, {"a", "b"}), options);
  ASSERT_EQ(tunnels.size(), 2u);
  for (const Tunnel& t : tunnels) EXPECT_EQ(t.middlepoint_count(), 1);
}

TEST(TeLuTest, SingleEdgeThetaIsDemandOverCapacity) {
  Instance inst(MakeNetwork({{"s", "t", 4}}));
  const DemandMatrix d = MakeDemands(inst.network, {{"s", "t", 3}});
  const TeSolution sol = SolveSegmentRouting(inst.loads, d, {}, Objective::kLinkUtilization);
  ASSERT_TRUE(sol.optimal());
  EXPECT_NEAR(sol.theta, 0.75, 1e-9);
}

FlowNetwork MiddlepointFixture() {
  return MakeNetwork({{"s", "t", 3}, {"s", "m", 2}, {"m", "t", 2}});
}

TEST(TeLuTest, MiddlepointFixture) {
  Instance inst(MiddlepointFixture());
  const DemandMatrix d = MakeDemands(inst.network, {{"s", "t", 3}});
  const auto mps = Nodes(inst.network, {"m"});
  const TeSolution sol =
      SolveSegmentRouting(inst.loads, d, mps, Objective::kLinkUtilization);
  ASSERT_TRUE(sol.optimal());
  ASSERT_EQ(sol.tunnels.size(), 2u);
  EXPECT_NEAR(sol.theta, 3.0 / 5, 1e-9);
  EXPECT_NEAR(sol.tunnel_flows[0], 9.0 / 5, 1e-9);
  EXPECT_NEAR(sol.tunnel_flows[1], 6.0 / 5, 1e-9);
  EXPECT_NEAR(sol.split_ratios[0], 0.6, 1e-9);
  EXPECT_NEAR(sol.split_ratios[1], 0.4, 1e-9);
  EXPECT_EQ(sol.UsedMiddlepoints(), mps);
}

TEST(TeLuTest, MiddlepointFixtureAgreesWithGridSearch) {
  // theta(x) = max(3 x / 3, 3 (1 - x) / 2) over split ratio x on the direct
  // tunnel, at 1e-4 resolution.
  double best = 1e9;
  for (int i = 0; i <= 10000; ++i) {
    const double x = i * 1e-4;
    best = std::min(best, std::max(3 * x / 3, 3 * (1 - x) / 2));
  }
  Instance inst(MiddlepointFixture());
  const DemandMatrix d = MakeDemands(inst.network, {{"s", "t", 3}});
  const TeSolution sol = SolveSegmentRouting(
      inst.loads, d, Nodes(inst.network, {"m"}), Objective::kLinkUtilization);
  EXPECT_NEAR(sol.theta, best, 1e-4);
}

TEST(TeLuTest, DiamondDirectTunnelSplitsEvenly) {
  Instance inst(MakeNetwork(
      {{"s", "a", 2}, {"a", "t", 2}, {"s", "b", 2}, {"b", "t", 2}}));
  const DemandMatrix d = MakeDemands(inst.network, {{"s", "t", 2}});
  const TeSolution sol = SolveSegmentRouting(inst.loads, d, {}, Objective::kLinkUtilization);
  ASSERT_TRUE(sol.optimal());
  for (double u : sol.edge_utilization) EXPECT_NEAR(u, 0.5, 1e-9);
  EXPECT_NEAR(sol.theta, 0.5, 1e-9);
}

TEST(TeLuTest, WalkLoadsAccumulateOnReusedEdges) {
  // s->m is s,x,m and m->t is m,s,x,t: edge s->x carries the flow twice.
  Instance inst(MakeNetwork({{"s", "x", 10}, {"x", "m", 10}, {"m", "s", 10},
                             {"x", "t", 10}}));
  const Tunnel tunnel{0, Nodes(inst.network, {"s", "m", "t"})};
  const EdgeLoads loads = inst.loads.TunnelLoads(tunnel);
  const EdgeIndex sx = *inst.network.FindEdge(0, 1);
  bool found = false;
  for (const auto& [e, load] : loads) {
    if (e == sx) {
      EXPECT_DOUBLE_EQ(load, 2.0);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(TeLuTest, NoTunnelIsAnError) {
  Instance inst(MakeNetwork({{"s", "m"}, {"t", "m"}}));
  const DemandMatrix d = MakeDemands(inst.network, {{"s", "t", 1}});
  try {
    SolveSegmentRouting(inst.loads, d, {}, Objective::kLinkUtilization);
    FAIL();
  } catch (const NoTunnelError& e) {
    EXPECT_EQ(e.commodity(), 0);
  }
  // MF simply carries nothing.
  const TeSolution mf = SolveSegmentRouting(inst.loads, d, {}, Objective::kMaxFlow);
  ASSERT_TRUE(mf.optimal());
  EXPECT_NEAR(mf.satisfaction_ratio, 0.0, 1e-12);
}

TEST(TeMfTest, DisjointDirectTunnelsAreSatisfied) {
  Instance inst(MakeNetwork({{"a", "b", 5}, {"c", "d", 5}}));
  const DemandMatrix d = MakeDemands(inst.network, {{"a", "b", 3}, {"c", "d", 5}});
  const TeSolution sol = SolveSegmentRouting(inst.loads, d, {}, Objective::kMaxFlow);
  ASSERT_TRUE(sol.optimal());
  EXPECT_NEAR(sol.satisfaction_ratio, 1.0, 1e-9);
  EXPECT_NEAR(sol.satisfied_total, 8.0, 1e-9);
}

TEST(TeMfTest, HalfSatisfiedOnTightEdge) {
  Instance inst(MakeNetwork({{"a", "b", 1}}));
  const DemandMatrix d = MakeDemands(inst.network, {{"a", "b", 2}});
  const TeSolution sol = SolveSegmentRouting(inst.loads, d, {}, Objective::kMaxFlow);
  EXPECT_NEAR(sol.satisfaction_ratio, 0.5, 1e-9);
  EXPECT_NEAR(sol.theta, 1.0, 1e-9);
}

// Independent TE_MF build: per-segment loads recomputed from explicit
// shortest-path lists, then a fresh LP.
double IndependentMf(const FlowNetwork& net, const DemandMatrix& d,
                     const std::vector<std::vector<Tunnel>>& tunnels) {
  lp::Problem p(lp::Sense::kMaximize);
  std::vector<std::map<lp::VariableIndex, double>> rows(net.edge_count());
  for (std::size_t i = 0; i < tunnels.size(); ++i) {
    std::vector<lp::Term> demand_row;
    for (const Tunnel& t : tunnels[i]) {
      const lp::VariableIndex x = p.AddVariable("", 1.0);
      demand_row.push_back({x, 1.0});
      for (std::size_t k = 0; k + 1 < t.waypoints.size(); ++k) {
        const auto sps = AllShortestPaths(net, t.waypoints[k], t.waypoints[k + 1]);
        for (const auto& path : sps) {
          for (EdgeIndex e : path) rows[e][x] += 1.0 / sps.size();
        }
      }
    }
    if (!demand_row.empty()) {
      p.AddConstraint(demand_row, lp::Relation::kLessEqual, d.commodities[i].demand);
    }
  }
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    std::vector<lp::Term> terms;
    for (const auto& [x, c] : rows[e]) terms.push_back({x, c});
    if (!terms.empty()) {
      p.AddConstraint(terms, lp::Relation::kLessEqual, net.edge(e).capacity);
    }
  }
  const lp::Solution s = lp::Solve(p);
  return s.objective_value;
}

TEST(TeMfTest, MatchesIndependentFormulation) {
  Instance inst(RandomDigraph(8, 0.35, 404));
  const DemandMatrix d = GenerateGravityDemands(inst.network, 6, 5).Scaled(2.0);
  const std::vector<NodeIndex> mps = {1, 4, 6};
  const TunnelOptions options{2, false};
  const auto tunnels = EnumerateAllTunnels(inst.paths, d, mps, options);
  const TeSolution sol =
      SolveTe(BuildTeMf(inst.loads, d, tunnels));
  ASSERT_TRUE(sol.optimal());
  EXPECT_NEAR(sol.satisfied_total, IndependentMf(inst.network, d, tunnels), 1e-6);
}

TEST(MpBaselineTest, SinglePathNetworkMatchesSegmentRouting) {
  Instance inst(MakeNetwork({{"a", "b", 4}, {"b", "c", 2}, {"c", "d", 5}}));
  const DemandMatrix d = MakeDemands(inst.network, {{"a", "d", 1}, {"b", "d", 1}});
  const TeSolution mp = SolveTe(BuildMpBaseline(inst.network, d, Objective::kLinkUtilization));
  const std::vector<NodeIndex> mps = {1, 2};
  const TeSolution sr = SolveSegmentRouting(inst.loads, d, mps, Objective::kLinkUtilization);
  ASSERT_TRUE(mp.optimal());
  EXPECT_NEAR(mp.theta, 1.0, 1e-9);
  EXPECT_NEAR(mp.theta, sr.theta, 1e-9);
}

TEST(MpBaselineTest, UnreachableSinkIsInfeasible) {
  const FlowNetwork net = MakeNetwork({{"a", "b"}, {"c", "b"}});
  const DemandMatrix d = MakeDemands(net, {{"a", "c", 1}});
  EXPECT_EQ(SolveTe(BuildMpBaseline(net, d, Objective::kLinkUtilization)).status,
            lp::Status::kInfeasible);
}

TEST(MpBaselineTest, LowerBoundsSegmentRouting) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Instance inst(RandomTopology(10, 30, seed));
    const DemandMatrix d = GenerateGravityDemands(inst.network, 15, seed);
    const TeSolution mp =
        SolveTe(BuildMpBaseline(inst.network, d, Objective::kLinkUtilization));
    const std::vector<NodeIndex> mps = {0, 3, 5};
    const TeSolution sr =
        SolveSegmentRouting(inst.loads, d, mps, Objective::kLinkUtilization, {2});
    ASSERT_TRUE(mp.optimal());
    EXPECT_LE(mp.theta, sr.theta + 1e-9);
    const TeSolution mp_mf = SolveTe(BuildMpBaseline(inst.network, d, Objective::kMaxFlow));
    const TeSolution sr_mf =
        SolveSegmentRouting(inst.loads, d, mps, Objective::kMaxFlow, {2});
    EXPECT_GE(mp_mf.satisfied_total, sr_mf.satisfied_total - 1e-7);
  }
}

// Max multicommodity flow by explicit simple-path enumeration.
double PathLpMaxFlow(const FlowNetwork& net, const DemandMatrix& d) {
  lp::Problem p(lp::Sense::kMaximize);
  std::vector<std::vector<lp::Term>> rows(net.edge_count());
  for (const Commodity& c : d.commodities) {
    std::vector<lp::Term> demand_row;
    std::vector<char> on(net.node_count(), 0);
    std::vector<EdgeIndex> stack;
    std::function<void(NodeIndex)> dfs = [&](NodeIndex u) {
      if (u == c.sink) {
        const lp::VariableIndex x = p.AddVariable("", 1.0);
        demand_row.push_back({x, 1.0});
        for (EdgeIndex e : stack) rows[e].push_back({x, 1.0});
        return;
      }
      on[u] = 1;
      for (EdgeIndex e : net.out_edges(u)) {
        if (on[net.edge(e).head]) continue;
        stack.push_back(e);
        dfs(net.edge(e).head);
        stack.pop_back();
      }
      on[u] = 0;
    };
    dfs(c.source);
    if (!demand_row.empty()) p.AddConstraint(demand_row, lp::Relation::kLessEqual, c.demand);
  }
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    if (!rows[e].empty()) p.AddConstraint(rows[e], lp::Relation::kLessEqual, net.edge(e).capacity);
  }
  if (p.variable_count() == 0) return 0;
  return lp::Solve(p).objective_value;
}

TEST(MpBaselineTest, MaxFlowMatchesPathFormulation) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const FlowNetwork net = RandomDigraph(7, 0.35, seed);
    DemandMatrix d;
    d.commodities = {{0, 6, 3.0}, {2, 5, 2.5}};
    const TeSolution mp = SolveTe(BuildMpBaseline(net, d, Objective::kMaxFlow));
    ASSERT_TRUE(mp.optimal());
    EXPECT_NEAR(mp.satisfied_total, PathLpMaxFlow(net, d), 1e-6) << seed;
  }
}

// Per-commodity arc-flow utilization LP, no aggregation.
double PerCommodityArcTheta(const FlowNetwork& net, const DemandMatrix& d) {
  lp::Problem p;
  const lp::VariableIndex theta = p.AddVariable("theta", 1.0);
  std::vector<std::vector<lp::Term>> capacity(net.edge_count());
  for (const Commodity& c : d.commodities) {
    std::vector<lp::VariableIndex> x(net.edge_count());
    for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
      x[e] = p.AddVariable();
      capacity[e].push_back({x[e], 1.0});
    }
    for (NodeIndex v = 0; v < net.node_count(); ++v) {
      std::vector<lp::Term> balance;
      for (EdgeIndex e : net.out_edges(v)) balance.push_back({x[e], 1.0});
      for (EdgeIndex e : net.in_edges(v)) balance.push_back({x[e], -1.0});
      const double rhs = v == c.source ? c.demand : v == c.sink ? -c.demand : 0.0;
      p.AddConstraint(balance, lp::Relation::kEqual, rhs);
    }
  }
  for (EdgeIndex e = 0; e < net.edge_count(); ++e) {
    capacity[e].push_back({theta, -net.edge(e).capacity});
    p.AddConstraint(capacity[e], lp::Relation::kLessEqual, 0.0);
  }
  const lp::Solution s = lp::Solve(p);
  EXPECT_TRUE(s.optimal());
  EXPECT_LE(p.MaxViolation(s.values), 1e-7);
  return s.objective_value;
}

// Gravity demands on capacity-tiered topologies make these programs highly
// degenerate; this used to stall the solver.
TEST(MpBaselineTest, AggregatedUtilizationMatchesPerCommodityLp) {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const FlowNetwork net = RandomTopology(12, 40, seed);
    const DemandMatrix d = GenerateGravityDemands(net, 25, seed);
    const TeProgram program = BuildMpBaseline(net, d, Objective::kLinkUtilization);
    const TeSolution mp = SolveTe(program);
    ASSERT_TRUE(mp.optimal());
    EXPECT_NEAR(mp.theta, PerCommodityArcTheta(net, d), 1e-7) << seed;
  }
}

TEST(TePropertiesTest, MpMaxFlowMeetsDemandIffThetaAtMostOne) {
  int both = 0;
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const FlowNetwork net = RandomDigraph(7, 0.4, seed);
    const DemandMatrix d = GenerateGravityDemands(net, 3, seed).Scaled(1.5);
    const TeSolution mf = SolveTe(BuildMpBaseline(net, d, Objective::kMaxFlow));
    const TeSolution lu = SolveTe(BuildMpBaseline(net, d, Objective::kLinkUtilization));
    const bool full = mf.satisfied_total >= d.TotalDemand() - 1e-7;
    const bool fits = lu.optimal() && lu.theta <= 1 + 1e-7;
    EXPECT_EQ(full, fits) << seed;
    both += full;
  }
  EXPECT_GT(both, 0);
}

TEST(TePropertiesTest, MonotoneInMiddlepointSetAndM) {
  Instance inst(RandomTopology(12, 36, 77));
  const DemandMatrix d = GenerateGravityDemands(inst.network, 20, 3);
  const std::vector<NodeIndex> small = {2, 7};
  const std::vector<NodeIndex> large = {2, 5, 7, 9};
  const double t_small =
      SolveSegmentRouting(inst.loads, d, small, Objective::kLinkUtilization).theta;
  const double t_large =
      SolveSegmentRouting(inst.loads, d, large, Objective::kLinkUtilization).theta;
  const double t_large_m2 =
      SolveSegmentRouting(inst.loads, d, large, Objective::kLinkUtilization, {2}).theta;
  EXPECT_LE(t_large, t_small + 1e-9);
  EXPECT_LE(t_large_m2, t_large + 1e-9);
}

TEST(TePropertiesTest, DemandScalingScalesTheta) {
  Instance inst(RandomTopology(10, 28, 8));
  const DemandMatrix d = GenerateGravityDemands(inst.network, 12, 8);
  const std::vector<NodeIndex> mps = {1, 4};
  const double base =
      SolveSegmentRouting(inst.loads, d, mps, Objective::kLinkUtilization).theta;
  const double scaled = SolveSegmentRouting(inst.loads, d.Scaled(2.5), mps,
                                            Objective::kLinkUtilization).theta;
  EXPECT_NEAR(scaled, 2.5 * base, 1e-6 * scaled);
}

TEST(TePropertiesTest, UtilizationMatchesCapacityRowActivity) {
  Instance inst(RandomTopology(10, 28, 12));
  const DemandMatrix d = GenerateGravityDemands(inst.network, 12, 4);
  const std::vector<NodeIndex> mps = {0, 6};
  const auto tunnels = EnumerateAllTunnels(inst.paths, d, mps, {2});
  const TeProgram program = BuildTeLu(inst.loads, d, tunnels);
  const lp::Solution raw = lp::Solve(program.problem);
  const TeSolution sol = SolveTe(program);
  ASSERT_TRUE(sol.optimal());
  for (EdgeIndex e = 0; e < inst.network.edge_count(); ++e) {
    const lp::ConstraintIndex row = program.capacity_rows[e];
    if (row < 0) {
      EXPECT_EQ(sol.edge_utilization[e], 0.0);
      continue;
    }
    // Row is sum load f - c theta <= 0, so activity + c theta = edge flow.
    const double flow = program.problem.Activity(row, raw.values) +
                        inst.network.edge(e).capacity * raw.values[program.theta];
    EXPECT_NEAR(sol.edge_utilization[e], flow / inst.network.edge(e).capacity, 1e-6);
  }
  // Split ratios sum to one per commodity.
  std::vector<double> sums(d.commodities.size(), 0.0);
  for (std::size_t t = 0; t < sol.tunnels.size(); ++t) {
    sums[sol.tunnels[t].commodity] += sol.split_ratios[t];
  }
  for (double s : sums) EXPECT_NEAR(s, 1.0, 1e-9);
  EXPECT_NEAR(sol.MaxUtilization(), sol.theta, 1e-6);
}

}  // namespace
}  // namespace srte
