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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each criterion also has a wall-clock budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cli.h"
#include "oracle_suites.h"
#include "srte/centrality.h"
#include "srte/flow_oracles.h"
#include "srte/generators.h"
#include "srte/lp.h"
#include "srte/random.h"
#include "srte/selection.h"
#include "srte/te_model.h"
#include "test_util.h"

namespace srte {
namespace {

using ::srte::testing::BetweennessByCounting;
using ::srte::testing::MakeDemands;
using ::srte::testing::MakeNetwork;
using ::srte::testing::Subsets;

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Instance {
  explicit Instance(FlowNetwork net)
      : network(std::move(net)), paths(network), loads(paths) {}
  FlowNetwork network;
  ShortestPathIndex paths;
  SegmentLoadCache loads;
};

bool Near(double a, double b, double tolerance) {
  return std::abs(a - b) <= tolerance;
}

Verdict HandLp() {
  Verdict v;
  lp::Problem p;
  const auto theta = p.AddVariable("theta", 1.0);
  const auto f1 = p.AddVariable("f1");
  const auto f2 = p.AddVariable("f2");
  p.AddConstraint({{f1, 1.0}, {f2, 1.0}}, lp::Relation::kEqual, 3.0, "demand");
  p.AddConstraint({{f1, 1.0}, {theta, -3.0}}, lp::Relation::kLessEqual, 0.0, "cap1");
  p.AddConstraint({{f2, 1.0}, {theta, -2.0}}, lp::Relation::kLessEqual, 0.0, "cap2");
  const lp::Solution s = lp::Solve(p);
  v.pass = s.optimal() && Near(s.values[theta], 0.6, 1e-6) &&
           Near(s.values[f1], 1.8, 1e-6) && Near(s.values[f2], 1.2, 1e-6);

  Instance inst(MakeNetwork({{"s", "t", 3}, {"s", "m", 2}, {"m", "t", 2}}));
  const DemandMatrix d = MakeDemands(inst.network, {{"s", "t", 3}});
  const NodeIndex m[] = {*inst.network.FindNode("m")};
  const TeSolution sol =
      SolveSegmentRouting(inst.loads, d, m, Objective::kLinkUtilization);
  v.pass = v.pass && sol.optimal() && sol.tunnel_flows.size() == 2 &&
           Near(sol.theta, 3.0 / 5, 1e-6) && Near(sol.tunnel_flows[0], 9.0 / 5, 1e-6) &&
           Near(sol.tunnel_flows[1], 6.0 / 5, 1e-6);
  std::ostringstream detail;
  detail << "split theta=" << s.values[theta] << ", middlepoint theta=" << sol.theta;
  v.detail = detail.str();
  return v;
}

Verdict BetweennessOracle() {
  Verdict v;
  int mismatched = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const int n = 5 + static_cast<int>(seed % 8);  // 5..12 nodes
    const FlowNetwork net = RandomDigraph(n, 0.3, seed);
    for (bool weighted : {false, true}) {
      if (Betweenness(net, weighted).exact != BetweennessByCounting(net, weighted)) {
        ++mismatched;
      }
    }
  }
  v.pass = mismatched == 0;
  v.detail = std::to_string(mismatched) + " of 100 graph/weighting cases differ";
  return v;
}

Verdict MaxFlowMinCut() {
  Verdict v;
  int checks = 0, unequal = 0, fractional = 0;
  std::string first;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FlowNetwork net = RandomDigraph(7, 0.4, seed);
    for (NodeIndex w = 1; w < 6; ++w) {
      ++checks;
      const SwtFlowResult flow = MaxSwtFlow(net, 0, w, 6);
      const SwtCut cut = MinSwtCut(net, 0, w, 6);
      const bool equal = Near(flow.value, ToDouble(cut.capacity), 1e-7);
      if (!equal) ++unequal;
      if (!flow.integral || flow.integral_value != cut.capacity) ++fractional;
      if ((!equal || !flow.integral) && first.empty()) {
        std::ostringstream s;
        s << "seed " << seed << " w=" << net.node_name(w) << ": flow " << flow.value
          << ", integral " << FormatRational(flow.integral_value) << ", cut "
          << FormatRational(cut.capacity);
        first = s.str();
      }
    }
  }
  v.pass = unequal == 0 && fractional == 0;
  v.detail = std::to_string(unequal) + " of " + std::to_string(checks) +
             " flow!=cut, " + std::to_string(fractional) +
             " without an integral optimum at the cut value";
  if (!first.empty()) v.detail += "; first: " + first;
  return v;
}

Verdict Saturation() {
  Verdict v;
  int violations = 0, saturated = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int n = 4 + static_cast<int>(seed % 5);  // 4..8 nodes
    const FlowNetwork net = RandomDigraph(n, 0.35, seed);
    Rng rng(seed * 7919);
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1);
    DemandMatrix d;
    for (std::uint64_t pick : rng.SampleWithoutReplacement(pairs, 1 + rng.Below(3))) {
      NodeIndex s = static_cast<NodeIndex>(pick / (n - 1));
      NodeIndex t = static_cast<NodeIndex>(pick % (n - 1));
      if (t >= s) ++t;
      d.commodities.push_back({s, t, 0.5 + 2.5 * rng.Uniform()});
    }
    const double total = d.TotalDemand();
    const TeSolution mf = SolveTe(BuildMpBaseline(net, d, Objective::kMaxFlow));
    const TeSolution lu = SolveTe(BuildMpBaseline(net, d, Objective::kLinkUtilization));
    const bool full = mf.satisfied_total >= total - 1e-7 * std::max(1.0, total);
    const bool fits = lu.optimal() && lu.theta <= 1 + 1e-7;
    if (full) ++saturated;
    if (full != fits) ++violations;
  }
  v.pass = violations == 0;
  v.detail = std::to_string(violations) + " violations; " + std::to_string(saturated) +
             " of 30 instances fully routable";
  return v;
}

Verdict SelectionOptimality() {
  Verdict v;
  int fixtures = 0, optimal_bad = 0, greedy_bad = 0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Instance inst(RandomTopology(8, 22, seed));
    const DemandMatrix d = GenerateGravityDemands(inst.network, 12, seed).Scaled(20);
    const std::vector<NodeIndex> candidates = {0, 1, 2, 3, 4, 5};
    for (int k = 1; k <= 3; ++k) {
      ++fixtures;
      double best = std::numeric_limits<double>::infinity();
      for (const auto& subset : Subsets(candidates, k)) {
        const TeSolution s =
            SolveSegmentRouting(inst.loads, d, subset, Objective::kLinkUtilization);
        if (s.optimal()) best = std::min(best, s.theta);
      }
      SelectionOptions options;
      const SelectionResult opt = OptimalSelect(inst.loads, d, candidates, k, options);
      const SelectionResult greedy = GreedySelect(inst.loads, d, candidates, k, options);
      if (!Near(opt.solution.theta, best, 1e-9)) ++optimal_bad;
      bool ok = greedy.solution.theta >= opt.solution.theta - 1e-9;
      for (std::size_t i = 1; i < greedy.theta_trace.size(); ++i) {
        ok = ok && greedy.theta_trace[i] <= greedy.theta_trace[i - 1] + 1e-9;
      }
      if (!ok) ++greedy_bad;
    }
  }
  v.pass = optimal_bad == 0 && greedy_bad == 0;
  v.detail = std::to_string(fixtures) + " fixtures; optimal mismatches " +
             std::to_string(optimal_bad) + ", greedy violations " +
             std::to_string(greedy_bad);
  return v;
}

Verdict Submodularity() {
  Verdict v;
  int violations = 0, greedy_bad = 0;
  double worst_ratio = 1;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const FlowNetwork net = RandomDigraph(6, 0.45, seed);
    DemandMatrix d;
    d.commodities = {{0, 5, 2}, {1, 4, 2}};
    const std::vector<NodeIndex> ground = NonEndpointNodes(net, d);
    std::map<std::vector<NodeIndex>, double> gf;
    for (int k = 0; k <= static_cast<int>(ground.size()); ++k) {
      for (const auto& s : Subsets(ground, k)) gf[s] = GroupFlow(net, d, s);
    }
    auto with = [](std::vector<NodeIndex> s, NodeIndex x) {
      s.insert(std::upper_bound(s.begin(), s.end(), x), x);
      return s;
    };
    auto contains = [](const std::vector<NodeIndex>& s, NodeIndex x) {
      return std::binary_search(s.begin(), s.end(), x);
    };
    for (const auto& [a, value] : gf) {
      for (NodeIndex x : ground) {
        if (contains(a, x)) continue;
        const double gain = gf[with(a, x)] - value;
        if (gain < -1e-7) ++violations;
        for (NodeIndex y : ground) {
          if (y == x || contains(a, y)) continue;
          const auto b = with(a, y);
          if (gain < gf[with(b, x)] - gf[b] - 1e-7) ++violations;
        }
      }
    }
    double best = 0;
    for (const auto& pair : Subsets(ground, 2)) best = std::max(best, gf[pair]);
    const double greedy = GreedyGroupFlowSelect(net, d, 2).value();
    if (best > 0) worst_ratio = std::min(worst_ratio, greedy / best);
    if (greedy < (1 - std::exp(-1.0)) * best - 1e-9) ++greedy_bad;
  }
  v.pass = violations == 0 && greedy_bad == 0;
  std::ostringstream s;
  s << violations << " monotonicity/submodularity violations; worst greedy/best "
    << worst_ratio;
  v.detail = s.str();
  return v;
}

Verdict UndirectedEquivalence() {
  Verdict v;
  int checks = 0, bad = 0;
  double worst = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const int n = 4 + static_cast<int>(seed % 3);  // 4..6 nodes
    const UndirectedNetwork net = RandomUndirected(n, 0.5, seed);
    const std::vector<std::vector<UndirectedCommodity>> sets = {
        {{0, n - 1}}, {{0, n - 1}, {1, n - 2}}};
    for (const auto& commodities : sets) {
      for (NodeIndex w = 0; w < n; ++w) {
        bool endpoint = false;
        for (const auto& c : commodities) endpoint |= c.source == w || c.sink == w;
        if (endpoint) continue;
        ++checks;
        const UndirectedSwtResult lp = UndirectedMaxSwt(net, w, commodities);
        const double paths = UndirectedMaxSwtByPaths(net, w, commodities);
        const double gap = std::max(std::abs(lp.value - paths),
                                    std::abs(lp.auxiliary - 2 * paths));
        worst = std::max(worst, gap);
        if (gap > 1e-6) ++bad;
      }
    }
  }
  v.pass = bad == 0 && checks > 0;
  std::ostringstream s;
  s << bad << " of " << checks << " checks differ; max gap " << worst;
  v.detail = s.str();
  return v;
}

Verdict DeskScaleTrends() {
  Verdict v;
  int monotone_bad = 0, nesting_bad = 0, gsp_wins = 0, baseline_bad = 0;
  constexpr int kTopologies = 20;
  for (std::uint64_t seed = 1; seed <= kTopologies; ++seed) {
    Instance inst(RandomTopology(30, 120, seed));
    const DemandMatrix d = GenerateGravityDemands(inst.network, 100, seed);
    const Objective lu = Objective::kLinkUtilization;
    const TeSolution mp = SolveTe(BuildMpBaseline(inst.network, d, lu));
    std::vector<double> all;
    const std::vector<NodeIndex> order =
        GreedyGroupSelect(inst.network, 6, false).order;
    double gsp_sum = 0, previous = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 6; ++k) {
      const std::vector<NodeIndex> mps(order.begin(), order.begin() + k);
      const double theta = SolveSegmentRouting(inst.loads, d, mps, lu).theta;
      if (theta > previous + 1e-9) ++monotone_bad;
      previous = theta;
      gsp_sum += theta;
      all.push_back(theta);
    }
    const std::vector<NodeIndex> four(order.begin(), order.begin() + 4);
    TunnelOptions two;
    two.max_middlepoints = 2;
    const double m1 = SolveSegmentRouting(inst.loads, d, four, lu).theta;
    const double m2 = SolveSegmentRouting(inst.loads, d, four, lu, two).theta;
    if (m2 > m1 + 1e-9) ++nesting_bad;
    all.push_back(m2);
    double random_sum = 0;
    for (std::uint64_t r = 0; r < 5; ++r) {
      for (int k = 1; k <= 6; ++k) {
        const std::vector<NodeIndex> mps = RandomSelect(inst.network, k, 1000 * seed + r);
        const double theta = SolveSegmentRouting(inst.loads, d, mps, lu).theta;
        random_sum += theta;
        all.push_back(theta);
      }
    }
    if (gsp_sum / 6 <= random_sum / 30 + 1e-12) ++gsp_wins;
    for (double theta : all) {
      if (!mp.optimal() || mp.theta > theta + 1e-7 * std::max(1.0, theta)) {
        ++baseline_bad;
        break;
      }
    }
  }
  v.pass = monotone_bad == 0 && nesting_bad == 0 && gsp_wins * 10 >= 7 * kTopologies &&
           baseline_bad == 0;
  v.detail = "(a) " + std::to_string(monotone_bad) + " K-sweep increases, (b) " +
             std::to_string(nesting_bad) + " M-nesting violations, (c) GSP <= random on " +
             std::to_string(gsp_wins) + "/" + std::to_string(kTopologies) +
             ", (d) " + std::to_string(baseline_bad) + " baseline violations";
  return v;
}

Verdict CliDeterminism() {
  const std::string data = SRTE_TESTDATA_DIR;
  const std::string topo = data + "/net10.topo";
  const std::string demands = data + "/net10.demands";
  std::vector<std::vector<std::string>> commands;
  for (const char* method : cli::kMethodNames) {
    for (const char* objective : {"lu", "mf"}) {
      const std::string m = method;
      if (std::string(objective) == "mf" && (m == "optimal" || m == "greedy")) continue;
      commands.push_back({"solve", "--topology", topo, "--demands", demands,
                          "--method", m, "--objective", objective, "--k", "3"});
    }
  }
  commands.push_back({"solve", "--topology", topo, "--flows", "25", "--seed", "3",
                      "--method", "random", "--k", "2", "--m", "2", "--format", "csv"});
  commands.push_back({"sweep", "--topology", topo, "--demands", demands, "--axis", "k",
                      "--values", "1..5", "--method", "gsp"});
  commands.push_back({"sweep", "--topology", topo, "--demands", demands, "--axis", "m",
                      "--values", "1,2", "--method", "sp", "--k", "3"});
  commands.push_back({"sweep", "--topology", topo, "--demands", demands, "--axis",
                      "method", "--values", "random*5,sp,gsp,degree", "--k", "3"});
  for (const char* measure : {"sp", "gsp", "degree", "random"}) {
    commands.push_back({"centrality", "--topology", topo, "--measure", measure,
                        "--seed", "5"});
  }
  for (const char* suite : cli::kSuiteNames) {
    commands.push_back({"oracle", suite, "--trials", "3", "--nodes", "6"});
  }
  Verdict v;
  int differing = 0;
  for (const auto& args : commands) {
    std::ostringstream out1, err1, out2, err2;
    const int c1 = cli::Run(args, out1, err1);
    const int c2 = cli::Run(args, out2, err2);
    if (c1 != c2 || out1.str() != out2.str() || out1.str().empty()) ++differing;
  }
  v.pass = differing == 0;
  v.detail = std::to_string(differing) + " of " + std::to_string(commands.size()) +
             " commands differ between runs";
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Verdict()> run;
};

}  // namespace
}  // namespace srte

int main() {
  using srte::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "hand-lp-exactness", 1, srte::HandLp},
      {2, "betweenness-oracle", 30, srte::BetweennessOracle},
      {3, "maxflow-mincut-integrality", 60, srte::MaxFlowMinCut},
      {4, "arc-flow-biconditional", 60, srte::Saturation},
      {5, "selection-optimality", 120, srte::SelectionOptimality},
      {6, "group-flow-submodularity", 120, srte::Submodularity},
      {7, "undirected-equivalence", 30, srte::UndirectedEquivalence},
      {8, "desk-scale-trends", 600, srte::DeskScaleTrends},
      {9, "cli-determinism", 600, srte::CliDeterminism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    srte::Verdict verdict;
    try {
      verdict = c.run();
    } catch (const std::exception& e) {
      verdict = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      verdict.pass = false;
      verdict.detail += "; over the time budget";
    }
    if (!verdict.pass) ++failed;
    std::printf("criterion %d %-28s %s  %.2fs/%.0fs  %s\n", c.id, c.name,
                verdict.pass ? "PASS" : "FAIL", seconds, c.budget_seconds,
                verdict.detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
