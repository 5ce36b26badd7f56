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

#include "oracle_suites.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>

#include "csv.h"
#include "srte/centrality.h"
#include "srte/flow_oracles.h"
#include "srte/generators.h"
#include "srte/random.h"
#include "srte/te_model.h"

namespace srte::cli {
namespace {

const char* Verdict(bool ok) { return ok ? "pass" : "fail"; }

void Add(SuiteReport& report, std::vector<std::string> row, bool ok) {
  row.insert(row.begin() + 2, Verdict(ok));
  report.rows.push_back(std::move(row));
  if (!ok) ++report.failures;
}

void RequireNodes(const SuiteOptions& options, int minimum, int maximum) {
  if (options.nodes < minimum || options.nodes > maximum) {
    throw InvalidArgument("--nodes must lie in [" + std::to_string(minimum) +
                          ", " + std::to_string(maximum) + "]");
  }
}

SuiteReport MaxFlowMinCut(const SuiteOptions& options) {
  RequireNodes(options, 3, 9);
  SuiteReport report;
  report.header = {"trial", "seed", "result", "w", "flow", "cut", "integral"};
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = options.seed + trial;
    const FlowNetwork net = RandomDigraph(options.nodes, 0.4, seed);
    const NodeIndex s = 0, t = options.nodes - 1;
    for (NodeIndex w = 1; w < t; ++w) {
      const SwtFlowResult flow = MaxSwtFlow(net, s, w, t);
      const SwtCut cut = MinSwtCut(net, s, w, t);
      const bool ok = flow.integral && flow.integral_value == cut.capacity &&
                      std::abs(flow.value - ToDouble(cut.capacity)) <= 1e-7;
      Add(report,
          {std::to_string(trial), std::to_string(seed), net.node_name(w),
           FormatRational(flow.integral_value), FormatRational(cut.capacity),
           flow.integral ? "yes" : "no"},
          ok);
    }
  }
  return report;
}

// Counts monotonicity and submodularity violations of GF over every subset
// of the non-endpoint nodes.
int SubmodularityViolations(const FlowNetwork& net, const DemandMatrix& demands,
                            const std::vector<NodeIndex>& ground) {
  const int size = static_cast<int>(ground.size());
  std::vector<double> gf(std::size_t{1} << size);
  for (std::size_t mask = 0; mask < gf.size(); ++mask) {
    std::vector<NodeIndex> group;
    for (int i = 0; i < size; ++i) {
      if (mask >> i & 1) group.push_back(ground[i]);
    }
    gf[mask] = GroupFlow(net, demands, group);
  }
  int violations = 0;
  for (std::size_t a = 0; a < gf.size(); ++a) {
    for (int x = 0; x < size; ++x) {
      if (a >> x & 1) continue;
      const double gain = gf[a | std::size_t{1} << x] - gf[a];
      if (gain < -1e-7) ++violations;
      for (int y = 0; y < size; ++y) {
        if (y == x || (a >> y & 1)) continue;
        const std::size_t b = a | std::size_t{1} << y;
        if (gain < gf[b | std::size_t{1} << x] - gf[b] - 1e-7) ++violations;
      }
    }
  }
  return violations;
}

SuiteReport Submodularity(const SuiteOptions& options) {
  RequireNodes(options, 4, 8);
  SuiteReport report;
  report.header = {"trial", "seed", "result", "violations", "greedy2", "best2"};
  const double bound = 1 - std::exp(-1.0);
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = options.seed + trial;
    const FlowNetwork net = RandomDigraph(options.nodes, 0.45, seed);
    DemandMatrix demands;
    demands.commodities = {{0, options.nodes - 1, 2},
                           {1, options.nodes - 2, 2}};
    const std::vector<NodeIndex> ground = NonEndpointNodes(net, demands);
    const int violations = SubmodularityViolations(net, demands, ground);
    double best = 0;
    for (std::size_t i = 0; i < ground.size(); ++i) {
      for (std::size_t j = i + 1; j < ground.size(); ++j) {
        const NodeIndex pair[] = {ground[i], ground[j]};
        best = std::max(best, GroupFlow(net, demands, pair));
      }
    }
    const double greedy = GreedyGroupFlowSelect(net, demands, 2).value();
    Add(report,
        {std::to_string(trial), std::to_string(seed),
         std::to_string(violations), CsvNumber(greedy), CsvNumber(best)},
        violations == 0 && greedy >= bound * best - 1e-9);
  }
  return report;
}

SuiteReport Saturation(const SuiteOptions& options) {
  RequireNodes(options, 2, 30);
  SuiteReport report;
  report.header = {"trial", "seed", "result", "max_flow", "demand", "theta"};
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = options.seed + trial;
    const FlowNetwork net = RandomDigraph(options.nodes, 0.35, seed);
    Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
    const std::uint64_t n = options.nodes;
    const int count = static_cast<int>(std::min<std::uint64_t>(
        1 + rng.Below(3), n * (n - 1)));
    DemandMatrix demands;
    for (std::uint64_t pick : rng.SampleWithoutReplacement(n * (n - 1), count)) {
      const NodeIndex s = static_cast<NodeIndex>(pick / (n - 1));
      NodeIndex t = static_cast<NodeIndex>(pick % (n - 1));
      if (t >= s) ++t;
      demands.commodities.push_back({s, t, 1.0 + rng.Below(3)});
    }
    const double total = demands.TotalDemand();
    const TeSolution mf =
        SolveTe(BuildMpBaseline(net, demands, Objective::kMaxFlow));
    const TeSolution lu =
        SolveTe(BuildMpBaseline(net, demands, Objective::kLinkUtilization));
    const bool saturates = mf.satisfied_total >= total - 1e-7 * std::max(1.0, total);
    const bool fits = lu.optimal() && lu.theta <= 1 + 1e-7;
    Add(report,
        {std::to_string(trial), std::to_string(seed), CsvNumber(mf.satisfied_total),
         CsvNumber(total), lu.optimal() ? CsvNumber(lu.theta) : "infeasible"},
        saturates == fits);
  }
  return report;
}

// Per-source shortest path counts: exact distances by Bellman-Ford, then
// counts accumulated in order of distance.
std::vector<Rational> CountingBetweenness(const FlowNetwork& net, bool weighted) {
  const int n = net.node_count();
  auto cost = [&](const Edge& e) {
    return weighted ? Rational(1) / e.exact_capacity : e.cost;
  };
  std::vector<std::vector<std::optional<Rational>>> dist(n);
  std::vector<std::vector<BigInt>> sigma(n, std::vector<BigInt>(n, 0));
  for (NodeIndex s = 0; s < n; ++s) {
    dist[s].assign(n, std::nullopt);
    dist[s][s] = Rational(0);
    for (int round = 0; round < n; ++round) {
      for (const Edge& e : net.edges()) {
        if (!dist[s][e.tail]) continue;
        const Rational d = *dist[s][e.tail] + cost(e);
        if (!dist[s][e.head] || d < *dist[s][e.head]) dist[s][e.head] = d;
      }
    }
    std::vector<NodeIndex> order;
    for (NodeIndex v = 0; v < n; ++v) {
      if (dist[s][v]) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(), [&](NodeIndex a, NodeIndex b) {
      return *dist[s][a] < *dist[s][b];
    });
    sigma[s][s] = 1;
    for (NodeIndex v : order) {
      for (const Edge& e : net.edges()) {
        if (e.head == v && dist[s][e.tail] &&
            *dist[s][e.tail] + cost(e) == *dist[s][v]) {
          sigma[s][v] += sigma[s][e.tail];
        }
      }
    }
  }
  std::vector<Rational> delta(n, Rational(0));
  for (NodeIndex s = 0; s < n; ++s) {
    for (NodeIndex t = 0; t < n; ++t) {
      if (s == t || !dist[s][t]) continue;
      for (NodeIndex v = 0; v < n; ++v) {
        if (v == s || v == t || !dist[s][v] || !dist[v][t]) continue;
        if (*dist[s][v] + *dist[v][t] != *dist[s][t]) continue;
        delta[v] += Rational(sigma[s][v] * sigma[v][t], sigma[s][t]);
      }
    }
  }
  return delta;
}

SuiteReport BetweennessSuite(const SuiteOptions& options) {
  RequireNodes(options, 2, 40);
  SuiteReport report;
  report.header = {"trial", "seed", "result", "weighted", "mismatches"};
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = options.seed + trial;
    const FlowNetwork net = RandomDigraph(options.nodes, 0.3, seed);
    for (bool weighted : {false, true}) {
      const std::vector<Rational> brandes = Betweenness(net, weighted).exact;
      const std::vector<Rational> counted = CountingBetweenness(net, weighted);
      int mismatches = 0;
      for (std::size_t v = 0; v < brandes.size(); ++v) {
        if (brandes[v] != counted[v]) ++mismatches;
      }
      Add(report,
          {std::to_string(trial), std::to_string(seed), weighted ? "yes" : "no",
           std::to_string(mismatches)},
          mismatches == 0);
    }
  }
  return report;
}

SuiteReport Undirected(const SuiteOptions& options) {
  RequireNodes(options, 4, 7);
  SuiteReport report;
  report.header = {"trial",    "seed",      "result",   "w",
                   "lp_value", "path_value", "auxiliary"};
  for (int trial = 0; trial < options.trials; ++trial) {
    const std::uint64_t seed = options.seed + trial;
    const UndirectedNetwork net = RandomUndirected(options.nodes, 0.5, seed);
    const UndirectedCommodity commodities[] = {{0, options.nodes - 1},
                                               {1, options.nodes - 2}};
    for (NodeIndex w = 2; w < options.nodes - 2; ++w) {
      const UndirectedSwtResult lp = UndirectedMaxSwt(net, w, commodities);
      const double paths = UndirectedMaxSwtByPaths(net, w, commodities);
      const bool ok = std::abs(lp.value - paths) <= 1e-6 &&
                      std::abs(lp.auxiliary - 2 * paths) <= 1e-6;
      Add(report,
          {std::to_string(trial), std::to_string(seed), net.node_name(w),
           CsvNumber(lp.value), CsvNumber(paths), CsvNumber(lp.auxiliary)},
          ok);
    }
  }
  return report;
}

}  // namespace

SuiteReport RunSuite(std::string_view name, const SuiteOptions& options) {
  if (options.trials < 1) throw InvalidArgument("--trials must be positive");
  if (name == "maxflow-mincut") return MaxFlowMinCut(options);
  if (name == "submodularity") return Submodularity(options);
  if (name == "saturation") return Saturation(options);
  if (name == "betweenness") return BetweennessSuite(options);
  if (name == "undirected") return Undirected(options);
  throw InvalidArgument("unknown oracle suite '" + std::string(name) + "'");
}

}  // namespace srte::cli
