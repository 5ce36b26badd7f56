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

#include "srte/flow_oracles.h"

#include <algorithm>
#include <bitset>
#include <cmath>
#include <deque>
#include <functional>
#include <map>
#include <optional>

#include "srte/lp.h"
#include "srte/parallel.h"
#include "srte/random.h"

namespace srte {
namespace {

constexpr int kMaxCutEdges = 256;
constexpr double kIntegralTolerance = 1e-7;
constexpr long kMaxBranchNodes = 200000;

using EdgeSet = std::bitset<kMaxCutEdges>;

void CheckNodeCap(int node_count, const OracleLimits& limits) {
  if (node_count > limits.max_nodes) {
    throw SizeLimitExceeded("oracle limited to " +
                            std::to_string(limits.max_nodes) + " nodes");
  }
}

void CheckNode(int node_count, NodeIndex v) {
  if (v < 0 || v >= node_count) throw InvalidArgument("node out of range");
}

bool IsInteger(const Rational& value) {
  return boost::multiprecision::denominator(value) == 1;
}

// Paths of one commodity, filtered and ready for a path LP.
struct PathSet {
  std::vector<FlowPath> paths;
  double cap = lp::kInfinity;
};

// maximize sum x_p subject to edge capacities and per-set caps.
lp::Problem BuildPathLp(const FlowNetwork& network,
                        const std::vector<PathSet>& sets) {
  lp::Problem problem(lp::Sense::kMaximize);
  std::vector<std::vector<lp::Term>> rows(network.edge_count());
  for (const PathSet& set : sets) {
    std::vector<lp::Term> demand_row;
    for (const FlowPath& path : set.paths) {
      const lp::VariableIndex x = problem.AddVariable("", 1.0);
      demand_row.push_back({x, 1.0});
      for (EdgeIndex e : path.edges) rows[e].push_back({x, 1.0});
    }
    if (std::isfinite(set.cap) && !demand_row.empty()) {
      problem.AddConstraint(std::move(demand_row), lp::Relation::kLessEqual,
                            set.cap);
    }
  }
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    if (!rows[e].empty()) {
      problem.AddConstraint(std::move(rows[e]), lp::Relation::kLessEqual,
                            network.edge(e).capacity);
    }
  }
  return problem;
}

double SolvePathLp(const FlowNetwork& network, const std::vector<PathSet>& sets) {
  const lp::Problem problem = BuildPathLp(network, sets);
  if (problem.variable_count() == 0) return 0;
  const lp::Solution solution = lp::Solve(problem);
  if (!solution.optimal()) throw Error("path LP not optimal");
  return std::max(0.0, solution.objective_value);
}

// Depth-first branch and bound for an integral path packing. Bounds come
// from the LP relaxation with tightened variable bounds.
class IntegralPacking {
 public:
  explicit IntegralPacking(lp::Problem problem) : problem_(std::move(problem)) {}

  // Returns the best integral objective and fills `best_values`.
  long Run(long root_bound) {
    root_bound_ = root_bound;
    const int n = problem_.variable_count();
    std::vector<double> lower(n, 0.0), upper(n, lp::kInfinity);
    Explore(lower, upper);
    return best_;
  }

  const std::vector<long>& best_values() const { return best_values_; }
  bool exhausted() const { return nodes_ > kMaxBranchNodes; }

 private:
  void Explore(std::vector<double>& lower, std::vector<double>& upper) {
    if (best_ >= root_bound_ || ++nodes_ > kMaxBranchNodes) return;
    for (int j = 0; j < problem_.variable_count(); ++j) {
      problem_.SetBounds(j, lower[j], upper[j]);
    }
    const lp::Solution solution = lp::Solve(problem_);
    if (!solution.optimal()) return;
    const long bound =
        static_cast<long>(std::floor(solution.objective_value + kIntegralTolerance));
    if (bound <= best_) return;

    int branch = -1;
    double worst = kIntegralTolerance;
    for (int j = 0; j < problem_.variable_count(); ++j) {
      const double x = solution.values[j];
      const double frac = std::abs(x - std::round(x));
      if (frac > worst) {
        worst = frac;
        branch = j;
      }
    }
    if (branch < 0) {
      best_ = 0;
      best_values_.assign(problem_.variable_count(), 0);
      for (int j = 0; j < problem_.variable_count(); ++j) {
        best_values_[j] = std::lround(solution.values[j]);
        best_ += best_values_[j];
      }
      return;
    }
    const double x = solution.values[branch];
    const double saved_lower = lower[branch];
    const double saved_upper = upper[branch];
    lower[branch] = std::ceil(x);
    Explore(lower, upper);
    lower[branch] = saved_lower;
    upper[branch] = std::floor(x);
    Explore(lower, upper);
    upper[branch] = saved_upper;
  }

  lp::Problem problem_;
  long root_bound_ = 0;
  long best_ = -1;
  long nodes_ = 0;
  std::vector<long> best_values_;
};

std::vector<FlowPath> SwtPaths(const FlowNetwork& network, NodeIndex s,
                               NodeIndex w, NodeIndex t,
                               const OracleLimits& limits) {
  CheckNode(network.node_count(), s);
  CheckNode(network.node_count(), w);
  CheckNode(network.node_count(), t);
  if (s == w || w == t || s == t) {
    throw InvalidArgument("s, w and t must be distinct");
  }
  std::vector<FlowPath> all = EnumeratePaths(network, s, t, limits);
  std::vector<FlowPath> through;
  for (FlowPath& path : all) {
    if (path.Visits(network, w)) through.push_back(std::move(path));
  }
  return through;
}

// Commodity paths visiting the group (all paths when `group` is null).
std::vector<PathSet> CommodityPathSets(const FlowNetwork& network,
                                       const DemandMatrix& demands,
                                       const std::vector<NodeIndex>* group,
                                       const OracleLimits& limits) {
  CheckNodeCap(network.node_count(), limits);
  std::vector<PathSet> sets;
  long total = 0;
  for (const Commodity& c : demands.commodities) {
    if (c.demand <= 0) continue;
    PathSet set;
    set.cap = c.demand;
    for (FlowPath& path : EnumeratePaths(network, c.source, c.sink, limits)) {
      bool keep = group == nullptr;
      if (!keep) {
        for (NodeIndex v : *group) keep = keep || path.Visits(network, v);
      }
      if (keep) set.paths.push_back(std::move(path));
    }
    total += static_cast<long>(set.paths.size());
    if (total > limits.max_paths) {
      throw SizeLimitExceeded("more than " + std::to_string(limits.max_paths) +
                              " paths");
    }
    sets.push_back(std::move(set));
  }
  return sets;
}

}  // namespace

std::vector<NodeIndex> FlowPath::Nodes(const FlowNetwork& network) const {
  std::vector<NodeIndex> nodes;
  if (edges.empty()) return nodes;
  nodes.push_back(network.edge(edges.front()).tail);
  for (EdgeIndex e : edges) nodes.push_back(network.edge(e).head);
  return nodes;
}

bool FlowPath::Visits(const FlowNetwork& network, NodeIndex node) const {
  for (EdgeIndex e : edges) {
    const Edge& edge = network.edge(e);
    if (edge.tail == node || edge.head == node) return true;
  }
  return false;
}

std::string FlowPath::Label(const FlowNetwork& network) const {
  std::string label;
  for (NodeIndex v : Nodes(network)) {
    if (!label.empty()) label += "->";
    label += network.node_name(v);
  }
  return label;
}

std::vector<FlowPath> EnumeratePaths(const FlowNetwork& network,
                                     NodeIndex source, NodeIndex sink,
                                     const OracleLimits& limits) {
  CheckNodeCap(network.node_count(), limits);
  CheckNode(network.node_count(), source);
  CheckNode(network.node_count(), sink);
  if (source == sink) throw InvalidArgument("source equals sink");

  std::vector<FlowPath> paths;
  std::vector<char> used(network.edge_count(), 0);
  std::vector<EdgeIndex> stack;
  std::function<void(NodeIndex)> extend = [&](NodeIndex u) {
    for (EdgeIndex e : network.out_edges(u)) {
      if (used[e]) continue;
      const NodeIndex head = network.edge(e).head;
      stack.push_back(e);
      if (head == sink) {
        paths.push_back(FlowPath{stack});
        if (static_cast<long>(paths.size()) > limits.max_paths) {
          throw SizeLimitExceeded("more than " +
                                  std::to_string(limits.max_paths) + " paths");
        }
      } else {
        used[e] = 1;
        extend(head);
        used[e] = 0;
      }
      stack.pop_back();
    }
  };
  extend(source);
  return paths;
}

SwtFlowResult MaxSwtFlow(const FlowNetwork& network, NodeIndex s, NodeIndex w,
                         NodeIndex t, const OracleLimits& limits) {
  SwtFlowResult result;
  std::vector<PathSet> sets(1);
  sets[0].paths = SwtPaths(network, s, w, t, limits);
  if (sets[0].paths.empty()) {
    result.integral = true;
    return result;
  }
  const lp::Problem problem = BuildPathLp(network, sets);
  const lp::Solution relaxed = lp::Solve(problem);
  if (!relaxed.optimal()) throw Error("s-w-t path LP not optimal");
  result.value = std::max(0.0, relaxed.objective_value);
  for (std::size_t p = 0; p < sets[0].paths.size(); ++p) {
    if (relaxed.values[p] > 1e-12) {
      result.path_flows.emplace_back(sets[0].paths[p], relaxed.values[p]);
    }
  }

  const bool integral_caps =
      std::all_of(network.edges().begin(), network.edges().end(),
                  [](const Edge& e) { return IsInteger(e.exact_capacity); });
  if (!integral_caps) return result;

  const long root_bound =
      static_cast<long>(std::floor(result.value + kIntegralTolerance));
  IntegralPacking packing(problem);
  const long best = packing.Run(root_bound);
  if (best < 0) return result;
  result.integral_value = best;
  if (std::abs(static_cast<double>(best) - result.value) <= 1e-6) {
    result.integral = true;
    result.path_flows.clear();
    for (std::size_t p = 0; p < sets[0].paths.size(); ++p) {
      const long x = packing.best_values()[p];
      if (x > 0) {
        result.path_flows.emplace_back(sets[0].paths[p], static_cast<double>(x));
      }
    }
  }
  return result;
}

SwtCut MinSwtCut(const FlowNetwork& network, NodeIndex s, NodeIndex w,
                 NodeIndex t, const OracleLimits& limits) {
  if (network.edge_count() > kMaxCutEdges) {
    throw SizeLimitExceeded("cut oracle limited to " +
                            std::to_string(kMaxCutEdges) + " edges");
  }
  const std::vector<FlowPath> paths = SwtPaths(network, s, w, t, limits);
  SwtCut cut;
  if (paths.empty()) return cut;

  std::vector<EdgeSet> path_sets(paths.size());
  EdgeSet relevant;
  for (std::size_t p = 0; p < paths.size(); ++p) {
    for (EdgeIndex e : paths[p].edges) path_sets[p].set(e);
    relevant |= path_sets[p];
  }

  // Removing every relevant edge is always a cut.
  EdgeSet best_set = relevant;
  Rational best = 0;
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    if (relevant.test(e)) best += network.edge(e).exact_capacity;
  }

  std::function<void(const EdgeSet&, const EdgeSet&, const Rational&)> search =
      [&](const EdgeSet& removed, const EdgeSet& kept, const Rational& cost) {
        if (cost >= best) return;
        // Branch on the surviving path with the fewest removable edges.
        std::optional<EdgeSet> branch;
        std::size_t fewest = kMaxCutEdges + 1;
        for (const EdgeSet& path : path_sets) {
          if ((path & removed).any()) continue;
          const EdgeSet free = path & ~kept;
          const std::size_t count = free.count();
          if (count == 0) return;  // cannot be cut in this branch
          if (count < fewest) {
            fewest = count;
            branch = free;
          }
        }
        if (!branch) {
          best = cost;
          best_set = removed;
          return;
        }
        EdgeSet kept_here = kept;
        for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
          if (!branch->test(e)) continue;
          EdgeSet next = removed;
          next.set(e);
          search(next, kept_here, cost + network.edge(e).exact_capacity);
          kept_here.set(e);
        }
      };
  search(EdgeSet(), EdgeSet(), Rational(0));

  cut.capacity = best;
  for (EdgeIndex e = 0; e < network.edge_count(); ++e) {
    if (best_set.test(e)) cut.edges.push_back(e);
  }
  return cut;
}

Rational MaxFlowValue(const FlowNetwork& network, NodeIndex s, NodeIndex t) {
  const int n = network.node_count();
  CheckNode(n, s);
  CheckNode(n, t);
  if (s == t) throw InvalidArgument("source equals sink");
  // Residual arcs: 2e is edge e forward, 2e+1 its reverse.
  const int m = network.edge_count();
  std::vector<Rational> residual(2 * m);
  std::vector<std::vector<int>> arcs(n);
  std::vector<NodeIndex> arc_head(2 * m);
  for (EdgeIndex e = 0; e < m; ++e) {
    const Edge& edge = network.edge(e);
    residual[2 * e] = edge.exact_capacity;
    residual[2 * e + 1] = 0;
    arc_head[2 * e] = edge.head;
    arc_head[2 * e + 1] = edge.tail;
    arcs[edge.tail].push_back(2 * e);
    arcs[edge.head].push_back(2 * e + 1);
  }
  Rational total = 0;
  while (true) {
    std::vector<int> via(n, -1);
    std::vector<char> seen(n, 0);
    std::deque<NodeIndex> queue{s};
    seen[s] = 1;
    while (!queue.empty() && !seen[t]) {
      const NodeIndex u = queue.front();
      queue.pop_front();
      for (int a : arcs[u]) {
        const NodeIndex v = arc_head[a];
        if (seen[v] || residual[a] <= 0) continue;
        seen[v] = 1;
        via[v] = a;
        queue.push_back(v);
      }
    }
    if (!seen[t]) break;
    Rational push = -1;
    for (NodeIndex v = t; v != s; v = arc_head[via[v] ^ 1]) {
      if (push < 0 || residual[via[v]] < push) push = residual[via[v]];
    }
    for (NodeIndex v = t; v != s; v = arc_head[via[v] ^ 1]) {
      residual[via[v]] -= push;
      residual[via[v] ^ 1] += push;
    }
    total += push;
  }
  return total;
}

double FlowCentrality(const FlowNetwork& network, NodeIndex w,
                      const OracleLimits& limits, int threads) {
  const int n = network.node_count();
  CheckNodeCap(n, limits);
  CheckNode(n, w);
  std::vector<std::pair<NodeIndex, NodeIndex>> pairs;
  for (NodeIndex s = 0; s < n; ++s) {
    for (NodeIndex t = 0; t < n; ++t) {
      if (s != t && s != w && t != w) pairs.emplace_back(s, t);
    }
  }
  std::vector<double> terms(pairs.size(), 0.0);
  ParallelFor(
      static_cast<int>(pairs.size()),
      [&](int i) {
        const auto [s, t] = pairs[i];
        const Rational total = MaxFlowValue(network, s, t);
        if (total <= 0) return;
        terms[i] = MaxSwtFlow(network, s, w, t, limits).value / ToDouble(total);
      },
      threads);
  double sum = 0;
  for (double term : terms) sum += term;
  return sum;
}

double GroupFlow(const FlowNetwork& network, const DemandMatrix& demands,
                 std::span<const NodeIndex> group, const OracleLimits& limits) {
  if (group.empty()) return 0;
  const std::vector<NodeIndex> members(group.begin(), group.end());
  for (NodeIndex v : members) CheckNode(network.node_count(), v);
  return SolvePathLp(network,
                     CommodityPathSets(network, demands, &members, limits));
}

double MaxMulticommodityFlow(const FlowNetwork& network,
                             const DemandMatrix& demands,
                             const OracleLimits& limits) {
  return SolvePathLp(network,
                     CommodityPathSets(network, demands, nullptr, limits));
}

double MulticommodityFlowCentrality(const FlowNetwork& network,
                                    const DemandMatrix& demands, NodeIndex w,
                                    const OracleLimits& limits) {
  const double total = MaxMulticommodityFlow(network, demands, limits);
  if (total <= kIntegralTolerance) throw ZeroMaxFlow();
  const NodeIndex group[] = {w};
  return std::min(1.0, GroupFlow(network, demands, group, limits) / total);
}

std::vector<NodeIndex> NonEndpointNodes(const FlowNetwork& network,
                                        const DemandMatrix& demands) {
  std::vector<char> endpoint(network.node_count(), 0);
  for (const Commodity& c : demands.commodities) {
    endpoint[c.source] = 1;
    endpoint[c.sink] = 1;
  }
  std::vector<NodeIndex> nodes;
  for (NodeIndex v = 0; v < network.node_count(); ++v) {
    if (!endpoint[v]) nodes.push_back(v);
  }
  return nodes;
}

GroupFlowSelection GreedyGroupFlowSelect(const FlowNetwork& network,
                                         const DemandMatrix& demands,
                                         int count,
                                         const OracleLimits& limits) {
  std::vector<NodeIndex> eligible = NonEndpointNodes(network, demands);
  if (count < 1 || count > static_cast<int>(eligible.size())) {
    throw InvalidArgument("count must lie in [1, eligible nodes]");
  }
  // Enumerate every commodity's paths once and filter per evaluation.
  const std::vector<PathSet> all =
      CommodityPathSets(network, demands, nullptr, limits);
  auto evaluate = [&](const std::vector<NodeIndex>& group) {
    std::vector<PathSet> sets;
    for (const PathSet& set : all) {
      PathSet kept;
      kept.cap = set.cap;
      for (const FlowPath& path : set.paths) {
        for (NodeIndex v : group) {
          if (path.Visits(network, v)) {
            kept.paths.push_back(path);
            break;
          }
        }
      }
      sets.push_back(std::move(kept));
    }
    return SolvePathLp(network, sets);
  };

  GroupFlowSelection selection;
  while (static_cast<int>(selection.order.size()) < count) {
    std::size_t best = 0;
    double best_value = -1;
    for (std::size_t i = 0; i < eligible.size(); ++i) {
      std::vector<NodeIndex> trial = selection.order;
      trial.push_back(eligible[i]);
      const double value = evaluate(trial);
      if (value > best_value + 1e-9) {
        best_value = value;
        best = i;
      }
    }
    selection.order.push_back(eligible[best]);
    eligible.erase(eligible.begin() + static_cast<long>(best));
    selection.values.push_back(best_value);
  }
  return selection;
}

NodeIndex UndirectedNetwork::AddNode(std::string name) {
  names_.push_back(std::move(name));
  incident_.emplace_back();
  return static_cast<NodeIndex>(names_.size()) - 1;
}

int UndirectedNetwork::AddEdge(NodeIndex u, NodeIndex v,
                               const Rational& capacity) {
  CheckNode(node_count(), u);
  CheckNode(node_count(), v);
  if (u == v) throw InvalidArgument("self-loop");
  if (capacity <= 0) throw InvalidArgument("capacity must be positive");
  for (int e : incident_[u]) {
    const UndirectedEdge& edge = edges_[e];
    if (edge.u == v || edge.v == v) throw InvalidArgument("duplicate edge");
  }
  edges_.push_back({u, v, capacity});
  const int index = static_cast<int>(edges_.size()) - 1;
  incident_[u].push_back(index);
  incident_[v].push_back(index);
  return index;
}

UndirectedNetwork RandomUndirected(int node_count, double edge_probability,
                                   std::uint64_t seed, int max_capacity) {
  if (node_count < 2 || max_capacity < 1) {
    throw InvalidArgument("need at least two nodes and capacity >= 1");
  }
  Rng rng(seed);
  UndirectedNetwork network;
  for (int i = 0; i < node_count; ++i) network.AddNode("u" + std::to_string(i));
  for (NodeIndex u = 0; u < node_count; ++u) {
    for (NodeIndex v = u + 1; v < node_count; ++v) {
      if (rng.Uniform() < edge_probability) {
        network.AddEdge(u, v, Rational(1 + static_cast<long>(rng.Below(max_capacity))));
      }
    }
  }
  return network;
}

UndirectedSwtResult UndirectedMaxSwt(
    const UndirectedNetwork& network, NodeIndex w,
    std::span<const UndirectedCommodity> commodities) {
  const int n = network.node_count();
  CheckNode(n, w);
  for (const UndirectedCommodity& c : commodities) {
    CheckNode(n, c.source);
    CheckNode(n, c.sink);
    if (c.source == c.sink) throw InvalidArgument("source equals sink");
  }

  lp::Problem problem(lp::Sense::kMaximize);
  const int m = network.edge_count();
  std::vector<std::vector<lp::Term>> capacity_rows(m);
  for (std::size_t i = 0; i < commodities.size(); ++i) {
    const UndirectedCommodity& c = commodities[i];
    // Conservation rows for commodity i at every original node but w.
    std::vector<std::vector<lp::Term>> balance(n);
    for (int e = 0; e < m; ++e) {
      const UndirectedEdge& edge = network.edges()[e];
      const lp::VariableIndex forward = problem.AddVariable();
      const lp::VariableIndex backward = problem.AddVariable();
      capacity_rows[e].push_back({forward, 1.0});
      capacity_rows[e].push_back({backward, 1.0});
      balance[edge.u].push_back({forward, 1.0});
      balance[edge.v].push_back({forward, -1.0});
      balance[edge.v].push_back({backward, 1.0});
      balance[edge.u].push_back({backward, -1.0});
    }
    // Collector arcs s_i->z_i, t_i->z_i and z_i->z, all uncapacitated.
    const lp::VariableIndex via_source = problem.AddVariable();
    const lp::VariableIndex via_sink = problem.AddVariable();
    const lp::VariableIndex to_super = problem.AddVariable("", 1.0);
    balance[c.source].push_back({via_source, 1.0});
    balance[c.sink].push_back({via_sink, 1.0});
    for (NodeIndex u = 0; u < n; ++u) {
      if (u == w || balance[u].empty()) continue;
      problem.AddConstraint(std::move(balance[u]), lp::Relation::kEqual, 0.0);
    }
    problem.AddConstraint({{via_source, 1.0}, {via_sink, 1.0}, {to_super, -1.0}},
                          lp::Relation::kEqual, 0.0);
    problem.AddConstraint({{via_source, 1.0}, {via_sink, -1.0}},
                          lp::Relation::kEqual, 0.0);
  }
  // The two directions of an undirected edge share one capacity across all
  // commodities.
  for (int e = 0; e < m; ++e) {
    if (capacity_rows[e].empty()) continue;
    problem.AddConstraint(std::move(capacity_rows[e]), lp::Relation::kLessEqual,
                          ToDouble(network.edges()[e].capacity));
  }

  UndirectedSwtResult result;
  if (problem.variable_count() == 0) return result;
  const lp::Solution solution = lp::Solve(problem);
  if (!solution.optimal()) throw Error("auxiliary LP not optimal");
  result.auxiliary = std::max(0.0, solution.objective_value);
  result.value = result.auxiliary / 2;
  return result;
}

double UndirectedMaxSwtByPaths(const UndirectedNetwork& network, NodeIndex w,
                               std::span<const UndirectedCommodity> commodities,
                               const OracleLimits& limits) {
  const int n = network.node_count();
  CheckNodeCap(n, limits);
  CheckNode(n, w);

  // Node-simple paths from `from` to `to` as edge lists.
  auto simple_paths = [&](NodeIndex from, NodeIndex to) {
    std::vector<std::vector<int>> paths;
    if (from == to) {
      paths.emplace_back();
      return paths;
    }
    std::vector<char> on_path(n, 0);
    std::vector<int> stack;
    std::function<void(NodeIndex)> extend = [&](NodeIndex u) {
      on_path[u] = 1;
      for (int e : network.incident(u)) {
        const UndirectedEdge& edge = network.edges()[e];
        const NodeIndex v = edge.u == u ? edge.v : edge.u;
        if (on_path[v]) continue;
        stack.push_back(e);
        if (v == to) {
          paths.push_back(stack);
        } else {
          extend(v);
        }
        stack.pop_back();
      }
      on_path[u] = 0;
    };
    extend(from);
    return paths;
  };

  lp::Problem problem(lp::Sense::kMaximize);
  std::vector<std::vector<lp::Term>> rows(network.edge_count());
  long total = 0;
  for (const UndirectedCommodity& c : commodities) {
    CheckNode(n, c.source);
    CheckNode(n, c.sink);
    if (c.source == c.sink) throw InvalidArgument("source equals sink");
    const auto first = simple_paths(c.source, w);
    const auto second = simple_paths(w, c.sink);
    total += static_cast<long>(first.size() * second.size());
    if (total > limits.max_paths) {
      throw SizeLimitExceeded("more than " + std::to_string(limits.max_paths) +
                              " routings");
    }
    for (const auto& a : first) {
      for (const auto& b : second) {
        const lp::VariableIndex x = problem.AddVariable("", 1.0);
        std::map<int, int> uses;
        for (int e : a) ++uses[e];
        for (int e : b) ++uses[e];
        for (const auto& [e, count] : uses) {
          rows[e].push_back({x, static_cast<double>(count)});
        }
      }
    }
  }
  for (int e = 0; e < network.edge_count(); ++e) {
    if (rows[e].empty()) continue;
    problem.AddConstraint(std::move(rows[e]), lp::Relation::kLessEqual,
                          ToDouble(network.edges()[e].capacity));
  }
  if (problem.variable_count() == 0) return 0;
  const lp::Solution solution = lp::Solve(problem);
  if (!solution.optimal()) throw Error("undirected path LP not optimal");
  return std::max(0.0, solution.objective_value);
}

}  // namespace srte
