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

#include "srte/selection.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

namespace srte {
namespace {

constexpr double kThetaTie = 1e-9;
constexpr double kNoRoute = std::numeric_limits<double>::infinity();

std::vector<NodeIndex> SortedUnique(std::span<const NodeIndex> nodes) {
  std::vector<NodeIndex> out(nodes.begin(), nodes.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// C(n, k), saturating at `cap` + 1.
long BoundedBinomial(long n, long k, long cap) {
  k = std::min(k, n - k);
  long double value = 1;
  for (long i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > cap) return cap + 1;
  }
  return static_cast<long>(std::llround(value));
}

struct Attempt {
  std::optional<TeSolution> solution;
  double theta() const {
    return solution && solution->optimal() ? solution->theta : kNoRoute;
  }
};

Attempt TryLu(const SegmentLoadCache& loads, const DemandMatrix& demands,
              std::span<const NodeIndex> middlepoints,
              const TunnelOptions& tunnels) {
  Attempt attempt;
  try {
    attempt.solution = SolveSegmentRouting(loads, demands, middlepoints,
                                           Objective::kLinkUtilization, tunnels);
  } catch (const NoTunnelError&) {
  }
  return attempt;
}

void CheckCandidates(const FlowNetwork& network,
                     const std::vector<NodeIndex>& candidates, int k) {
  for (NodeIndex v : candidates) {
    if (v < 0 || v >= network.node_count()) {
      throw InvalidArgument("candidate out of range");
    }
  }
  if (k < 1 || k > static_cast<int>(candidates.size())) {
    throw InvalidArgument("k must lie in [1, |candidates|]");
  }
}

[[noreturn]] void ThrowNoTunnel(const SegmentLoadCache& loads,
                                const DemandMatrix& demands,
                                std::span<const NodeIndex> middlepoints,
                                const TunnelOptions& options) {
  // Rebuild to surface the offending commodity.
  auto tunnels =
      EnumerateAllTunnels(loads.paths(), demands, middlepoints, options);
  BuildTeLu(loads, demands, tunnels);
  throw Error("no middlepoint subset routes every demand");
}

}  // namespace

std::string_view SelectionMethodName(SelectionMethod method) {
  switch (method) {
    case SelectionMethod::kOptimal: return "optimal";
    case SelectionMethod::kGreedy: return "greedy";
    case SelectionMethod::kTopShortestPath: return "sp";
    case SelectionMethod::kTopGroupShortestPath: return "gsp";
    case SelectionMethod::kTopDegree: return "degree";
    case SelectionMethod::kRandom: return "random";
  }
  return "?";
}

SelectionResult OptimalSelect(const SegmentLoadCache& loads,
                              const DemandMatrix& demands,
                              std::span<const NodeIndex> candidates, int k,
                              const SelectionOptions& options) {
  const std::vector<NodeIndex> pool = SortedUnique(candidates);
  CheckCandidates(loads.paths().network(), pool, k);
  const long count = BoundedBinomial(static_cast<long>(pool.size()), k, options.budget);
  if (count > options.budget) {
    throw SizeLimitExceeded("optimal selection needs more than " +
                            std::to_string(options.budget) + " subproblems");
  }

  // Subsets in lexicographic order of their sorted members.
  std::vector<std::vector<NodeIndex>> subsets;
  subsets.reserve(count);
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  const int n = static_cast<int>(pool.size());
  while (true) {
    std::vector<NodeIndex> subset;
    for (int i : pick) subset.push_back(pool[i]);
    subsets.push_back(std::move(subset));
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }

  std::vector<Attempt> attempts(subsets.size());
  ParallelFor(
      static_cast<int>(subsets.size()),
      [&](int i) {
        attempts[i] = TryLu(loads, demands, subsets[i], options.tunnels);
      },
      options.threads);

  double best_theta = kNoRoute;
  for (const Attempt& a : attempts) best_theta = std::min(best_theta, a.theta());
  if (best_theta == kNoRoute) {
    ThrowNoTunnel(loads, demands, pool, options.tunnels);
  }
  std::size_t winner = 0;
  while (attempts[winner].theta() > best_theta + kThetaTie) ++winner;

  SelectionResult result;
  result.method = SelectionMethod::kOptimal;
  result.middlepoints = subsets[winner];
  result.solution = std::move(*attempts[winner].solution);
  result.used_count = static_cast<int>(result.solution.UsedMiddlepoints().size());
  result.subproblems_solved = static_cast<long>(subsets.size());
  return result;
}

SelectionResult GreedySelect(const SegmentLoadCache& loads,
                             const DemandMatrix& demands,
                             std::span<const NodeIndex> candidates, int k,
                             const SelectionOptions& options,
                             std::span<const NodeIndex> initial) {
  const std::vector<NodeIndex> pool = SortedUnique(candidates);
  CheckCandidates(loads.paths().network(), pool, k);
  std::vector<NodeIndex> chosen = SortedUnique(initial);
  for (NodeIndex v : chosen) {
    if (!std::binary_search(pool.begin(), pool.end(), v)) {
      throw InvalidArgument("initial middlepoint is not a candidate");
    }
  }
  if (static_cast<int>(chosen.size()) > k) {
    throw InvalidArgument("initial set already exceeds k");
  }
  // Fails with NoTunnelError if even the full pool leaves a demand stranded.
  BuildTeLu(loads, demands,
            EnumerateAllTunnels(loads.paths(), demands, pool, options.tunnels));

  std::vector<NodeIndex> unexplored;
  std::set_difference(pool.begin(), pool.end(), chosen.begin(), chosen.end(),
                      std::back_inserter(unexplored));

  SelectionResult result;
  result.method = SelectionMethod::kGreedy;
  Attempt current = TryLu(loads, demands, chosen, options.tunnels);
  result.subproblems_solved = 1;
  result.theta_trace.push_back(current.theta());

  while (static_cast<int>(chosen.size()) < k && !unexplored.empty()) {
    std::vector<Attempt> attempts(unexplored.size());
    ParallelFor(
        static_cast<int>(unexplored.size()),
        [&](int i) {
          std::vector<NodeIndex> trial = chosen;
          trial.push_back(unexplored[i]);
          attempts[i] = TryLu(loads, demands, trial, options.tunnels);
        },
        options.threads);
    result.subproblems_solved += static_cast<long>(attempts.size());

    std::size_t best = 0;
    for (std::size_t i = 1; i < attempts.size(); ++i) {
      if (attempts[i].theta() < attempts[best].theta() - kThetaTie) best = i;
    }
    const double before = current.theta();
    const double after = attempts[best].theta();
    const bool improves = after < kNoRoute &&
                          (before == kNoRoute || before - after > kGreedyImprovement);
    if (!improves) break;
    chosen.push_back(unexplored[best]);
    std::sort(chosen.begin(), chosen.end());
    unexplored.erase(unexplored.begin() + static_cast<long>(best));
    current = std::move(attempts[best]);
    result.theta_trace.push_back(after);
  }

  if (current.theta() == kNoRoute) {
    ThrowNoTunnel(loads, demands, chosen, options.tunnels);
  }
  result.middlepoints = chosen;
  result.used_count = static_cast<int>(chosen.size());
  result.solution = std::move(*current.solution);
  return result;
}

std::vector<NodeIndex> CentralityTopK(const FlowNetwork& network,
                                      CentralityMethod method, bool weighted,
                                      int k, std::uint64_t seed) {
  if (k < 1 || k > network.node_count()) {
    throw InvalidArgument("k must lie in [1, node_count]");
  }
  switch (method) {
    case CentralityMethod::kShortestPath: {
      auto ordering = Betweenness(network, weighted).ordering;
      return {ordering.begin(), ordering.begin() + k};
    }
    case CentralityMethod::kDegree: {
      auto ordering = DegreeCentrality(network, weighted).ordering;
      return {ordering.begin(), ordering.begin() + k};
    }
    case CentralityMethod::kGroupShortestPath:
      return GreedyGroupSelect(network, k, weighted).order;
    case CentralityMethod::kRandom:
      return RandomSelect(network, k, seed);
  }
  return {};
}

SelectionResult CentralitySelect(const SegmentLoadCache& loads,
                                 const DemandMatrix& demands,
                                 CentralityMethod method, bool weighted, int k,
                                 Objective objective,
                                 const SelectionOptions& options,
                                 std::uint64_t seed) {
  SelectionResult result;
  switch (method) {
    case CentralityMethod::kShortestPath:
      result.method = SelectionMethod::kTopShortestPath;
      break;
    case CentralityMethod::kGroupShortestPath:
      result.method = SelectionMethod::kTopGroupShortestPath;
      break;
    case CentralityMethod::kDegree:
      result.method = SelectionMethod::kTopDegree;
      break;
    case CentralityMethod::kRandom:
      result.method = SelectionMethod::kRandom;
      break;
  }
  result.middlepoints =
      CentralityTopK(loads.paths().network(), method, weighted, k, seed);
  result.solution = SolveSegmentRouting(loads, demands, result.middlepoints,
                                        objective, options.tunnels);
  result.used_count = static_cast<int>(result.solution.UsedMiddlepoints().size());
  result.subproblems_solved = 1;
  return result;
}

}  // namespace srte
