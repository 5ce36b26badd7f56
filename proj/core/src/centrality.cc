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

#include "srte/centrality.h"

#include <algorithm>
#include <numeric>

#include "srte/random.h"

namespace srte {
namespace {

void RankByScore(CentralityScores& result) {
  const int n = static_cast<int>(result.exact.size());
  result.scores.resize(n);
  for (int v = 0; v < n; ++v) result.scores[v] = ToDouble(result.exact[v]);
  result.ordering.resize(n);
  std::iota(result.ordering.begin(), result.ordering.end(), 0);
  std::stable_sort(result.ordering.begin(), result.ordering.end(),
                   [&](NodeIndex a, NodeIndex b) {
                     return result.exact[a] > result.exact[b];
                   });
}

void CheckK(const FlowNetwork& network, int k) {
  if (k < 1 || k > network.node_count()) {
    throw InvalidArgument("k must lie in [1, node_count]");
  }
}

}  // namespace

std::string_view CentralityMethodName(CentralityMethod method) {
  switch (method) {
    case CentralityMethod::kShortestPath: return "sp";
    case CentralityMethod::kGroupShortestPath: return "gsp";
    case CentralityMethod::kDegree: return "degree";
    case CentralityMethod::kRandom: return "random";
  }
  return "?";
}

CentralityScores Betweenness(const FlowNetwork& network, bool weighted) {
  const FlowNetwork costed =
      weighted ? network.WithInverseCapacityCosts() : network;
  const int n = costed.node_count();
  CentralityScores result;
  result.method = CentralityMethod::kShortestPath;
  result.weighted = weighted;
  result.exact.assign(n, Rational(0));

  std::vector<Rational> dependency(n);
  for (NodeIndex s = 0; s < n; ++s) {
    ShortestPathDag dag = ComputeShortestPathDag(costed, s);
    for (NodeIndex v : dag.order) dependency[v] = 0;
    for (auto it = dag.order.rbegin(); it != dag.order.rend(); ++it) {
      NodeIndex w = *it;
      Rational share = (1 + dependency[w]) / Rational(dag.sigma[w]);
      for (EdgeIndex e : dag.preds[w]) {
        NodeIndex v = costed.edge(e).tail;
        dependency[v] += Rational(dag.sigma[v]) * share;
      }
      if (w != s) result.exact[w] += dependency[w];
    }
  }
  RankByScore(result);
  return result;
}

Rational GroupBetweenness(const ShortestPathIndex& index,
                          std::span<const NodeIndex> group) {
  if (group.empty()) throw InvalidArgument("group must be nonempty");
  const FlowNetwork& network = index.network();
  const int n = network.node_count();
  std::vector<char> member(n, 0);
  for (NodeIndex v : group) member.at(v) = 1;

  Rational total = 0;
  std::vector<BigInt> avoiding(n);
  for (NodeIndex s = 0; s < n; ++s) {
    if (member[s]) continue;
    const ShortestPathDag& dag = index.dag(s);
    // avoiding[v]: shortest s-v paths that touch no group member.
    for (NodeIndex v : dag.order) {
      if (v == s) {
        avoiding[v] = 1;
        continue;
      }
      avoiding[v] = 0;
      if (member[v]) continue;
      for (EdgeIndex e : dag.preds[v]) avoiding[v] += avoiding[network.edge(e).tail];
    }
    for (NodeIndex t : dag.order) {
      if (t == s || member[t]) continue;
      if (avoiding[t] != dag.sigma[t]) {
        total += Rational(dag.sigma[t] - avoiding[t], dag.sigma[t]);
      }
    }
  }
  return total;
}

Rational GroupBetweenness(const FlowNetwork& network,
                          std::span<const NodeIndex> group, bool weighted) {
  if (weighted) {
    FlowNetwork costed = network.WithInverseCapacityCosts();
    return GroupBetweenness(ShortestPathIndex(costed), group);
  }
  return GroupBetweenness(ShortestPathIndex(network), group);
}

GroupSelection GreedyGroupSelect(const FlowNetwork& network, int k,
                                 bool weighted) {
  CheckK(network, k);
  const FlowNetwork costed =
      weighted ? network.WithInverseCapacityCosts() : network;
  const ShortestPathIndex index(costed);
  const int n = costed.node_count();

  GroupSelection selection;
  std::vector<char> chosen(n, 0);
  Rational current = 0;
  std::vector<NodeIndex> group;
  for (int round = 0; round < k; ++round) {
    std::optional<Rational> best_value;
    NodeIndex best = -1;
    for (NodeIndex v = 0; v < n; ++v) {
      if (chosen[v]) continue;
      group.push_back(v);
      Rational value = GroupBetweenness(index, group);
      group.pop_back();
      // Marginal gains share the same baseline, so compare values directly.
      if (!best_value || value > *best_value) {
        best_value = std::move(value);
        best = v;
      }
    }
    chosen[best] = 1;
    group.push_back(best);
    current = *best_value;
    selection.order.push_back(best);
    selection.prefix_values.push_back(current);
  }
  return selection;
}

CentralityScores DegreeCentrality(const FlowNetwork& network, bool weighted) {
  const int n = network.node_count();
  CentralityScores result;
  result.method = CentralityMethod::kDegree;
  result.weighted = weighted;
  result.exact.assign(n, Rational(0));
  for (NodeIndex v = 0; v < n; ++v) {
    if (weighted) {
      for (EdgeIndex e : network.out_edges(v)) {
        result.exact[v] += 1 / network.edge(e).exact_capacity;
      }
      for (EdgeIndex e : network.in_edges(v)) {
        result.exact[v] += 1 / network.edge(e).exact_capacity;
      }
    } else {
      result.exact[v] = Rational(static_cast<long>(network.out_edges(v).size() +
                                                   network.in_edges(v).size()),
                                 2);
    }
  }
  RankByScore(result);
  return result;
}

std::vector<NodeIndex> RandomSelect(const FlowNetwork& network, int k,
                                    std::uint64_t seed) {
  CheckK(network, k);
  Rng rng(seed);
  std::vector<NodeIndex> nodes;
  for (std::uint64_t v : rng.SampleWithoutReplacement(network.node_count(), k)) {
    nodes.push_back(static_cast<NodeIndex>(v));
  }
  return nodes;
}

}  // namespace srte
