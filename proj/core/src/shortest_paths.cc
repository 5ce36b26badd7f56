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

#include "srte/shortest_paths.h"

#include <queue>
#include <string>

namespace srte {

ShortestPathDag ComputeShortestPathDag(const FlowNetwork& network,
                                       NodeIndex source) {
  const int n = network.node_count();
  ShortestPathDag dag;
  dag.source = source;
  dag.dist.assign(n, std::nullopt);
  dag.sigma.assign(n, 0);
  dag.preds.assign(n, {});

  using Entry = std::pair<Rational, NodeIndex>;
  auto later = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(later)> queue(later);
  std::vector<char> settled(n, 0);
  dag.dist[source] = Rational(0);
  queue.emplace(Rational(0), source);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (settled[u] || d != *dag.dist[u]) continue;
    settled[u] = 1;
    dag.order.push_back(u);
    for (EdgeIndex e : network.out_edges(u)) {
      const Edge& edge = network.edge(e);
      Rational candidate = d + edge.cost;
      auto& best = dag.dist[edge.head];
      if (!best || candidate < *best) {
        best = candidate;
        queue.emplace(std::move(candidate), edge.head);
      }
    }
  }

  dag.sigma[source] = 1;
  for (NodeIndex v : dag.order) {
    if (v == source) continue;
    for (EdgeIndex e : network.in_edges(v)) {
      const Edge& edge = network.edge(e);
      const auto& du = dag.dist[edge.tail];
      if (du && *du + edge.cost == *dag.dist[v]) {
        dag.preds[v].push_back(e);
        dag.sigma[v] += dag.sigma[edge.tail];
      }
    }
  }
  return dag;
}

UnreachableSegment::UnreachableSegment(NodeIndex from, NodeIndex to)
    : Error("segment " + std::to_string(from) + "->" + std::to_string(to) +
            " is unreachable"),
      from_(from),
      to_(to) {}

SegmentFractions FractionsFromDag(const FlowNetwork& network,
                                  const ShortestPathDag& dag, NodeIndex to) {
  const NodeIndex from = dag.source;
  if (from == to) throw InvalidArgument("segment endpoints must differ");
  if (!dag.reachable(to)) throw UnreachableSegment(from, to);

  // ways[x]: shortest x->to paths inside the DAG. Ancestors of `to` are
  // visited in reverse topological order.
  const int n = network.node_count();
  std::vector<int> rank(n, -1);
  for (int i = 0; i < static_cast<int>(dag.order.size()); ++i) {
    rank[dag.order[i]] = i;
  }
  std::vector<char> is_ancestor(n, 0);
  is_ancestor[to] = 1;
  std::vector<BigInt> ways(n, 0);
  ways[to] = 1;

  SegmentFractions result;
  result.from = from;
  result.to = to;
  const BigInt& total = dag.sigma[to];
  for (int i = rank[to]; i >= 0; --i) {
    NodeIndex b = dag.order[i];
    if (!is_ancestor[b]) continue;
    for (EdgeIndex e : dag.preds[b]) {
      NodeIndex a = network.edge(e).tail;
      is_ancestor[a] = 1;
      ways[a] += ways[b];
      result.fraction.emplace(e, Rational(dag.sigma[a] * ways[b], total));
    }
  }
  return result;
}

SegmentFractions ComputeSegmentFractions(const FlowNetwork& network,
                                         NodeIndex from, NodeIndex to) {
  if (from == to) throw InvalidArgument("segment endpoints must differ");
  return FractionsFromDag(network, ComputeShortestPathDag(network, from), to);
}

ShortestPathIndex::ShortestPathIndex(const FlowNetwork& network)
    : network_(&network) {
  dags_.reserve(network.node_count());
  for (NodeIndex s = 0; s < network.node_count(); ++s) {
    dags_.push_back(ComputeShortestPathDag(network, s));
  }
}

SegmentFractions ShortestPathIndex::Fractions(NodeIndex from,
                                              NodeIndex to) const {
  return FractionsFromDag(*network_, dags_[from], to);
}

}  // namespace srte
