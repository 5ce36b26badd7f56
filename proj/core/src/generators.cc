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

#include "srte/generators.h"

#include <numeric>
#include <string>
#include <vector>

#include "srte/random.h"

namespace srte {
namespace {

NetworkBuilder BuilderWithNodes(int node_count) {
  if (node_count < 2) throw InvalidArgument("need at least two nodes");
  NetworkBuilder builder;
  for (int i = 0; i < node_count; ++i) builder.AddNode("n" + std::to_string(i));
  return builder;
}

}  // namespace

FlowNetwork RandomDigraph(int node_count, double edge_probability,
                          std::uint64_t seed, int max_capacity) {
  if (max_capacity < 1) throw InvalidArgument("max_capacity must be >= 1");
  NetworkBuilder builder = BuilderWithNodes(node_count);
  Rng rng(seed);
  for (NodeIndex u = 0; u < node_count; ++u) {
    for (NodeIndex v = 0; v < node_count; ++v) {
      if (u == v) continue;
      if (rng.Uniform() < edge_probability) {
        builder.AddEdge(u, v, Rational(1 + static_cast<int>(rng.Below(max_capacity))));
      }
    }
  }
  return std::move(builder).Build();
}

FlowNetwork RandomTopology(int node_count, int edge_count, std::uint64_t seed) {
  const long max_edges = static_cast<long>(node_count) * (node_count - 1);
  if (edge_count < node_count || edge_count > max_edges) {
    throw InvalidArgument("edge_count must lie in [node_count, n(n-1)]");
  }
  static constexpr int kCapacities[] = {10, 25, 40, 100};
  NetworkBuilder builder = BuilderWithNodes(node_count);
  Rng rng(seed);
  auto capacity = [&] { return Rational(kCapacities[rng.Below(4)]); };

  std::vector<NodeIndex> order(node_count);
  std::iota(order.begin(), order.end(), 0);
  rng.Shuffle(order);
  std::vector<char> present(static_cast<std::size_t>(node_count) * node_count, 0);
  auto add = [&](NodeIndex u, NodeIndex v) {
    present[static_cast<std::size_t>(u) * node_count + v] = 1;
    builder.AddEdge(u, v, capacity());
  };
  for (int i = 0; i < node_count; ++i) {
    add(order[i], order[(i + 1) % node_count]);
  }
  for (int added = node_count; added < edge_count;) {
    NodeIndex u = static_cast<NodeIndex>(rng.Below(node_count));
    NodeIndex v = static_cast<NodeIndex>(rng.Below(node_count));
    if (u == v || present[static_cast<std::size_t>(u) * node_count + v]) continue;
    add(u, v);
    ++added;
  }
  return std::move(builder).Build();
}

}  // namespace srte
