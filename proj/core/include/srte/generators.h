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

#ifndef SRTE_GENERATORS_H_
#define SRTE_GENERATORS_H_

#include <cstdint>

#include "srte/network.h"

namespace srte {

// Erdos-Renyi style digraph on nodes "n0".."n{n-1}": each ordered pair gets
// an edge with probability `edge_probability`, capacity uniform in
// [1, max_capacity], cost 1. Nodes may end up isolated.
FlowNetwork RandomDigraph(int node_count, double edge_probability,
                          std::uint64_t seed, int max_capacity = 3);

// Strongly connected digraph with exactly `edge_count` edges: a random
// Hamiltonian cycle plus uniformly chosen extra edges. Capacities are drawn
// from {10, 25, 40, 100}; costs are 1.
FlowNetwork RandomTopology(int node_count, int edge_count, std::uint64_t seed);

}  // namespace srte

#endif  // SRTE_GENERATORS_H_
