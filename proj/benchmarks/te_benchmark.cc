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

#include <numeric>

#include "benchmark/benchmark.h"
#include "srte/centrality.h"
#include "srte/generators.h"
#include "srte/selection.h"
#include "srte/te_model.h"

namespace srte {
namespace {

struct Setup {
  explicit Setup(int nodes, int flows)
      : network(RandomTopology(nodes, 4 * nodes, 1)),
        paths(network),
        loads(paths),
        demands(GenerateGravityDemands(network, flows, 1)) {}
  FlowNetwork network;
  ShortestPathIndex paths;
  SegmentLoadCache loads;
  DemandMatrix demands;
};

void BM_SegmentRoutingLu(benchmark::State& state) {
  Setup s(30, 100);
  const std::vector<NodeIndex> order =
      GreedyGroupSelect(s.network, static_cast<int>(state.range(0)), false).order;
  TunnelOptions options;
  options.max_middlepoints = static_cast<int>(state.range(1));
  for (auto _ : state) {
    const TeSolution sol = SolveSegmentRouting(s.loads, s.demands, order,
                                               Objective::kLinkUtilization, options);
    benchmark::DoNotOptimize(sol.theta);
  }
}
BENCHMARK(BM_SegmentRoutingLu)
    ->ArgsProduct({{1, 4, 8}, {1, 2}})
    ->Unit(benchmark::kMillisecond);

void BM_SegmentRoutingMf(benchmark::State& state) {
  Setup s(30, 100);
  const std::vector<NodeIndex> order = GreedyGroupSelect(s.network, 4, false).order;
  const DemandMatrix heavy = s.demands.Scaled(20);
  for (auto _ : state) {
    const TeSolution sol =
        SolveSegmentRouting(s.loads, heavy, order, Objective::kMaxFlow);
    benchmark::DoNotOptimize(sol.satisfied_total);
  }
}
BENCHMARK(BM_SegmentRoutingMf)->Unit(benchmark::kMillisecond);

void BM_GreedySelect(benchmark::State& state) {
  Setup s(16, 40);
  std::vector<NodeIndex> pool(s.network.node_count());
  std::iota(pool.begin(), pool.end(), 0);
  SelectionOptions options;
  options.threads = 1;
  for (auto _ : state) {
    const SelectionResult r =
        GreedySelect(s.loads, s.demands, pool, static_cast<int>(state.range(0)), options);
    benchmark::DoNotOptimize(r.solution.theta);
  }
}
BENCHMARK(BM_GreedySelect)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OptimalSelect(benchmark::State& state) {
  Setup s(10, 20);
  std::vector<NodeIndex> pool(s.network.node_count());
  std::iota(pool.begin(), pool.end(), 0);
  SelectionOptions options;
  options.threads = 1;
  for (auto _ : state) {
    const SelectionResult r =
        OptimalSelect(s.loads, s.demands, pool, static_cast<int>(state.range(0)), options);
    benchmark::DoNotOptimize(r.solution.theta);
  }
}
BENCHMARK(BM_OptimalSelect)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace srte
