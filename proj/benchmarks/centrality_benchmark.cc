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

#include "benchmark/benchmark.h"
#include "srte/centrality.h"
#include "srte/generators.h"

namespace srte {
namespace {

void BM_Betweenness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FlowNetwork net = RandomTopology(n, 4 * n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Betweenness(net, state.range(1) != 0).ordering);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_Betweenness)
    ->ArgsProduct({{16, 32, 64, 128}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_GreedyGroupSelect(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FlowNetwork net = RandomTopology(n, 4 * n, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(GreedyGroupSelect(net, 6, false).order);
  }
}
BENCHMARK(BM_GreedyGroupSelect)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ShortestPathIndex(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FlowNetwork net = RandomTopology(n, 4 * n, 5);
  for (auto _ : state) {
    ShortestPathIndex index(net);
    benchmark::DoNotOptimize(index.PathCount(0, n - 1));
  }
}
BENCHMARK(BM_ShortestPathIndex)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace srte
