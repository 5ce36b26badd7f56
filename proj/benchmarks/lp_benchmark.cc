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
#include "srte/generators.h"
#include "srte/lp.h"
#include "srte/random.h"
#include "srte/te_model.h"

namespace srte {
namespace {

// Random packing LP: maximize c x s.t. A x <= b, x >= 0, dense A.
lp::Problem RandomPacking(int rows, int cols, std::uint64_t seed) {
  Rng rng(seed);
  lp::Problem p(lp::Sense::kMaximize);
  for (int j = 0; j < cols; ++j) p.AddVariable("", 1 + rng.Uniform());
  for (int i = 0; i < rows; ++i) {
    std::vector<lp::Term> terms;
    for (int j = 0; j < cols; ++j) {
      if (rng.Uniform() < 0.3) terms.push_back({j, 0.1 + rng.Uniform()});
    }
    p.AddConstraint(std::move(terms), lp::Relation::kLessEqual, 1 + 9 * rng.Uniform());
  }
  return p;
}

void BM_SolveRandomPacking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const lp::Problem p = RandomPacking(n, 2 * n, 7);
  for (auto _ : state) {
    lp::Solution s = lp::Solve(p);
    benchmark::DoNotOptimize(s.objective_value);
    state.counters["iterations"] = s.iterations;
  }
}
BENCHMARK(BM_SolveRandomPacking)->Arg(20)->Arg(80)->Arg(200)->Unit(benchmark::kMillisecond);

// Arc-flow utilization program: flow conservation makes it heavily degenerate.
void BM_SolveArcFlowBaseline(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const FlowNetwork net = RandomTopology(n, 4 * n, 3);
  const DemandMatrix d = GenerateGravityDemands(net, 3 * n, 3);
  const TeProgram program = BuildMpBaseline(net, d, Objective::kLinkUtilization);
  for (auto _ : state) {
    lp::Solution s = lp::Solve(program.problem);
    benchmark::DoNotOptimize(s.objective_value);
    state.counters["iterations"] = s.iterations;
  }
}
BENCHMARK(BM_SolveArcFlowBaseline)->Arg(10)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace srte
