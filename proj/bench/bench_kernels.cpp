// Copyright 2026 The pathpair Authors
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

// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "pathpair/blown_cycle.hpp"
#include "pathpair/generators.hpp"
#include "pathpair/metrics.hpp"
#include "pathpair/pairability.hpp"

namespace {

using namespace pathpair;

void BM_DiameterParallel(benchmark::State& state) {
  BlownCycle b = BlownCycle::build(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diameter(b.graph()));
  state.counters["n"] = b.order();
}

void BM_DiameterSerial(benchmark::State& state) {
  BlownCycle b = BlownCycle::build(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diameter_serial(b.graph()));
  state.counters["n"] = b.order();
}

Graph decision_graph(int which) {
  switch (which) {
    case 0: return hypercube_graph(3);
    case 1: return petersen_graph();
    default: return grid2_graph(3, 4);
  }
}

void BM_DecideParallel(benchmark::State& state) {
  Graph g = decision_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_path_pairable(g).status);
}

void BM_DecideSerial(benchmark::State& state) {
  Graph g = decision_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_path_pairable_serial(g).status);
}

}  // namespace

BENCHMARK(BM_DiameterParallel)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiameterSerial)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
// 0 = Q3, 1 = Petersen, 2 = 3x4 grid
BENCHMARK(BM_DecideParallel)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DecideSerial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
