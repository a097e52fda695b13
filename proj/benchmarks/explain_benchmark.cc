/*
 * Copyright 2026 The isoexplain Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "isoexplain/explain.h"
#include "isoexplain/forest.h"
#include "isoexplain/synthbench.h"

namespace isoexplain {
namespace {

const Dataset& Clusters() {
  static const Dataset data = GenerateClusters(1000, 6, 2, 0);
  return data;
}

void BM_FitForest(benchmark::State& state) {
  const ForestOptions options{.num_trees = static_cast<int>(state.range(0))};
  for (auto _ : state) {
    benchmark::DoNotOptimize(FitForest(Clusters(), options));
  }
}
BENCHMARK(BM_FitForest)->Arg(50)->Arg(100)->Arg(200);

template <Method kMethod>
void BM_Explain(benchmark::State& state) {
  const IsolationForest forest =
      FitForest(Clusters(), {.num_trees = static_cast<int>(state.range(0))});
  Rng rng(0);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Explain(kMethod, forest, Clusters().row(i), rng));
    i = (i + 1) % Clusters().rows();
  }
}
BENCHMARK(BM_Explain<Method::kOurs>)->Arg(50)->Arg(100)->Arg(200)->Arg(400);
BENCHMARK(BM_Explain<Method::kDiffiLocal>)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

void BM_Score(benchmark::State& state) {
  const IsolationForest forest = FitForest(Clusters(), {});
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(AnomalyScore(forest, Clusters().row(i)));
    i = (i + 1) % Clusters().rows();
  }
}
BENCHMARK(BM_Score);

}  // namespace
}  // namespace isoexplain

BENCHMARK_MAIN();
