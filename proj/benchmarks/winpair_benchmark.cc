// Copyright 2026 The eqforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <vector>

#include "benchmark/benchmark.h"
#include "eqforge/families.h"
#include "eqforge/winpair.h"

namespace eqforge {
namespace {

// Games are generated outside the timed loop; seeds rotate so early exits
// do not always hit the same layout.
void BM_FindWinningPair(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<CondensedNormalGame> games;
  for (uint64_t seed = 1; seed <= 5; ++seed) games.push_back(RandomNormal(n, seed));
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(FindWinningPair(games[i++ % games.size()]));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_FindWinningPair)->RangeMultiplier(2)->Range(1 << 10, 1 << 20)
    ->Complexity();

void BM_ComputeColumnRowSets(benchmark::State& state) {
  const CondensedNormalGame c = RandomNormal(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(ComputeColumnRowSets(c));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ComputeColumnRowSets)->RangeMultiplier(4)->Range(1 << 10, 1 << 20)
    ->Complexity(benchmark::oN);

void BM_BruteForceWinningPair(benchmark::State& state) {
  const CondensedNormalGame c = RandomNormal(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(BruteForceWinningPair(c));
}
BENCHMARK(BM_BruteForceWinningPair)->DenseRange(4, 16, 4);

}  // namespace
}  // namespace eqforge

BENCHMARK_MAIN();
