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


#include "benchmark/benchmark.h"
#include "eqforge/certify.h"
#include "eqforge/equilibrium.h"
#include "eqforge/existence.h"
#include "eqforge/families.h"
#include "eqforge/support_enumeration.h"
#include "eqforge/valuation.h"

namespace eqforge {
namespace {

void BM_VerifyUniformD(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const TwoValuesGame d = GenD(m);
  const Profile uniform{MixedStrategy::Uniform(m), MixedStrategy::Uniform(m)};
  const Valuation v = Valuation::ESD(0, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(VerifyFEquilibrium(d, v, uniform));
}
BENCHMARK(BM_VerifyUniformD)->DenseRange(2, 16, 2);

void BM_SupportEnumeration(benchmark::State& state) {
  const Game g = GenD(static_cast<int>(state.range(0))).game();
  for (auto _ : state) benchmark::DoNotOptimize(SolveESupportEnumeration(g));
}
BENCHMARK(BM_SupportEnumeration)->DenseRange(2, 5);

void BM_ThreeStrategyAtlasSlice(benchmark::State& state) {
  const Valuation v = Valuation::ESD(0, 1, 1);
  uint32_t id = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ThreeStrategyFEquilibrium(AtlasGame(id, 0, 1), v));
    id = (id + 7919) % kAtlasSize;
  }
}
BENCHMARK(BM_ThreeStrategyAtlasSlice);

void BM_CertifyC2(benchmark::State& state) {
  const Valuation v = Valuation::EVar(0, 1, 4);
  const TwoValuesGame c2 = GenC(2);
  for (auto _ : state) benchmark::DoNotOptimize(CertifyNoFEquilibrium(c2, v));
}
BENCHMARK(BM_CertifyC2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace eqforge

BENCHMARK_MAIN();
