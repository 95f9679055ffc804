// Copyright 2026 The spunnorm Authors.
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


#include <benchmark/benchmark.h>

#include <random>

#include "spunnorm/angle_structures.hpp"
#include "spunnorm/homology.hpp"
#include "spunnorm/norm_ball.hpp"
#include "spunnorm/surface_build.hpp"
#include "test_util.hpp"

namespace {

using namespace spunnorm;
using spunnorm::testing::Fixture;

const char* const kFixtures[] = {"4_1.tri", "K7a1.tri", "L12n1738_filled.tri", "L9a46.tri"};

void BM_EnumerateQtons(benchmark::State& state) {
  const IdealTriangulation t = Fixture(kFixtures[state.range(0)]);
  size_t rays = 0;
  for (auto _ : state) rays = EnumerateQtons(t, {1, false}).entries.size();
  state.SetLabel(std::string(kFixtures[state.range(0)]) + " " + std::to_string(rays) + " rays");
}
BENCHMARK(BM_EnumerateQtons)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_RandomCone(benchmark::State& state) {
  std::mt19937 rng(1);
  const size_t n = state.range(0);
  const IntMatrix a = spunnorm::testing::RandomMatrix(rng, n / 3, n, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ExtremeRays({a, n}));
}
BENCHMARK(BM_RandomCone)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_Reconstruct(benchmark::State& state) {
  const IdealTriangulation t = Fixture(kFixtures[state.range(0)]);
  const RatVector alpha = SolveAngleStructure(t).alpha;
  const auto table = EnumerateQtons(t, {1, false});
  for (auto _ : state)
    for (const auto& e : table.entries) benchmark::DoNotOptimize(Analyze(Reconstruct(t, e.vector, alpha)));
  state.SetItemsProcessed(state.iterations() * table.entries.size());
}
BENCHMARK(BM_Reconstruct)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const IdealTriangulation t = Fixture(kFixtures[state.range(0)]);
  for (auto _ : state) {
    const Homology h(t);
    benchmark::DoNotOptimize(h.b1());
  }
}
BENCHMARK(BM_Homology)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_HomologyClass(benchmark::State& state) {
  const IdealTriangulation t = Fixture(kFixtures[state.range(0)]);
  const Homology h(t);
  const auto table = EnumerateQtons(t, {1, false});
  for (auto _ : state)
    for (const auto& e : table.entries) benchmark::DoNotOptimize(h.Coordinates(e.vector));
  state.SetItemsProcessed(state.iterations() * table.entries.size());
}
BENCHMARK(BM_HomologyClass)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
