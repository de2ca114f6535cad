// Copyright 2026 The edmkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "edm/edm.hpp"

namespace edm {
namespace {

void BM_SymEigen(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const SymMatrix m = Tau(RandomSphericalEdm(n, 3, 1)).sym();
  for (auto _ : state) benchmark::DoNotOptimize(SymEigen(m));
}
BENCHMARK(BM_SymEigen)->RangeMultiplier(4)->Range(16, 1024);

void BM_ClassifyGrid(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const DistanceMatrix d = ManhattanGrid(k, k);
  for (auto _ : state) benchmark::DoNotOptimize(Classify(d));
}
BENCHMARK(BM_ClassifyGrid)->DenseRange(4, 20, 8);

void BM_KronSumEdm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DistanceMatrix d = MakePathEdm(n).matrix;
  for (auto _ : state) benchmark::DoNotOptimize(KronSumEdm(d, d));
}
BENCHMARK(BM_KronSumEdm)->RangeMultiplier(2)->Range(4, 32);

void BM_QapBruteForce(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QapInstance inst(SymMatrix::Ones(n), RandomSphericalEdm(n, 2, 7));
  for (auto _ : state) benchmark::DoNotOptimize(QapBruteForce(inst));
}
BENCHMARK(BM_QapBruteForce)->DenseRange(4, 8, 2);

void BM_QapShiftLowerBound(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const QapInstance inst(SymMatrix::Ones(n), RandomSphericalEdm(n, 3, 7));
  for (auto _ : state) benchmark::DoNotOptimize(QapShiftLowerBound(inst));
}
BENCHMARK(BM_QapShiftLowerBound)->RangeMultiplier(4)->Range(8, 512);

}  // namespace
}  // namespace edm

BENCHMARK_MAIN();
