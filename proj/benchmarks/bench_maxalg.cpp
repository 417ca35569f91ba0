/*
 *   Copyright 2026 The maxalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "maxalg/maxalg.hpp"
#include "maxalg/verify/fixtures.hpp"
#include "maxalg/verify/oracles.hpp"

using namespace maxalg;

namespace {

MaxMatrix random_matrix(std::size_t n, double p_zero) {
  verify::Generator gen(n * 7919);
  return gen.matrix(n, 0.1, 2, p_zero);
}

void BM_MaxMul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MaxMatrix a = random_matrix(n, 0.0);
  const MaxMatrix b = random_matrix(n, 0.0);
  for (auto _ : state) benchmark::DoNotOptimize(max_mul(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxMul)->RangeMultiplier(2)->Range(4, 128)->Complexity(benchmark::oNCubed);

void BM_Mu(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MaxMatrix a = random_matrix(n, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(mu(a));
}
BENCHMARK(BM_Mu)->RangeMultiplier(2)->Range(4, 64);

void BM_Spectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const MaxMatrix a = random_matrix(n, 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(a));
}
BENCHMARK(BM_Spectrum)->RangeMultiplier(2)->Range(4, 32);

void BM_PowerLimitThreeVertex(benchmark::State& state) {
  const MaxMatrix a = verify::fixtures::three_vertex();
  for (auto _ : state) benchmark::DoNotOptimize(power_limit(a));
}
BENCHMARK(BM_PowerLimitThreeVertex);

void BM_PowerLimitRandom(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  MaxMatrix a = random_matrix(n, 0.6);
  a = scale(a, 1.0 / mu(a));
  for (auto _ : state) benchmark::DoNotOptimize(power_limit(a));
}
BENCHMARK(BM_PowerLimitRandom)->DenseRange(4, 12, 4);

void BM_CommutingWordLimit(benchmark::State& state) {
  const auto mats = verify::fixtures::commuting_triple();
  const Word w({1, 2, 3, 3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(commuting_word_limit(mats, w));
}
BENCHMARK(BM_CommutingWordLimit);

void BM_Oracle(benchmark::State& state) {
  const MaxMatrix a = verify::fixtures::commuting_triple()[0];
  for (auto _ : state) benchmark::DoNotOptimize(oracle_iterate(a, 100));
}
BENCHMARK(BM_Oracle);

}  // namespace

BENCHMARK_MAIN();
