// Copyright 2026 The phrep Authors
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

#include <benchmark/benchmark.h>

#include "phrep/generators.hpp"
#include "phrep/involuted.hpp"
#include "phrep/persistence.hpp"

namespace {

using namespace phrep;

Filtration cycle(std::int64_t n, int dim) {
  return Filtration::rips(gen::cycle_graph(static_cast<std::size_t>(n)), {dim, kInfinity, 2});
}

Filtration cloud(std::int64_t n, int dim) {
  return Filtration::rips(gen::euclidean(gen::uniform_cube(static_cast<std::size_t>(n), 3, 7)),
                          {dim, kInfinity, 2});
}

void run_mode(benchmark::State& state, const Filtration& f, Mode mode) {
  const PrimeField field(2);
  PersistenceOptions options;
  options.mode = mode;
  std::size_t pairs = 0;
  for (auto _ : state) {
    auto result = compute_persistence(f, field, options);
    pairs = result.pairs.size();
    benchmark::DoNotOptimize(result);
  }
  state.counters["pairs"] = static_cast<double>(pairs);
}

void BM_PhaseOneCycle(benchmark::State& state) {
  const auto f = cycle(state.range(0), static_cast<int>(state.range(1)));
  const PrimeField field(2);
  for (auto _ : state) benchmark::DoNotOptimize(phase_one(f, field));
}
BENCHMARK(BM_PhaseOneCycle)->Args({100, 1})->Args({100, 2})->Unit(benchmark::kMillisecond);

void BM_InvolutedCycle(benchmark::State& state) {
  run_mode(state, cycle(state.range(0), static_cast<int>(state.range(1))), Mode::involuted);
}
BENCHMARK(BM_InvolutedCycle)->Args({100, 1})->Args({100, 2})->Unit(benchmark::kMillisecond);

void BM_HomologyCycle(benchmark::State& state) {
  run_mode(state, cycle(state.range(0), static_cast<int>(state.range(1))), Mode::homology);
}
BENCHMARK(BM_HomologyCycle)->Args({40, 1})->Args({60, 1})->Unit(benchmark::kMillisecond);

void BM_OracleCycle(benchmark::State& state) {
  run_mode(state, cycle(state.range(0), 2), Mode::homology_oracle);
}
BENCHMARK(BM_OracleCycle)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_InvolutedRandomCloud(benchmark::State& state) {
  run_mode(state, cloud(state.range(0), 2), Mode::involuted);
}
BENCHMARK(BM_InvolutedRandomCloud)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_CohomologyRandomCloud(benchmark::State& state) {
  run_mode(state, cloud(state.range(0), 2), Mode::cohomology);
}
BENCHMARK(BM_CohomologyRandomCloud)->Arg(30)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
