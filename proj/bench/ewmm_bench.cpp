// Copyright 2026 The nonum Authors.
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

// Serial versus OpenMP exists-word census search on scheduling instances.

#include <benchmark/benchmark.h>

#include "nonum/census_solvers.hpp"
#include "nonum/reductions.hpp"

namespace {

// Heat-limited schedules with threshold k; the job mix grows with k.
nonum::reductions::EwmmInstance workload(std::uint64_t k) {
  nonum::reductions::HeatInstance heat;
  heat.threshold = k;
  for (std::uint64_t level = 1; level <= 2 * k; ++level) heat.job_census[level] = 2;
  heat.deadline = 4 * k + 2;
  return nonum::reductions::heat_to_ewmm(heat);
}

void BM_EwmmSerial(benchmark::State& state) {
  const auto inst = workload(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonum::census::solve_ewmm_serial(inst.machine, inst.census));
  }
}

void BM_EwmmParallel(benchmark::State& state) {
  const auto inst = workload(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(nonum::census::solve_ewmm(inst.machine, inst.census));
  }
}

BENCHMARK(BM_EwmmSerial)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EwmmParallel)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
