// Copyright 2026 The SAT Authors
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

#include <cmath>
#include <vector>

#include <benchmark/benchmark.h>

#include "sat/tomography.hpp"

namespace {

using namespace sat;
using namespace sat::tomo;

void BM_SampleSpin(benchmark::State& state) {
  const Scheme s = SpinScheme::from_params(spin::presets::disordered_optimum(), 0.0);
  const BlochState r(0.2, 0.1, 0.5);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample(s, r, state.range(0), seed++));
}
BENCHMARK(BM_SampleSpin)->Arg(1000)->Arg(1000000);

void BM_RoundTripJcmShots(benchmark::State& state) {
  JcmScheme j;
  j.config.detuning = 100e3;
  j.config.coupling = 50e3;
  j.config.alpha = std::sqrt(2.0);
  j.t = 11e-6;
  const Scheme s = j;
  const BlochState r(0.3, -0.4, 0.5);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip(s, r, 1000000, seed++));
}
BENCHMARK(BM_RoundTripJcmShots)->Unit(benchmark::kMillisecond);

void BM_SweepTime(benchmark::State& state) {
  JcmScheme j;
  j.config.detuning = 100e3;
  j.config.coupling = 50e3;
  j.config.alpha = std::sqrt(10.0);
  std::vector<double> grid(static_cast<std::size_t>(state.range(0)));
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 300e-6 * i / grid.size();
  for (auto _ : state) benchmark::DoNotOptimize(sweep(Scheme{j}, "t", grid));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SweepTime)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
