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

#include <benchmark/benchmark.h>

#include "sat/jcm_assistant.hpp"

namespace {

using namespace sat;
using namespace sat::jcm;

JcmConfig field(double nbar) {
  JcmConfig c;
  c.detuning = 100e3;
  c.coupling = 50e3;
  c.alpha = std::sqrt(nbar);
  return c;
}

void BM_DeterminantSeries(benchmark::State& state) {
  const JcmConfig c = field(static_cast<double>(state.range(0)));
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(determinant_series(c, t));
    t += 1e-7;
  }
}
BENCHMARK(BM_DeterminantSeries)->Arg(2)->Arg(10)->Arg(50);

void BM_MeasurementMatrix(benchmark::State& state) {
  const JcmConfig c = field(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(measurement_matrix(c, 23e-6));
}
BENCHMARK(BM_MeasurementMatrix)->Arg(2)->Arg(10)->Arg(50);

void BM_AveragedDeterminant(benchmark::State& state) {
  const JcmConfig c = field(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(averaged_determinant(c, 120e-6, 1e-10));
}
BENCHMARK(BM_AveragedDeterminant)->Arg(2)->Arg(10);

void BM_Propagator(benchmark::State& state) {
  const JcmConfig c = field(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jc_propagator(c, 23e-6));
}
BENCHMARK(BM_Propagator)->Arg(2)->Arg(10);

// Dense evolution used as a cross-check, for scale.
void BM_OracleEvolve(benchmark::State& state) {
  const JcmConfig c = field(static_cast<double>(state.range(0)));
  const BlochState r(0.3, -0.2, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_evolve(c, r, 23e-6));
}
BENCHMARK(BM_OracleEvolve)->Arg(2)->Arg(10)->Unit(benchmark::kMillisecond);

}  // namespace
