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

#include <benchmark/benchmark.h>

#include "sat/spin_assistant.hpp"

namespace {

using namespace sat;
using namespace sat::spin;

void BM_BuildUnitary(benchmark::State& state) {
  const SpinSchemeParams p = presets::pure_optimum();
  for (auto _ : state) benchmark::DoNotOptimize(build_unitary(p));
}
BENCHMARK(BM_BuildUnitary);

void BM_DecomposeUnitary(benchmark::State& state) {
  const CMatrix u = build_unitary(presets::pure_optimum());
  for (auto _ : state) benchmark::DoNotOptimize(decompose_unitary(u));
}
BENCHMARK(BM_DecomposeUnitary);

void BM_CoefficientSystem(benchmark::State& state) {
  const SpinSchemeParams p = presets::disordered_optimum();
  const AssistantPurity lambda(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_system(p, lambda));
}
BENCHMARK(BM_CoefficientSystem);

// Same map by evolving the 4x4 density matrix four times.
void BM_LinearMapFromUnitary(benchmark::State& state) {
  const CMatrix u = build_unitary(presets::disordered_optimum());
  const AssistantPurity lambda(0.3);
  for (auto _ : state) benchmark::DoNotOptimize(linear_map_from_unitary(u, lambda));
}
BENCHMARK(BM_LinearMapFromUnitary);

void BM_ClosedFormDeterminant(benchmark::State& state) {
  const SpinSchemeParams p = presets::pure_optimum();
  const AssistantPurity lambda(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(determinant_closed_form(p, lambda));
}
BENCHMARK(BM_ClosedFormDeterminant);

void BM_OptimizeDeterminant(benchmark::State& state) {
  OptimizerOptions o;
  o.budget = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(optimize_determinant(AssistantPurity(0.0), o));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_OptimizeDeterminant)->Arg(2000)->Arg(20000)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_HeisenbergSpectrum(benchmark::State& state) {
  const HeisenbergParams h = presets::heisenberg_optimum();
  for (auto _ : state) benchmark::DoNotOptimize(heisenberg_hamiltonian(h));
}
BENCHMARK(BM_HeisenbergSpectrum);

}  // namespace
