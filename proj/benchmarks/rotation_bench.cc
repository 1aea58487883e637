// Copyright 2026 The mzi-qfi Authors
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

#include "mzi/schwinger.h"
#include "mzi/states.h"

namespace {

mzi::FockState random_state(int cutoff) {
  std::mt19937_64 rng(5);
  std::normal_distribution<double> gauss;
  mzi::FockVector v(cutoff);
  for (int j = 0; j <= cutoff; ++j) {
    for (int k = 0; j + k <= cutoff; ++k) v(j, k) = mzi::Complex{gauss(rng), gauss(rng)};
  }
  return mzi::FockState::normalized(std::move(v));
}

void BM_apply_rotation(benchmark::State& state) {
  const mzi::FockState psi = random_state(static_cast<int>(state.range(0)));
  const auto v = mzi::SpinDirection::normalize(0.3, -0.4, 0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzi::apply_rotation(psi, v, 0.7));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_apply_rotation)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_phase_shift(benchmark::State& state) {
  const mzi::FockState psi = random_state(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzi::phase_shift(psi, 0.3));
  }
}
BENCHMARK(BM_phase_shift)->RangeMultiplier(4)->Range(8, 128);

void BM_build_twin_squeezed(benchmark::State& state) {
  mzi::ProbeSpec spec{mzi::Family::kTwinSqueezedVacuum, {}, {}};
  spec.params.xi = 0.1 * static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mzi::build(spec));
  }
}
BENCHMARK(BM_build_twin_squeezed)->DenseRange(4, 12, 4);

}  // namespace
