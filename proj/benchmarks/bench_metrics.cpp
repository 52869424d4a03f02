// Copyright 2026 The qcausal Authors
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

#include <vector>

#include "qcausal/causal_effect.hpp"
#include "qcausal/circuits.hpp"
#include "qcausal/entanglement.hpp"
#include "qcausal/expressibility.hpp"
#include "qcausal/gates.hpp"
#include "qcausal/linalg.hpp"
#include "qcausal/rng.hpp"
#include "qcausal/sampling.hpp"

namespace {

using namespace qcausal;

void BM_BuildCircuit(benchmark::State& state) {
  const int layers = static_cast<int>(state.range(0));
  RngStream rng(1, 0);
  const auto params = uniform_angles(rng, param_count(CircuitFamily::Switch, layers));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_circuit(CircuitFamily::Switch, layers, params));
  }
}
BENCHMARK(BM_BuildCircuit)->Arg(1)->Arg(4)->Arg(16);

void BM_QaceMc(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto u = gates::cnot();
  const RngStream rng(2, 0);
  for (auto _ : state) benchmark::DoNotOptimize(qace_mc(u, n, rng).mean);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_QaceMc)->Arg(10'000);

void BM_QaceQuadrature(benchmark::State& state) {
  const auto u = gates::cnot();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qace_quadrature(u, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_QaceQuadrature)->Arg(16)->Arg(32);

void BM_EntanglingPowerExact(benchmark::State& state) {
  const auto u = build_circuit(CircuitFamily::Hea, 2, std::vector<double>{0.1, 0.2, 0.3, 0.4});
  for (auto _ : state) benchmark::DoNotOptimize(entangling_power_exact(u));
}
BENCHMARK(BM_EntanglingPowerExact);

void BM_EntanglingPowerMc(benchmark::State& state) {
  const auto u = gates::cnot();
  const RngStream rng(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(entangling_power_mc(u, 10'000, rng).mean);
  state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_EntanglingPowerMc);

void BM_Expressibility(benchmark::State& state) {
  const RngStream rng(4, 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expressibility(CircuitFamily::TimeFlip, 2, 5000, 75, rng).kl);
  }
}
BENCHMARK(BM_Expressibility)->Unit(benchmark::kMillisecond);

void BM_HermitianEigenvalues(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  RngStream rng(5, 0);
  const auto psi = haar_state(rng, n * n);
  const auto rho = partial_trace(DensityMatrix::from_pure(psi), Subsystem::Second, {n, n});
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigenvalues(rho.matrix()));
}
BENCHMARK(BM_HermitianEigenvalues)->Arg(2)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
