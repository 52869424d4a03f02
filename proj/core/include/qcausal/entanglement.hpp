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

#pragma once

#include <array>
#include <cstddef>

#include "qcausal/circuits.hpp"
#include "qcausal/linalg.hpp"
#include "qcausal/rng.hpp"
#include "qcausal/stats.hpp"

namespace qcausal {

/// Largest two-qubit entangling power (attained by CNOT).
inline constexpr double kMaxEntanglingPower = 2.0 / 9.0;

/// sqrt(2 [1 - Tr(rho_B^2)]) with rho_B = Tr_A |psi><psi|, A the control.
double concurrence_pure(const PureState& state);

/// 1 - Tr(rho^2) with rho = Tr_2 |psi><psi|.
double linear_entropy(const PureState& state);

/// Mean and population std of concurrence_pure(U(theta)|00>) over
/// n_samples >= 100 uniform parameter draws. Metric name "concurrence".
MetricReport concurrence_stats(CircuitFamily family, int layers, std::size_t n_samples,
                               const RngStream& rng, LayerPolicy policy = LayerPolicy::PrepOnce,
                               unsigned workers = 1);

/// Average output linear entropy of U over n_samples >= 1000 Haar product
/// inputs |psi1>|psi2>.
McEstimate entangling_power_mc(const ComplexMatrix& u, std::size_t n_samples,
                               const RngStream& rng, unsigned workers = 1);

/// Exact Haar-product average of the linear entropy, evaluated on four
/// copies ordered (A1, B1, A2, B2):
///   e_p(U) = 1 - Tr[(U (x) U) Omega (U (x) U)^dagger (T_{A1A2} (x) I)]
/// where Omega is the product of the two normalized symmetric projectors.
double entangling_power_exact(const ComplexMatrix& u);

/// Permutation operator exchanging qubits a and b of an n-qubit register
/// (qubit 0 is the most significant).
ComplexMatrix qubit_swap_operator(std::size_t n_qubits, std::size_t a, std::size_t b);

struct EntanglingPowerReports {
  MetricReport raw;         // metric "epow_raw"
  MetricReport normalized;  // metric "epow_norm", raw / (2/9)
};

/// entangling_power_exact over n_param >= 50 uniform parameter draws.
EntanglingPowerReports entangling_power_stats(CircuitFamily family, int layers,
                                              std::size_t n_param, const RngStream& rng,
                                              LayerPolicy policy = LayerPolicy::PrepOnce,
                                              unsigned workers = 1);

namespace detail {
using State4 = std::array<Complex, 4>;
using Unitary4 = std::array<Complex, 16>;

Unitary4 to_unitary4(const ComplexMatrix& u);
State4 apply4(const Unitary4& u, const State4& psi) noexcept;
/// Tr(rho_A^2) of a normalized two-qubit pure state.
double reduced_purity(const State4& psi) noexcept;
}  // namespace detail

}  // namespace qcausal
