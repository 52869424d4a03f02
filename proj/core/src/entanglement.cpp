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

#include "qcausal/entanglement.hpp"

#include <cmath>
#include <string>

#include "qcausal/error.hpp"
#include "qcausal/estimator.hpp"
#include "qcausal/sampling.hpp"

namespace qcausal {

namespace {

constexpr double kUnitaryTol = 1e-10;

void require_two_qubit_unitary(const ComplexMatrix& u, const char* what) {
  if (u.rows() != 4 || u.cols() != 4) {
    throw InvalidArgument(std::string(what) + ": expected a 4x4 operator");
  }
  if (!is_unitary(u, kUnitaryTol)) {
    throw InvalidArgument(std::string(what) + ": operator is not unitary");
  }
}

void require_two_qubit_state(const PureState& psi, const char* what) {
  if (psi.dim() != 4) throw InvalidArgument(std::string(what) + ": two-qubit state required");
}

}  // namespace

namespace detail {

Unitary4 to_unitary4(const ComplexMatrix& u) {
  Unitary4 out{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) out[r * 4 + c] = u(r, c);
  }
  return out;
}

State4 apply4(const Unitary4& u, const State4& psi) noexcept {
  State4 out{};
  for (std::size_t r = 0; r < 4; ++r) {
    out[r] = u[r * 4 + 0] * psi[0] + u[r * 4 + 1] * psi[1] + u[r * 4 + 2] * psi[2] +
             u[r * 4 + 3] * psi[3];
  }
  return out;
}

double reduced_purity(const State4& psi) noexcept {
  // rho_A = M M^dagger with M_{ij} = psi[2i + j].
  const double r00 = std::norm(psi[0]) + std::norm(psi[1]);
  const double r11 = std::norm(psi[2]) + std::norm(psi[3]);
  const Complex r01 = psi[0] * std::conj(psi[2]) + psi[1] * std::conj(psi[3]);
  return r00 * r00 + r11 * r11 + 2.0 * std::norm(r01);
}

}  // namespace detail

double concurrence_pure(const PureState& state) {
  require_two_qubit_state(state, "concurrence_pure");
  // For unit norm, 2 [1 - Tr(rho_B^2)] = 4 det(rho_B) = 4 |psi00 psi11 - psi01 psi10|^2.
  // The amplitude form does not cancel near product states, where the
  // purity form leaves sqrt(round-off) ~ 1e-8.
  const double c = 2.0 * std::abs(state[0] * state[3] - state[1] * state[2]);
  return std::min(1.0, c);
}

double linear_entropy(const PureState& state) {
  require_two_qubit_state(state, "linear_entropy");
  const DensityMatrix rho = partial_trace(DensityMatrix::from_pure(state), Subsystem::First, {2, 2});
  return std::clamp(1.0 - purity(rho), 0.0, 0.5);
}

MetricReport concurrence_stats(CircuitFamily family, int layers, std::size_t n_samples,
                               const RngStream& rng, LayerPolicy policy, unsigned workers) {
  if (n_samples < 100) throw InvalidArgument("concurrence_stats: n_samples must be >= 100");
  const std::size_t n_params = param_count(family, layers);
  const auto values = collect(n_samples, workers, [&](std::size_t i) {
    RngStream s = rng.split(i);
    const auto u = build_circuit(family, layers, uniform_angles(s, n_params), policy);
    return concurrence_pure(apply(u, PureState::basis(4, 0)));
  });
  return make_report(std::string(family_name(family)), layers, "concurrence", values, 1,
                     rng.master_seed());
}

McEstimate entangling_power_mc(const ComplexMatrix& u, std::size_t n_samples,
                               const RngStream& rng, unsigned workers) {
  require_two_qubit_unitary(u, "entangling_power_mc");
  if (n_samples < 1000) throw InvalidArgument("entangling_power_mc: n_samples must be >= 1000");
  const auto u4 = detail::to_unitary4(u);
  return mc_estimate(n_samples, workers, [&](std::size_t i) {
    RngStream s = rng.split(i);
    const auto p1 = haar_qubit_amplitudes(s);
    const auto p2 = haar_qubit_amplitudes(s);
    const detail::State4 in{p1[0] * p2[0], p1[0] * p2[1], p1[1] * p2[0], p1[1] * p2[1]};
    const double e = 1.0 - detail::reduced_purity(detail::apply4(u4, in));
    return std::clamp(e, 0.0, 0.5);
  });
}

ComplexMatrix qubit_swap_operator(std::size_t n_qubits, std::size_t a, std::size_t b) {
  if (n_qubits == 0 || n_qubits > 4 || a >= n_qubits || b >= n_qubits) {
    throw InvalidArgument("qubit_swap_operator: qubit index out of range");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t sa = n_qubits - 1 - a;
  const std::size_t sb = n_qubits - 1 - b;
  ComplexMatrix t(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const std::size_t ba = (i >> sa) & 1U;
    const std::size_t bb = (i >> sb) & 1U;
    std::size_t j = i & ~((std::size_t{1} << sa) | (std::size_t{1} << sb));
    j |= (bb << sa) | (ba << sb);
    t(j, i) = 1.0;
  }
  return t;
}

double entangling_power_exact(const ComplexMatrix& u) {
  require_two_qubit_unitary(u, "entangling_power_exact");
  constexpr double d = 2.0;
  // Register order (A1, B1, A2, B2) = qubits (0, 1, 2, 3).
  static const ComplexMatrix kIdentity = ComplexMatrix::identity(16);
  static const ComplexMatrix kSwapA = qubit_swap_operator(4, 0, 2);
  static const ComplexMatrix kSwapB = qubit_swap_operator(4, 1, 3);
  static const ComplexMatrix kOmega = [] {
    // (2 P_sym / (d (d + 1)))^{(x)2} with P_sym = (I + T) / 2.
    const double norm = 1.0 / (d * (d + 1.0));
    return (norm * norm) * ((kIdentity + kSwapA) * (kIdentity + kSwapB));
  }();
  const ComplexMatrix uu = kron(u, u);
  const ComplexMatrix evolved = uu * kOmega * dagger(uu);
  const double overlap = trace(evolved * kSwapA).real();
  return 1.0 - overlap;
}

EntanglingPowerReports entangling_power_stats(CircuitFamily family, int layers,
                                              std::size_t n_param, const RngStream& rng,
                                              LayerPolicy policy, unsigned workers) {
  if (n_param < 50) throw InvalidArgument("entangling_power_stats: n_param must be >= 50");
  const std::size_t n_params = param_count(family, layers);
  const auto raw = collect(n_param, workers, [&](std::size_t i) {
    RngStream s = rng.split(i);
    return entangling_power_exact(build_circuit(family, layers, uniform_angles(s, n_params), policy));
  });
  std::vector<double> normalized(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) normalized[i] = raw[i] / kMaxEntanglingPower;
  const std::string name(family_name(family));
  return {make_report(name, layers, "epow_raw", raw, 0, rng.master_seed()),
          make_report(name, layers, "epow_norm", normalized, 0, rng.master_seed())};
}

}  // namespace qcausal
