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

#include "qcausal/causal_effect.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "qcausal/entanglement.hpp"
#include "qcausal/error.hpp"
#include "qcausal/estimator.hpp"
#include "qcausal/sampling.hpp"

namespace qcausal {

namespace {

using detail::State4;
using detail::Unitary4;
using Qubit = std::array<Complex, 2>;

void require_two_qubit_unitary(const ComplexMatrix& u, const char* what) {
  if (u.rows() != 4 || u.cols() != 4 || !is_unitary(u, 1e-10)) {
    throw InvalidArgument(std::string(what) + ": expected a 4x4 unitary");
  }
}

State4 product(const Qubit& a, const Qubit& b) noexcept {
  return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

// Bloch vector of Tr_A |psi><psi|.
std::array<double, 3> target_bloch(const State4& psi) noexcept {
  const double r00 = std::norm(psi[0]) + std::norm(psi[2]);
  const double r11 = std::norm(psi[1]) + std::norm(psi[3]);
  const Complex r01 = psi[0] * std::conj(psi[1]) + psi[2] * std::conj(psi[3]);
  return {2.0 * r01.real(), -2.0 * r01.imag(), r00 - r11};
}

double intervention_distance(const Unitary4& u, const Qubit& a, const Qubit& b) noexcept {
  const auto r1 = target_bloch(detail::apply4(u, product(a, b)));
  const auto r2 = target_bloch(detail::apply4(u, product(antipodal(a), b)));
  const double dx = r1[0] - r2[0];
  const double dy = r1[1] - r2[1];
  const double dz = r1[2] - r2[2];
  const double td = 0.5 * std::sqrt(dx * dx + dy * dy + dz * dz);
  return std::min(td, 1.0);
}

Qubit bloch_point(double cos_theta, double phi) noexcept {
  const double c = std::sqrt(std::max(0.0, 0.5 * (1.0 + cos_theta)));
  const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - cos_theta)));
  return {Complex{c, 0.0}, std::polar(s, phi)};
}

}  // namespace

DensityMatrix do_intervention_state(const ComplexMatrix& u, const PureState& a,
                                    const PureState& b) {
  require_two_qubit_unitary(u, "do_intervention_state");
  if (a.dim() != 2 || b.dim() != 2) {
    throw InvalidArgument("do_intervention_state: qubit interventions required");
  }
  const PureState out = apply(u, kron(a, b));
  return partial_trace(DensityMatrix::from_pure(out), Subsystem::Second, {2, 2});
}

McEstimate qace_mc(const ComplexMatrix& u, std::size_t n_ab, const RngStream& rng,
                   unsigned workers) {
  require_two_qubit_unitary(u, "qace_mc");
  if (n_ab < 1000) throw InvalidArgument("qace_mc: n_ab must be >= 1000");
  const Unitary4 u4 = detail::to_unitary4(u);
  return mc_estimate(n_ab, workers, [&](std::size_t i) {
    RngStream s = rng.split(i);
    const Qubit a = haar_qubit_amplitudes(s);
    const Qubit b = haar_qubit_amplitudes(s);
    return intervention_distance(u4, a, b);
  });
}

std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n) {
  if (n == 0) throw InvalidArgument("gauss_legendre: n must be >= 1");
  std::vector<double> nodes(n);
  std::vector<double> weights(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Three-term recurrence for P_n(x) and its derivative.
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      const double pn = n == 1 ? x : p1;
      const double pn1 = n == 1 ? 1.0 : p0;
      dp = static_cast<double>(n) * (x * pn - pn1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
  return {nodes, weights};
}

double qace_quadrature(const ComplexMatrix& u, std::size_t grid_order) {
  require_two_qubit_unitary(u, "qace_quadrature");
  if (grid_order < 8) throw InvalidArgument("qace_quadrature: grid_order must be >= 8");
  const Unitary4 u4 = detail::to_unitary4(u);
  const auto [nodes, weights] = gauss_legendre(grid_order);
  const std::size_t n = grid_order;
  std::vector<Qubit> points;
  std::vector<double> point_weights;
  points.reserve(n * n);
  point_weights.reserve(n * n);
  // Uniform measure on the sphere: d(cos theta)/2 * d(phi)/(2 pi).
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
      points.push_back(bloch_point(nodes[i], phi));
      point_weights.push_back(0.5 * weights[i] / static_cast<double>(n));
    }
  }
  double total = 0.0;
  for (std::size_t ia = 0; ia < points.size(); ++ia) {
    double inner = 0.0;
    for (std::size_t ib = 0; ib < points.size(); ++ib) {
      inner += point_weights[ib] * intervention_distance(u4, points[ia], points[ib]);
    }
    total += point_weights[ia] * inner;
  }
  return total;
}

MetricReport qace_stats(CircuitFamily family, int layers, std::size_t n_param, std::size_t n_ab,
                        const RngStream& rng, LayerPolicy policy, unsigned workers) {
  if (n_param < 20) throw InvalidArgument("qace_stats: n_param must be >= 20");
  if (n_ab < 10000) throw InvalidArgument("qace_stats: n_ab must be >= 10000");
  const std::size_t n_params = param_count(family, layers);
  const auto values = collect(n_param, workers, [&](std::size_t i) {
    RngStream s = rng.split(i);
    const auto u = build_circuit(family, layers, uniform_angles(s, n_params), policy);
    return qace_mc(u, n_ab, s.split(0), 1).mean;
  });
  return make_report(std::string(family_name(family)), layers, "qace", values, n_ab,
                     rng.master_seed());
}

}  // namespace qcausal
