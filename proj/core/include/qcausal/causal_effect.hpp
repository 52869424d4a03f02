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

#include <cstddef>
#include <utility>
#include <vector>

#include "qcausal/circuits.hpp"
#include "qcausal/linalg.hpp"
#include "qcausal/rng.hpp"
#include "qcausal/stats.hpp"

namespace qcausal {

/// Tr_A( U (|a><a| (x) |b><b|) U^dagger ): the target state after forcing
/// the control into |a>.
DensityMatrix do_intervention_state(const ComplexMatrix& u, const PureState& a,
                                    const PureState& b);

/// Quantum average causal effect of the control on the target,
///   E_a E_b TD[ rho(b | do(a)), rho(b | do(a_perp)) ],
/// estimated from n_ab >= 1000 independent Haar pairs (a, b).
McEstimate qace_mc(const ComplexMatrix& u, std::size_t n_ab, const RngStream& rng,
                   unsigned workers = 1);

/// Deterministic product-rule evaluation of the same average:
/// Gauss-Legendre in cos(theta) and the trapezoid rule in phi for both
/// Bloch spheres, grid_order >= 8 nodes per axis.
double qace_quadrature(const ComplexMatrix& u, std::size_t grid_order);

/// qace_mc of the built circuit for each of n_param >= 20 parameter draws,
/// n_ab >= 10^4 inner samples each. Metric name "qace". The inner estimates
/// run serially; parallelism is over parameter draws.
MetricReport qace_stats(CircuitFamily family, int layers, std::size_t n_param, std::size_t n_ab,
                        const RngStream& rng, LayerPolicy policy = LayerPolicy::PrepOnce,
                        unsigned workers = 1);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
std::pair<std::vector<double>, std::vector<double>> gauss_legendre(std::size_t n);

}  // namespace qcausal
