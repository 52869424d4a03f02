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

// Random and reference distributions: parameter angles, Haar pure states and
// the analytic Haar fidelity histogram.

#include <array>
#include <cstddef>
#include <vector>

#include "qcausal/circuits.hpp"
#include "qcausal/linalg.hpp"
#include "qcausal/rng.hpp"

namespace qcausal {

/// n independent angles, uniform on [0, 2pi).
ParameterVector uniform_angles(RngStream& rng, std::size_t n);

/// cos(T/2)|0> + e^{i phi} sin(T/2)|1> with cos T ~ U[-1, 1], phi ~ U[0, 2pi).
std::array<Complex, 2> haar_qubit_amplitudes(RngStream& rng);
PureState haar_qubit_state(RngStream& rng);

/// Normalized vector of i.i.d. standard complex Gaussians (exact Haar).
PureState haar_state(RngStream& rng, std::size_t dim);

/// (alpha, beta) -> (-conj(beta), conj(alpha)), orthogonal to the input.
std::array<Complex, 2> antipodal(const std::array<Complex, 2>& a) noexcept;
PureState antipodal(const PureState& a);

/// Probability mass of the Haar fidelity density (N-1)(1-F)^(N-2) on each
/// of n_bins equal-width bins of [0, 1]. Bins are [a, b) except the last,
/// which is closed so that F = 1 is counted.
struct HaarBinTable {
  std::size_t n_bins;
  std::size_t dim;
  std::vector<double> probs;

  double bin_lo(std::size_t k) const { return static_cast<double>(k) / n_bins; }
  double bin_hi(std::size_t k) const { return static_cast<double>(k + 1) / n_bins; }
};

HaarBinTable haar_fidelity_bin_probs(std::size_t n_bins, std::size_t dim);

/// Bin of a fidelity value under the half-open / closed-last convention.
/// Values are clamped to [0, 1] first.
std::size_t fidelity_bin(double fidelity, std::size_t n_bins) noexcept;

}  // namespace qcausal
