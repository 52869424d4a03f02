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

#include "qcausal/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcausal/error.hpp"

namespace qcausal {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

ParameterVector uniform_angles(RngStream& rng, std::size_t n) {
  if (n == 0) throw InvalidArgument("uniform_angles: n must be >= 1");
  ParameterVector out(n);
  for (auto& a : out) {
    a = kTwoPi * rng.uniform01();
    // Rounding of the product can land exactly on 2pi.
    if (a >= kTwoPi) a = 0.0;
  }
  return out;
}

std::array<Complex, 2> haar_qubit_amplitudes(RngStream& rng) {
  const double cos_theta = 2.0 * rng.uniform01() - 1.0;
  const double phi = kTwoPi * rng.uniform01();
  const double c = std::sqrt(std::max(0.0, 0.5 * (1.0 + cos_theta)));
  const double s = std::sqrt(std::max(0.0, 0.5 * (1.0 - cos_theta)));
  return {Complex{c, 0.0}, std::polar(s, phi)};
}

PureState haar_qubit_state(RngStream& rng) {
  const auto a = haar_qubit_amplitudes(rng);
  return PureState::normalized({a[0], a[1]});
}

PureState haar_state(RngStream& rng, std::size_t dim) {
  if (dim == 0) throw InvalidArgument("haar_state: dim must be >= 1");
  std::vector<Complex> v(dim);
  for (auto& z : v) {
    const auto [re, im] = rng.normal_pair();
    z = Complex{re, im};
  }
  return PureState::normalized(std::move(v));
}

std::array<Complex, 2> antipodal(const std::array<Complex, 2>& a) noexcept {
  return {-std::conj(a[1]), std::conj(a[0])};
}

PureState antipodal(const PureState& a) {
  if (a.dim() != 2) throw InvalidArgument("antipodal: qubit state required");
  const auto p = antipodal(std::array<Complex, 2>{a[0], a[1]});
  return PureState({p[0], p[1]});
}

HaarBinTable haar_fidelity_bin_probs(std::size_t n_bins, std::size_t dim) {
  if (n_bins < 2) throw InvalidArgument("haar_fidelity_bin_probs: n_bins must be >= 2");
  if (dim < 2) throw InvalidArgument("haar_fidelity_bin_probs: dim must be >= 2");
  HaarBinTable table{n_bins, dim, std::vector<double>(n_bins)};
  const double power = static_cast<double>(dim - 1);
  // Haar CDF of the fidelity: 1 - (1 - F)^(N-1).
  for (std::size_t k = 0; k < n_bins; ++k) {
    const double lo = table.bin_lo(k);
    const double hi = k + 1 == n_bins ? 1.0 : table.bin_hi(k);
    table.probs[k] = std::pow(1.0 - lo, power) - std::pow(1.0 - hi, power);
  }
  return table;
}

std::size_t fidelity_bin(double fidelity, std::size_t n_bins) noexcept {
  const double f = std::clamp(fidelity, 0.0, 1.0);
  const double n = static_cast<double>(n_bins);
  auto k = static_cast<std::size_t>(std::floor(f * n));
  if (k >= n_bins) return n_bins - 1;
  if (k > 0 && f < static_cast<double>(k) / n) --k;
  if (k + 1 < n_bins && f >= static_cast<double>(k + 1) / n) ++k;
  return k;
}

}  // namespace qcausal
