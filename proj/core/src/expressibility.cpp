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

#include "qcausal/expressibility.hpp"

#include <cmath>
#include <string>

#include "qcausal/error.hpp"
#include "qcausal/estimator.hpp"

namespace qcausal {

namespace {

constexpr std::size_t kMinPairs = 100;
constexpr std::size_t kCircuitDim = 4;

void check_budget(std::size_t n_pairs, std::size_t n_bins) {
  if (n_pairs < kMinPairs) {
    throw InvalidArgument("expressibility: n_pairs must be >= " + std::to_string(kMinPairs) +
                          ", got " + std::to_string(n_pairs));
  }
  if (n_bins < 2) throw InvalidArgument("expressibility: n_bins must be >= 2");
}

// |<00| U(theta)^dagger U(phi) |00>|^2 from the first columns.
double first_column_fidelity(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex s{};
  for (std::size_t r = 0; r < a.rows(); ++r) s += std::conj(a(r, 0)) * b(r, 0);
  return std::norm(s);
}

}  // namespace

FidelityHistogram make_fidelity_histogram(std::span<const double> fidelities, std::size_t n_bins,
                                          std::size_t dim) {
  FidelityHistogram h;
  h.n_bins = n_bins;
  h.haar = haar_fidelity_bin_probs(n_bins, dim);
  h.counts.assign(n_bins, 0);
  for (double f : fidelities) ++h.counts[fidelity_bin(f, n_bins)];
  h.total = fidelities.size();
  return h;
}

double kl_divergence(const FidelityHistogram& hist) {
  if (hist.total == 0) throw InvalidArgument("kl_divergence: empty histogram");
  if (hist.counts.size() != hist.n_bins || hist.haar.probs.size() != hist.n_bins) {
    throw InvalidArgument("kl_divergence: histogram and Haar table disagree on bin count");
  }
  const double total = static_cast<double>(hist.total);
  double kl = 0.0;
  for (std::size_t k = 0; k < hist.n_bins; ++k) {
    if (hist.counts[k] == 0) continue;
    const double p = static_cast<double>(hist.counts[k]) / total;
    kl += p * std::log(p / hist.haar.probs[k]);
  }
  // Round-off can leave -1e-17 when counts match the reference exactly.
  return std::max(0.0, kl);
}

ExpressibilityResult expressibility(CircuitFamily family, int layers, std::size_t n_pairs,
                                    std::size_t n_bins, const RngStream& rng,
                                    LayerPolicy policy, unsigned workers) {
  check_budget(n_pairs, n_bins);
  const std::size_t n_params = param_count(family, layers);
  const auto fidelities = collect(n_pairs, workers, [&](std::size_t i) {
    RngStream s = rng.split(i);
    const auto theta = uniform_angles(s, n_params);
    const auto phi = uniform_angles(s, n_params);
    return first_column_fidelity(build_circuit(family, layers, theta, policy),
                                 build_circuit(family, layers, phi, policy));
  });
  ExpressibilityResult out;
  out.hist = make_fidelity_histogram(fidelities, n_bins, kCircuitDim);
  out.kl = kl_divergence(out.hist);
  return out;
}

ExpressibilityResult haar_baseline_expressibility(std::size_t n_pairs, std::size_t n_bins,
                                                  const RngStream& rng, std::size_t dim,
                                                  unsigned workers) {
  check_budget(n_pairs, n_bins);
  const auto fidelities = collect(n_pairs, workers, [&](std::size_t i) {
    RngStream s = rng.split(i);
    const PureState a = haar_state(s, dim);
    const PureState b = haar_state(s, dim);
    return fidelity_pure(a, b);
  });
  ExpressibilityResult out;
  out.hist = make_fidelity_histogram(fidelities, n_bins, dim);
  out.kl = kl_divergence(out.hist);
  return out;
}

}  // namespace qcausal
