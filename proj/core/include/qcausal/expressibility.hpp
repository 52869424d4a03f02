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
#include <cstdint>
#include <span>
#include <vector>

#include "qcausal/circuits.hpp"
#include "qcausal/rng.hpp"
#include "qcausal/sampling.hpp"

namespace qcausal {

struct FidelityHistogram {
  std::size_t n_bins = 0;
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;
  HaarBinTable haar;
};

FidelityHistogram make_fidelity_histogram(std::span<const double> fidelities, std::size_t n_bins,
                                          std::size_t dim);

/// D_KL(P_empirical || P_Haar), natural log, empty bins contribute zero.
/// Throws InvalidArgument on an empty histogram.
double kl_divergence(const FidelityHistogram& hist);

struct ExpressibilityResult {
  double kl = 0.0;
  FidelityHistogram hist;
};

/// Fidelity histogram of |<psi(theta)|psi(phi)>|^2 over n_pairs fresh,
/// independent parameter pairs acting on |00>, scored against the
/// four-dimensional Haar distribution. Requires n_pairs >= 100, n_bins >= 2.
ExpressibilityResult expressibility(CircuitFamily family, int layers, std::size_t n_pairs,
                                    std::size_t n_bins, const RngStream& rng,
                                    LayerPolicy policy = LayerPolicy::PrepOnce,
                                    unsigned workers = 1);

/// Same estimator with both states drawn directly from the Haar measure on
/// C^dim; the reference point an ideal circuit would reach.
ExpressibilityResult haar_baseline_expressibility(std::size_t n_pairs, std::size_t n_bins,
                                                  const RngStream& rng, std::size_t dim = 4,
                                                  unsigned workers = 1);

}  // namespace qcausal
