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

#include <cmath>
#include <cstddef>
#include <vector>

#include "qcausal/parallel.hpp"
#include "qcausal/stats.hpp"

namespace qcausal {

/// Fixed block length of Monte-Carlo reductions. Partial sums are formed per
/// block and combined in block order, so the result is independent of the
/// worker count.
inline constexpr std::size_t kReductionBlock = 4096;

/// Mean and standard error of sample(i), i in [0, n).
template <typename Sample>
McEstimate mc_estimate(std::size_t n, unsigned workers, Sample&& sample) {
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> sums(blocks, 0.0);
  std::vector<double> sq_sums(blocks, 0.0);
  parallel_for(blocks, workers, [&](std::size_t b) {
    const std::size_t lo = b * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    double s = 0.0;
    double s2 = 0.0;
    for (std::size_t i = lo; i < hi; ++i) {
      const double x = sample(i);
      s += x;
      s2 += x * x;
    }
    sums[b] = s;
    sq_sums[b] = s2;
  });
  double s = 0.0;
  double s2 = 0.0;
  for (std::size_t b = 0; b < blocks; ++b) {
    s += sums[b];
    s2 += sq_sums[b];
  }
  McEstimate est;
  est.samples = n;
  if (n == 0) return est;
  est.mean = s / static_cast<double>(n);
  if (n > 1) {
    const double var = std::max(0.0, (s2 - s * est.mean) / static_cast<double>(n - 1));
    est.std_error = std::sqrt(var / static_cast<double>(n));
  }
  return est;
}

/// sample(i) for every i, computed in parallel, stored by index.
template <typename Sample>
std::vector<double> collect(std::size_t n, unsigned workers, Sample&& sample) {
  std::vector<double> out(n);
  parallel_for(n, workers, [&](std::size_t i) { out[i] = sample(i); });
  return out;
}

}  // namespace qcausal
