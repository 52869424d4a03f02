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
#include <cstdint>
#include <span>
#include <string>

namespace qcausal {

/// Mean and population standard deviation, accumulated in index order.
struct Summary {
  double mean = 0.0;
  double stddev = 0.0;
  std::size_t count = 0;
};

Summary summarize(std::span<const double> values);

/// Monte-Carlo mean with its standard error (sample std / sqrt(n)).
struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// One (circuit, layers, metric) cell of a sweep. `std_error` is
/// stddev / sqrt(n_outer).
struct MetricReport {
  std::string circuit;
  int layers = 0;
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;
  double std_error = 0.0;
  std::size_t n_outer = 0;
  std::size_t n_inner = 0;
  std::uint64_t seed = 0;
};

MetricReport make_report(std::string circuit, int layers, std::string metric,
                         std::span<const double> values, std::size_t n_inner,
                         std::uint64_t seed);

}  // namespace qcausal
