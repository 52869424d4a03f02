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

#include "qcausal/stats.hpp"

#include <utility>

namespace qcausal {

Summary summarize(std::span<const double> values) {
  Summary s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(ss / static_cast<double>(values.size()));
  return s;
}

MetricReport make_report(std::string circuit, int layers, std::string metric,
                         std::span<const double> values, std::size_t n_inner,
                         std::uint64_t seed) {
  const Summary s = summarize(values);
  MetricReport r;
  r.circuit = std::move(circuit);
  r.layers = layers;
  r.metric = std::move(metric);
  r.mean = s.mean;
  r.stddev = s.stddev;
  r.n_outer = s.count;
  r.std_error = s.count > 0 ? s.stddev / std::sqrt(static_cast<double>(s.count)) : 0.0;
  r.n_inner = n_inner;
  r.seed = seed;
  return r;
}

}  // namespace qcausal
