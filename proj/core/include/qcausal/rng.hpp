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

#include <cstdint>
#include <utility>

namespace qcausal {

/// Counter-based random stream. Draw i of the stream is a pure function of
/// (master_seed, substream, i): a SplitMix64 finalizer applied to a keyed
/// Weyl sequence. Copies are independent cursors over the same sequence.
///
/// Parallel estimators never share a stream; they derive one child per
/// sample index with split(), so results do not depend on scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t master_seed, std::uint64_t substream = 0) noexcept;

  std::uint64_t master_seed() const noexcept { return master_seed_; }
  std::uint64_t substream() const noexcept { return substream_; }
  std::uint64_t position() const noexcept { return counter_; }

  /// Value of draw `index` without advancing.
  std::uint64_t at(std::uint64_t index) const noexcept;

  std::uint64_t next_u64() noexcept { return at(counter_++); }
  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }
  /// Two independent standard normals (Box-Muller).
  std::pair<double, double> normal_pair() noexcept;

  /// Child stream for `index`, keyed by this stream's (seed, substream).
  RngStream split(std::uint64_t index) const noexcept;

 private:
  std::uint64_t master_seed_;
  std::uint64_t substream_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace qcausal
