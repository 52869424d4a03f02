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

// Parameter sweeps over circuit families and layer counts, rendered as CSV.

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcausal/circuits.hpp"

namespace qcausal {

inline constexpr int kMaxLayers = 16;

struct ExperimentConfig {
  /// Unset means the sweep's default family list (all six; the entanglement
  /// sweep drops sep).
  std::optional<std::vector<CircuitFamily>> families;
  /// Unset means 1..4 for expressibility and entanglement, 1..1 for qACE.
  std::optional<int> layers_min;
  std::optional<int> layers_max;
  std::size_t n_pairs = 5000;
  std::size_t n_bins = 75;
  std::size_t n_param = 200;
  std::size_t n_ab = 50000;
  std::size_t n_conc = 2000;
  std::uint64_t seed = 42;
  std::filesystem::path out_dir = "results";
  LayerPolicy layer_policy = LayerPolicy::PrepOnce;
  bool dump_histograms = false;
  unsigned workers = 1;
};

enum class SweepKind { Expressibility, Concurrence, EntanglingPower, Entanglement, Qace };

std::string_view sweep_name(SweepKind kind);

/// Throws InvalidArgument naming the first violated bound.
void validate(const ExperimentConfig& cfg, SweepKind kind);

std::vector<CircuitFamily> effective_families(const ExperimentConfig& cfg, SweepKind kind);
std::pair<int, int> effective_layers(const ExperimentConfig& cfg, SweepKind kind);

/// Overlays a flat JSON object (keys are long flag names, e.g. "layers-min")
/// onto `base`. Throws InvalidArgument on unknown keys or bad values.
ExperimentConfig apply_config_json(std::string_view json_text, ExperimentConfig base);
std::string config_to_json(const ExperimentConfig& cfg);

/// Header plus data rows; every line ends with '\n'.
struct CsvTable {
  std::string header;
  std::vector<std::string> rows;

  std::string str() const;
};

/// "%.12g"
std::string format_real(double value);

inline constexpr std::string_view kExpressibilityHeader = "circuit,layers,n_pairs,n_bins,seed,kl";
inline constexpr std::string_view kHistogramHeader =
    "circuit,layers,bin_lo,bin_hi,count,haar_prob";
inline constexpr std::string_view kEntanglementHeader =
    "circuit,layers,metric,n_outer,n_inner,seed,mean,std,stderr";
inline constexpr std::string_view kQaceHeader = "circuit,layers,n_param,n_ab,seed,mean,std";

/// RNG substream of one sweep cell. Pure function of (kind, family, layers)
/// so that cells are reproducible in isolation.
std::uint64_t cell_substream(SweepKind kind, CircuitFamily family, int layers);

struct ExpressibilityTables {
  CsvTable summary;
  CsvTable histograms;
};

ExpressibilityTables expressibility_tables(const ExperimentConfig& cfg);
/// kind is Concurrence, EntanglingPower or Entanglement (both metric groups).
CsvTable entanglement_table(const ExperimentConfig& cfg, SweepKind kind);
CsvTable qace_table(const ExperimentConfig& cfg);

struct SweepOutput {
  std::string name;
  std::vector<std::filesystem::path> files;
  std::size_t rows = 0;
  double wall_seconds = 0.0;
};

/// Writes `contents` to `path`, creating parent directories. Throws IoError
/// carrying the path on failure.
void write_text_file(const std::filesystem::path& path, std::string_view contents);

SweepOutput run_expressibility_sweep(const ExperimentConfig& cfg);
SweepOutput run_entanglement_sweep(const ExperimentConfig& cfg,
                                   SweepKind kind = SweepKind::Entanglement);
SweepOutput run_qace_sweep(const ExperimentConfig& cfg);
/// Expressibility, entanglement and qACE sweeps in that order.
std::vector<SweepOutput> run_all(const ExperimentConfig& cfg);

/// run_manifest.json in cfg.out_dir: effective config, library version and
/// per-sweep wall time.
void write_manifest(const ExperimentConfig& cfg, const std::vector<SweepOutput>& sweeps);

std::string_view library_version();

}  // namespace qcausal
