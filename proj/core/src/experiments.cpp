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

#include "qcausal/experiments.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <string>
#include <system_error>

#include "json.hpp"
#include "qcausal/causal_effect.hpp"
#include "qcausal/entanglement.hpp"
#include "qcausal/error.hpp"
#include "qcausal/expressibility.hpp"

#ifndef QCAUSAL_VERSION
#define QCAUSAL_VERSION "0.0.0"
#endif

namespace qcausal {

namespace {

using Json = nlohmann::json;

constexpr std::size_t kMinPairs = 100;
constexpr std::size_t kMinConc = 100;
constexpr std::size_t kMinEpowParam = 50;
constexpr std::size_t kMinQaceParam = 20;
constexpr std::size_t kMinAb = 10000;

std::string u64(std::uint64_t v) { return std::to_string(v); }

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

std::size_t family_index(CircuitFamily f) {
  for (std::size_t i = 0; i < kAllFamilies.size(); ++i) {
    if (kAllFamilies[i] == f) return i;
  }
  return kAllFamilies.size();
}

std::string normalize_key(std::string key) {
  while (!key.empty() && key.front() == '-') key.erase(key.begin());
  for (auto& c : key) {
    if (c == '_') c = '-';
  }
  return key;
}

std::size_t json_count(const Json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw InvalidArgument("config: '" + key + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

int json_int(const Json& v, const std::string& key) {
  if (!v.is_number_integer()) throw InvalidArgument("config: '" + key + "' must be an integer");
  return v.get<int>();
}

std::vector<CircuitFamily> json_families(const Json& v) {
  std::vector<std::string> names;
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    std::size_t start = 0;
    while (start <= s.size()) {
      const std::size_t comma = s.find(',', start);
      const std::string item = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                           : comma - start);
      if (!item.empty()) names.push_back(item);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else if (v.is_array()) {
    for (const auto& item : v) {
      if (!item.is_string()) throw InvalidArgument("config: 'circuits' entries must be strings");
      names.push_back(item.get<std::string>());
    }
  } else {
    throw InvalidArgument("config: 'circuits' must be a string or an array of strings");
  }
  std::vector<CircuitFamily> out;
  for (const auto& n : names) {
    const auto f = parse_family(n);
    if (!f) {
      throw InvalidArgument("unknown circuit family '" + n + "'; valid names: " +
                            valid_family_names());
    }
    out.push_back(*f);
  }
  return out;
}

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::string_view sweep_name(SweepKind kind) {
  switch (kind) {
    case SweepKind::Expressibility: return "expressibility";
    case SweepKind::Concurrence: return "concurrence";
    case SweepKind::EntanglingPower: return "entangling-power";
    case SweepKind::Entanglement: return "entanglement";
    case SweepKind::Qace: return "qace";
  }
  return "unknown";
}

std::vector<CircuitFamily> effective_families(const ExperimentConfig& cfg, SweepKind kind) {
  if (cfg.families) return *cfg.families;
  std::vector<CircuitFamily> out(kAllFamilies.begin(), kAllFamilies.end());
  const bool entanglement = kind == SweepKind::Concurrence ||
                            kind == SweepKind::EntanglingPower ||
                            kind == SweepKind::Entanglement;
  if (entanglement) std::erase(out, CircuitFamily::Sep);
  return out;
}

std::pair<int, int> effective_layers(const ExperimentConfig& cfg, SweepKind kind) {
  const int default_max = kind == SweepKind::Qace ? 1 : 4;
  const int lo = cfg.layers_min.value_or(1);
  int hi = cfg.layers_max.value_or(default_max);
  if (!cfg.layers_max && hi < lo) hi = lo;
  return {lo, hi};
}

void validate(const ExperimentConfig& cfg, SweepKind kind) {
  const auto [lo, hi] = effective_layers(cfg, kind);
  require(lo >= 1, "layers-min must be >= 1");
  require(hi <= kMaxLayers, "layers-max must be <= " + std::to_string(kMaxLayers));
  require(lo <= hi, "layers-min must not exceed layers-max");
  require(!effective_families(cfg, kind).empty(), "circuits: at least one family is required");
  require(cfg.workers >= 1, "workers must be >= 1");
  switch (kind) {
    case SweepKind::Expressibility:
      require(cfg.n_pairs >= kMinPairs, "pairs must be >= " + std::to_string(kMinPairs));
      require(cfg.n_bins >= 2, "bins must be >= 2");
      break;
    case SweepKind::Concurrence:
      require(cfg.n_conc >= kMinConc, "conc-samples must be >= " + std::to_string(kMinConc));
      break;
    case SweepKind::EntanglingPower:
      require(cfg.n_param >= kMinEpowParam,
              "param-samples must be >= " + std::to_string(kMinEpowParam));
      break;
    case SweepKind::Entanglement:
      require(cfg.n_conc >= kMinConc, "conc-samples must be >= " + std::to_string(kMinConc));
      require(cfg.n_param >= kMinEpowParam,
              "param-samples must be >= " + std::to_string(kMinEpowParam));
      break;
    case SweepKind::Qace:
      require(cfg.n_param >= kMinQaceParam,
              "param-samples must be >= " + std::to_string(kMinQaceParam));
      require(cfg.n_ab >= kMinAb, "ab-samples must be >= " + std::to_string(kMinAb));
      break;
  }
}

ExperimentConfig apply_config_json(std::string_view json_text, ExperimentConfig cfg) {
  Json root;
  try {
    root = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw InvalidArgument("config: top level must be a JSON object");
  for (const auto& [raw_key, value] : root.items()) {
    const std::string key = normalize_key(raw_key);
    if (key == "circuits") {
      cfg.families = json_families(value);
    } else if (key == "layers-min") {
      cfg.layers_min = json_int(value, key);
    } else if (key == "layers-max") {
      cfg.layers_max = json_int(value, key);
    } else if (key == "pairs") {
      cfg.n_pairs = json_count(value, key);
    } else if (key == "bins") {
      cfg.n_bins = json_count(value, key);
    } else if (key == "param-samples") {
      cfg.n_param = json_count(value, key);
    } else if (key == "ab-samples") {
      cfg.n_ab = json_count(value, key);
    } else if (key == "conc-samples") {
      cfg.n_conc = json_count(value, key);
    } else if (key == "seed") {
      if (value.is_number_unsigned()) {
        cfg.seed = value.get<std::uint64_t>();
      } else if (value.is_string()) {
        try {
          std::size_t used = 0;
          const std::string s = value.get<std::string>();
          cfg.seed = std::stoull(s, &used, 10);
          if (used != s.size() || s.front() == '-') throw std::invalid_argument(s);
        } catch (const std::exception&) {
          throw InvalidArgument("config: 'seed' must be a decimal 64-bit unsigned integer");
        }
      } else {
        throw InvalidArgument("config: 'seed' must be a decimal 64-bit unsigned integer");
      }
    } else if (key == "out-dir") {
      if (!value.is_string()) throw InvalidArgument("config: 'out-dir' must be a string");
      cfg.out_dir = value.get<std::string>();
    } else if (key == "layer-policy") {
      const auto p = value.is_string() ? parse_layer_policy(value.get<std::string>()) : std::nullopt;
      if (!p) throw InvalidArgument("config: 'layer-policy' must be full-block or prep-once");
      cfg.layer_policy = *p;
    } else if (key == "dump-histograms") {
      if (!value.is_boolean()) throw InvalidArgument("config: 'dump-histograms' must be a boolean");
      cfg.dump_histograms = value.get<bool>();
    } else if (key == "workers") {
      cfg.workers = static_cast<unsigned>(json_count(value, key));
    } else {
      throw InvalidArgument("config: unknown key '" + raw_key + "'");
    }
  }
  return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
  Json j;
  if (cfg.families) {
    Json names = Json::array();
    for (auto f : *cfg.families) names.push_back(std::string(family_name(f)));
    j["circuits"] = names;
  } else {
    j["circuits"] = nullptr;
  }
  j["layers-min"] = cfg.layers_min ? Json(*cfg.layers_min) : Json(nullptr);
  j["layers-max"] = cfg.layers_max ? Json(*cfg.layers_max) : Json(nullptr);
  j["pairs"] = cfg.n_pairs;
  j["bins"] = cfg.n_bins;
  j["param-samples"] = cfg.n_param;
  j["ab-samples"] = cfg.n_ab;
  j["conc-samples"] = cfg.n_conc;
  j["seed"] = cfg.seed;
  j["out-dir"] = cfg.out_dir.string();
  j["layer-policy"] = std::string(layer_policy_name(cfg.layer_policy));
  j["dump-histograms"] = cfg.dump_histograms;
  j["workers"] = cfg.workers;
  return j.dump(2);
}

std::string CsvTable::str() const {
  std::string out = header + "\n";
  for (const auto& r : rows) {
    out += r;
    out += '\n';
  }
  return out;
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::uint64_t cell_substream(SweepKind kind, CircuitFamily family, int layers) {
  return (static_cast<std::uint64_t>(kind) + 1) << 32 |
         static_cast<std::uint64_t>(family_index(family)) << 16 |
         static_cast<std::uint64_t>(layers);
}

ExpressibilityTables expressibility_tables(const ExperimentConfig& cfg) {
  validate(cfg, SweepKind::Expressibility);
  const auto [lo, hi] = effective_layers(cfg, SweepKind::Expressibility);
  ExpressibilityTables t;
  t.summary.header = kExpressibilityHeader;
  t.histograms.header = kHistogramHeader;
  for (auto family : effective_families(cfg, SweepKind::Expressibility)) {
    const std::string name(family_name(family));
    for (int layers = lo; layers <= hi; ++layers) {
      const RngStream rng(cfg.seed, cell_substream(SweepKind::Expressibility, family, layers));
      const auto result = expressibility(family, layers, cfg.n_pairs, cfg.n_bins, rng,
                                         cfg.layer_policy, cfg.workers);
      t.summary.rows.push_back(name + "," + std::to_string(layers) + "," +
                               std::to_string(cfg.n_pairs) + "," + std::to_string(cfg.n_bins) +
                               "," + u64(cfg.seed) + "," + format_real(result.kl));
      const auto& h = result.hist;
      for (std::size_t k = 0; k < h.n_bins; ++k) {
        t.histograms.rows.push_back(name + "," + std::to_string(layers) + "," +
                                    format_real(h.haar.bin_lo(k)) + "," +
                                    format_real(h.haar.bin_hi(k)) + "," + u64(h.counts[k]) +
                                    "," + format_real(h.haar.probs[k]));
      }
    }
  }
  return t;
}

namespace {

std::string report_row(const MetricReport& r) {
  return r.circuit + "," + std::to_string(r.layers) + "," + r.metric + "," + u64(r.n_outer) +
         "," + u64(r.n_inner) + "," + u64(r.seed) + "," + format_real(r.mean) + "," +
         format_real(r.stddev) + "," + format_real(r.std_error);
}

}  // namespace

CsvTable entanglement_table(const ExperimentConfig& cfg, SweepKind kind) {
  if (kind != SweepKind::Concurrence && kind != SweepKind::EntanglingPower &&
      kind != SweepKind::Entanglement) {
    throw InvalidArgument("entanglement_table: not an entanglement sweep");
  }
  validate(cfg, kind);
  const bool conc = kind != SweepKind::EntanglingPower;
  const bool epow = kind != SweepKind::Concurrence;
  const auto [lo, hi] = effective_layers(cfg, kind);
  CsvTable t;
  t.header = kEntanglementHeader;
  for (auto family : effective_families(cfg, kind)) {
    for (int layers = lo; layers <= hi; ++layers) {
      if (conc) {
        const RngStream rng(cfg.seed, cell_substream(SweepKind::Concurrence, family, layers));
        t.rows.push_back(report_row(
            concurrence_stats(family, layers, cfg.n_conc, rng, cfg.layer_policy, cfg.workers)));
      }
      if (epow) {
        const RngStream rng(cfg.seed, cell_substream(SweepKind::EntanglingPower, family, layers));
        const auto reports =
            entangling_power_stats(family, layers, cfg.n_param, rng, cfg.layer_policy, cfg.workers);
        t.rows.push_back(report_row(reports.raw));
        t.rows.push_back(report_row(reports.normalized));
      }
    }
  }
  return t;
}

CsvTable qace_table(const ExperimentConfig& cfg) {
  validate(cfg, SweepKind::Qace);
  const auto [lo, hi] = effective_layers(cfg, SweepKind::Qace);
  CsvTable t;
  t.header = kQaceHeader;
  for (auto family : effective_families(cfg, SweepKind::Qace)) {
    for (int layers = lo; layers <= hi; ++layers) {
      const RngStream rng(cfg.seed, cell_substream(SweepKind::Qace, family, layers));
      const auto r =
          qace_stats(family, layers, cfg.n_param, cfg.n_ab, rng, cfg.layer_policy, cfg.workers);
      t.rows.push_back(r.circuit + "," + std::to_string(layers) + "," + u64(cfg.n_param) + "," +
                       u64(cfg.n_ab) + "," + u64(cfg.seed) + "," + format_real(r.mean) + "," +
                       format_real(r.stddev));
    }
  }
  return t;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create directory '" + path.parent_path().string() +
                    "': " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

SweepOutput run_expressibility_sweep(const ExperimentConfig& cfg) {
  const auto start = Clock::now();
  const auto tables = expressibility_tables(cfg);
  SweepOutput out{"expressibility", {cfg.out_dir / "expressibility.csv"}, tables.summary.rows.size()};
  write_text_file(out.files[0], tables.summary.str());
  if (cfg.dump_histograms) {
    out.files.push_back(cfg.out_dir / "expressibility_histograms.csv");
    write_text_file(out.files[1], tables.histograms.str());
  }
  out.wall_seconds = seconds_since(start);
  return out;
}

SweepOutput run_entanglement_sweep(const ExperimentConfig& cfg, SweepKind kind) {
  const auto start = Clock::now();
  const auto table = entanglement_table(cfg, kind);
  std::string file = "entanglement.csv";
  if (kind == SweepKind::Concurrence) file = "concurrence.csv";
  if (kind == SweepKind::EntanglingPower) file = "entangling_power.csv";
  SweepOutput out{std::string(sweep_name(kind)), {cfg.out_dir / file}, table.rows.size()};
  write_text_file(out.files[0], table.str());
  out.wall_seconds = seconds_since(start);
  return out;
}

SweepOutput run_qace_sweep(const ExperimentConfig& cfg) {
  const auto start = Clock::now();
  const auto table = qace_table(cfg);
  SweepOutput out{"qace", {cfg.out_dir / "qace.csv"}, table.rows.size()};
  write_text_file(out.files[0], table.str());
  out.wall_seconds = seconds_since(start);
  return out;
}

std::vector<SweepOutput> run_all(const ExperimentConfig& cfg) {
  // Validate everything up front so a late sweep cannot fail after earlier
  // files were written.
  validate(cfg, SweepKind::Expressibility);
  validate(cfg, SweepKind::Entanglement);
  validate(cfg, SweepKind::Qace);
  std::vector<SweepOutput> out;
  out.push_back(run_expressibility_sweep(cfg));
  out.push_back(run_entanglement_sweep(cfg, SweepKind::Entanglement));
  out.push_back(run_qace_sweep(cfg));
  return out;
}

void write_manifest(const ExperimentConfig& cfg, const std::vector<SweepOutput>& sweeps) {
  Json j;
  j["version"] = std::string(library_version());
  j["config"] = Json::parse(config_to_json(cfg));
  Json list = Json::array();
  for (const auto& s : sweeps) {
    Json files = Json::array();
    for (const auto& f : s.files) files.push_back(f.filename().string());
    list.push_back({{"name", s.name}, {"files", files}, {"rows", s.rows},
                    {"wall_time_s", s.wall_seconds}});
  }
  j["sweeps"] = list;
  write_text_file(cfg.out_dir / "run_manifest.json", j.dump(2) + "\n");
}

std::string_view library_version() { return QCAUSAL_VERSION; }

}  // namespace qcausal
