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

#include "cli.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qcausal/error.hpp"
#include "qcausal/experiments.hpp"

namespace qcausal::cli {

namespace {

// Raw flag values; only the ones the user passed override the config file.
struct Flags {
  std::string circuits;
  int layers_min = 0;
  int layers_max = 0;
  std::size_t pairs = 0;
  std::size_t bins = 0;
  std::size_t param_samples = 0;
  std::size_t ab_samples = 0;
  std::size_t conc_samples = 0;
  std::uint64_t seed = 0;
  std::string out_dir;
  std::string layer_policy;
  bool dump_histograms = false;
  unsigned workers = 1;
  std::string config_path;
};

struct Bound {
  CLI::Option* circuits;
  CLI::Option* layers_min;
  CLI::Option* layers_max;
  CLI::Option* pairs;
  CLI::Option* bins;
  CLI::Option* param_samples;
  CLI::Option* ab_samples;
  CLI::Option* conc_samples;
  CLI::Option* seed;
  CLI::Option* out_dir;
  CLI::Option* layer_policy;
  CLI::Option* dump_histograms;
  CLI::Option* workers;
  CLI::Option* config;
};

Bound bind(CLI::App& sub, Flags& f) {
  Bound b{};
  b.circuits = sub.add_option("--circuits", f.circuits,
                              "Comma-separated families: " + valid_family_names());
  b.layers_min = sub.add_option("--layers-min", f.layers_min, "Smallest layer count");
  b.layers_max = sub.add_option("--layers-max", f.layers_max, "Largest layer count (<= 16)");
  b.pairs = sub.add_option("--pairs", f.pairs, "Fidelity pairs per expressibility cell");
  b.bins = sub.add_option("--bins", f.bins, "Fidelity histogram bins");
  b.param_samples =
      sub.add_option("--param-samples", f.param_samples, "Parameter draws (entangling power, qACE)");
  b.ab_samples = sub.add_option("--ab-samples", f.ab_samples, "Inner (a, b) draws per qACE estimate");
  b.conc_samples = sub.add_option("--conc-samples", f.conc_samples, "Parameter draws for concurrence");
  b.seed = sub.add_option("--seed", f.seed, "Master seed (decimal 64-bit unsigned)");
  b.out_dir = sub.add_option("--out-dir", f.out_dir, "Output directory");
  b.layer_policy = sub.add_option("--layer-policy", f.layer_policy, "full-block or prep-once")
                       ->check(CLI::IsMember({"full-block", "prep-once"}));
  b.dump_histograms = sub.add_flag("--dump-histograms", f.dump_histograms,
                                   "Also write per-bin expressibility histograms");
  b.workers = sub.add_option("--workers", f.workers, "Worker threads (results do not depend on it)")
                  ->check(CLI::PositiveNumber);
  b.config = sub.add_option("--config", f.config_path, "JSON config file; flags override it")
                 ->check(CLI::ExistingFile);
  return b;
}

std::vector<CircuitFamily> parse_circuits(const std::string& text) {
  std::vector<CircuitFamily> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto f = parse_family(item);
    if (!f) {
      throw InvalidArgument("unknown circuit family '" + item + "'; valid names: " +
                            valid_family_names());
    }
    out.push_back(*f);
  }
  if (out.empty()) throw InvalidArgument("--circuits: no family given");
  return out;
}

ExperimentConfig resolve(const Flags& f, const Bound& b) {
  ExperimentConfig cfg;
  if (b.config->count() > 0) {
    std::ifstream in(f.config_path);
    if (!in) throw IoError("cannot read config file '" + f.config_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = apply_config_json(buf.str(), cfg);
  }
  if (b.circuits->count() > 0) cfg.families = parse_circuits(f.circuits);
  if (b.layers_min->count() > 0) cfg.layers_min = f.layers_min;
  if (b.layers_max->count() > 0) cfg.layers_max = f.layers_max;
  if (b.pairs->count() > 0) cfg.n_pairs = f.pairs;
  if (b.bins->count() > 0) cfg.n_bins = f.bins;
  if (b.param_samples->count() > 0) cfg.n_param = f.param_samples;
  if (b.ab_samples->count() > 0) cfg.n_ab = f.ab_samples;
  if (b.conc_samples->count() > 0) cfg.n_conc = f.conc_samples;
  if (b.seed->count() > 0) cfg.seed = f.seed;
  if (b.out_dir->count() > 0) cfg.out_dir = f.out_dir;
  if (b.layer_policy->count() > 0) cfg.layer_policy = *parse_layer_policy(f.layer_policy);
  if (b.dump_histograms->count() > 0) cfg.dump_histograms = f.dump_histograms;
  if (b.workers->count() > 0) cfg.workers = f.workers;
  return cfg;
}

std::vector<SweepOutput> execute(const std::string& command, const ExperimentConfig& cfg) {
  if (command == "expressibility") return {run_expressibility_sweep(cfg)};
  if (command == "concurrence") return {run_entanglement_sweep(cfg, SweepKind::Concurrence)};
  if (command == "entangling-power") {
    return {run_entanglement_sweep(cfg, SweepKind::EntanglingPower)};
  }
  if (command == "qace") return {run_qace_sweep(cfg)};
  return run_all(cfg);
}

SweepKind validation_kind(const std::string& command) {
  if (command == "expressibility") return SweepKind::Expressibility;
  if (command == "concurrence") return SweepKind::Concurrence;
  if (command == "entangling-power") return SweepKind::EntanglingPower;
  return SweepKind::Qace;
}

}  // namespace

int run(const std::vector<std::string>& argv) {
  CLI::App app{"Expressibility, entanglement and causal-effect sweeps for two-qubit circuits "
               "with definite and indefinite causal order",
               "qcausal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(library_version()));

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"expressibility", "KL divergence of the fidelity distribution from Haar"},
      {"concurrence", "Concurrence of U(theta)|00> over parameter draws"},
      {"entangling-power", "Exact entangling power over parameter draws"},
      {"qace", "Quantum average causal effect of control on target"},
      {"all", "Run the expressibility, entanglement and qACE sweeps"},
  };
  std::vector<Flags> flags(commands.size());
  std::vector<Bound> bound;
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    auto* sub = app.add_subcommand(commands[i].first, commands[i].second);
    bound.push_back(bind(*sub, flags[i]));
    subs.push_back(sub);
  }

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::size_t which = 0;
  while (which < subs.size() && !subs[which]->parsed()) ++which;
  const std::string& command = commands[which].first;

  ExperimentConfig cfg;
  try {
    cfg = resolve(flags[which], bound[which]);
    if (command == "all") {
      validate(cfg, SweepKind::Expressibility);
      validate(cfg, SweepKind::Entanglement);
      validate(cfg, SweepKind::Qace);
    } else {
      validate(cfg, validation_kind(command));
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "qcausal " << command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qcausal " << command << ": " << e.what() << "\n";
    return kExitRuntime;
  }

  try {
    const auto sweeps = execute(command, cfg);
    write_manifest(cfg, sweeps);
    for (const auto& s : sweeps) {
      for (const auto& f : s.files) std::cout << f.string() << "\n";
    }
  } catch (const InvalidArgument& e) {
    std::cerr << "qcausal " << command << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "qcausal " << command << ": " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}

}  // namespace qcausal::cli
