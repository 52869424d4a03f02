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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace qcausal {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("qcausal_test_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "qcausal");
  return cli::run(args);
}

TEST(Cli, UsageErrors) {
  const auto dir = scratch_dir("usage");
  EXPECT_EQ(run({}), cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kExitUsage);
  EXPECT_EQ(run({"expressibility", "--circuits", "bogus", "--out-dir", dir.string()}),
            cli::kExitUsage);
  EXPECT_EQ(run({"expressibility", "--layers-max", "17", "--out-dir", dir.string()}),
            cli::kExitUsage);
  EXPECT_EQ(run({"qace", "--ab-samples", "10", "--out-dir", dir.string()}), cli::kExitUsage);
  EXPECT_EQ(run({"qace", "--layer-policy", "maybe"}), cli::kExitUsage);
  EXPECT_EQ(run({"qace", "--workers", "0"}), cli::kExitUsage);
  EXPECT_EQ(run({"qace", "--config", (dir / "missing.json").string()}), cli::kExitUsage);
  EXPECT_FALSE(fs::exists(dir));
}

TEST(Cli, HelpAndVersionSucceed) {
  EXPECT_EQ(run({"--help"}), cli::kExitOk);
  EXPECT_EQ(run({"--version"}), cli::kExitOk);
  EXPECT_EQ(run({"qace", "--help"}), cli::kExitOk);
}

TEST(Cli, QaceSeparableRow) {
  const auto dir = scratch_dir("qace");
  ASSERT_EQ(run({"qace", "--circuits", "sep", "--seed", "1", "--param-samples", "20",
                 "--ab-samples", "10000", "--out-dir", dir.string()}),
            cli::kExitOk);
  const auto rows = lines(slurp(dir / "qace.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "circuit,layers,n_param,n_ab,seed,mean,std");
  EXPECT_EQ(rows[1].rfind("sep,1,20,10000,1,", 0), 0u);
  const auto mean = std::stod(rows[1].substr(std::string("sep,1,20,10000,1,").size()));
  EXPECT_LT(std::abs(mean), 1e-12);

  const auto manifest = nlohmann::json::parse(slurp(dir / "run_manifest.json"));
  EXPECT_EQ(manifest["config"]["seed"], 1);
  EXPECT_EQ(manifest["sweeps"][0]["name"], "qace");
  fs::remove_all(dir);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto dir = scratch_dir("config");
  fs::create_directories(dir);
  {
    std::ofstream cfg(dir / "cfg.json");
    cfg << R"({"circuits": ["switch", "rxy"], "layers-max": 1, "conc-samples": 100,
              "param-samples": 50, "seed": 5, "out-dir": ")"
        << (dir / "from_config").string() << R"("})";
  }
  ASSERT_EQ(run({"concurrence", "--config", (dir / "cfg.json").string(), "--seed", "6",
                 "--out-dir", (dir / "out").string()}),
            cli::kExitOk);
  EXPECT_FALSE(fs::exists(dir / "from_config"));
  const auto rows = lines(slurp(dir / "out" / "concurrence.csv"));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[1].rfind("switch,1,concurrence,100,1,6,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("rxy,1,concurrence,100,1,6,", 0), 0u);

  const auto manifest = nlohmann::json::parse(slurp(dir / "out" / "run_manifest.json"));
  EXPECT_EQ(manifest["config"]["seed"], 6);
  EXPECT_EQ(manifest["config"]["conc-samples"], 100);

  std::ofstream(dir / "bad.json") << R"({"unknown": 1})";
  EXPECT_EQ(run({"qace", "--config", (dir / "bad.json").string()}), cli::kExitUsage);
  fs::remove_all(dir);
}

TEST(Cli, RuntimeFailureExitsOne) {
  const auto dir = scratch_dir("runtime");
  fs::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  EXPECT_EQ(run({"qace", "--circuits", "sep", "--param-samples", "20", "--ab-samples", "10000",
                 "--out-dir", (dir / "file" / "sub").string()}),
            cli::kExitRuntime);
  fs::remove_all(dir);
}

TEST(Cli, EntanglingPowerAndHistograms) {
  const auto dir = scratch_dir("epow");
  ASSERT_EQ(run({"entangling-power", "--circuits", "hea", "--layers-max", "2", "--param-samples",
                 "50", "--out-dir", dir.string()}),
            cli::kExitOk);
  const auto rows = lines(slurp(dir / "entangling_power.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1].rfind("hea,1,epow_raw,50,0,42,", 0), 0u);
  EXPECT_EQ(rows[2].rfind("hea,1,epow_norm,50,0,42,1,", 0), 0u);

  ASSERT_EQ(run({"expressibility", "--circuits", "sep", "--layers-max", "1", "--pairs", "200",
                 "--bins", "10", "--dump-histograms", "--out-dir", dir.string()}),
            cli::kExitOk);
  EXPECT_EQ(lines(slurp(dir / "expressibility_histograms.csv")).size(), 11u);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace qcausal
