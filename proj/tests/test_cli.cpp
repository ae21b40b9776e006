// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
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

#include "clawfree/cli.hpp"

using namespace clawfree;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(std::string const& name) {
  auto dir = std::filesystem::temp_directory_path() / ("clawfree_cli_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(std::filesystem::path const& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, ConstructThenAnalyze) {
  auto dir = scratch("construct");
  std::string file = (dir / "m.txt").string();
  auto made = run_cli({"construct", "--family", "mrt:5,2", "--out", file});
  ASSERT_EQ(made.code, 0) << made.err;
  std::string text = slurp(file);
  EXPECT_EQ(text.rfind("BMATROID 5 10\n", 0), 0U);
  auto an = run_cli({"analyze", "--in", file, "--claws"});
  ASSERT_EQ(an.code, 0) << an.err;
  Json j = Json::parse(an.out);
  EXPECT_EQ(j["claws"]["max_claw_size"], 2);
  EXPECT_EQ(j["n"], 10);
  EXPECT_FALSE(j.contains("lines"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, EveryWrittenFileIsReadable) {
  auto dir = scratch("roundtrip");
  for (std::string fam : {"pg:3", "ag:4", "free:3", "circuit:4", "cc:3,3+1", "gnt:9,2"}) {
    std::string file = (dir / "x.txt").string();
    ASSERT_EQ(run_cli({"construct", "--family", fam, "--out", file}).code, 0) << fam;
    auto an = run_cli({"analyze", "--in", file});
    EXPECT_EQ(an.code, 0) << fam << an.err;
    auto again = run_cli({"construct", "--family", fam});
    EXPECT_EQ(again.out, slurp(file));
  }
  auto g = run_cli({"analyze", "--in", (dir / "x.txt").string()});
  Json j = Json::parse(g.out);
  EXPECT_EQ(j["kind"], "graph");
  EXPECT_EQ(j["edges"], 16);
  EXPECT_EQ(j["max_stable_set"], 2);
  EXPECT_EQ(j["largest_induced_forest"], 4);
  std::filesystem::remove_all(dir);
}

TEST(Cli, TablesShowF) {
  auto res = run_cli({"tables", "f", "--r-max", "6", "--t-max", "3", "--format", "csv"});
  ASSERT_EQ(res.code, 0);
  EXPECT_NE(res.out.find("\n6,3,9\n"), std::string::npos) << res.out;
  auto g = run_cli({"tables", "g", "--n-max", "9", "--t-max", "2"});
  Json j = Json::parse(g.out);
  bool found = false;
  for (auto const& v : j["values"])
    if (v["n"] == 9 && v["t"] == 2) found = v["value"] == 16;
  EXPECT_TRUE(found);
}

TEST(Cli, VerifyGraphTable) {
  auto res = run_cli({"verify", "graph", "--n", "7", "--t", "2", "--format", "table"});
  EXPECT_EQ(res.code, 0) << res.err;
  EXPECT_NE(res.out.find("observed_min        9"), std::string::npos) << res.out;
  EXPECT_NE(res.out.find("K4+K3"), std::string::npos);
}

TEST(Cli, VerifyBoundJson) {
  auto res = run_cli({"verify", "bound", "--class", "binary", "--r", "4", "--t", "2"});
  ASSERT_EQ(res.code, 0) << res.err;
  Json j = Json::parse(res.out);
  EXPECT_EQ(j["observed_min"], 6);
  EXPECT_EQ(j["verdict"], "matched");
  EXPECT_FALSE(j.contains("runtime_seconds"));
  auto timed = run_cli({"verify", "bound", "--class", "binary", "--r", "4", "--t", "2", "--timing"});
  EXPECT_TRUE(Json::parse(timed.out).contains("runtime_seconds"));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 64);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 64);
  EXPECT_EQ(run_cli({"verify", "graph", "--n", "7"}).code, 64);
  EXPECT_EQ(run_cli({"verify", "graph", "--n", "7", "--t", "2", "--bogus"}).code, 64);
  EXPECT_EQ(run_cli({"tables", "f", "--format", "xml"}).code, 64);
  EXPECT_EQ(run_cli({"construct", "--family", "zz:1"}).code, 64);
  EXPECT_EQ(run_cli({"analyze", "--in", "/nonexistent"}).code, 64);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
  EXPECT_EQ(run_cli({"verify", "bound", "--class", "binary", "--r", "7", "--t", "1"}).code, 3);
  EXPECT_EQ(run_cli({"verify", "graph", "--n", "8", "--t", "2", "--budget-seconds", "1e-9"}).code, 3);
  EXPECT_EQ(run_cli({"property", "contract", "--trials", "50"}).code, 0);
}

TEST(Cli, MismatchWritesArtifactsAndExitsTwo) {
  auto dir = scratch("artifacts");
  ExtremalReport rep;
  rep.campaign = "bound";
  rep.failures.push_back("bound violated: test");
  rep.counterexamples.push_back({"test", "BMATROID 1 1\n1\n"});
  cli::Common common;
  common.artifact_dir = (dir / "arts").string();
  std::ostringstream out, err;
  cli::Logger log(err, cli::LogLevel::error);
  EXPECT_EQ(cli::publish(rep, common, out, log), 2);
  EXPECT_EQ(slurp(dir / "arts" / "bound-counterexample-1.txt"), "BMATROID 1 1\n1\n");
  EXPECT_NE(err.str().find("counterexample"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, OutputIsIdenticalAcrossShardCounts) {
  std::vector<std::vector<std::string>> commands = {
      {"verify", "bound", "--class", "binary", "--r", "4", "--t", "3"},
      {"verify", "bound", "--class", "rank3", "--r", "3", "--t", "2", "--n-max", "7"},
      {"verify", "lowrank", "--r", "3", "--t", "2", "--n-max", "6"},
      {"verify", "graph", "--n", "7", "--t", "2"},
      {"verify", "trianglefree", "--r", "4", "--t", "1"},
      {"property", "contract", "--trials", "300", "--seed", "9", "--exhaustive-n", "5"},
  };
  for (auto const& cmd : commands) {
    std::string reference;
    for (std::string shards : {"1", "2", "4"}) {
      auto args = cmd;
      args.insert(args.end(), {"--shards", shards});
      auto res = run_cli(args);
      EXPECT_EQ(res.code, 0) << cmd[1];
      if (reference.empty()) reference = res.out;
      EXPECT_EQ(res.out, reference) << cmd[1] << " shards " << shards;
    }
  }
}

TEST(Cli, EnumerateSpoolsRecords) {
  auto dir = scratch("enumerate");
  auto res = run_cli({"enumerate", "--class", "rank3", "--n", "6", "--out-dir", dir.string()});
  ASSERT_EQ(res.code, 0) << res.err;
  auto records = read_spool((dir / "rank3-n6.txt").string());
  EXPECT_EQ(records.size(), 9U);
  std::ifstream in(dir / "rank3-n6.manifest.json");
  Json m = Json::parse(in);
  EXPECT_EQ(m["count"], 9);
  auto graphs = run_cli({"enumerate", "--class", "graph", "--n", "4", "--out-dir", dir.string()});
  ASSERT_EQ(graphs.code, 0);
  EXPECT_EQ(read_spool((dir / "graphs-n4.txt").string()).size(), 11U);
  std::filesystem::remove_all(dir);
}
