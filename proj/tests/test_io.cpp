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
#include <random>

#include "clawfree/constructions.hpp"
#include "clawfree/enumeration.hpp"
#include "clawfree/matroid_io.hpp"
#include "clawfree/report_json.hpp"
#include "clawfree/spool.hpp"

using namespace clawfree;

namespace {

std::filesystem::path scratch(std::string const& name) {
  auto dir = std::filesystem::temp_directory_path() / ("clawfree_io_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST(MatroidText, BinaryFormat) {
  EXPECT_EQ(serialize_matroid(projective_geometry(2)), "BMATROID 2 3\n01\n10\n11\n");
  Matroid m = parse_matroid("BMATROID 3 2\n100\n011\n");
  ASSERT_TRUE(m.is_binary_backend());
  EXPECT_EQ(m.binary().columns(), (std::vector<Gf2Vector>{4, 3}));
  EXPECT_EQ(serialize_matroid(m), "BMATROID 3 2\n100\n011\n");
}

TEST(MatroidText, BasesFormat) {
  EXPECT_EQ(serialize_matroid(uniform_matroid(2, 3)), "BASES 3 2\n0 1\n0 2\n1 2\n");
  Matroid m = parse_matroid("BASES 3 2\n1 2\n0 2\n");
  EXPECT_EQ(m.bases().bases().size(), 2U);
  EXPECT_EQ(serialize_matroid(m), "BASES 3 2\n0 2\n1 2\n");
  Matroid zero = parse_matroid("BASES 2 0\n\n");
  EXPECT_EQ(zero.rank(), 0);
  EXPECT_EQ(serialize_matroid(zero), "BASES 2 0\n\n");
}

TEST(MatroidText, RoundTripsAreBitExact) {
  std::mt19937_64 rng(71);
  std::vector<Matroid> pool = {projective_geometry(4), affine_geometry(5), m_rt(7, 3), circuits_coloops({3, 4}, 2),
                               uniform_matroid(0, 3), BinaryMatroid(0, {0, 0})};
  for (int i = 0; i < 20; ++i) {
    int r = 1 + rng() % 8, n = rng() % 12;
    std::vector<Gf2Vector> cols;
    for (int j = 0; j < n; ++j) cols.push_back(rng() & full_mask(r));
    pool.emplace_back(BinaryMatroid(r, cols));
  }
  for (auto const& c : enumerate_basis_matroids(5, 2, false)) pool.push_back(c.matroid);
  for (Matroid const& m : pool) {
    std::string text = serialize_matroid(m);
    Matroid back = parse_matroid(text);
    EXPECT_EQ(serialize_matroid(back), text);
    EXPECT_EQ(back.is_binary_backend(), m.is_binary_backend());
    for (Mask s = 0; s <= full_mask(m.size()) && s < 256; ++s) EXPECT_EQ(back.rank(s), m.rank(s));
  }
}

TEST(MatroidText, RejectsMalformedInput) {
  for (std::string bad : {"", "BMATROID 2\n", "BMATROID 2 2\n01\n", "BMATROID 2 1\n012\n", "BMATROID 2 1\n0x\n",
                          "BMATROID 2 1\n01\nextra\n", "BASES 3 2\n0 1\n0 5\n", "BASES 3 2\n0 1\n0\n",
                          "BASES 3 2\n0 a\n", "BASES 3 4\n", "HELLO 1 2\n", "BASES 3 2\n"}) {
    EXPECT_THROW(parse_object(bad), InputError) << bad;
  }
  EXPECT_THROW(parse_matroid("GRAPH 2\n1\n"), InputError);
  EXPECT_THROW(read_object_file("/nonexistent/file.txt"), InputError);
}

TEST(MatroidText, DispatchesGraphs) {
  auto obj = parse_object("GRAPH 3\n101\n");
  ASSERT_TRUE(std::holds_alternative<SimpleGraph>(obj));
  EXPECT_EQ(std::get<SimpleGraph>(obj).edge_count(), 2);
  EXPECT_EQ(serialize_object(obj), "GRAPH 3\n101\n");
}

TEST(Spool, WritesRecordsAndManifest) {
  auto dir = scratch("spool");
  std::vector<ParsedObject> objs;
  for (auto const& c : enumerate_rank3_matroids(5)) objs.push_back(c.matroid);
  objs.push_back(Matroid(projective_geometry(3)));
  objs.push_back(Matroid(uniform_matroid(0, 2)));
  objs.push_back(clique_union({2, 2}));
  objs.push_back(SimpleGraph(1));
  objs.push_back(Matroid(BinaryMatroid(0, {0, 0})));
  objs.push_back(Matroid(free_binary(2)));
  Json manifest;
  manifest["class"] = "mixed";
  SpoolPaths paths = write_spool(dir.string(), "mixed", objs, manifest);
  auto back = read_spool(paths.records);
  ASSERT_EQ(back.size(), objs.size());
  for (std::size_t i = 0; i < objs.size(); ++i) EXPECT_EQ(serialize_object(back[i]), serialize_object(objs[i]));
  std::ifstream in(paths.manifest);
  Json m = Json::parse(in);
  EXPECT_EQ(m["class"], "mixed");
  EXPECT_EQ(m["count"], objs.size());
  EXPECT_EQ(m["generator"], kGeneratorVersion);
  EXPECT_EQ(m["records"], "mixed.txt");
  std::filesystem::remove_all(dir);
}

TEST(ReportJson, ClawReportKeysAreStable) {
  Json j = to_json(max_claw(m_rt(4, 2)));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"max_claw_size", "counts_by_size", "witnesses", "truncated"}));
  EXPECT_EQ(j["max_claw_size"], 2);
  EXPECT_EQ(j["witnesses"].size(), 9U);
  Json lp = to_json(line_profile(projective_geometry(3)));
  EXPECT_EQ(lp["triangle_free"], false);
  EXPECT_EQ(to_json(max_claw(m_rt(4, 2))).dump(), j.dump());
}
