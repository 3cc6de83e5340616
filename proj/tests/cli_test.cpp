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

#include "cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dmw/io.hpp"

namespace dmw {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err, false);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(DMW_DATA_DIR) + "/" + name; }

TEST(Cli, CheckDelta) {
  const Outcome o = run({"check", "delta", data("delta-pair.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["valid"], true);
  // Output reloads to the same family.
  const DeltaMatroid d = delta_from_json(o.json()["delta"]);
  EXPECT_EQ(d, delta_from_json(read_json_file(data("delta-pair.json"))));
  EXPECT_EQ(dump(delta_to_json(d)), dump(o.json()["delta"]));
}

TEST(Cli, CheckMatroidFailure) {
  const Outcome o = run({"check", "matroid", data("not-a-matroid.json")});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(o.json()["violation"],
            Json::parse(R"({"axiom":"MB","first":["b","c"],"second":["a"],"pivot":"b"})"));
}

TEST(Cli, UsageErrors) {
  const auto dir = std::filesystem::temp_directory_path();
  const auto bad = dir / "dmw_cli_test_bad.json";
  std::ofstream(bad) << R"({"ground": ["a"], "bases": [["z"]]})";
  EXPECT_EQ(run({"check", "matroid", bad.string()}).code, 2);
  std::filesystem::remove(bad);
  EXPECT_EQ(run({"check", "matroid", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"check", "polymatroid", data("delta-pair.json")}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "bogus-id", "--n", "3"}).code, 2);
  EXPECT_EQ(run({"verify", "uplow", "--n", "9"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "verify", "uplow", "--n", "2"}).code, 2);
}

TEST(Cli, UpperLower) {
  const Outcome o = run({"upper-lower", data("sizes-1-3.json")});
  ASSERT_EQ(o.code, 0);
  const GroundSet g = GroundSet::letters(4);
  EXPECT_EQ(matroid_from_json(o.json()["upper"]), uniform(3, g));
  EXPECT_EQ(matroid_from_json(o.json()["lower"]), uniform(1, g));

  const Outcome same = run({"upper-lower", data("delta-pair.json")});
  ASSERT_EQ(same.code, 0);
  EXPECT_NE(same.json()["upper"], same.json()["lower"]);

  const auto dir = std::filesystem::temp_directory_path();
  const auto bases = dir / "dmw_cli_test_bases.json";
  std::ofstream(bases) << dump(delta_to_json(certify_delta(uniform(2, g).bases())));
  const Outcome b = run({"upper-lower", bases.string()});
  EXPECT_EQ(b.code, 0);
  EXPECT_EQ(b.json()["upper"], b.json()["lower"]);
  std::filesystem::remove(bases);

  EXPECT_EQ(run({"upper-lower", data("not-a-matroid.json")}).code, 2);
  const auto bad = dir / "dmw_cli_test_not_delta.json";
  std::ofstream(bad) << R"({"ground": ["a","b","c"], "feasibles": [[], ["a","b","c"]]})";
  EXPECT_EQ(run({"upper-lower", bad.string()}).code, 1);
  std::filesystem::remove(bad);
}

TEST(Cli, PairConstruct) {
  const auto out_file = std::filesystem::temp_directory_path() / "dmw_cli_test_sandwich.json";
  const Outcome o = run({"pair", data("u56.json"), data("u23-sum.json"), "--construct", "--out",
                         out_file.string()});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.json()["pairable"], true);
  const DeltaMatroid d = delta_from_json(read_json_file(out_file));
  EXPECT_EQ(d.feasibles().size(), 15u);
  EXPECT_EQ(d.upper(), matroid_from_json(read_json_file(data("u56.json"))));
  EXPECT_EQ(d.lower(), matroid_from_json(read_json_file(data("u23-sum.json"))));
  EXPECT_EQ(delta_from_json(o.json()["sandwich"]), d);
  std::filesystem::remove(out_file);
}

TEST(Cli, PairUnpairable) {
  const Outcome o = run({"pair", data("unpairable-upper.json"), data("unpairable-lower.json")});
  EXPECT_EQ(o.code, 1);
  EXPECT_EQ(o.json()["pairable"], false);
  EXPECT_EQ(o.json()["offending_circuit"], Json::parse(R"(["c","d"])"));
  EXPECT_EQ(o.json()["basis_conditions"], true);
  EXPECT_EQ(run({"pair", data("u56.json"), data("unpairable-lower.json")}).code, 2);
}

TEST(Cli, ConeCheck) {
  const Outcome o = run({"cone-check", data("triangle.json")});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.json()["deletion_identity"], true);
  EXPECT_EQ(o.json()["contraction_identity"], true);
  const Outcome corpus = run({"cone-check", "--corpus"});
  EXPECT_EQ(corpus.code, 0);
  EXPECT_EQ(corpus.json()["graphs"].size(), 7u);
  EXPECT_EQ(run({"cone-check", data("two-components.json")}).code, 2);
  EXPECT_EQ(run({"cone-check"}).code, 2);
}

TEST(Cli, VerifyAndSearch) {
  const Outcome v = run({"verify", "uplow", "--n", "4"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.json()["holds"], true);
  EXPECT_EQ(v.json()["universe_size"], 5959);

  const Outcome s = run({"search", "unpairable", "--n", "5"});
  EXPECT_EQ(s.code, 0);
  const Json report = s.json();
  ASSERT_EQ(report["witnesses"].size(), 1u);
  const Json& w = report["witnesses"][0];
  EXPECT_FALSE(is_pairable(matroid_from_json(w["upper"]), matroid_from_json(w["lower"])).pairable);

  EXPECT_EQ(run({"search", "unpairable", "--n", "2"}).code, 1);
  EXPECT_EQ(run({"search", "verbatim-minors", "--n", "3"}).code, 0);
  EXPECT_EQ(run({"search", "nothing", "--n", "3"}).code, 2);
}

TEST(Cli, Enumerate) {
  const Outcome m = run({"enumerate", "matroids", "--n", "3"});
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.json()["count"], 16);
  const Outcome d = run({"enumerate", "delta", "--n", "2"});
  EXPECT_EQ(d.code, 0);
  EXPECT_EQ(d.json()["count"], 15);
}

TEST(Cli, TextFormatAndTiming) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::run({"check", "delta", data("delta-pair.json")}, out, err, true), 0);
  EXPECT_FALSE(Json::accept(out.str()));
  EXPECT_FALSE(out.str().empty());
  const Outcome t = run({"--timing", "verify", "uplow", "--n", "2"});
  EXPECT_TRUE(t.json().contains("elapsed_ms"));
  EXPECT_FALSE(run({"verify", "uplow", "--n", "2"}).json().contains("elapsed_ms"));
  const Outcome j = run({"--format", "json", "verify", "uplow", "--n", "2"});
  EXPECT_EQ(j.json()["holds"], true);
}

}  // namespace
}  // namespace dmw
