// Copyright 2026 The qswap Authors
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
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qswap/cli.hpp"

namespace qswap {
namespace {

namespace fs = std::filesystem;

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation cli(std::vector<std::string> args) {
  args.insert(args.begin(), "qswap");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& name) {
  return (fs::path(QSWAP_TEST_DATA_DIR) / "circuits" / name).string();
}

TEST(Verify, ConjugationAcrossDimensions) {
  const auto r = cli({"verify", "--identity", "eq18", "--d", "2,3,5,7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 5);
  EXPECT_NE(r.out.find("max deviation"), std::string::npos);
}

TEST(Verify, DeferredMeasurement) {
  EXPECT_EQ(cli({"verify", "--identity", "fig9-defer", "--d", "2,3"}).code, 0);
}

TEST(Verify, UsageErrors) {
  const auto small = cli({"verify", "--identity", "eq18", "--d", "1"});
  EXPECT_EQ(small.code, 2);
  EXPECT_NE(small.err.find("at least 2"), std::string::npos);
  EXPECT_EQ(cli({"verify", "--identity", "eq99", "--d", "2"}).code, 2);
  EXPECT_EQ(cli({"verify", "--identity", "eq18"}).code, 2);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Verify, JsonReport) {
  const auto r = cli({"verify", "--identity", "cz-symmetry", "--d", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "qswap.verify/1");
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["cases"].size(), 2u);
}

TEST(Derive, QubitPipeline) {
  const auto r = cli({"derive", "--pipeline", "qubit", "--d", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("PASSED: 7 steps"), std::string::npos) << r.out;
}

TEST(Derive, WritesReportFiles) {
  const fs::path dir = fs::temp_directory_path() / "qswap_cli_derive";
  fs::remove_all(dir);
  const auto r = cli({"derive", "--pipeline", "qudit", "--d", "3", "--out", dir.string(),
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream json_file(dir / "derive-qudit-d3.json");
  std::stringstream body;
  body << json_file.rdbuf();
  EXPECT_EQ(body.str(), r.out);
  const auto j = nlohmann::json::parse(body.str());
  EXPECT_EQ(j["schema"], "qswap.derivation/1");
  EXPECT_EQ(j["step_count"], 7);
  EXPECT_TRUE(j["final_structural_match"].get<bool>());
  EXPECT_TRUE(fs::exists(dir / "derive-qudit-d3.txt"));
  fs::remove_all(dir);
}

TEST(Derive, QubitPipelineRejectsOtherDims) {
  EXPECT_EQ(cli({"derive", "--pipeline", "qubit", "--d", "3"}).code, 2);
  EXPECT_EQ(cli({"derive", "--pipeline", "ququart", "--d", "4"}).code, 2);
}

TEST(Teleport, HaarSweep) {
  const auto r = cli({"teleport", "--d", "3", "--state", "haar", "--trials", "50", "--seed", "7",
                      "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["min_fidelity"].get<double>(), 1 - 1e-9);
  EXPECT_EQ(j["results"].size(), 50u);
  EXPECT_EQ(j["seed"], 7);
}

TEST(Teleport, SeededOutputIsByteIdentical) {
  const std::vector<std::string> args{"teleport", "--d", "5", "--trials", "20", "--seed", "11",
                                      "--format", "json"};
  EXPECT_EQ(cli(args).out, cli(args).out);
  auto other = args;
  other[6] = "12";
  EXPECT_NE(cli(args).out, cli(other).out);
}

TEST(Teleport, FixedStateAndBadState) {
  EXPECT_EQ(cli({"teleport", "--d", "2", "--state", "psi:[0.6,0.8i]", "--trials", "4"}).code, 0);
  EXPECT_EQ(cli({"teleport", "--d", "2", "--state", "psi:[1,1]"}).code, 2);
  EXPECT_EQ(cli({"teleport", "--d", "1"}).code, 2);
}

TEST(Run, TeleportFile) {
  const std::vector<std::string> args{"run", "--circuit", corpus_file("teleport_qutrit.qc"),
                                      "--input", "psi:[0.6,0.8i,0],0,0", "--seed", "3",
                                      "--format", "json"};
  const auto r = cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "qswap.run/1");
  EXPECT_EQ(j["outcomes"].size(), 2u);
  EXPECT_NEAR(j["branch_probability"].get<double>(), 1.0 / 9, 1e-10);
  // Bob's wire carries psi: the nonzero amplitudes sit on b = 0 and b = 1 with
  // magnitudes 0.6 and 0.8.
  double p0 = 0, p1 = 0;
  const auto& amps = j["amplitudes"];
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::pow(amps[i][0].get<double>(), 2) + std::pow(amps[i][1].get<double>(), 2);
    if (i % 3 == 0) p0 += p;
    if (i % 3 == 1) p1 += p;
  }
  EXPECT_NEAR(p0, 0.36, 1e-10);
  EXPECT_NEAR(p1, 0.64, 1e-10);
  EXPECT_EQ(cli(args).out, r.out);
}

TEST(Run, DefaultsAndErrors) {
  EXPECT_EQ(cli({"run", "--circuit", corpus_file("defer_x.qc"), "--seed", "1"}).code, 0);
  EXPECT_EQ(cli({"run", "--circuit", corpus_file("defer_x.qc"), "--input", "0"}).code, 2);
  EXPECT_EQ(cli({"run", "--circuit", "/no/such/file.qc"}).code, 3);
}

TEST(Unitary, CxPermutationRows) {
  const auto r = cli({"unitary", "--circuit", corpus_file("cx_only.qc")});
  ASSERT_EQ(r.code, 0) << r.err;
  const std::string one = "1+0i";
  const std::string zero = "0+0i";
  const std::string expected = one + "," + zero + "," + zero + "," + zero + "\n" + zero + "," +
                               one + "," + zero + "," + zero + "\n" + zero + "," + zero + "," +
                               zero + "," + one + "\n" + zero + "," + zero + "," + one + "," +
                               zero + "\n";
  EXPECT_EQ(r.out, expected);
}

TEST(Unitary, RejectsMeasuringCircuits) {
  EXPECT_EQ(cli({"unitary", "--circuit", corpus_file("defer_x.qc")}).code, 3);
}

TEST(Unitary, ParseErrorsCarryPosition) {
  const fs::path bad = fs::temp_directory_path() / "qswap_bad.qc";
  std::ofstream(bad) << "dim 2\nwires 2\ngate CX 0 0\n";
  const auto r = cli({"unitary", "--circuit", bad.string()});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("line 3, column 11"), std::string::npos) << r.err;
  fs::remove(bad);
}

TEST(InputSpec, BracketAwareSplit) {
  EXPECT_EQ(split_input_spec("0,psi:[1,0],chi"),
            (std::vector<std::string>{"0", "psi:[1,0]", "chi"}));
  EXPECT_EQ(split_input_spec("haar:3"), (std::vector<std::string>{"haar:3"}));
}

}  // namespace
}  // namespace qswap
