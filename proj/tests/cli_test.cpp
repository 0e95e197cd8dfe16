// Copyright 2026 The lrss Authors
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
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code = -1;
  std::string out;  // stdout and stderr, interleaved
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(LRSS_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("lrss_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  CliRun lrss(const std::string& args) const { return run("--state " + dir_.string() + " " + args); }
  void setup() const { ASSERT_EQ(lrss("setup --k 8 --n 12 --m 3 --secret 42 --seed 7").code, 0); }
  json node_file(int id) const { return json::parse(slurp(dir_ / "nodes" / ("P" + std::to_string(id) + ".json"))); }

  fs::path dir_;
};

TEST_F(Cli, SetupWritesRegistryAndTwelveNodes) {
  setup();
  EXPECT_TRUE(fs::exists(dir_ / "registry.json"));
  int files = 0;
  for (const auto& e : fs::directory_iterator(dir_ / "nodes")) files += e.path().extension() == ".json";
  EXPECT_EQ(files, 12);
}

TEST_F(Cli, SetupIsDeterministic) {
  setup();
  const std::string reg = slurp(dir_ / "registry.json");
  const std::string p5 = slurp(dir_ / "nodes" / "P5.json");
  setup();
  EXPECT_EQ(slurp(dir_ / "registry.json"), reg);
  EXPECT_EQ(slurp(dir_ / "nodes" / "P5.json"), p5);
}

TEST_F(Cli, SetupWithoutSeedIsUsageError) {
  const CliRun r = lrss("setup --k 8 --n 12 --m 3 --secret 42");
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(dir_ / "registry.json"));
}

TEST_F(Cli, BadParametersAreUsageErrors) {
  EXPECT_EQ(lrss("setup --k 8 --n 10 --m 3 --secret 1 --seed 1").code, 2);
  EXPECT_EQ(lrss("setup --k 13 --n 12 --m 3 --secret 1 --seed 1").code, 2);
  EXPECT_EQ(lrss("setup --modulus 12 --secret 1 --seed 1").code, 2);
  EXPECT_EQ(lrss("frobnicate").code, 2);
}

TEST_F(Cli, UnwritableStateIsIoError) {
  setup();
  const CliRun r = run("--state " + (dir_ / "registry.json" / "sub").string() + " setup --secret 1 --seed 1");
  EXPECT_EQ(r.code, 3);
}

TEST_F(Cli, MissingStateIsIoError) { EXPECT_EQ(lrss("recover --participants 1,2,3,4,5,6,7,8").code, 3); }

TEST_F(Cli, RecoverAnyEight) {
  setup();
  CliRun r = lrss("recover --participants 1,2,3,4,5,6,7,8");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "42\n");
  r = lrss("recover --participants P5,P6,P7,P8,P9,P10,P11,P12");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "42\n");
}

TEST_F(Cli, RecoverSevenIsProtocolError) {
  setup();
  const CliRun r = lrss("recover --participants 1,2,3,4,5,6,7");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.out.rfind("insufficient-shares", 0), 0U) << r.out;
}

TEST_F(Cli, FailThenRecoverWithElevenRemaining) {
  setup();
  ASSERT_EQ(lrss("fail --node 3").code, 0);
  EXPECT_EQ(lrss("recover --participants 1,2,4,5,6,7,8,9,10,11,12").out, "42\n");
  EXPECT_EQ(lrss("fail --node 3").code, 2);
  EXPECT_EQ(lrss("fail --node 13").code, 2);
}

TEST_F(Cli, RepairMatchesShadowCopy) {
  setup();
  const json before = node_file(3);
  ASSERT_EQ(lrss("fail --node 3").code, 0);
  EXPECT_TRUE(node_file(3).at("y").is_null());
  const CliRun r = lrss("repair --node 3");
  ASSERT_EQ(r.code, 0) << r.out;
  const json after = node_file(3);
  EXPECT_EQ(after.at("y"), before.at("y"));
  EXPECT_EQ(after.at("sss_subshare"), before.at("sss_subshare"));

  // 3 requests, 3 acks, broadcast, holder response, 3 contributions,
  // interpolate, delivery, restore.
  int events = 0;
  int lines_with_y = 0;
  const std::string y = before.at("y").get<std::string>();
  for (const auto& line : lines(r.out)) {
    if (line.find(" | ") == std::string::npos) continue;
    ++events;
    if (line.find(y) != std::string::npos) {
      ++lines_with_y;
      EXPECT_NE(line.find("| delivery | P3 | P3 |"), std::string::npos) << line;
    }
  }
  EXPECT_EQ(events, 14);
  EXPECT_EQ(lines_with_y, 1);
  EXPECT_EQ(lrss("recover --participants 1,2,3,4,5,6,7,8").out, "42\n");
}

TEST_F(Cli, RepairHealthyNodeIsUsageError) {
  setup();
  EXPECT_EQ(lrss("repair --node 3").code, 2);
}

TEST_F(Cli, TwoFailuresInGroupIsProtocolError) {
  setup();
  ASSERT_EQ(lrss("fail --node 1").code, 0);
  ASSERT_EQ(lrss("fail --node 2").code, 0);
  const CliRun r = lrss("repair --node 1");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.out.rfind("insufficient-points", 0), 0U) << r.out;
}

TEST_F(Cli, FailRepairFailSequence) {
  setup();
  for (int round = 0; round < 2; ++round) {
    ASSERT_EQ(lrss("fail --node 6").code, 0);
    ASSERT_EQ(lrss("repair --node 6").code, 0);
  }
  ASSERT_EQ(lrss("fail --node 6").code, 0);
}

// Holders lose what they host when they fail, so pick one non-holder per
// group; the harness may read node files, the CLI never does.
TEST_F(Cli, RecoverAfterRepairInEveryGroup) {
  setup();
  for (int first : {1, 5, 9}) {
    int id = first;
    while (!node_file(id).at("hosted").empty()) ++id;
    ASSERT_LT(id, first + 4);
    ASSERT_EQ(lrss("fail --node " + std::to_string(id)).code, 0);
    ASSERT_EQ(lrss("repair --node " + std::to_string(id)).code, 0);
  }
  EXPECT_EQ(lrss("recover --participants 1,2,3,4,5,6,7,8,9,10,11,12").out, "42\n");
}

TEST_F(Cli, StateDirectoryFromEnvironment) {
  const std::string env = "LRSS_STATE_DIR=" + dir_.string() + " ";
  const std::string cmd = env + LRSS_CLI_PATH + " setup --secret 42 --seed 7 > /dev/null 2>&1";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "registry.json"));
}

TEST(CliAttack, AnalyticText) {
  const CliRun r = run("attack --mode analytic --q 0.5");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("p1=0.0625"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("p2=0.1875"), std::string::npos) << r.out;
}

TEST(CliAttack, AnalyticJsonMatchesText) {
  const CliRun r = run("--format json attack --mode analytic --q 0.3,0.5");
  ASSERT_EQ(r.code, 0);
  const auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 2U);
  const json half = json::parse(recs[1]);
  EXPECT_EQ(half.at("q").get<double>(), 0.5);
  EXPECT_EQ(half.at("p1_exact").get<double>(), 0.0625);
  EXPECT_EQ(half.at("p2_exact").get<double>(), 0.1875);
}

TEST(CliAttack, MonteCarloRecords) {
  const CliRun r = run("--format json attack --mode mc --q 0.5 --trials 100000 --seed 3");
  ASSERT_EQ(r.code, 0) << r.out;
  int checked = 0;
  for (const auto& line : lines(r.out)) {
    const json rec = json::parse(line);
    EXPECT_EQ(rec.at("trials").get<int>(), 100000);
    EXPECT_EQ(rec.at("seed").get<int>(), 3);
    const double exact =
        rec.at("scheme") == "baseline4" ? rec.at("p1_exact").get<double>() : rec.at("p2_exact").get<double>();
    EXPECT_NEAR(rec.at("p_empirical").get<double>(), exact, 0.005);
    ++checked;
  }
  EXPECT_EQ(checked, 2);
  EXPECT_EQ(run("attack --mode mc --q 0.5").code, 2);
}

TEST(CliAttack, EnumReciprocalIsSixWithTwoGroupWitness) {
  const CliRun r = run("--format json attack --mode enum --fixture reciprocal");
  ASSERT_EQ(r.code, 0) << r.out;
  const json rec = json::parse(r.out);
  EXPECT_EQ(rec.at("min_compromise_size").get<int>(), 6);
  std::array<int, 3> per_group{};
  for (int id : rec.at("witness_subset").get<std::vector<int>>()) per_group[(id - 1) / 4]++;
  std::sort(per_group.begin(), per_group.end());
  EXPECT_EQ(per_group, (std::array<int, 3>{0, 3, 3}));
}

TEST_F(Cli, EnumAntiReciprocalIsSeven) {
  const CliRun r = lrss("--format json attack --mode enum --anti-reciprocal");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out).at("min_compromise_size").get<int>(), 7);
}

TEST(CliAttack, EnumWithoutRedundancyIsEight) {
  const CliRun r = run("--format json attack --mode enum --fixture none");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(json::parse(r.out).at("min_compromise_size").get<int>(), 8);
}

TEST_F(Cli, EnumOnStoredState) {
  setup();
  const CliRun r = lrss("attack --mode enum");
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST_F(Cli, EnumOversizedIsUsageError) {
  ASSERT_EQ(lrss("setup --k 10 --n 20 --m 5 --secret 1 --seed 1").code, 0);
  EXPECT_EQ(lrss("attack --mode enum").code, 2);
}

}  // namespace
