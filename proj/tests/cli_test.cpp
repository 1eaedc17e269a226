// Copyright 2026 The mcbi Authors.
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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"
#include "json.hpp"

namespace mcbi {
namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "mcbi");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string samples = MCBI_SAMPLES_DIR;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("mcbi-cli-" + std::to_string(::getpid()) + "-" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::filesystem::path dir_;
};

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"solve"}).code, 2);
  EXPECT_EQ(run({"solve", samples + "/two_squares.mcbi", "--method", "fast"}).code, 2);
  EXPECT_EQ(run({"solve", samples + "/two_squares.mcbi", "--method", "xp"}).code, 2);
  EXPECT_EQ(run({"solve", samples + "/two_squares.mcbi", "--method", "greedy", "--K", "1"}).code, 2);
  EXPECT_EQ(run({"solve", (dir_ / "missing.mcbi").string()}).code, 2);
  EXPECT_EQ(run({"solve", samples + "/two_squares.mcbi", "--frames", "1..2"}).code, 2);
  EXPECT_EQ(run({"solve", samples + "/prism.traj", "--frames", "2..9"}).code, 2);
  EXPECT_EQ(run({"mcb", samples + "/two_squares.mcbi", "--graph", "0"}).code, 2);
  EXPECT_EQ(run({"gen", "conn", "--l", "6"}).code, 2);
  const Result bad = run({"solve", write("bad.mcbi", "mcbi 3 1\ngraph a\ne 1 1\n")});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 3"), std::string::npos) << bad.err;
}

TEST_F(Cli, SolveText) {
  const Result r = run({"solve", samples + "/two_squares.mcbi"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "# method: k2\n# approximate: no\n# size: 1\nc 1 2 1 4 2 5 4 5\n");
  // The text report is itself a valid solution file.
  const auto sol = write("sol.txt", r.out);
  const Result v = run({"verify", samples + "/two_squares.mcbi", sol});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "feasible: 1 cycles\n");
}

TEST_F(Cli, SolveJson) {
  const Result r = run({"solve", samples + "/prism.traj", "--frames", "1..2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["method"], "gamma4-delta3");
  EXPECT_EQ(doc["size"], 3);
  EXPECT_EQ(doc["cycles"].size(), 3u);
  EXPECT_TRUE(doc["K"].is_null());
  EXPECT_EQ(doc["stats"]["k"], 2);
  EXPECT_EQ(doc["stats"]["graphs"][0]["name"], "frame 1");
  ASSERT_EQ(doc["witnesses"].size(), 2u);
  EXPECT_EQ(doc["witnesses"][0]["size"], 4);
  EXPECT_EQ(doc["witnesses"][1]["size"], 3);
}

TEST_F(Cli, Decisions) {
  const auto host = write("p3.host", "host 3\ne 1 2\ne 2 3\n");
  const Result gen = run({"gen", "stableset", host});
  ASSERT_EQ(gen.code, 0);
  const auto inst = write("p3.mcbi", gen.out);
  const Result yes = run({"solve", inst, "--method", "xp", "--K", "2"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_NE(yes.out.find("# answer: yes"), std::string::npos);
  const Result no = run({"solve", inst, "--method", "xp", "--K", "3"});
  EXPECT_EQ(no.code, 1);
  EXPECT_NE(no.out.find("# answer: no"), std::string::npos);
  EXPECT_EQ(run({"solve", inst, "--K", "3"}).code, 1);
  EXPECT_EQ(run({"solve", inst, "--K", "2"}).code, 0);
}

TEST_F(Cli, VerifyFailures) {
  const auto infeasible = write("right.txt", "c 2 3 2 5 3 6 5 6\n");
  const Result r = run({"verify", samples + "/two_squares.mcbi", infeasible});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("'right'"), std::string::npos) << r.out;
  EXPECT_EQ(run({"verify", samples + "/two_squares.mcbi", write("u.txt", "c 1 3 3 6 1 6\n")}).code, 2);
  EXPECT_EQ(run({"verify", samples + "/two_squares.mcbi", write("odd.txt", "c 1 2 2 3\n")}).code, 2);
}

TEST_F(Cli, BudgetAndPreconditions) {
  ::setenv("MCBI_BUDGET_CANDIDATES", "1", 1);
  const Result r = run({"solve", samples + "/prism.traj", "--method", "brute"});
  ::unsetenv("MCBI_BUDGET_CANDIDATES");
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
  EXPECT_EQ(run({"solve", samples + "/prism.traj", "--method", "brute"}).code, 0);

  const auto pentagon = write("c5.mcbi", "mcbi 5 1\ngraph a\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
  EXPECT_EQ(run({"solve", pentagon, "--method", "special"}).code, 2);
  EXPECT_EQ(run({"solve", pentagon, "--method", "k2"}).code, 2);
}

TEST_F(Cli, Inspection) {
  const Result mcb = run({"mcb", samples + "/two_squares.mcbi", "--graph", "2"});
  ASSERT_EQ(mcb.code, 0);
  EXPECT_NE(mcb.out.find("# weight: 10"), std::string::npos);
  const auto doc = nlohmann::json::parse(run({"mcb", samples + "/two_squares.mcbi", "--json"}).out);
  EXPECT_EQ(doc["weight"], 8);
  const Result cands = run({"candidates", samples + "/prism.traj"});
  EXPECT_EQ(cands.code, 0);
  EXPECT_EQ(cands.out.rfind("# candidates: 6\n", 0), 0u);
  const Result stats = run({"stats", samples + "/prism.traj", "--frames", "3..3"});
  EXPECT_EQ(stats.out.rfind("k 1\nn 6\ndelta 4\ngamma 4\n", 0), 0u) << stats.out;
}

TEST_F(Cli, Generators) {
  const auto conn = nlohmann::json::parse(
      run({"stats", write("conn.mcbi", run({"gen", "conn", "--l", "4"}).out), "--json"}).out);
  EXPECT_EQ(conn["graphs"][0]["nu"], 9);
  EXPECT_EQ(conn["graphs"][0]["mcb_weight"], 28);
  const std::vector<std::string> args{"gen", "random", "--n", "8", "--p", "0.5", "--k", "2", "--perturb", "0.2", "--seed", "3"};
  const Result a = run(args), b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"gen", "random", "--n", "5", "--p", "2"}).code, 2);
  const Result matched = run({"gen", "stableset", samples + "/path3.host", "--l", "5", "--group-matchings"});
  EXPECT_NE(matched.out.find("graph matching-2"), std::string::npos);
}

std::string capture(const std::string& command) {
  std::string out;
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(::popen(command.c_str(), "r"), ::pclose);
  if (!pipe) return "<popen failed>";
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, n);
  return out;
}

TEST(CliProcess, ByteIdenticalAcrossRuns) {
  const std::string bin = MCBI_CLI_PATH;
  for (const std::string& args : std::vector<std::string>{" solve " + samples + "/prism.traj --json",
                                 " solve " + samples + "/two_squares.mcbi --method brute",
                                 " candidates " + samples + "/prism.traj --frames 2..3 --json",
                                 " gen random --n 10 --p 0.3 --k 4 --perturb 0.1 --seed 99"}) {
    const std::string first = capture(bin + args + " 2>&1");
    EXPECT_FALSE(first.empty());
    EXPECT_EQ(first, capture(bin + args + " 2>&1")) << args;
  }
}

}  // namespace
}  // namespace mcbi
