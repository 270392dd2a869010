// Copyright 2026 The chainint Authors
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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

RunResult run(const std::string& args) {
  const char* bin = std::getenv("CHAININT_BIN");
  if (bin == nullptr) throw std::runtime_error("CHAININT_BIN is not set");
  std::string base = ::testing::TempDir() + "chainint_cli_" + std::to_string(::getpid());
  std::string cmd = std::string(bin) + " " + args + " >" + base + ".out 2>" + base + ".err";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(base + ".out");
  r.err = slurp(base + ".err");
  return r;
}

}  // namespace

TEST(Cli, CheckFredkin) {
  auto r = run("check deformed_fredkin --format json");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("verdict"), "nonintegrable");
}

TEST(Cli, CheckTextMentionsObstruction) {
  auto r = run("check deformed_fredkin");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_NE(r.out.find("(IX)(XI)(ZZ)"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* args : {"check ext:I --format json", "charge min:Ia --k 3 --n 8 --at c1=2,c2=3 --format json",
                           "graph tilde:II --n 8 --format dot", "catalog list --format json"}) {
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.exit_code, 0) << args << a.err;
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, PreconditionExitCode) {
  auto r = run("check ising");
  EXPECT_EQ(r.exit_code, 1);
  auto j = nlohmann::json::parse(r.err);
  EXPECT_EQ(j.at("exit_code"), 1);
}

TEST(Cli, UnknownModelExitCode) {
  auto r = run("check no_such_model");
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.err).at("exit_code"), 2);
}

TEST(Cli, UsageErrorExitCode) { EXPECT_EQ(run("check").exit_code, 2); }

TEST(Cli, ResourceCapExitCode) {
  auto r = run("charge min:Ia --k 3 --n 8 --at c1=2,c2=3");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  setenv("CHAININT_MAX_BASIS", "10", 1);
  auto capped = run("charge min:Ia --k 3 --n 8 --at c1=2,c2=3");
  unsetenv("CHAININT_MAX_BASIS");
  EXPECT_EQ(capped.exit_code, 3);
}

TEST(Cli, VerifyStatedCharge) {
  std::string path = ::testing::TempDir() + "q5.txt";
  std::ofstream(path) << "1 * X1 X2 Y3 X4 Z5\n1 * X1 I2 Y3 Z4\n";
  auto r = run("verify tilde:I --charge " + path + " --n 10 --format json");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out).at("conserved"), true);
}

TEST(Cli, ModelFromJsonFile) {
  auto r = run(std::string("check ") + CHAININT_SOURCE_DIR + "/samples/xx_chain.json --at J=1,g=1/2 --format json");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(nlohmann::json::parse(r.out).contains("verdict"));
}

TEST(Cli, ReproduceReportsAllEntries) {
  auto r = run("reproduce --format json");
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("table1").at("integrable"), 7);
  EXPECT_EQ(j.at("table2").at("nonintegrable"), 4);
}
