// Copyright 2026 The actcause Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

namespace actcause {
namespace {

using Json = nlohmann::json;

const std::string kFixture = std::string(ACTCAUSE_SOURCE_DIR) + "/data/blocks_world.act";

struct Result {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Result Cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

TEST(Cli, AchievementCauseExample) {
  const auto r = Cli({"achievement-cause", "-i", kFixture, "--goal", "brokenC", "--narrative", "dropCthenD"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.err.empty());
  EXPECT_EQ(r.json()["result"]["cause"], Json::parse(R"j(["pickup(C)","drop(C)"])j"));
  EXPECT_EQ(r.json()["command"], "achievement-cause");
}

TEST(Cli, MinimalCauseExample) {
  const auto r = Cli({"minimal-cause", "-i", kFixture, "--order", "length", "--horizon", "4", "--goal", "brokenC"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["causes"], Json::parse(R"j([["pickup(C)","drop(C)"]])j"));
}

TEST(Cli, CheckExample) {
  const auto r = Cli({"check", "-i", kFixture, "[pickup(C)][drop(C)] Broken(C)"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.json()["result"]["entailed"], true);
  const auto neg = Cli({"check", "-i", kFixture, "[pickup(D)][drop(D)] Broken(D)"});
  EXPECT_EQ(neg.code, 0);
  EXPECT_EQ(neg.json()["result"]["entailed"], false);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(Cli({"exec", "-i", kFixture, "--narrative", "breakBoth"}).code, 0);
  const auto bad = Cli({"exec", "-i", kFixture, "--trace", "drop(C)"});
  // A negative verdict is still an answer.
  EXPECT_EQ(bad.code, 0);
  EXPECT_EQ(bad.json()["result"]["executable"], false);
  EXPECT_EQ(bad.json()["result"]["failingStep"], 1);
  const auto reg = Cli({"regress", "-i", kFixture, "[pickup(C)][drop(C)] Broken(C)"});
  EXPECT_EQ(reg.code, 0) << reg.err;
  EXPECT_EQ(reg.json()["result"]["formula"], "Fragile(C) | Broken(C)");
  EXPECT_EQ(reg.json()["result"]["steps"], 2);
  const auto bs = Cli({"bs-chain", "-i", kFixture, "--goal", "brokenC", "--narrative", "dropCthenD"});
  EXPECT_EQ(bs.json()["result"]["chain"].size(), 2u);
  const auto ch = Cli({"chain", "-i", kFixture, "--narrative", "dropCthenD"});
  EXPECT_EQ(ch.code, 0) << ch.err;
  EXPECT_EQ(ch.json()["result"]["chain"].size(), 3u);
  const auto thm = Cli({"verify-theorem1", "-i", kFixture, "--goal", "brokenCorD", "--narrative", "breakBoth"});
  EXPECT_EQ(thm.code, 0) << thm.err;
  EXPECT_EQ(thm.json()["result"]["holds"], true);
  const auto rnd = Cli({"verify-theorem1", "--random", "20", "--seed", "3"});
  EXPECT_EQ(rnd.code, 0) << rnd.err;
  const auto hp = Cli({"hp-cause", "-i", kFixture, "--model", "forest_fire_disjunctive", "--query", "FF = true"});
  EXPECT_EQ(hp.code, 0) << hp.err;
  EXPECT_EQ(hp.json()["result"]["causes"].size(), 1u);
  const auto self = Cli({"selftest"});
  EXPECT_EQ(self.code, 0);
  EXPECT_EQ(self.out.find("FAIL"), std::string::npos);
}

TEST(Cli, NoAnswerExitsOne) {
  const auto r = Cli({"minimal-cause", "-i", kFixture, "--order", "length", "--horizon", "2", "--goal", "brokenD"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.json()["result"]["status"], "no-achiever-within-horizon");
}

TEST(Cli, InputErrorsExitTwoWithSpans) {
  const auto missing = Cli({"check", "-i", "/nonexistent/file.act", "true"});
  EXPECT_EQ(missing.code, 2);
  EXPECT_TRUE(missing.out.empty());
  EXPECT_NE(missing.err.find("error"), std::string::npos);

  const auto query = Cli({"check", "-i", kFixture, "Broken(C"});
  EXPECT_EQ(query.code, 2);
  EXPECT_TRUE(query.out.empty());
  EXPECT_EQ(query.err.rfind("query:", 0), 0u) << query.err;

  const std::string broken = WriteTemp("actcause_cli_bad.act", "domain {\n  objects: A;\n  fluents: F/1;\n\n}\nposs\n");
  const auto parse = Cli({"check", "-i", broken, "true"});
  EXPECT_EQ(parse.code, 2);
  EXPECT_NE(parse.err.find(broken + ":5:1:"), std::string::npos) << parse.err;

  EXPECT_EQ(Cli({"achievement-cause", "-i", kFixture, "--goal", "nosuch", "--narrative", "dropC"}).code, 2);
  EXPECT_EQ(Cli({"minimal-cause", "-i", kFixture, "--goal", "brokenC"}).code, 2);
  EXPECT_EQ(Cli({"frobnicate"}).code, 2);
}

TEST(Cli, ByteIdenticalOutput) {
  const std::vector<std::string> args = {"minimal-cause", "-i", kFixture, "--order", "plan-effect",
                                         "--horizon", "4", "--goal", "brokenCorD", "--all"};
  EXPECT_EQ(Cli(args).out, Cli(args).out);
  std::vector<std::string> par = args;
  par.insert(par.end(), {"--jobs", "3"});
  EXPECT_EQ(Cli(args).out, Cli(par).out);
}

TEST(Cli, OpenModeCapFromEnvironment) {
  const std::string open = WriteTemp("actcause_cli_open.act", R"(domain {
  objects: A, B;
  fluents: F/1;
  actions: flip/1;
}
poss flip(x): true;
ssa F(x): a = flip(x) | F(x);
init open { }
)");
  ::setenv("ACTCAUSE_OPEN_MODE_CAP", "2", 1);
  const auto capped = Cli({"check", "-i", open, "F(A) | !F(A)"});
  ::setenv("ACTCAUSE_OPEN_MODE_CAP", "4", 1);
  const auto allowed = Cli({"check", "-i", open, "F(A) | !F(A)"});
  ::setenv("ACTCAUSE_OPEN_MODE_CAP", "zero", 1);
  const auto invalid = Cli({"check", "-i", open, "true"});
  ::unsetenv("ACTCAUSE_OPEN_MODE_CAP");
  EXPECT_EQ(capped.code, 2);
  EXPECT_NE(capped.err.find("cap"), std::string::npos);
  EXPECT_EQ(allowed.code, 0) << allowed.err;
  EXPECT_EQ(allowed.json()["result"]["entailed"], true);
  EXPECT_EQ(invalid.code, 2);
  // Closed mode needs every atom assigned.
  const auto closed = Cli({"check", "-i", open, "--mode", "closed", "!F(A)"});
  EXPECT_EQ(closed.code, 2);
  EXPECT_NE(closed.err.find("F(A) unassigned"), std::string::npos) << closed.err;
}

}  // namespace
}  // namespace actcause
