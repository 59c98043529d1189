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

#include "actcause/bs_chain.hpp"
#include "actcause/fixtures.hpp"
#include "actcause/parser.hpp"
#include "actcause/render.hpp"

namespace actcause {
namespace {

const Document& Doc() { return BlocksWorld(); }
Trace T(const char* text) { return ParseTrace(text, Doc().theory.vocabulary()); }

TEST(Render, TraceAndPair) {
  EXPECT_EQ(TraceJson(T("pickup(C); drop(C)")).dump(), R"j(["pickup(C)","drop(C)"])j");
  EXPECT_EQ(TraceJson(Trace()).dump(), "[]");
  const ActionSequencePair p{T("drop(C)")[0], T("pickup(C)")};
  EXPECT_EQ(PairJson(p).dump(), R"j({"action":"drop(C)","context":["pickup(C)"]})j");
}

TEST(Render, EmptyChain) {
  EXPECT_EQ(ToJson(CausalChain{}).dump(), R"j({"chain":[]})j");
  EXPECT_EQ(ToJson(std::vector<ActionSequencePair>{}).dump(), R"j({"chain":[]})j");
}

TEST(Render, ChainLinkShape) {
  const Evaluator ev(Doc().theory);
  const auto chain = BsChain(CausalSetting(ev, *Doc().FindNarrative("dropCthenD"), *Doc().FindGoal("brokenC")));
  const Json j = ToJson(chain);
  ASSERT_EQ(j["chain"].size(), 2u);
  const Json& direct = j["chain"][1];
  EXPECT_EQ(direct["action"], "drop(C)");
  EXPECT_EQ(direct["clause"], "direct");
  EXPECT_EQ(direct["level"], 0);
  EXPECT_EQ(direct["goal"], "Broken(C)");
  EXPECT_EQ(j["chain"][0]["clause"], "indirect");
}

TEST(Render, MultipleHpCauses) {
  const hp::Model& m = *Doc().FindModel("forest_fire_conjunctive");
  const auto causes = hp::ActualCauses(m, *m.FindContext("both"), ParseHpExpr("FF = true"));
  const Json j = ToJson(causes)["causes"];
  ASSERT_TRUE(j.is_array());
  ASSERT_EQ(j.size(), 2u);
  for (const auto& c : j) {
    ASSERT_TRUE(c.contains("conjuncts"));
    ASSERT_TRUE(c["witness"].contains("frozen"));
    ASSERT_TRUE(c["witness"].contains("alternative"));
    EXPECT_EQ(c["conjuncts"].size(), 1u);
  }
}

TEST(Render, MinimalCauseShapeAndDeterminism) {
  const Evaluator ev(Doc().theory);
  MinimalCauseOptions o;
  o.order = MinimalityOrder::kFluent;
  o.horizon = 4;
  const auto a = MinimalCauses(ev, *Doc().FindGoal("brokenCorD"), o);
  const Json j = ToJson(a);
  EXPECT_EQ(j["status"], "found");
  EXPECT_EQ(j["causes"], Json::array({TraceJson(T("pickup(C); drop(C)"))}));
  EXPECT_EQ(j["coordinates"][0]["footprintSize"], 2);
  EXPECT_EQ(j["coordinates"][0]["footprint"], Json::array({"Broken", "Holding"}));
  EXPECT_EQ(Dump(j), Dump(ToJson(MinimalCauses(ev, *Doc().FindGoal("brokenCorD"), o))));
  EXPECT_EQ(Dump(j).back(), '\n');
  EXPECT_NE(Dump(j, true).find("\n  "), std::string::npos);
}

TEST(Render, Envelope) {
  const Json e = Envelope("check", Json{{"file", "x"}}, Json{{"entailed", true}}, {"note"});
  EXPECT_EQ(e.dump(), R"j({"command":"check","input":{"file":"x"},"result":{"entailed":true},"diagnostics":["note"]})j");
}

}  // namespace
}  // namespace actcause
