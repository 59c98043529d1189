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

#include <algorithm>
#include <stdexcept>

#include "actcause/bs_chain.hpp"
#include "actcause/error.hpp"
#include "actcause/fixtures.hpp"
#include "actcause/parser.hpp"
#include "actcause/random.hpp"
#include "oracle.hpp"

namespace actcause {
namespace {

const Document& Doc() { return BlocksWorld(); }
const BasicActionTheory& Bat() { return Doc().theory; }
Trace T(const char* text) { return ParseTrace(text, Bat().vocabulary()); }
GroundAction A(const char* text) { return T(text)[0]; }
const Formula& Goal(const char* name) { return *Doc().FindGoal(name); }
const Trace& Narr(const char* name) { return *Doc().FindNarrative(name); }

// Re-checks every link against the reference semantics: the pair achieves
// its goal within the narrative bounded by the next link, and each enabling
// goal agrees with "after a, the later goal holds, and a is possible".
void ExpectChainReverified(const BasicActionTheory& bat, const Trace& z, const Formula& goal,
                           const CausalChain& chain) {
  ASSERT_FALSE(chain.links.empty());
  const ChainLink& last = chain.links.back();
  EXPECT_EQ(last.clause, ChainClause::kDirect);
  EXPECT_EQ(last.level, 0u);
  EXPECT_EQ(last.goal, goal);
  for (std::size_t i = 0; i < chain.links.size(); ++i) {
    const ChainLink& link = chain.links[i];
    const bool outermost = i + 1 == chain.links.size();
    const Trace bound = outermost ? z : chain.links[i + 1].pair.context;
    const Trace achieved = link.pair.context.Then(link.pair.action);
    ASSERT_TRUE(achieved.IsPrefixOf(bound));
    EXPECT_TRUE(achieved.IsPrefixOf(z));
    EXPECT_FALSE(oracle::Entails(bat, link.pair.context, link.goal));
    for (std::size_t j = achieved.size(); j <= bound.size(); ++j) {
      EXPECT_TRUE(oracle::Entails(bat, bound.Prefix(j), link.goal));
    }
    if (!outermost) {
      const ChainLink& next = chain.links[i + 1];
      EXPECT_EQ(link.clause, ChainClause::kIndirect);
      EXPECT_EQ(link.level, next.level + 1);
      const Formula enabling = Formula::And(Formula::After(next.pair.action.ToTerm(), next.goal),
                                            Formula::Poss(next.pair.action.ToTerm()));
      for (std::size_t j = 0; j <= z.size(); ++j) {
        EXPECT_EQ(oracle::Entails(bat, z.Prefix(j), link.goal), oracle::Entails(bat, z.Prefix(j), enabling));
      }
    }
  }
}

TEST(AchievementPair, Examples) {
  const Evaluator ev(Bat());
  const auto p = AchievementPair(ev, Narr("dropCthenD"), Goal("brokenC"));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->action, A("drop(C)"));
  EXPECT_EQ(p->context, T("pickup(C)"));
  EXPECT_FALSE(AchievementPair(ev, Narr("dropCthenD"), Goal("brokenD")).has_value());
  // Holding(C) turns true and later false again: no persistent change.
  EXPECT_FALSE(AchievementPair(ev, Narr("dropC"), ParseGoal("Holding(C)", Bat().vocabulary())).has_value());
}

TEST(ChainOf, AllPrefixPairs) {
  const auto pairs = ChainOf(T("pickup(C); drop(C); pickup(D)"));
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0], (ActionSequencePair{A("pickup(C)"), Trace()}));
  EXPECT_EQ(pairs[1], (ActionSequencePair{A("drop(C)"), T("pickup(C)")}));
  EXPECT_EQ(pairs[2], (ActionSequencePair{A("pickup(D)"), T("pickup(C); drop(C)")}));
  EXPECT_TRUE(ChainOf(Trace()).empty());
}

TEST(BsChain, DropAfterPickup) {
  const Evaluator ev(Bat());
  const auto chain = BsChain(CausalSetting(ev, Narr("dropCthenD"), Goal("brokenC")));
  ASSERT_EQ(chain.links.size(), 2u);
  EXPECT_EQ(chain.links[0].pair, (ActionSequencePair{A("pickup(C)"), Trace()}));
  EXPECT_EQ(chain.links[0].clause, ChainClause::kIndirect);
  EXPECT_EQ(chain.links[0].level, 1u);
  EXPECT_EQ(chain.links[1].pair, (ActionSequencePair{A("drop(C)"), T("pickup(C)")}));
  EXPECT_EQ(chain.links[1].clause, ChainClause::kDirect);
  EXPECT_EQ(chain.pairs().size(), 2u);
}

TEST(BsChain, QuenchIsPartOfTheChain) {
  const Evaluator ev(Bat());
  const auto chain = BsChain(CausalSetting(ev, Narr("breakBoth"), Goal("brokenD")));
  std::vector<GroundAction> actions;
  for (const auto& l : chain.links) actions.push_back(l.pair.action);
  EXPECT_EQ(actions, (std::vector<GroundAction>{A("pickup(D)"), A("quench(D)"), A("drop(D)")}));
}

TEST(BsChain, FixturesReverified) {
  const Evaluator ev(Bat());
  const std::vector<std::pair<const char*, const char*>> settings = {
      {"dropCthenD", "brokenC"}, {"breakBoth", "brokenCorD"}, {"breakBoth", "brokenD"},
      {"pickupBoth", "holdingCorD"}, {"dropCthenD", "brokenCorHoldingD"}};
  for (const auto& [n, g] : settings) {
    const auto chain = BsChain(CausalSetting(ev, Narr(n), Goal(g)));
    ExpectChainReverified(Bat(), Narr(n), Goal(g), chain);
  }
}

TEST(BsChain, GoalThatFlipsUsesLastChange) {
  const Evaluator ev(Bat());
  // The direct cause is the final pickup; the drop enables it, and the first
  // pickup enables the drop.
  const auto g = ParseGoal("Holding(C)", Bat().vocabulary());
  const Trace z = T("pickup(C); drop(C); pickup(C)");
  const auto chain = BsChain(CausalSetting(ev, z, g));
  EXPECT_EQ(chain.pairs(), ChainOf(z));
  ExpectChainReverified(Bat(), z, g, chain);
}

TEST(BsChain, RandomSettingsReverified) {
  Rng rng(515);
  for (int i = 0; i < 150; ++i) {
    const RandomSetting rs = RandomCausalSetting(rng);
    const Evaluator ev(rs.theory);
    const auto chain = BsChain(CausalSetting(ev, rs.narrative, rs.goal));
    ExpectChainReverified(rs.theory, rs.narrative, rs.goal, chain);
  }
}

TEST(Theorem1, Fixtures) {
  const Evaluator ev(Bat());
  const auto r = VerifyTheorem1(CausalSetting(ev, Narr("breakBoth"), Goal("brokenCorD")));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.cause, T("pickup(C); drop(C); pickup(D)"));
  EXPECT_TRUE(r.violations.empty());
  EXPECT_EQ(r.chain, ChainOf(r.cause));
  const auto r2 = VerifyTheorem1(CausalSetting(ev, Narr("dropCthenD"), Goal("brokenC")));
  EXPECT_TRUE(r2.holds);
  EXPECT_EQ(r2.bs_chain.size(), 2u);
}

TEST(Theorem1, RandomSettings) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const RandomSetting rs = RandomCausalSetting(rng);
    const Evaluator ev(rs.theory);
    const CausalSetting s(ev, rs.narrative, rs.goal);
    const auto r = VerifyTheorem1(s);
    EXPECT_TRUE(r.holds);
    // Independent inclusion check.
    const auto all = ChainOf(r.cause);
    for (const auto& p : BsChain(s).pairs()) {
      EXPECT_NE(std::find(all.begin(), all.end(), p), all.end());
    }
  }
}

}  // namespace
}  // namespace actcause
