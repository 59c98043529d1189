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

#include "actcause/error.hpp"
#include "actcause/evaluator.hpp"
#include "actcause/fixtures.hpp"
#include "actcause/parser.hpp"
#include "actcause/random.hpp"
#include "actcause/regression.hpp"
#include "oracle.hpp"

namespace actcause {
namespace {

const BasicActionTheory& Bat() { return BlocksWorld().theory; }
const Vocabulary& Vocab() { return Bat().vocabulary(); }
Trace T(const char* text) { return ParseTrace(text, Vocab()); }
Formula G(const char* text) { return ParseGoal(text, Vocab()); }

bool NoModalOrPoss(const Formula& f) { return IsStatic(f) && !MentionsPoss(f); }

TEST(RegressStep, BrokenThroughDrop) {
  EXPECT_EQ(RegressStep(Bat(), {"drop", {"C"}}, G("Broken(C)")), G("Fragile(C) | Broken(C)"));
}

TEST(RegressStep, EqualitiesUntouched) {
  EXPECT_EQ(RegressStep(Bat(), {"pickup", {"C"}}, G("C = D")), G("C = D"));
}

TEST(RegressStep, FragileThroughQuench) {
  EXPECT_EQ(RegressStep(Bat(), {"quench", {"D"}}, G("Fragile(D)")), Formula::True());
  // Oracle: Fragile(D) holds after quench(D) in every state.
  for (const auto& w : oracle::AllWorlds(Vocab())) {
    EXPECT_TRUE(oracle::Holds(Bat(), oracle::Next(Bat(), w, {"quench", {"D"}}), G("Fragile(D)")));
  }
}

TEST(RegressStep, PossRegressesThroughPrecondition) {
  // After pickup(C), drop(C) is possible.
  EXPECT_EQ(RegressStep(Bat(), {"pickup", {"C"}}, G("Poss(drop(C))")), Formula::True());
}

TEST(RegressStep, RejectsModalInput) {
  EXPECT_THROW(RegressStep(Bat(), {"drop", {"C"}}, ParseQuery("[drop(C)] Broken(C)", Vocab())),
               InvalidArgument);
}

TEST(Regress, EmptyTraceIsIdentity) {
  const auto r = Regress(Bat(), Trace(), G("Broken(C)"));
  EXPECT_EQ(r.formula, G("Broken(C)"));
  EXPECT_EQ(r.step_count, 0u);
}

TEST(Regress, BlocksWorldItemsHoldInitially) {
  const Evaluator ev(Bat());
  const State& s0 = ev.initial_states()[0];
  const auto r1 = Regress(Bat(), T("pickup(C); drop(C)"), G("Broken(C)"));
  EXPECT_TRUE(ev.EvalStatic(s0, r1.formula));
  EXPECT_EQ(r1.step_count, 2u);
  const auto r2 = Regress(Bat(), T("pickup(D); quench(D)"), G("Fragile(D)"));
  EXPECT_TRUE(ev.EvalStatic(s0, r2.formula));
}

TEST(Regress, AgreesWithProgression) {
  Rng rng(1001);
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    const auto bat = RandomTheory(rng);
    const Evaluator ev(bat);
    const State& s0 = ev.initial_states()[0];
    for (int k = 0; k < 6; ++k) {
      const Trace z = RandomExecutableTrace(rng, ev, 4);
      const Formula f = RandomStaticSentence(rng, bat.vocabulary(), 3);
      const auto r = Regress(bat, z, f);
      ASSERT_TRUE(NoModalOrPoss(r.formula)) << ToString(r.formula);
      ASSERT_EQ(ev.EvalStatic(s0, r.formula), ev.EvalAt(s0, z, f)) << ToString(f);
      // And against the reference semantics.
      ASSERT_EQ(ev.EvalAt(s0, z, f), oracle::Holds(bat, oracle::After(bat, oracle::Initials(bat)[0], z), f));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 360);
}

TEST(Regress, Compositional) {
  Rng rng(314);
  for (int round = 0; round < 40; ++round) {
    const auto bat = RandomTheory(rng);
    const Evaluator ev(bat);
    const Trace z = RandomExecutableTrace(rng, ev, 4);
    const std::size_t cut = z.empty() ? 0 : std::uniform_int_distribution<std::size_t>(0, z.size())(rng);
    const Trace z1 = z.Prefix(cut);
    const Trace z2 = z.Without(z1);
    const Formula f = RandomStaticSentence(rng, bat.vocabulary(), 3, false);
    const Formula whole = Regress(bat, z, f).formula;
    const Formula split = Regress(bat, z1, Regress(bat, z2, f).formula).formula;
    // Same formula up to simplification; compare on every state.
    if (bat.vocabulary().AtomCount() <= 12) {
      for (const auto& w : oracle::AllWorlds(bat.vocabulary())) {
        ASSERT_EQ(oracle::Holds(bat, w, whole), oracle::Holds(bat, w, split));
      }
    }
    EXPECT_EQ(whole, split);
  }
}

TEST(Regress, SizesReported) {
  const auto r = Regress(Bat(), T("pickup(C); drop(C)"), G("Broken(C)"));
  EXPECT_EQ(r.size_before, 1u);
  EXPECT_EQ(r.size_after, NodeCount(r.formula));
}

}  // namespace
}  // namespace actcause
