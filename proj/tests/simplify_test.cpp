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

#include "actcause/evaluator.hpp"
#include "actcause/fixtures.hpp"
#include "actcause/random.hpp"
#include "actcause/simplify.hpp"
#include "oracle.hpp"

namespace actcause {
namespace {

Formula Broken(const std::string& o) { return Formula::Atom("Broken", {Term::Name(o)}); }

TEST(Simplify, TrueEqualityDrops) {
  EXPECT_EQ(Simplify(Formula::And(Formula::Equal(Term::Name("C"), Term::Name("C")), Broken("C"))),
            Broken("C"));
}

TEST(Simplify, UniqueNamesFalsifyDistinctNames) {
  EXPECT_EQ(Simplify(Formula::Or(Formula::Equal(Term::Name("C"), Term::Name("D")), Broken("C"))),
            Broken("C"));
}

TEST(Simplify, DoubleNegation) {
  EXPECT_EQ(Simplify(Formula::Not(Formula::Not(Broken("C")))), Broken("C"));
}

TEST(Simplify, ComplementAndIdempotence) {
  auto b = Broken("C");
  EXPECT_EQ(Simplify(Formula::And(b, Formula::Not(b))), Formula::False());
  EXPECT_EQ(Simplify(Formula::Or(b, Formula::Not(b))), Formula::True());
  EXPECT_EQ(Simplify(Formula::And(b, b)), b);
}

TEST(Simplify, KeepsEqualitiesWhenAsked) {
  auto eq = Formula::Equal(Term::Name("C"), Term::Name("D"));
  EXPECT_EQ(Simplify(eq, {.resolve_equalities = false}), eq);
}

TEST(DecideTermEquality, Cases) {
  auto c = Term::Name("C");
  auto d = Term::Name("D");
  auto x = Term::Var("x");
  EXPECT_EQ(DecideTermEquality(c, c), true);
  EXPECT_EQ(DecideTermEquality(c, d), false);
  EXPECT_EQ(DecideTermEquality(x, c), std::nullopt);
  EXPECT_EQ(DecideTermEquality(x, x), true);
  EXPECT_EQ(DecideTermEquality(Term::Action("pickup", {x}), Term::Action("drop", {x})), false);
  EXPECT_EQ(DecideTermEquality(Term::Action("pickup", {x}), Term::Action("pickup", {c})),
            std::nullopt);
  EXPECT_EQ(DecideTermEquality(Term::Action("pickup", {d}), Term::Action("pickup", {c})), false);
}

// Brute force over every state of small random vocabularies.
TEST(Simplify, PreservesTruthOnEveryState) {
  Rng rng(2024);
  RandomTheoryOptions opt;
  opt.max_objects = 2;
  opt.max_fluents = 3;
  int checked = 0;
  for (int round = 0; round < 60; ++round) {
    BasicActionTheory bat = RandomTheory(rng, opt);
    const Vocabulary& v = bat.vocabulary();
    if (v.AtomCount() > 12) continue;
    const auto worlds = oracle::AllWorlds(v);
    for (int k = 0; k < 10; ++k) {
      Formula f = RandomStaticSentence(rng, v, 4);
      Formula s = Simplify(f);
      for (const auto& w : worlds) {
        ASSERT_EQ(oracle::Holds(bat, w, f), oracle::Holds(bat, w, s))
            << ToString(f) << "  vs  " << ToString(s);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 300);
}

}  // namespace
}  // namespace actcause
