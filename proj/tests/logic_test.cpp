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
#include "actcause/fixtures.hpp"
#include "actcause/logic.hpp"
#include "actcause/parser.hpp"
#include "actcause/random.hpp"

namespace actcause {
namespace {

const Variable kX{"x", Sort::kObject};
const Variable kY{"y", Sort::kObject};

Formula Holding(Term t) { return Formula::Atom("Holding", {std::move(t)}); }
Formula Broken(const std::string& o) { return Formula::Atom("Broken", {Term::Name(o)}); }

TEST(FreeVars, GroundAtomHasNone) { EXPECT_TRUE(FreeVars(Broken("C")).empty()); }

TEST(FreeVars, BoundVariableIsNotFree) {
  EXPECT_TRUE(FreeVars(Formula::Forall(kX, Holding(Term::Var(kX)))).empty());
}

TEST(FreeVars, SingleFreeVariable) {
  auto f = Formula::And(Holding(Term::Var(kX)), Broken("C"));
  EXPECT_EQ(FreeVars(f), std::set<Variable>{kX});
  EXPECT_FALSE(IsSentence(f));
}

TEST(FreeVars, ActionVariableInsideAfter) {
  const Variable b{"b", Sort::kAction};
  auto f = Formula::After(Term::Var(b), Holding(Term::Var(kX)));
  EXPECT_EQ(FreeVars(f), (std::set<Variable>{kX, b}));
}

TEST(Substitute, ReplacesFreeOccurrence) {
  EXPECT_EQ(Substitute(Holding(Term::Var(kX)), kX, Term::Name("C")), Holding(Term::Name("C")));
}

TEST(Substitute, LeavesBoundOccurrence) {
  auto f = Formula::Forall(kX, Holding(Term::Var(kX)));
  EXPECT_EQ(Substitute(f, kX, Term::Name("C")), f);
}

TEST(Substitute, InsidePossAndActionArguments) {
  auto f = Formula::Poss(Term::Action("drop", {Term::Var(kX)}));
  EXPECT_EQ(Substitute(f, kX, Term::Name("D")),
            Formula::Poss(Term::Action("drop", {Term::Name("D")})));
}

TEST(Substitute, RejectsSortMismatch) {
  EXPECT_THROW(Substitute(Holding(Term::Var(kX)), kX, Term::Action("pickup", {Term::Name("C")})),
               InvalidArgument);
}

TEST(Substitute, RejectsNonGroundTerm) {
  EXPECT_THROW(Substitute(Holding(Term::Var(kX)), kX, Term::Var(kY)), InvalidArgument);
}

TEST(Substitute, IdentityWhenVariableNotFree) {
  Rng rng(11);
  const Vocabulary& v = BlocksWorld().theory.vocabulary();
  for (int i = 0; i < 200; ++i) {
    Formula f = RandomStaticSentence(rng, v, 3);
    EXPECT_EQ(Substitute(f, {"zz", Sort::kObject}, Term::Name("C")), f);
  }
}

TEST(IsStatic, Examples) {
  EXPECT_TRUE(IsStatic(Broken("C")));
  EXPECT_FALSE(IsStatic(Formula::After(Term::Action("drop", {Term::Name("C")}), Broken("C"))));
  EXPECT_FALSE(IsStatic(Formula::Box(Formula::Poss(Term::Var("a", Sort::kAction)))));
}

TEST(Term, ActionArgumentsMustBeObjects) {
  EXPECT_THROW(Term::Action("f", {Term::Action("pickup", {Term::Name("C")})}), InvalidArgument);
}

TEST(Formula, EqualityNeedsSameSort) {
  EXPECT_THROW(Formula::Equal(Term::Name("C"), Term::Action("pickup", {Term::Name("C")})),
               InvalidArgument);
}

TEST(Formula, PossNeedsActionSort) {
  EXPECT_THROW(Formula::Poss(Term::Name("C")), InvalidArgument);
}

TEST(Formula, DefaultIsTrue) {
  Formula f;
  EXPECT_EQ(f.kind(), FormulaKind::kTrue);
  EXPECT_EQ(f, Formula::True());
}

TEST(WellFormedness, ReportsArityAndUndeclaredSymbols) {
  const Vocabulary& v = BlocksWorld().theory.vocabulary();
  EXPECT_TRUE(WellFormednessProblems(v, Broken("C")).empty());
  EXPECT_FALSE(WellFormednessProblems(v, Formula::Atom("Broken", {})).empty());
  EXPECT_FALSE(WellFormednessProblems(v, Formula::Atom("Melted", {Term::Name("C")})).empty());
  EXPECT_FALSE(WellFormednessProblems(v, Broken("E")).empty());
  EXPECT_FALSE(WellFormednessProblems(v, Holding(Term::Var(kX))).empty());
  EXPECT_TRUE(WellFormednessProblems(v, Holding(Term::Var(kX)), {kX}).empty());
}

TEST(Vocabulary, CanonicalGroundActionOrder) {
  const Vocabulary& v = BlocksWorld().theory.vocabulary();
  std::vector<std::string> got;
  for (const auto& a : v.GroundActions()) got.push_back(a.ToString());
  EXPECT_EQ(got, (std::vector<std::string>{"pickup(C)", "pickup(D)", "drop(C)", "drop(D)",
                                           "quench(C)", "quench(D)", "repair(C)", "repair(D)"}));
}

TEST(Vocabulary, AtomIndexRoundTrip) {
  const Vocabulary& v = BlocksWorld().theory.vocabulary();
  ASSERT_EQ(v.AtomCount(), 6u);
  for (std::size_t i = 0; i < v.AtomCount(); ++i) EXPECT_EQ(v.AtomIndex(v.AtomAt(i)), i);
}

TEST(Vocabulary, DuplicateNamesAreProblems) {
  Vocabulary v({"C", "C"}, {{"C", 0}}, {});
  EXPECT_GE(v.Problems().size(), 2u);
  EXPECT_TRUE(BlocksWorld().theory.vocabulary().Problems().empty());
}

Trace Tr(std::initializer_list<const char*> syms) {
  std::vector<GroundAction> out;
  for (const char* s : syms) out.push_back({s, {}});
  return Trace(out);
}

TEST(Trace, PrefixRelation) {
  const Trace z = Tr({"a", "b", "c"});
  EXPECT_TRUE(Trace().IsPrefixOf(z));
  EXPECT_TRUE(Tr({"a", "b"}).IsProperPrefixOf(z));
  EXPECT_TRUE(z.IsPrefixOf(z));
  EXPECT_FALSE(z.IsProperPrefixOf(z));
  EXPECT_FALSE(Tr({"b"}).IsPrefixOf(z));
  EXPECT_EQ(z.Without(Tr({"a"})), Tr({"b", "c"}));
  EXPECT_THROW(z.Without(Tr({"b"})), InvalidArgument);
}

TEST(Trace, PrefixOrderProperties) {
  const Trace z = Tr({"a", "b", "a", "c"});
  for (std::size_t i = 0; i <= z.size(); ++i) {
    for (std::size_t j = 0; j <= z.size(); ++j) {
      const Trace p = z.Prefix(i);
      const Trace q = z.Prefix(j);
      EXPECT_EQ(p.IsPrefixOf(q), i <= j);
      if (p.IsProperPrefixOf(q)) EXPECT_LT(p.size(), q.size());
      if (p.IsPrefixOf(q) && q.IsPrefixOf(p)) EXPECT_EQ(p, q);
    }
  }
}

TEST(Trace, Rendering) {
  EXPECT_EQ(Trace().ToString(), "<>");
  GroundAction a{"pickup", {"C"}};
  EXPECT_EQ(a.ToString(), "pickup(C)");
  EXPECT_EQ((GroundAction{"noop", {}}).ToString(), "noop");
  EXPECT_EQ(GroundAction::FromTerm(a.ToTerm()), a);
}

TEST(ExpandQuantifiers, GroundsOverDomain) {
  const Vocabulary& v = BlocksWorld().theory.vocabulary();
  auto f = Formula::Exists(kX, Holding(Term::Var(kX)));
  EXPECT_EQ(ExpandQuantifiers(v, f), Formula::Or(Holding(Term::Name("C")), Holding(Term::Name("D"))));
}

TEST(ToString, ParsesBackToEqualFormula) {
  Rng rng(5);
  const Vocabulary& v = BlocksWorld().theory.vocabulary();
  for (int i = 0; i < 500; ++i) {
    Formula f = RandomStaticSentence(rng, v, 4);
    EXPECT_EQ(ParseQuery(ToString(f), v), f) << ToString(f);
  }
}

}  // namespace
}  // namespace actcause
