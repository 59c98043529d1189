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

#include "actcause/regression.hpp"

#include <map>

#include "actcause/error.hpp"
#include "actcause/simplify.hpp"

namespace actcause {

namespace {

class Stepper {
 public:
  Stepper(const BasicActionTheory& bat, const GroundAction& action) : bat_(bat), action_(action) {}

  Formula Rewrite(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kTrue:
      case FormulaKind::kFalse:
      case FormulaKind::kEqual:
        return f;
      case FormulaKind::kAtom:
        return AtomInstance(f);
      case FormulaKind::kPoss: {
        // [action]Poss(t) regresses through the precondition axiom of t.
        return Rewrite(ExpandQuantifiers(bat_.vocabulary(), PossAxiomRhs(bat_, f.action())));
      }
      case FormulaKind::kNot:
        return Formula::Not(Rewrite(f.lhs()));
      case FormulaKind::kAnd:
        return Formula::And(Rewrite(f.lhs()), Rewrite(f.rhs()));
      case FormulaKind::kOr:
        return Formula::Or(Rewrite(f.lhs()), Rewrite(f.rhs()));
      default:
        throw InvalidArgument("cannot regress formula: " + ToString(f));
    }
  }

 private:
  Formula AtomInstance(const Formula& f) {
    GroundAtom atom{f.fluent(), {}};
    for (const auto& t : f.terms()) {
      if (!t.ground()) throw InvalidArgument("cannot regress open formula: " + ToString(f));
      atom.args.push_back(t.name());
    }
    auto it = cache_.find(atom);
    if (it != cache_.end()) return it->second;
    Formula rhs = SsaRhsInstance(bat_, atom, action_);
    cache_.emplace(std::move(atom), rhs);
    return rhs;
  }

  const BasicActionTheory& bat_;
  const GroundAction& action_;
  std::map<GroundAtom, Formula> cache_;
};

}  // namespace

Formula RegressStep(const BasicActionTheory& bat, const GroundAction& action, const Formula& f) {
  if (!IsStatic(f)) throw InvalidArgument("regression needs a static formula: " + ToString(f));
  if (!IsSentence(f)) throw InvalidArgument("regression needs a sentence: " + ToString(f));
  Stepper stepper(bat, action);
  // Equalities of the query itself are left as written; those coming from
  // the axioms were already decided by SsaRhsInstance.
  return Simplify(stepper.Rewrite(ExpandQuantifiers(bat.vocabulary(), f)),
                  {.resolve_equalities = false});
}

Formula EliminatePoss(const BasicActionTheory& bat, const Formula& f) {
  if (!MentionsPoss(f)) return f;
  switch (f.kind()) {
    case FormulaKind::kPoss:
      if (!f.action().ground()) {
        throw InvalidArgument("cannot eliminate Poss over an open action term: " + ToString(f));
      }
      return PossAxiomRhs(bat, f.action());
    case FormulaKind::kNot:
      return Formula::Not(EliminatePoss(bat, f.lhs()));
    case FormulaKind::kAnd:
      return Formula::And(EliminatePoss(bat, f.lhs()), EliminatePoss(bat, f.rhs()));
    case FormulaKind::kOr:
      return Formula::Or(EliminatePoss(bat, f.lhs()), EliminatePoss(bat, f.rhs()));
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return EliminatePoss(bat, ExpandQuantifiers(bat.vocabulary(), f));
    default:
      throw InvalidArgument("cannot eliminate Poss in: " + ToString(f));
  }
}

RegressionResult Regress(const BasicActionTheory& bat, const Trace& z, const Formula& f) {
  if (!IsStatic(f)) throw InvalidArgument("regression needs a static formula: " + ToString(f));
  if (!IsSentence(f)) throw InvalidArgument("regression needs a sentence: " + ToString(f));
  RegressionResult result;
  result.size_before = NodeCount(f);
  Formula current = f;
  for (std::size_t i = z.size(); i-- > 0;) {
    current = RegressStep(bat, z[i], current);
    ++result.step_count;
  }
  if (MentionsPoss(current)) current = Simplify(EliminatePoss(bat, current));
  result.formula = current;
  result.size_after = NodeCount(current);
  return result;
}

}  // namespace actcause
