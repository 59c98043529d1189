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

#include "actcause/theory.hpp"

#include <algorithm>
#include <map>

#include "actcause/error.hpp"
#include "actcause/simplify.hpp"

namespace actcause {

const SuccessorStateAxiom* BasicActionTheory::FindSsa(const std::string& fluent) const {
  for (const auto& ssa : ssas_) {
    if (ssa.fluent == fluent) return &ssa;
  }
  return nullptr;
}

BasicActionTheory BasicActionTheory::WithInitialMode(InitialMode mode) const {
  BasicActionTheory out = *this;
  out.initial_.mode = mode;
  return out;
}

namespace {

void CheckParams(const std::string& owner, const std::vector<Variable>& params,
                 std::vector<std::string>& out) {
  std::set<std::string> seen;
  for (const auto& p : params) {
    if (p.sort != Sort::kObject) out.push_back(owner + ": parameter " + p.name + " is not of sort object");
    if (p.name == kActionVariable.name) out.push_back(owner + ": parameter name a is reserved");
    if (!seen.insert(p.name).second) out.push_back(owner + ": duplicate parameter " + p.name);
  }
}

void AddAll(const std::string& owner, const std::vector<std::string>& problems,
            std::vector<std::string>& out) {
  for (const auto& p : problems) out.push_back(owner + ": " + p);
}

bool TermMentionsSymbol(const Term& t, const std::string& symbol) {
  if (t.kind() == Term::Kind::kAction && t.name() == symbol) return true;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return TermMentionsSymbol(a, symbol); });
}

bool MentionsActionSymbol(const Formula& f, const std::string& symbol) {
  if (std::any_of(f.terms().begin(), f.terms().end(),
                  [&](const Term& t) { return TermMentionsSymbol(t, symbol); })) {
    return true;
  }
  switch (f.kind()) {
    case FormulaKind::kNot:
    case FormulaKind::kForall:
    case FormulaKind::kExists:
    case FormulaKind::kAfter:
    case FormulaKind::kBox:
      return MentionsActionSymbol(f.lhs(), symbol);
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return MentionsActionSymbol(f.lhs(), symbol) || MentionsActionSymbol(f.rhs(), symbol);
    default:
      return false;
  }
}

}  // namespace

ValidationReport Validate(const BasicActionTheory& bat) {
  ValidationReport report;
  auto& out = report.violations;
  const Vocabulary& vocab = bat.vocabulary();

  for (const auto& p : vocab.Problems()) out.push_back(p);

  std::map<std::string, int> ssa_count;
  for (const auto& ssa : bat.ssas()) {
    const std::string owner = "SSA for " + ssa.fluent;
    const Signature* sig = vocab.FindFluent(ssa.fluent);
    if (!sig) {
      out.push_back("SSA for undeclared fluent " + ssa.fluent);
      continue;
    }
    if (++ssa_count[ssa.fluent] == 2) out.push_back("fluent " + ssa.fluent + " has more than one SSA");
    if (sig->arity != ssa.params.size()) {
      out.push_back(owner + ": expects " + std::to_string(sig->arity) + " parameters, got " +
                    std::to_string(ssa.params.size()));
    }
    CheckParams(owner, ssa.params, out);
    if (!IsStatic(ssa.rhs)) out.push_back(owner + ": right-hand side is not static");
    if (MentionsPoss(ssa.rhs)) out.push_back(owner + ": right-hand side mentions Poss");
    std::vector<Variable> allowed = ssa.params;
    allowed.push_back(kActionVariable);
    AddAll(owner, WellFormednessProblems(vocab, ssa.rhs, allowed), out);
  }
  for (const auto& f : vocab.fluents()) {
    if (!ssa_count.count(f.name)) out.push_back("fluent " + f.name + " has no SSA");
  }

  for (const auto& clause : bat.preconditions()) {
    const std::string owner = "precondition of " + clause.action;
    const Signature* sig = vocab.FindAction(clause.action);
    if (!sig) {
      out.push_back("precondition for undeclared action " + clause.action);
      continue;
    }
    if (sig->arity != clause.params.size()) {
      out.push_back(owner + ": expects " + std::to_string(sig->arity) + " parameters, got " +
                    std::to_string(clause.params.size()));
    }
    CheckParams(owner, clause.params, out);
    if (!IsStatic(clause.condition)) out.push_back(owner + ": condition is not static");
    if (MentionsPoss(clause.condition)) out.push_back(owner + ": condition mentions Poss");
    AddAll(owner, WellFormednessProblems(vocab, clause.condition, clause.params), out);
  }

  std::map<GroundAtom, bool> assigned;
  bool literals_ok = true;
  for (const auto& lit : bat.initial().literals) {
    const Signature* sig = vocab.FindFluent(lit.atom.fluent);
    bool ok = sig && sig->arity == lit.atom.args.size();
    for (const auto& arg : lit.atom.args) ok = ok && vocab.ObjectIndex(arg).has_value();
    if (!ok) {
      out.push_back("initial literal " + lit.atom.ToString() + " is not a declared ground atom");
      literals_ok = false;
      continue;
    }
    auto [it, inserted] = assigned.emplace(lit.atom, lit.positive);
    if (!inserted && it->second != lit.positive) {
      out.push_back("contradictory initial literals for " + lit.atom.ToString());
    }
  }
  if (bat.initial().mode == InitialMode::kClosed && literals_ok &&
      vocab.Problems().empty()) {
    for (std::size_t i = 0; i < vocab.AtomCount(); ++i) {
      GroundAtom atom = vocab.AtomAt(i);
      if (!assigned.count(atom)) {
        out.push_back("atom " + atom.ToString() + " unassigned in closed mode");
      }
    }
  }
  return report;
}

void RequireValid(const BasicActionTheory& bat) {
  ValidationReport report = Validate(bat);
  if (!report.ok()) throw ValidationError(std::move(report.violations));
}

Formula PossAxiomRhs(const BasicActionTheory& bat, const GroundAction& action) {
  const Signature* sig = bat.vocabulary().FindAction(action.symbol);
  if (!sig) throw InvalidArgument("undeclared action " + action.symbol);
  if (sig->arity != action.args.size()) {
    throw InvalidArgument("action " + action.symbol + " expects " + std::to_string(sig->arity) +
                          " arguments");
  }
  std::vector<Formula> disjuncts;
  for (const auto& clause : bat.preconditions()) {
    if (clause.action != action.symbol || clause.params.size() != action.args.size()) continue;
    Formula cond = clause.condition;
    for (std::size_t i = 0; i < clause.params.size(); ++i) {
      cond = Substitute(cond, clause.params[i], Term::Name(action.args[i]));
    }
    disjuncts.push_back(std::move(cond));
  }
  return Simplify(Formula::OrAll(disjuncts));
}

Formula PossAxiomRhs(const BasicActionTheory& bat, const Term& action) {
  return PossAxiomRhs(bat, GroundAction::FromTerm(action));
}

Formula SsaRhsInstance(const BasicActionTheory& bat, const GroundAtom& atom,
                       const GroundAction& action) {
  const Vocabulary& vocab = bat.vocabulary();
  vocab.AtomIndex(atom);  // throws on undeclared fluent, arity or object
  const Signature* sig = vocab.FindAction(action.symbol);
  if (!sig || sig->arity != action.args.size()) {
    throw InvalidArgument("not a declared ground action: " + action.ToString());
  }
  const SuccessorStateAxiom* ssa = bat.FindSsa(atom.fluent);
  if (!ssa) throw InvalidArgument("fluent " + atom.fluent + " has no SSA");
  Formula rhs = ssa->rhs;
  for (std::size_t i = 0; i < ssa->params.size(); ++i) {
    rhs = Substitute(rhs, ssa->params[i], Term::Name(atom.args[i]));
  }
  rhs = Substitute(rhs, kActionVariable, action.ToTerm());
  return Simplify(ExpandQuantifiers(vocab, rhs));
}

std::set<std::string> AffectedFluents(const BasicActionTheory& bat, const std::string& symbol) {
  if (!bat.vocabulary().FindAction(symbol)) throw InvalidArgument("undeclared action " + symbol);
  std::set<std::string> out;
  for (const auto& ssa : bat.ssas()) {
    if (MentionsActionSymbol(ssa.rhs, symbol)) out.insert(ssa.fluent);
  }
  return out;
}

}  // namespace actcause
