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

// Basic action theories: initial literals, per-action precondition clauses
// and one successor state axiom per fluent.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "actcause/logic.hpp"

namespace actcause {

// The distinguished action variable of successor state axioms.
inline const Variable kActionVariable{"a", Sort::kAction};

// Poss(act(params)) holds when `condition` does. Several clauses for one
// action symbol are read disjunctively.
struct PreconditionClause {
  std::string action;
  std::vector<Variable> params;
  Formula condition;
};

// [a] fluent(params) <-> rhs, with rhs static over params and kActionVariable.
struct SuccessorStateAxiom {
  std::string fluent;
  std::vector<Variable> params;
  Formula rhs;
};

enum class InitialMode {
  kClosed,  // every ground atom is assigned: exactly one initial state
  kOpen,    // unassigned atoms range over both values
};

struct Literal {
  GroundAtom atom;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct InitialTheory {
  InitialMode mode = InitialMode::kClosed;
  std::vector<Literal> literals;
};

class BasicActionTheory {
 public:
  BasicActionTheory() = default;
  BasicActionTheory(Vocabulary vocab, InitialTheory initial,
                    std::vector<PreconditionClause> preconditions,
                    std::vector<SuccessorStateAxiom> ssas)
      : vocab_(std::move(vocab)),
        initial_(std::move(initial)),
        preconditions_(std::move(preconditions)),
        ssas_(std::move(ssas)) {}

  const Vocabulary& vocabulary() const { return vocab_; }
  const InitialTheory& initial() const { return initial_; }
  const std::vector<PreconditionClause>& preconditions() const { return preconditions_; }
  const std::vector<SuccessorStateAxiom>& ssas() const { return ssas_; }

  const SuccessorStateAxiom* FindSsa(const std::string& fluent) const;

  // Same theory with the initial literal set read under another mode.
  BasicActionTheory WithInitialMode(InitialMode mode) const;

 private:
  Vocabulary vocab_;
  InitialTheory initial_;
  std::vector<PreconditionClause> preconditions_;
  std::vector<SuccessorStateAxiom> ssas_;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Purely syntactic; lists every violation found.
ValidationReport Validate(const BasicActionTheory& bat);

// Throws ValidationError when Validate reports anything.
void RequireValid(const BasicActionTheory& bat);

// Right-hand side of the precondition axiom instantiated at a ground action;
// FalseConst when the symbol has no clause.
Formula PossAxiomRhs(const BasicActionTheory& bat, const GroundAction& action);
// Same for a ground action term. Throws InvalidArgument on a non-ground term.
Formula PossAxiomRhs(const BasicActionTheory& bat, const Term& action);

// The fluent's successor state axiom instantiated at a ground atom and a
// ground action, quantifiers expanded and simplified (action equalities
// fold to TrueConst/FalseConst).
Formula SsaRhsInstance(const BasicActionTheory& bat, const GroundAtom& atom,
                       const GroundAction& action);

// Fluents whose successor state axiom mentions the action symbol.
std::set<std::string> AffectedFluents(const BasicActionTheory& bat, const std::string& symbol);

}  // namespace actcause
