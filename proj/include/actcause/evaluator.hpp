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

// Forward semantics: initial states, progression through successor state
// axioms, truth of formulas after a trace, entailment and executability.

#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "actcause/logic.hpp"
#include "actcause/theory.hpp"

namespace actcause {

// Truth values of all ground fluent atoms, indexed as in Vocabulary.
class State {
 public:
  State() = default;
  explicit State(std::vector<bool> values) : values_(std::move(values)) {}

  bool operator[](std::size_t atom) const { return values_[atom]; }
  void Set(std::size_t atom, bool value) { values_[atom] = value; }
  std::size_t size() const { return values_.size(); }

  // Atoms that hold, rendered, in atom order.
  std::vector<std::string> TrueAtoms(const Vocabulary& vocab) const;

  friend bool operator==(const State&, const State&) = default;
  friend auto operator<=>(const State&, const State&) = default;

 private:
  std::vector<bool> values_;
};

// Default number of open-mode completions (2^16).
inline constexpr std::size_t kDefaultCompletionCap = std::size_t{1} << 16;

struct Verdict {
  bool entailed = false;
  // First falsifying initial state; only reported for open initial theories.
  std::optional<State> counter_model;

  explicit operator bool() const { return entailed; }
};

struct ExecReport {
  bool executable = true;
  // 1-based position of the first action whose precondition fails.
  std::optional<std::size_t> failing_step;
  std::optional<GroundAction> failing_action;
};

// Reasoner over one validated theory. Caches the initial states and the
// instantiated precondition axioms; immutable and shareable once built.
class Evaluator {
 public:
  // Throws ValidationError for an invalid theory and CapExceeded when an
  // open initial theory has more than `completion_cap` completions.
  explicit Evaluator(BasicActionTheory bat, std::size_t completion_cap = kDefaultCompletionCap);

  const BasicActionTheory& theory() const { return bat_; }
  const Vocabulary& vocabulary() const { return bat_.vocabulary(); }
  const std::vector<State>& initial_states() const { return initial_; }

  State Successor(const State& s, const GroundAction& act) const;
  State Progress(State s, const Trace& z) const;

  // Static sentence at a state. Poss atoms use the precondition axioms.
  bool EvalStatic(const State& s, const Formula& f) const;
  // Progress `s` through `z`, then evaluate `f`, following [t] operators.
  bool EvalAt(const State& s, const Trace& z, const Formula& f) const;

  Verdict Entails(const Trace& z, const Formula& f) const;
  Verdict Entails(const Formula& f) const { return Entails(Trace(), f); }

  bool Possible(const State& s, const GroundAction& act) const;
  ExecReport Executable(const Trace& z) const;

  // Executable traces of length <= horizon, breadth first, ties in canonical
  // action order. The visitor sees each trace with the states it reaches
  // from every initial state; returning false stops the walk.
  using TraceVisitor = std::function<bool(const Trace&, const std::vector<State>&)>;
  void ForEachExecutable(std::size_t horizon, const TraceVisitor& visit) const;
  std::vector<Trace> EnumerateExecutable(std::size_t horizon) const;

 private:
  struct Binding {
    Variable var;
    Term value;
  };
  using Env = std::vector<Binding>;

  bool Eval(const State& s, const Formula& f, Env& env, bool allow_modal) const;
  Term Resolve(const Term& t, const Env& env) const;
  const Formula& PossRhs(const GroundAction& act) const;

  BasicActionTheory bat_;
  std::vector<State> initial_;
  std::map<GroundAction, Formula> poss_rhs_;
};

// Free-function forms of the evaluator operations.
std::vector<State> InitialStates(const BasicActionTheory& bat,
                                 std::size_t completion_cap = kDefaultCompletionCap);
State SuccessorState(const BasicActionTheory& bat, const State& s, const GroundAction& act);
bool EvalStatic(const BasicActionTheory& bat, const State& s, const Formula& f);
bool EvalAt(const BasicActionTheory& bat, const State& s, const Trace& z, const Formula& f);

}  // namespace actcause
