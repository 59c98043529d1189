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

#include "actcause/evaluator.hpp"

#include <algorithm>

#include "actcause/error.hpp"

namespace actcause {

std::vector<std::string> State::TrueAtoms(const Vocabulary& vocab) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i]) out.push_back(vocab.AtomAt(i).ToString());
  }
  return out;
}

Evaluator::Evaluator(BasicActionTheory bat, std::size_t completion_cap) : bat_(std::move(bat)) {
  RequireValid(bat_);
  const Vocabulary& vocab = bat_.vocabulary();

  std::vector<int> assigned(vocab.AtomCount(), -1);
  for (const auto& lit : bat_.initial().literals) {
    assigned[vocab.AtomIndex(lit.atom)] = lit.positive ? 1 : 0;
  }
  std::vector<std::size_t> open_atoms;
  std::vector<bool> base(vocab.AtomCount(), false);
  for (std::size_t i = 0; i < assigned.size(); ++i) {
    if (assigned[i] < 0) {
      open_atoms.push_back(i);
    } else {
      base[i] = assigned[i] == 1;
    }
  }
  // Validation guarantees open_atoms is empty in closed mode.
  const std::size_t k = open_atoms.size();
  if (k >= 63 || (std::size_t{1} << k) > completion_cap) throw CapExceeded(k, completion_cap);
  const std::size_t completions = std::size_t{1} << k;
  initial_.reserve(completions);
  for (std::size_t c = 0; c < completions; ++c) {
    std::vector<bool> values = base;
    for (std::size_t j = 0; j < k; ++j) values[open_atoms[j]] = ((c >> (k - 1 - j)) & 1) != 0;
    initial_.emplace_back(std::move(values));
  }

  for (const auto& act : vocab.GroundActions()) poss_rhs_.emplace(act, PossAxiomRhs(bat_, act));
}

const Formula& Evaluator::PossRhs(const GroundAction& act) const {
  auto it = poss_rhs_.find(act);
  if (it == poss_rhs_.end()) throw InvalidArgument("not a declared ground action: " + act.ToString());
  return it->second;
}

Term Evaluator::Resolve(const Term& t, const Env& env) const {
  switch (t.kind()) {
    case Term::Kind::kName:
      return t;
    case Term::Kind::kVariable:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->var == t.variable()) return it->value;
      }
      throw EvalError("free variable " + t.name() + " in evaluated formula");
    case Term::Kind::kAction: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const auto& a : t.args()) args.push_back(Resolve(a, env));
      return Term::Action(t.name(), std::move(args));
    }
  }
  return t;
}

bool Evaluator::Eval(const State& s, const Formula& f, Env& env, bool allow_modal) const {
  switch (f.kind()) {
    case FormulaKind::kTrue:
      return true;
    case FormulaKind::kFalse:
      return false;
    case FormulaKind::kAtom: {
      std::vector<std::string> args;
      args.reserve(f.terms().size());
      for (const auto& t : f.terms()) args.push_back(Resolve(t, env).name());
      return s[vocabulary().AtomIndex(f.fluent(), args)];
    }
    case FormulaKind::kEqual:
      return Resolve(f.terms()[0], env) == Resolve(f.terms()[1], env);
    case FormulaKind::kNot:
      return !Eval(s, f.lhs(), env, allow_modal);
    case FormulaKind::kAnd:
      return Eval(s, f.lhs(), env, allow_modal) && Eval(s, f.rhs(), env, allow_modal);
    case FormulaKind::kOr:
      return Eval(s, f.lhs(), env, allow_modal) || Eval(s, f.rhs(), env, allow_modal);
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      const bool universal = f.is(FormulaKind::kForall);
      for (const auto& value : vocabulary().Domain(f.variable().sort)) {
        env.push_back({f.variable(), value});
        const bool holds = Eval(s, f.body(), env, allow_modal);
        env.pop_back();
        if (holds != universal) return !universal;
      }
      return universal;
    }
    case FormulaKind::kPoss: {
      Env empty;
      return Eval(s, PossRhs(GroundAction::FromTerm(Resolve(f.action(), env))), empty, false);
    }
    case FormulaKind::kAfter: {
      if (!allow_modal) throw EvalError("formula is not static: " + ToString(f));
      GroundAction act = GroundAction::FromTerm(Resolve(f.action(), env));
      return Eval(Successor(s, act), f.body(), env, true);
    }
    case FormulaKind::kBox:
      throw EvalError("box is not supported in queries: " + ToString(f));
  }
  return false;
}

State Evaluator::Successor(const State& s, const GroundAction& act) const {
  const Vocabulary& vocab = vocabulary();
  State next = s;
  const Term act_term = act.ToTerm();
  for (std::size_t i = 0; i < vocab.AtomCount(); ++i) {
    GroundAtom atom = vocab.AtomAt(i);
    const SuccessorStateAxiom* ssa = bat_.FindSsa(atom.fluent);
    Env env;
    for (std::size_t p = 0; p < ssa->params.size(); ++p) {
      env.push_back({ssa->params[p], Term::Name(atom.args[p])});
    }
    env.push_back({kActionVariable, act_term});
    next.Set(i, Eval(s, ssa->rhs, env, false));
  }
  return next;
}

State Evaluator::Progress(State s, const Trace& z) const {
  for (const auto& act : z) s = Successor(s, act);
  return s;
}

bool Evaluator::EvalStatic(const State& s, const Formula& f) const {
  Env env;
  return Eval(s, f, env, false);
}

bool Evaluator::EvalAt(const State& s, const Trace& z, const Formula& f) const {
  Env env;
  return Eval(Progress(s, z), f, env, true);
}

Verdict Evaluator::Entails(const Trace& z, const Formula& f) const {
  for (const auto& s0 : initial_) {
    if (!EvalAt(s0, z, f)) {
      Verdict v;
      if (bat_.initial().mode == InitialMode::kOpen) v.counter_model = s0;
      return v;
    }
  }
  return Verdict{true, std::nullopt};
}

bool Evaluator::Possible(const State& s, const GroundAction& act) const {
  return EvalStatic(s, PossRhs(act));
}

ExecReport Evaluator::Executable(const Trace& z) const {
  ExecReport report;
  for (const auto& s0 : initial_) {
    State s = s0;
    for (std::size_t i = 0; i < z.size(); ++i) {
      if (report.failing_step && i + 1 >= *report.failing_step) break;
      if (!Possible(s, z[i])) {
        report.executable = false;
        report.failing_step = i + 1;
        report.failing_action = z[i];
        break;
      }
      s = Successor(s, z[i]);
    }
  }
  return report;
}

void Evaluator::ForEachExecutable(std::size_t horizon, const TraceVisitor& visit) const {
  struct Node {
    Trace trace;
    std::vector<State> states;
  };
  std::vector<Node> level{{Trace(), initial_}};
  for (std::size_t depth = 0;; ++depth) {
    for (const auto& node : level) {
      if (!visit(node.trace, node.states)) return;
    }
    if (depth == horizon) return;
    std::vector<Node> next;
    for (const auto& node : level) {
      for (const auto& act : vocabulary().GroundActions()) {
        const bool possible = std::all_of(node.states.begin(), node.states.end(),
                                          [&](const State& s) { return Possible(s, act); });
        if (!possible) continue;
        Node child{node.trace.Then(act), {}};
        child.states.reserve(node.states.size());
        for (const auto& s : node.states) child.states.push_back(Successor(s, act));
        next.push_back(std::move(child));
      }
    }
    if (next.empty()) return;
    level = std::move(next);
  }
}

std::vector<Trace> Evaluator::EnumerateExecutable(std::size_t horizon) const {
  std::vector<Trace> out;
  ForEachExecutable(horizon, [&](const Trace& z, const std::vector<State>&) {
    out.push_back(z);
    return true;
  });
  return out;
}

std::vector<State> InitialStates(const BasicActionTheory& bat, std::size_t completion_cap) {
  return Evaluator(bat, completion_cap).initial_states();
}

State SuccessorState(const BasicActionTheory& bat, const State& s, const GroundAction& act) {
  return Evaluator(bat).Successor(s, act);
}

bool EvalStatic(const BasicActionTheory& bat, const State& s, const Formula& f) {
  return Evaluator(bat).EvalStatic(s, f);
}

bool EvalAt(const BasicActionTheory& bat, const State& s, const Trace& z, const Formula& f) {
  return Evaluator(bat).EvalAt(s, z, f);
}

}  // namespace actcause
