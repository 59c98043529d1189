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

#include "actcause/random.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace actcause {

namespace {

std::size_t Pick(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

bool Coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

class FormulaGen {
 public:
  FormulaGen(Rng& rng, const Vocabulary& vocab, bool allow_poss, std::vector<Variable> scope = {})
      : rng_(rng), vocab_(vocab), allow_poss_(allow_poss), scope_(std::move(scope)) {}

  Formula Make(std::size_t depth) {
    if (depth == 0 || Coin(rng_, 0.3)) return Leaf();
    switch (Pick(rng_, 5)) {
      case 0:
        return Formula::Not(Make(depth - 1));
      case 1: {
        Formula l = Make(depth - 1);
        return Formula::And(std::move(l), Make(depth - 1));
      }
      case 2: {
        Formula l = Make(depth - 1);
        return Formula::Or(std::move(l), Make(depth - 1));
      }
      default: {
        const bool universal = Pick(rng_, 2) == 0;
        Variable v{"v" + std::to_string(fresh_++), Coin(rng_, 0.2) ? Sort::kAction : Sort::kObject};
        scope_.push_back(v);
        Formula body = Make(depth - 1);
        scope_.pop_back();
        return universal ? Formula::Forall(v, std::move(body)) : Formula::Exists(v, std::move(body));
      }
    }
  }

  Formula Leaf() {
    const std::size_t r = Pick(rng_, 10);
    if (r == 9 && allow_poss_) return Formula::Poss(ActionTerm());
    if (r == 8 && HasVar(Sort::kAction)) {
      Term lhs = VarOf(Sort::kAction);
      return Formula::Equal(std::move(lhs), GroundActionTerm());
    }
    if (r >= 6 && r <= 7) {
      Term lhs = ObjectTerm();
      return Formula::Equal(std::move(lhs), ObjectTerm());
    }
    return Literal();
  }

  Formula Atom() {
    const Signature& sig = vocab_.fluents()[Pick(rng_, vocab_.fluents().size())];
    std::vector<Term> args;
    for (std::size_t i = 0; i < sig.arity; ++i) args.push_back(ObjectTerm());
    return Formula::Atom(sig.name, std::move(args));
  }

  Formula Literal() {
    Formula f = Atom();
    return Coin(rng_, 0.4) ? Formula::Not(std::move(f)) : f;
  }

  Term ObjectTerm() {
    if (HasVar(Sort::kObject) && Coin(rng_, 0.6)) return VarOf(Sort::kObject);
    return Term::Name(vocab_.objects()[Pick(rng_, vocab_.objects().size())]);
  }

  Term GroundActionTerm() {
    const Signature& sig = vocab_.actions()[Pick(rng_, vocab_.actions().size())];
    std::vector<Term> args;
    for (std::size_t i = 0; i < sig.arity; ++i) args.push_back(ObjectTerm());
    return Term::Action(sig.name, std::move(args));
  }

  Term ActionTerm() {
    if (HasVar(Sort::kAction) && Coin(rng_, 0.5)) return VarOf(Sort::kAction);
    return GroundActionTerm();
  }

 private:
  bool HasVar(Sort sort) const {
    for (const auto& v : scope_) {
      if (v.sort == sort) return true;
    }
    return false;
  }
  Term VarOf(Sort sort) {
    std::vector<const Variable*> vars;
    for (const auto& v : scope_) {
      if (v.sort == sort) vars.push_back(&v);
    }
    return Term::Var(*vars[Pick(rng_, vars.size())]);
  }

  Rng& rng_;
  const Vocabulary& vocab_;
  bool allow_poss_;
  std::vector<Variable> scope_;
  std::size_t fresh_ = 0;
};

std::vector<Variable> Params(std::size_t arity) {
  std::vector<Variable> out;
  for (std::size_t i = 0; i < arity; ++i) out.push_back({"x" + std::to_string(i + 1), Sort::kObject});
  return out;
}

// a = A(t1..tn) & [literal], with some arguments possibly existential.
Formula EffectTerm(Rng& rng, const Vocabulary& vocab, const std::vector<Variable>& params) {
  const Signature& sig = vocab.actions()[Pick(rng, vocab.actions().size())];
  std::vector<Variable> exist;
  std::vector<Term> args;
  for (std::size_t i = 0; i < sig.arity; ++i) {
    if (Coin(rng, 0.15)) {
      exist.push_back({"y" + std::to_string(i + 1), Sort::kObject});
      args.push_back(Term::Var(exist.back()));
    } else if (!params.empty() && Coin(rng, 0.7)) {
      args.push_back(Term::Var(params[Pick(rng, params.size())]));
    } else {
      args.push_back(Term::Name(vocab.objects()[Pick(rng, vocab.objects().size())]));
    }
  }
  Formula f = Formula::Equal(Term::Var(kActionVariable), Term::Action(sig.name, std::move(args)));
  if (Coin(rng, 0.4)) {
    std::vector<Variable> scope = params;
    scope.insert(scope.end(), exist.begin(), exist.end());
    FormulaGen gen(rng, vocab, false, scope);
    f = Formula::And(std::move(f), gen.Literal());
  }
  for (auto it = exist.rbegin(); it != exist.rend(); ++it) f = Formula::Exists(*it, std::move(f));
  return f;
}

}  // namespace

BasicActionTheory RandomTheory(Rng& rng, const RandomTheoryOptions& options) {
  std::vector<std::string> objects;
  const std::size_t n_obj = 1 + Pick(rng, options.max_objects);
  for (std::size_t i = 0; i < n_obj; ++i) objects.push_back("O" + std::to_string(i + 1));
  std::vector<Signature> fluents;
  const std::size_t n_fl = 1 + Pick(rng, options.max_fluents);
  for (std::size_t i = 0; i < n_fl; ++i) {
    fluents.push_back({"F" + std::to_string(i + 1), Pick(rng, options.max_fluent_arity + 1)});
  }
  std::vector<Signature> actions;
  const std::size_t n_act = 1 + Pick(rng, options.max_actions);
  for (std::size_t i = 0; i < n_act; ++i) {
    actions.push_back({"act" + std::to_string(i + 1), Pick(rng, options.max_action_arity + 1)});
  }
  Vocabulary vocab(objects, fluents, actions);

  std::vector<PreconditionClause> preconditions;
  for (const auto& sig : actions) {
    const std::size_t r = Pick(rng, 20);
    const std::size_t clauses = r == 0 ? 0 : (r <= 2 ? 2 : 1);
    for (std::size_t c = 0; c < clauses; ++c) {
      auto params = Params(sig.arity);
      FormulaGen gen(rng, vocab, false, params);
      Formula cond = Coin(rng, 0.25) ? Formula::True() : gen.Make(Pick(rng, 2));
      preconditions.push_back({sig.name, params, cond});
    }
  }

  std::vector<SuccessorStateAxiom> ssas;
  for (const auto& sig : fluents) {
    auto params = Params(sig.arity);
    Formula rhs;
    if (Coin(rng, 0.2)) {
      auto scope = params;
      scope.push_back(kActionVariable);
      FormulaGen gen(rng, vocab, false, scope);
      rhs = gen.Make(2);
    } else {
      std::vector<Formula> positive;
      std::vector<Formula> negative;
      for (std::size_t k = Pick(rng, 3); k > 0; --k) positive.push_back(EffectTerm(rng, vocab, params));
      for (std::size_t k = Pick(rng, 3); k > 0; --k) negative.push_back(EffectTerm(rng, vocab, params));
      std::vector<Term> args;
      for (const auto& p : params) args.push_back(Term::Var(p));
      Formula frame = Formula::Atom(sig.name, std::move(args));
      if (!negative.empty()) frame = Formula::And(frame, Formula::Not(Formula::OrAll(negative)));
      positive.push_back(frame);
      rhs = Formula::OrAll(positive);
    }
    ssas.push_back({sig.name, params, rhs});
  }

  InitialTheory init;
  for (std::size_t i = 0; i < vocab.AtomCount(); ++i) init.literals.push_back({vocab.AtomAt(i), Coin(rng, 0.5)});

  BasicActionTheory bat(vocab, init, std::move(preconditions), std::move(ssas));
  RequireValid(bat);
  return bat;
}

Formula RandomStaticSentence(Rng& rng, const Vocabulary& vocab, std::size_t depth, bool allow_poss) {
  FormulaGen gen(rng, vocab, allow_poss);
  return gen.Make(depth);
}

Trace RandomExecutableTrace(Rng& rng, const Evaluator& ev, std::size_t max_length) {
  std::vector<State> states = ev.initial_states();
  std::vector<GroundAction> out;
  while (out.size() < max_length) {
    std::vector<const GroundAction*> possible;
    for (const auto& act : ev.vocabulary().GroundActions()) {
      bool ok = true;
      for (const auto& s : states) ok = ok && ev.Possible(s, act);
      if (ok) possible.push_back(&act);
    }
    if (possible.empty()) break;
    const GroundAction& act = *possible[Pick(rng, possible.size())];
    for (auto& s : states) s = ev.Successor(s, act);
    out.push_back(act);
  }
  return Trace(std::move(out));
}

RandomSetting RandomCausalSetting(Rng& rng, const RandomTheoryOptions& options,
                                  std::size_t max_narrative) {
  while (true) {
    BasicActionTheory bat = RandomTheory(rng, options);
    Evaluator ev(bat);
    Trace z = RandomExecutableTrace(rng, ev, 1 + Pick(rng, max_narrative));
    if (z.empty()) continue;
    const State& s0 = ev.initial_states().front();
    const State end = ev.Progress(s0, z);
    std::vector<std::size_t> became_true;
    std::vector<std::size_t> false_at_start;
    for (std::size_t i = 0; i < s0.size(); ++i) {
      if (!s0[i] && end[i]) became_true.push_back(i);
      if (!s0[i]) false_at_start.push_back(i);
    }
    auto atom_formula = [&](std::size_t i) {
      GroundAtom atom = bat.vocabulary().AtomAt(i);
      std::vector<Term> args;
      for (const auto& a : atom.args) args.push_back(Term::Name(a));
      return Formula::Atom(atom.fluent, std::move(args));
    };
    for (int attempt = 0; attempt < 8; ++attempt) {
      Formula goal;
      if (!became_true.empty() && Coin(rng, 0.5)) {
        goal = atom_formula(became_true[Pick(rng, became_true.size())]);
        if (Coin(rng, 0.5)) goal = Formula::Or(goal, atom_formula(false_at_start[Pick(rng, false_at_start.size())]));
      } else {
        goal = RandomStaticSentence(rng, bat.vocabulary(), 2, true);
      }
      if (ev.Entails(z, goal).entailed && ev.Entails(Formula::Not(goal)).entailed) {
        return {bat, z, goal};
      }
    }
  }
}

hp::Model RandomBoolModel(Rng& rng, std::size_t max_endogenous) {
  const std::size_t n = 1 + Pick(rng, max_endogenous);
  std::vector<hp::VariableDecl> exo;
  std::vector<hp::VariableDecl> endo;
  std::map<std::string, hp::Equation> equations;
  hp::Valuation context;
  auto leaf = [&](std::size_t upto) {
    const std::string var = "X" + std::to_string(Pick(rng, upto) + 1);
    return hp::Expr::Is(var, Coin(rng, 0.75) ? "true" : "false");
  };
  std::function<hp::Expr(std::size_t, std::size_t)> expr = [&](std::size_t upto, std::size_t depth) {
    if (depth == 0 || Coin(rng, 0.3)) return leaf(upto);
    switch (Pick(rng, 3)) {
      case 0:
        return hp::Expr::Not(expr(upto, depth - 1));
      case 1: {
        hp::Expr l = expr(upto, depth - 1);
        return hp::Expr::And(l, expr(upto, depth - 1));
      }
      default: {
        hp::Expr l = expr(upto, depth - 1);
        return hp::Expr::Or(l, expr(upto, depth - 1));
      }
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const std::string name = "X" + std::to_string(i + 1);
    endo.push_back({name, hp::kBoolRange});
    if (i == 0 || Coin(rng, 0.35)) {
      const std::string u = "U" + std::to_string(i + 1);
      exo.push_back({u, hp::kBoolRange});
      context[u] = Coin(rng, 0.7) ? "true" : "false";
      hp::Expr e = hp::Expr::Is(u, "true");
      if (Coin(rng, 0.2)) e = hp::Expr::Not(e);
      equations.emplace(name, hp::Equation::FromBool(e));
    } else if (Coin(rng, 0.2)) {
      hp::Equation eq;
      eq.cases.emplace_back(expr(i, 1), Coin(rng, 0.5) ? "true" : "false");
      eq.cases.emplace_back(expr(i, 1), Coin(rng, 0.5) ? "true" : "false");
      eq.otherwise = Coin(rng, 0.5) ? "true" : "false";
      equations.emplace(name, std::move(eq));
    } else {
      equations.emplace(name, hp::Equation::FromBool(expr(i, 2)));
    }
  }
  return hp::Model("random", std::move(exo), std::move(endo), std::move(equations),
                   {{"u", std::move(context)}});
}

hp::Expr RandomTrueQuery(Rng& rng, const hp::Model& m) {
  const std::size_t n = m.endogenous().size();
  auto leaf = [&]() {
    return hp::Expr::Is(m.endogenous()[Pick(rng, n)].name, Coin(rng, 0.5) ? "true" : "false");
  };
  hp::Expr q = leaf();
  if (Coin(rng, 0.5)) q = Coin(rng, 0.5) ? hp::Expr::And(q, leaf()) : hp::Expr::Or(q, leaf());
  const hp::Valuation actual = Solve(m, *m.FindContext("u"));
  return q.Eval(actual) ? q : hp::Expr::Not(q);
}

}  // namespace actcause
