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

#include "oracle.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

namespace oracle {

using actcause::FormulaKind;
using actcause::Sort;
using actcause::Term;

std::vector<GroundAtom> AllAtoms(const Vocabulary& vocab) {
  std::vector<GroundAtom> out;
  for (const auto& f : vocab.fluents()) {
    std::vector<std::string> args;
    std::function<void()> rec = [&] {
      if (args.size() == f.arity) {
        out.push_back({f.name, args});
        return;
      }
      for (const auto& o : vocab.objects()) {
        args.push_back(o);
        rec();
        args.pop_back();
      }
    };
    rec();
  }
  return out;
}

std::vector<World> AllWorlds(const Vocabulary& vocab) {
  const auto atoms = AllAtoms(vocab);
  if (atoms.size() > 20) throw std::runtime_error("too many atoms for AllWorlds");
  std::vector<World> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << atoms.size()); ++bits) {
    World w;
    for (std::size_t i = 0; i < atoms.size(); ++i) w[atoms[i]] = (bits >> i) & 1;
    out.push_back(std::move(w));
  }
  return out;
}

std::vector<World> Initials(const BasicActionTheory& bat) {
  World fixed;
  for (const auto& lit : bat.initial().literals) fixed[lit.atom] = lit.positive;
  std::vector<GroundAtom> free;
  for (const auto& a : AllAtoms(bat.vocabulary())) {
    if (!fixed.count(a)) free.push_back(a);
  }
  std::vector<World> out;
  for (std::size_t bits = 0; bits < (std::size_t{1} << free.size()); ++bits) {
    World w = fixed;
    for (std::size_t i = 0; i < free.size(); ++i) w[free[i]] = (bits >> i) & 1;
    out.push_back(std::move(w));
  }
  return out;
}

namespace {

std::vector<Term> DomainOf(const Vocabulary& vocab, Sort sort) {
  std::vector<Term> out;
  if (sort == Sort::kObject) {
    for (const auto& o : vocab.objects()) out.push_back(Term::Name(o));
    return out;
  }
  for (const auto& sig : vocab.actions()) {
    std::vector<std::string> args;
    std::function<void()> rec = [&] {
      if (args.size() == sig.arity) {
        std::vector<Term> ts;
        for (const auto& a : args) ts.push_back(Term::Name(a));
        out.push_back(Term::Action(sig.name, ts));
        return;
      }
      for (const auto& o : vocab.objects()) {
        args.push_back(o);
        rec();
        args.pop_back();
      }
    };
    rec();
  }
  return out;
}

GroundAction ToAction(const Term& t) {
  GroundAction a{t.name(), {}};
  for (const auto& arg : t.args()) a.args.push_back(arg.name());
  return a;
}

Formula Bind(Formula f, const std::vector<actcause::Variable>& params,
             const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < params.size(); ++i) {
    f = actcause::Substitute(f, params[i], Term::Name(args[i]));
  }
  return f;
}

}  // namespace

bool Possible(const BasicActionTheory& bat, const World& w, const GroundAction& act) {
  for (const auto& c : bat.preconditions()) {
    if (c.action != act.symbol) continue;
    if (Holds(bat, w, Bind(c.condition, c.params, act.args))) return true;
  }
  return false;
}

World Next(const BasicActionTheory& bat, const World& w, const GroundAction& act) {
  World out;
  for (const auto& [atom, value] : w) {
    (void)value;
    const actcause::SuccessorStateAxiom* ssa = nullptr;
    for (const auto& s : bat.ssas()) {
      if (s.fluent == atom.fluent) ssa = &s;
    }
    Formula rhs = Bind(ssa->rhs, ssa->params, atom.args);
    rhs = actcause::Substitute(rhs, actcause::kActionVariable, act.ToTerm());
    out[atom] = Holds(bat, w, rhs);
  }
  return out;
}

bool Holds(const BasicActionTheory& bat, const World& w, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
      return true;
    case FormulaKind::kFalse:
      return false;
    case FormulaKind::kAtom: {
      GroundAtom atom{f.fluent(), {}};
      for (const auto& t : f.terms()) {
        if (!t.ground()) throw std::runtime_error("open atom");
        atom.args.push_back(t.name());
      }
      return w.at(atom);
    }
    case FormulaKind::kEqual:
      if (!f.terms()[0].ground() || !f.terms()[1].ground()) throw std::runtime_error("open equality");
      return f.terms()[0] == f.terms()[1];
    case FormulaKind::kNot:
      return !Holds(bat, w, f.lhs());
    case FormulaKind::kAnd:
      return Holds(bat, w, f.lhs()) && Holds(bat, w, f.rhs());
    case FormulaKind::kOr:
      return Holds(bat, w, f.lhs()) || Holds(bat, w, f.rhs());
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      const bool all = f.is(FormulaKind::kForall);
      for (const auto& v : DomainOf(bat.vocabulary(), f.variable().sort)) {
        const bool h = Holds(bat, w, actcause::Substitute(f.body(), f.variable(), v));
        if (all && !h) return false;
        if (!all && h) return true;
      }
      return all;
    }
    case FormulaKind::kPoss:
      return Possible(bat, w, ToAction(f.action()));
    case FormulaKind::kAfter:
      return Holds(bat, Next(bat, w, ToAction(f.action())), f.body());
    case FormulaKind::kBox:
      break;
  }
  throw std::runtime_error("oracle cannot evaluate box");
}

World After(const BasicActionTheory& bat, World w, const Trace& z) {
  for (const auto& a : z) w = Next(bat, w, a);
  return w;
}

bool Executable(const BasicActionTheory& bat, const World& w0, const Trace& z) {
  World w = w0;
  for (const auto& a : z) {
    if (!Possible(bat, w, a)) return false;
    w = Next(bat, w, a);
  }
  return true;
}

bool Entails(const BasicActionTheory& bat, const Trace& z, const Formula& f) {
  for (const auto& w : Initials(bat)) {
    if (!Holds(bat, After(bat, w, z), f)) return false;
  }
  return true;
}

bool EntailsExec(const BasicActionTheory& bat, const Trace& z) {
  for (const auto& w : Initials(bat)) {
    if (!Executable(bat, w, z)) return false;
  }
  return true;
}

std::vector<Trace> AllTraces(const Vocabulary& vocab, std::size_t n) {
  std::vector<GroundAction> acts;
  for (const auto& t : DomainOf(vocab, Sort::kAction)) acts.push_back(ToAction(t));
  std::vector<Trace> out{Trace()};
  std::vector<Trace> layer{Trace()};
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Trace> next;
    for (const auto& z : layer) {
      for (const auto& a : acts) next.push_back(z.Then(a));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

bool IsSubsequence(const Trace& sub, const Trace& z) {
  std::size_t i = 0;
  for (const auto& a : z) {
    if (i < sub.size() && sub[i] == a) ++i;
  }
  return i == sub.size();
}

actcause::hp::Valuation Solve(const actcause::hp::Model& m, const actcause::hp::Valuation& context,
                              const actcause::hp::Valuation& intervention) {
  using actcause::hp::Valuation;
  Valuation v = context;
  // Start from arbitrary values and iterate; acyclic models stabilize within
  // |endogenous| rounds.
  for (const auto& d : m.endogenous()) v[d.name] = d.range.front();
  for (const auto& [k, val] : intervention) v[k] = val;
  for (std::size_t round = 0; round <= m.endogenous().size(); ++round) {
    for (const auto& d : m.endogenous()) {
      if (intervention.count(d.name)) continue;
      const auto& eq = m.equation(d.name);
      std::optional<std::string> out;
      for (const auto& [cond, value] : eq.cases) {
        if (cond.Eval(v)) {
          out = value;
          break;
        }
      }
      v[d.name] = out ? *out : *eq.otherwise;
    }
  }
  return v;
}

bool HasWitness(const actcause::hp::Model& m, const actcause::hp::Valuation& context,
                const actcause::hp::Valuation& conjuncts, const actcause::hp::Expr& query) {
  using actcause::hp::Valuation;
  const Valuation actual = oracle::Solve(m, context);
  std::vector<std::string> others;
  for (const auto& d : m.endogenous()) {
    if (!conjuncts.count(d.name)) others.push_back(d.name);
  }
  std::vector<std::string> xs;
  for (const auto& [k, v] : conjuncts) xs.push_back(k);
  for (std::size_t wbits = 0; wbits < (std::size_t{1} << others.size()); ++wbits) {
    Valuation iv;
    for (std::size_t i = 0; i < others.size(); ++i) {
      if ((wbits >> i) & 1) iv[others[i]] = actual.at(others[i]);
    }
    // Every alternative assignment to X, including ones that keep some
    // conjuncts at their actual values.
    std::function<bool(std::size_t)> rec = [&](std::size_t k) {
      if (k == xs.size()) return !query.Eval(oracle::Solve(m, context, iv));
      for (const auto& val : m.Find(xs[k])->range) {
        iv[xs[k]] = val;
        if (rec(k + 1)) return true;
      }
      iv.erase(xs[k]);
      return false;
    };
    if (rec(0)) return true;
  }
  return false;
}

}  // namespace oracle
