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

#include "actcause/logic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "actcause/error.hpp"

namespace actcause {

namespace {

std::string JoinArgs(const std::vector<std::string>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ",";
    out += args[i];
  }
  return out;
}

std::string Call(const std::string& sym, const std::vector<std::string>& args) {
  if (args.empty()) return sym;
  return sym + "(" + JoinArgs(args) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// Terms

Term Term::Var(std::string name, Sort sort) {
  return Term(Kind::kVariable, std::move(name), sort, {});
}

Term Term::Name(std::string name) {
  return Term(Kind::kName, std::move(name), Sort::kObject, {});
}

Term Term::Action(std::string symbol, std::vector<Term> args) {
  for (const auto& a : args) {
    if (a.sort() != Sort::kObject) {
      throw InvalidArgument("argument " + a.ToString() + " of action " + symbol +
                            " is not of sort object");
    }
  }
  return Term(Kind::kAction, std::move(symbol), Sort::kAction, std::move(args));
}

bool Term::ground() const {
  if (kind_ == Kind::kVariable) return false;
  return std::all_of(args_.begin(), args_.end(), [](const Term& t) { return t.ground(); });
}

std::string Term::ToString() const {
  if (kind_ != Kind::kAction) return name_;
  std::vector<std::string> parts;
  parts.reserve(args_.size());
  for (const auto& a : args_) parts.push_back(a.ToString());
  return Call(name_, parts);
}

std::string GroundAtom::ToString() const { return Call(fluent, args); }

std::string GroundAction::ToString() const { return Call(symbol, args); }

Term GroundAction::ToTerm() const {
  std::vector<Term> targs;
  targs.reserve(args.size());
  for (const auto& a : args) targs.push_back(Term::Name(a));
  return Term::Action(symbol, std::move(targs));
}

GroundAction GroundAction::FromTerm(const Term& t) {
  if (t.kind() != Term::Kind::kAction || !t.ground()) {
    throw InvalidArgument("not a ground action term: " + t.ToString());
  }
  GroundAction a{t.name(), {}};
  for (const auto& arg : t.args()) a.args.push_back(arg.name());
  return a;
}

// ---------------------------------------------------------------------------
// Traces

bool Trace::IsPrefixOf(const Trace& z) const {
  if (size() > z.size()) return false;
  return std::equal(actions_.begin(), actions_.end(), z.actions_.begin());
}

Trace Trace::Prefix(std::size_t n) const {
  n = std::min(n, size());
  return Trace({actions_.begin(), actions_.begin() + static_cast<std::ptrdiff_t>(n)});
}

Trace Trace::Without(const Trace& prefix) const {
  if (!prefix.IsPrefixOf(*this)) {
    throw InvalidArgument(prefix.ToString() + " is not a prefix of " + ToString());
  }
  return Trace({actions_.begin() + static_cast<std::ptrdiff_t>(prefix.size()), actions_.end()});
}

Trace Trace::Then(const GroundAction& a) const {
  Trace out = *this;
  out.actions_.push_back(a);
  return out;
}

Trace Trace::Then(const Trace& rest) const {
  Trace out = *this;
  out.actions_.insert(out.actions_.end(), rest.begin(), rest.end());
  return out;
}

std::vector<std::string> Trace::ToStrings() const {
  std::vector<std::string> out;
  out.reserve(size());
  for (const auto& a : actions_) out.push_back(a.ToString());
  return out;
}

std::string Trace::ToString() const {
  if (empty()) return "<>";
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (i > 0) out += " . ";
    out += actions_[i].ToString();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Vocabulary

Vocabulary::Vocabulary(std::vector<std::string> objects, std::vector<Signature> fluents,
                       std::vector<Signature> actions)
    : objects_(std::move(objects)), fluents_(std::move(fluents)), actions_(std::move(actions)) {
  const std::size_t n = objects_.size();
  auto tuples = [n](std::size_t arity) {
    std::size_t count = 1;
    for (std::size_t i = 0; i < arity; ++i) count *= n;
    return count;
  };
  for (const auto& f : fluents_) {
    fluent_offsets_.push_back(atom_count_);
    atom_count_ += tuples(f.arity);
  }
  for (const auto& act : actions_) {
    const std::size_t count = tuples(act.arity);
    for (std::size_t k = 0; k < count; ++k) {
      GroundAction g{act.name, std::vector<std::string>(act.arity)};
      std::size_t rest = k;
      for (std::size_t i = act.arity; i-- > 0;) {
        g.args[i] = objects_[rest % n];
        rest /= n;
      }
      ground_actions_.push_back(std::move(g));
    }
  }
}

std::optional<std::size_t> Vocabulary::ObjectIndex(const std::string& name) const {
  auto it = std::find(objects_.begin(), objects_.end(), name);
  if (it == objects_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - objects_.begin());
}

const Signature* Vocabulary::FindFluent(const std::string& name) const {
  for (const auto& f : fluents_) {
    if (f.name == name) return &f;
  }
  return nullptr;
}

const Signature* Vocabulary::FindAction(const std::string& name) const {
  for (const auto& a : actions_) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

std::optional<std::size_t> Vocabulary::ActionIndex(const std::string& name) const {
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (actions_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> Vocabulary::ArgIndices(const std::vector<std::string>& args) const {
  std::vector<std::size_t> out;
  out.reserve(args.size());
  for (const auto& a : args) {
    auto idx = ObjectIndex(a);
    if (!idx) throw InvalidArgument("undeclared object " + a);
    out.push_back(*idx);
  }
  return out;
}

std::size_t Vocabulary::AtomIndex(const std::string& fluent,
                                  const std::vector<std::string>& args) const {
  for (std::size_t f = 0; f < fluents_.size(); ++f) {
    if (fluents_[f].name != fluent) continue;
    if (fluents_[f].arity != args.size()) {
      throw InvalidArgument("fluent " + fluent + " expects " +
                            std::to_string(fluents_[f].arity) + " arguments, got " +
                            std::to_string(args.size()));
    }
    std::size_t idx = 0;
    for (std::size_t i : ArgIndices(args)) idx = idx * objects_.size() + i;
    return fluent_offsets_[f] + idx;
  }
  throw InvalidArgument("undeclared fluent " + fluent);
}

GroundAtom Vocabulary::AtomAt(std::size_t index) const {
  if (index >= atom_count_) throw InvalidArgument("atom index out of range");
  std::size_t f = 0;
  while (f + 1 < fluents_.size() && fluent_offsets_[f + 1] <= index) ++f;
  GroundAtom atom{fluents_[f].name, std::vector<std::string>(fluents_[f].arity)};
  std::size_t rest = index - fluent_offsets_[f];
  for (std::size_t i = atom.args.size(); i-- > 0;) {
    atom.args[i] = objects_[rest % objects_.size()];
    rest /= objects_.size();
  }
  return atom;
}

std::vector<GroundAtom> Vocabulary::GroundAtoms(const std::string& fluent) const {
  std::vector<GroundAtom> out;
  for (std::size_t i = 0; i < atom_count_; ++i) {
    GroundAtom atom = AtomAt(i);
    if (atom.fluent == fluent) out.push_back(std::move(atom));
  }
  return out;
}

bool Vocabulary::ActionLess(const GroundAction& a, const GroundAction& b) const {
  auto ia = ActionIndex(a.symbol);
  auto ib = ActionIndex(b.symbol);
  if (ia != ib) return ia < ib;
  return ArgIndices(a.args) < ArgIndices(b.args);
}

bool Vocabulary::TraceLess(const Trace& a, const Trace& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (ActionLess(a[i], b[i])) return true;
    if (ActionLess(b[i], a[i])) return false;
  }
  return false;
}

std::vector<Term> Vocabulary::Domain(Sort sort) const {
  std::vector<Term> out;
  if (sort == Sort::kObject) {
    for (const auto& o : objects_) out.push_back(Term::Name(o));
  } else {
    for (const auto& g : ground_actions_) out.push_back(g.ToTerm());
  }
  return out;
}

std::vector<std::string> Vocabulary::Problems() const {
  std::vector<std::string> out;
  std::map<std::string, std::string> seen;
  auto note = [&](const std::string& name, const std::string& category) {
    auto [it, inserted] = seen.emplace(name, category);
    if (!inserted) {
      out.push_back("name " + name + " declared as " + it->second + " and as " + category);
    }
  };
  for (const auto& o : objects_) note(o, "object");
  for (const auto& f : fluents_) note(f.name, "fluent");
  for (const auto& a : actions_) note(a.name, "action");
  return out;
}

// ---------------------------------------------------------------------------
// Formulas

FormulaKind Formula::kind() const { return node_ ? node_->kind : FormulaKind::kTrue; }

const std::string& Formula::fluent() const {
  static const std::string kEmpty;
  return node_ ? node_->fluent : kEmpty;
}

const std::vector<Term>& Formula::terms() const {
  static const std::vector<Term> kEmpty;
  return node_ ? node_->terms : kEmpty;
}

const Formula& Formula::lhs() const {
  static const Formula kTrue;
  return node_ ? node_->lhs_child : kTrue;
}

const Formula& Formula::rhs() const {
  static const Formula kTrue;
  return node_ ? node_->rhs_child : kTrue;
}

const Variable& Formula::variable() const {
  static const Variable kNone;
  return node_ ? node_->var : kNone;
}

namespace {

std::shared_ptr<FormulaNode> NewNode(FormulaKind kind) {
  auto n = std::make_shared<FormulaNode>();
  n->kind = kind;
  return n;
}

}  // namespace

Formula Formula::True() { return Formula(); }

Formula Formula::False() { return Formula(NewNode(FormulaKind::kFalse)); }

Formula Formula::Atom(std::string fluent, std::vector<Term> args) {
  for (const auto& a : args) {
    if (a.sort() != Sort::kObject) {
      throw InvalidArgument("argument " + a.ToString() + " of fluent " + fluent +
                            " is not of sort object");
    }
  }
  auto n = NewNode(FormulaKind::kAtom);
  n->fluent = std::move(fluent);
  n->terms = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::Equal(Term lhs, Term rhs) {
  if (lhs.sort() != rhs.sort()) {
    throw InvalidArgument("equality between terms of different sorts: " + lhs.ToString() +
                          " = " + rhs.ToString());
  }
  auto n = NewNode(FormulaKind::kEqual);
  n->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(n));
}

Formula Formula::Not(Formula f) {
  auto n = NewNode(FormulaKind::kNot);
  n->lhs_child = std::move(f);
  return Formula(std::move(n));
}

Formula Formula::And(Formula lhs, Formula rhs) {
  auto n = NewNode(FormulaKind::kAnd);
  n->lhs_child = std::move(lhs);
  n->rhs_child = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::Or(Formula lhs, Formula rhs) {
  auto n = NewNode(FormulaKind::kOr);
  n->lhs_child = std::move(lhs);
  n->rhs_child = std::move(rhs);
  return Formula(std::move(n));
}

Formula Formula::Forall(Variable var, Formula body) {
  auto n = NewNode(FormulaKind::kForall);
  n->var = std::move(var);
  n->lhs_child = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::Exists(Variable var, Formula body) {
  auto n = NewNode(FormulaKind::kExists);
  n->var = std::move(var);
  n->lhs_child = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::Poss(Term action) {
  if (action.sort() != Sort::kAction) {
    throw InvalidArgument("Poss expects an action term, got " + action.ToString());
  }
  auto n = NewNode(FormulaKind::kPoss);
  n->terms = {std::move(action)};
  return Formula(std::move(n));
}

Formula Formula::After(Term action, Formula body) {
  if (action.sort() != Sort::kAction) {
    throw InvalidArgument("[.] expects an action term, got " + action.ToString());
  }
  auto n = NewNode(FormulaKind::kAfter);
  n->terms = {std::move(action)};
  n->lhs_child = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::Box(Formula body) {
  auto n = NewNode(FormulaKind::kBox);
  n->lhs_child = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::AndAll(const std::vector<Formula>& fs) {
  if (fs.empty()) return True();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = And(out, fs[i]);
  return out;
}

Formula Formula::OrAll(const std::vector<Formula>& fs) {
  if (fs.empty()) return False();
  Formula out = fs.front();
  for (std::size_t i = 1; i < fs.size(); ++i) out = Or(out, fs[i]);
  return out;
}

Formula Formula::AfterTrace(const Trace& z, Formula body) {
  for (std::size_t i = z.size(); i-- > 0;) body = After(z[i].ToTerm(), std::move(body));
  return body;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return true;
    case FormulaKind::kAtom:
      return a.fluent() == b.fluent() && a.terms() == b.terms();
    case FormulaKind::kEqual:
    case FormulaKind::kPoss:
      return a.terms() == b.terms();
    case FormulaKind::kNot:
    case FormulaKind::kBox:
      return a.lhs() == b.lhs();
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return a.variable() == b.variable() && a.lhs() == b.lhs();
    case FormulaKind::kAfter:
      return a.terms() == b.terms() && a.lhs() == b.lhs();
  }
  return false;
}

// ---------------------------------------------------------------------------
// Syntactic operations

namespace {

void CollectTermVars(const Term& t, const std::set<Variable>& bound, std::set<Variable>& out) {
  if (t.is_variable()) {
    if (!bound.count(t.variable())) out.insert(t.variable());
    return;
  }
  for (const auto& a : t.args()) CollectTermVars(a, bound, out);
}

void CollectFreeVars(const Formula& f, std::set<Variable>& bound, std::set<Variable>& out) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return;
    case FormulaKind::kAtom:
    case FormulaKind::kEqual:
    case FormulaKind::kPoss:
      for (const auto& t : f.terms()) CollectTermVars(t, bound, out);
      return;
    case FormulaKind::kAfter:
      CollectTermVars(f.action(), bound, out);
      CollectFreeVars(f.body(), bound, out);
      return;
    case FormulaKind::kNot:
    case FormulaKind::kBox:
      CollectFreeVars(f.lhs(), bound, out);
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      CollectFreeVars(f.lhs(), bound, out);
      CollectFreeVars(f.rhs(), bound, out);
      return;
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      const bool fresh = bound.insert(f.variable()).second;
      CollectFreeVars(f.body(), bound, out);
      if (fresh) bound.erase(f.variable());
      return;
    }
  }
}

Term SubstituteTerm(const Term& t, const Variable& v, const Term& value) {
  if (t.is_variable()) return t.variable() == v ? value : t;
  if (t.kind() == Term::Kind::kName) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(SubstituteTerm(a, v, value));
  return Term::Action(t.name(), std::move(args));
}

bool TermMentions(const Term& t, const Variable& v) {
  if (t.is_variable()) return t.variable() == v;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return TermMentions(a, v); });
}

Formula SubstituteImpl(const Formula& f, const Variable& v, const Term& value) {
  auto terms = [&] {
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const auto& t : f.terms()) out.push_back(SubstituteTerm(t, v, value));
    return out;
  };
  auto mentions = [&] {
    return std::any_of(f.terms().begin(), f.terms().end(),
                       [&](const Term& t) { return TermMentions(t, v); });
  };
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
      return f;
    case FormulaKind::kAtom:
      return mentions() ? Formula::Atom(f.fluent(), terms()) : f;
    case FormulaKind::kEqual: {
      if (!mentions()) return f;
      auto t = terms();
      return Formula::Equal(t[0], t[1]);
    }
    case FormulaKind::kPoss:
      return mentions() ? Formula::Poss(terms()[0]) : f;
    case FormulaKind::kAfter: {
      Formula body = SubstituteImpl(f.body(), v, value);
      if (!mentions() && body.SameNode(f.body())) return f;
      return Formula::After(terms()[0], std::move(body));
    }
    case FormulaKind::kNot: {
      Formula sub = SubstituteImpl(f.lhs(), v, value);
      return sub.SameNode(f.lhs()) ? f : Formula::Not(std::move(sub));
    }
    case FormulaKind::kBox: {
      Formula sub = SubstituteImpl(f.lhs(), v, value);
      return sub.SameNode(f.lhs()) ? f : Formula::Box(std::move(sub));
    }
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      Formula l = SubstituteImpl(f.lhs(), v, value);
      Formula r = SubstituteImpl(f.rhs(), v, value);
      if (l.SameNode(f.lhs()) && r.SameNode(f.rhs())) return f;
      return f.is(FormulaKind::kAnd) ? Formula::And(std::move(l), std::move(r))
                                     : Formula::Or(std::move(l), std::move(r));
    }
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      if (f.variable() == v) return f;
      Formula body = SubstituteImpl(f.body(), v, value);
      if (body.SameNode(f.body())) return f;
      return f.is(FormulaKind::kForall) ? Formula::Forall(f.variable(), std::move(body))
                                        : Formula::Exists(f.variable(), std::move(body));
    }
  }
  return f;
}

}  // namespace

std::set<Variable> FreeVars(const Formula& f) {
  std::set<Variable> bound;
  std::set<Variable> out;
  CollectFreeVars(f, bound, out);
  return out;
}

bool IsSentence(const Formula& f) { return FreeVars(f).empty(); }

bool IsStatic(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kAfter:
    case FormulaKind::kBox:
      return false;
    case FormulaKind::kNot:
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      return IsStatic(f.lhs());
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return IsStatic(f.lhs()) && IsStatic(f.rhs());
    default:
      return true;
  }
}

bool MentionsPoss(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kPoss:
      return true;
    case FormulaKind::kNot:
    case FormulaKind::kForall:
    case FormulaKind::kExists:
    case FormulaKind::kAfter:
    case FormulaKind::kBox:
      return MentionsPoss(f.lhs());
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return MentionsPoss(f.lhs()) || MentionsPoss(f.rhs());
    default:
      return false;
  }
}

std::size_t NodeCount(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kNot:
    case FormulaKind::kForall:
    case FormulaKind::kExists:
    case FormulaKind::kAfter:
    case FormulaKind::kBox:
      return 1 + NodeCount(f.lhs());
    case FormulaKind::kAnd:
    case FormulaKind::kOr:
      return 1 + NodeCount(f.lhs()) + NodeCount(f.rhs());
    default:
      return 1;
  }
}

Formula Substitute(const Formula& f, const Variable& v, const Term& t) {
  if (t.sort() != v.sort) {
    throw InvalidArgument("cannot substitute " + t.ToString() + " for variable " + v.name +
                          " of a different sort");
  }
  if (!t.ground()) {
    throw InvalidArgument("only ground terms may be substituted, got " + t.ToString());
  }
  return SubstituteImpl(f, v, t);
}

Formula ExpandQuantifiers(const Vocabulary& vocab, const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kNot:
      return Formula::Not(ExpandQuantifiers(vocab, f.lhs()));
    case FormulaKind::kAnd:
      return Formula::And(ExpandQuantifiers(vocab, f.lhs()), ExpandQuantifiers(vocab, f.rhs()));
    case FormulaKind::kOr:
      return Formula::Or(ExpandQuantifiers(vocab, f.lhs()), ExpandQuantifiers(vocab, f.rhs()));
    case FormulaKind::kAfter:
      return Formula::After(f.action(), ExpandQuantifiers(vocab, f.body()));
    case FormulaKind::kBox:
      return Formula::Box(ExpandQuantifiers(vocab, f.body()));
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      Formula body = ExpandQuantifiers(vocab, f.body());
      std::vector<Formula> instances;
      for (const auto& value : vocab.Domain(f.variable().sort)) {
        instances.push_back(Substitute(body, f.variable(), value));
      }
      return f.is(FormulaKind::kForall) ? Formula::AndAll(instances) : Formula::OrAll(instances);
    }
    default:
      return f;
  }
}

// ---------------------------------------------------------------------------
// Well-formedness

namespace {

class WellFormednessChecker {
 public:
  WellFormednessChecker(const Vocabulary& vocab, const std::vector<Variable>& allowed)
      : vocab_(vocab), scope_(allowed.begin(), allowed.end()) {}

  void Check(const Formula& f) {
    switch (f.kind()) {
      case FormulaKind::kTrue:
      case FormulaKind::kFalse:
        return;
      case FormulaKind::kAtom: {
        const Signature* sig = vocab_.FindFluent(f.fluent());
        if (!sig) {
          problems_.push_back("undeclared fluent " + f.fluent());
        } else if (sig->arity != f.terms().size()) {
          problems_.push_back("fluent " + f.fluent() + " expects " + std::to_string(sig->arity) +
                              " arguments, got " + std::to_string(f.terms().size()));
        }
        for (const auto& t : f.terms()) CheckTerm(t);
        return;
      }
      case FormulaKind::kEqual:
      case FormulaKind::kPoss:
        for (const auto& t : f.terms()) CheckTerm(t);
        return;
      case FormulaKind::kAfter:
        CheckTerm(f.action());
        Check(f.body());
        return;
      case FormulaKind::kNot:
      case FormulaKind::kBox:
        Check(f.lhs());
        return;
      case FormulaKind::kAnd:
      case FormulaKind::kOr:
        Check(f.lhs());
        Check(f.rhs());
        return;
      case FormulaKind::kForall:
      case FormulaKind::kExists: {
        scope_.push_back(f.variable());
        Check(f.body());
        scope_.pop_back();
        return;
      }
    }
  }

  std::vector<std::string> TakeProblems() { return std::move(problems_); }

 private:
  void CheckTerm(const Term& t) {
    switch (t.kind()) {
      case Term::Kind::kVariable:
        if (std::find(scope_.begin(), scope_.end(), t.variable()) == scope_.end()) {
          problems_.push_back("unbound variable " + t.name());
        }
        return;
      case Term::Kind::kName:
        if (!vocab_.ObjectIndex(t.name())) problems_.push_back("undeclared object " + t.name());
        return;
      case Term::Kind::kAction: {
        const Signature* sig = vocab_.FindAction(t.name());
        if (!sig) {
          problems_.push_back("undeclared action " + t.name());
        } else if (sig->arity != t.args().size()) {
          problems_.push_back("action " + t.name() + " expects " + std::to_string(sig->arity) +
                              " arguments, got " + std::to_string(t.args().size()));
        }
        for (const auto& a : t.args()) CheckTerm(a);
        return;
      }
    }
  }

  const Vocabulary& vocab_;
  std::vector<Variable> scope_;
  std::vector<std::string> problems_;
};

}  // namespace

std::vector<std::string> WellFormednessProblems(const Vocabulary& vocab, const Formula& f,
                                                const std::vector<Variable>& allowed_free) {
  WellFormednessChecker checker(vocab, allowed_free);
  checker.Check(f);
  return checker.TakeProblems();
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

// Binding strength used to decide where parentheses are needed.
int Level(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::kForall:
    case FormulaKind::kExists:
    case FormulaKind::kBox:
      return 0;
    case FormulaKind::kOr:
      return 2;
    case FormulaKind::kAnd:
      return 3;
    case FormulaKind::kNot:
      return f.lhs().is(FormulaKind::kEqual) ? 5 : 4;
    case FormulaKind::kAfter:
      return 4;
    default:
      return 5;
  }
}

void Render(const Formula& f, std::string& out);

void RenderWrapped(const Formula& f, bool parens, std::string& out) {
  if (parens) out += "(";
  Render(f, out);
  if (parens) out += ")";
}

void Render(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
      out += "true";
      return;
    case FormulaKind::kFalse:
      out += "false";
      return;
    case FormulaKind::kAtom: {
      out += f.fluent();
      if (!f.terms().empty()) {
        out += "(";
        for (std::size_t i = 0; i < f.terms().size(); ++i) {
          if (i > 0) out += ", ";
          out += f.terms()[i].ToString();
        }
        out += ")";
      }
      return;
    }
    case FormulaKind::kEqual:
      out += f.terms()[0].ToString() + " = " + f.terms()[1].ToString();
      return;
    case FormulaKind::kPoss:
      out += "Poss(" + f.action().ToString() + ")";
      return;
    case FormulaKind::kNot:
      if (f.lhs().is(FormulaKind::kEqual)) {
        out += f.lhs().terms()[0].ToString() + " != " + f.lhs().terms()[1].ToString();
        return;
      }
      out += "!";
      RenderWrapped(f.lhs(), Level(f.lhs()) < 4, out);
      return;
    case FormulaKind::kAfter:
      out += "[" + f.action().ToString() + "] ";
      RenderWrapped(f.body(), Level(f.body()) < 4, out);
      return;
    case FormulaKind::kAnd:
    case FormulaKind::kOr: {
      const int level = Level(f);
      RenderWrapped(f.lhs(), Level(f.lhs()) < level, out);
      out += f.is(FormulaKind::kAnd) ? " & " : " | ";
      RenderWrapped(f.rhs(), Level(f.rhs()) <= level, out);
      return;
    }
    case FormulaKind::kForall:
    case FormulaKind::kExists:
      out += f.is(FormulaKind::kForall) ? "forall " : "exists ";
      out += f.variable().name;
      if (f.variable().sort == Sort::kAction) out += ": action";
      out += ". ";
      Render(f.body(), out);
      return;
    case FormulaKind::kBox:
      out += "box ";
      Render(f.body(), out);
      return;
  }
}

}  // namespace

std::string ToString(const Formula& f) {
  std::string out;
  Render(f, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << ToString(f); }

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.ToString(); }

std::ostream& operator<<(std::ostream& os, const Trace& z) { return os << z.ToString(); }

}  // namespace actcause
