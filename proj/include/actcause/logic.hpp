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

// Terms, formulas, vocabularies and traces of the modal action language.
//
// Quantifiers range over the finite set of object names declared in the
// vocabulary (and, for action-sort variables, over the ground action terms
// built from it). Object-name equality is string identity (unique names).

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

namespace actcause {

enum class Sort { kObject, kAction };

struct Variable {
  std::string name;
  Sort sort = Sort::kObject;

  friend auto operator<=>(const Variable&, const Variable&) = default;
};

class Term {
 public:
  enum class Kind { kVariable, kName, kAction };

  static Term Var(std::string name, Sort sort = Sort::kObject);
  static Term Var(const Variable& v) { return Var(v.name, v.sort); }
  static Term Name(std::string name);
  // Throws InvalidArgument if any argument is of action sort.
  static Term Action(std::string symbol, std::vector<Term> args = {});

  Kind kind() const { return kind_; }
  // Variable name, object name, or action symbol.
  const std::string& name() const { return name_; }
  Sort sort() const { return sort_; }
  const std::vector<Term>& args() const { return args_; }

  bool is_variable() const { return kind_ == Kind::kVariable; }
  bool ground() const;
  Variable variable() const { return {name_, sort_}; }

  std::string ToString() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;

 private:
  Term(Kind kind, std::string name, Sort sort, std::vector<Term> args)
      : kind_(kind), name_(std::move(name)), sort_(sort), args_(std::move(args)) {}

  Kind kind_;
  std::string name_;
  Sort sort_;
  std::vector<Term> args_;
};

struct Signature {
  std::string name;
  std::size_t arity = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

struct GroundAtom {
  std::string fluent;
  std::vector<std::string> args;

  std::string ToString() const;
  friend auto operator<=>(const GroundAtom&, const GroundAtom&) = default;
};

struct GroundAction {
  std::string symbol;
  std::vector<std::string> args;

  // Canonical rendering "sym(arg,...)"; a nullary action renders as "sym".
  std::string ToString() const;
  Term ToTerm() const;
  // Throws InvalidArgument unless `t` is a ground action term.
  static GroundAction FromTerm(const Term& t);

  friend auto operator<=>(const GroundAction&, const GroundAction&) = default;
};

// A finite action sequence. Prefix order: z' <= z iff z = z' . z''.
class Trace {
 public:
  Trace() = default;
  explicit Trace(std::vector<GroundAction> actions) : actions_(std::move(actions)) {}

  const std::vector<GroundAction>& actions() const { return actions_; }
  std::size_t size() const { return actions_.size(); }
  bool empty() const { return actions_.empty(); }
  const GroundAction& operator[](std::size_t i) const { return actions_[i]; }
  auto begin() const { return actions_.begin(); }
  auto end() const { return actions_.end(); }

  bool IsPrefixOf(const Trace& z) const;
  bool IsProperPrefixOf(const Trace& z) const {
    return size() < z.size() && IsPrefixOf(z);
  }

  // First `n` actions.
  Trace Prefix(std::size_t n) const;
  // z \ z' for a prefix z' of this trace; throws InvalidArgument otherwise.
  Trace Without(const Trace& prefix) const;
  Trace Then(const GroundAction& a) const;
  Trace Then(const Trace& rest) const;

  std::vector<std::string> ToStrings() const;
  std::string ToString() const;

  friend auto operator<=>(const Trace&, const Trace&) = default;

 private:
  std::vector<GroundAction> actions_;
};

// Objects, fluent signatures and action signatures. Ill-formed declarations
// (duplicate names) are kept and reported by Problems(); lookups resolve to
// the first declaration.
class Vocabulary {
 public:
  Vocabulary() = default;
  Vocabulary(std::vector<std::string> objects, std::vector<Signature> fluents,
             std::vector<Signature> actions);

  const std::vector<std::string>& objects() const { return objects_; }
  const std::vector<Signature>& fluents() const { return fluents_; }
  const std::vector<Signature>& actions() const { return actions_; }

  std::optional<std::size_t> ObjectIndex(const std::string& name) const;
  const Signature* FindFluent(const std::string& name) const;
  const Signature* FindAction(const std::string& name) const;
  std::optional<std::size_t> ActionIndex(const std::string& name) const;

  // Ground fluent atoms are numbered fluent by fluent (declaration order),
  // argument tuples in lexicographic object-declaration order.
  std::size_t AtomCount() const { return atom_count_; }
  std::size_t AtomIndex(const std::string& fluent,
                        const std::vector<std::string>& args) const;
  std::size_t AtomIndex(const GroundAtom& atom) const {
    return AtomIndex(atom.fluent, atom.args);
  }
  GroundAtom AtomAt(std::size_t index) const;
  std::vector<GroundAtom> GroundAtoms(const std::string& fluent) const;

  // All ground action terms in canonical order: declaration order of the
  // symbol, then lexicographic argument tuples.
  const std::vector<GroundAction>& GroundActions() const { return ground_actions_; }
  bool ActionLess(const GroundAction& a, const GroundAction& b) const;
  bool TraceLess(const Trace& a, const Trace& b) const;

  // Quantification domain of a sort, as ground terms.
  std::vector<Term> Domain(Sort sort) const;

  // Duplicate names across the three categories.
  std::vector<std::string> Problems() const;

  friend bool operator==(const Vocabulary& a, const Vocabulary& b) {
    return a.objects_ == b.objects_ && a.fluents_ == b.fluents_ &&
           a.actions_ == b.actions_;
  }

 private:
  std::vector<std::size_t> ArgIndices(const std::vector<std::string>& args) const;

  std::vector<std::string> objects_;
  std::vector<Signature> fluents_;
  std::vector<Signature> actions_;
  std::vector<std::size_t> fluent_offsets_;
  std::size_t atom_count_ = 0;
  std::vector<GroundAction> ground_actions_;
};

enum class FormulaKind {
  kTrue,
  kFalse,
  kAtom,
  kEqual,
  kNot,
  kAnd,
  kOr,
  kForall,
  kExists,
  kPoss,
  kAfter,
  kBox,
};

struct FormulaNode;

// Immutable formula tree with shared structure.
class Formula {
 public:
  Formula() = default;  // TrueConst

  static Formula True();
  static Formula False();
  static Formula Atom(std::string fluent, std::vector<Term> args = {});
  // Throws InvalidArgument when the terms have different sorts.
  static Formula Equal(Term lhs, Term rhs);
  static Formula NotEqual(Term lhs, Term rhs) { return Not(Equal(std::move(lhs), std::move(rhs))); }
  static Formula Not(Formula f);
  static Formula And(Formula lhs, Formula rhs);
  static Formula Or(Formula lhs, Formula rhs);
  static Formula Forall(Variable var, Formula body);
  static Formula Exists(Variable var, Formula body);
  // Throws InvalidArgument unless `action` has action sort.
  static Formula Poss(Term action);
  static Formula After(Term action, Formula body);
  static Formula Box(Formula body);

  // Left-nested conjunction/disjunction; empty input gives True/False.
  static Formula AndAll(const std::vector<Formula>& fs);
  static Formula OrAll(const std::vector<Formula>& fs);
  // [a1][a2]...[ak] body
  static Formula AfterTrace(const Trace& z, Formula body);

  FormulaKind kind() const;
  // Fluent symbol of an atom.
  const std::string& fluent() const;
  // Atom arguments, or {lhs, rhs} for equality, or {action} for Poss/After.
  const std::vector<Term>& terms() const;
  const Term& action() const { return terms().front(); }
  // Operand of Not/quantifier/After/Box, or left operand of And/Or.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& body() const { return lhs(); }
  const Variable& variable() const;

  bool is(FormulaKind k) const { return kind() == k; }
  bool SameNode(const Formula& other) const { return node_ == other.node_; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}

  // Null stands for TrueConst.
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  FormulaKind kind = FormulaKind::kTrue;
  std::string fluent;
  std::vector<Term> terms;
  Formula lhs_child;
  Formula rhs_child;
  Variable var;
};

std::set<Variable> FreeVars(const Formula& f);
bool IsSentence(const Formula& f);
// No After and no Box node.
bool IsStatic(const Formula& f);
bool MentionsPoss(const Formula& f);
std::size_t NodeCount(const Formula& f);

// Replaces the free occurrences of `v` by the ground term `t`. Throws
// InvalidArgument on a sort mismatch or a non-ground `t`.
Formula Substitute(const Formula& f, const Variable& v, const Term& t);

// Replaces every quantifier by the conjunction/disjunction of its instances
// over the vocabulary's finite domain.
Formula ExpandQuantifiers(const Vocabulary& vocab, const Formula& f);

// Declared symbols, arities and the free-variable bound. Returns one message
// per problem; empty means well-formed.
std::vector<std::string> WellFormednessProblems(
    const Vocabulary& vocab, const Formula& f,
    const std::vector<Variable>& allowed_free = {});

// DSL surface syntax; parses back to a structurally equal formula.
std::string ToString(const Formula& f);
std::ostream& operator<<(std::ostream& os, const Formula& f);
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Trace& z);

}  // namespace actcause
