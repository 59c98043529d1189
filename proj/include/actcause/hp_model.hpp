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

// Finite structural equation models and the modified Halpern-Pearl
// definition of actual cause.

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace actcause::hp {

// Variable name -> value label.
using Valuation = std::map<std::string, std::string>;

// Boolean combination of primitive events "X = x".
class Expr {
 public:
  enum class Kind { kTrue, kFalse, kIs, kNot, kAnd, kOr };

  static Expr True();
  static Expr False();
  static Expr Is(std::string var, std::string value);
  static Expr Not(Expr e);
  static Expr And(Expr l, Expr r);
  static Expr Or(Expr l, Expr r);

  Kind kind() const { return kind_; }
  const std::string& var() const { return var_; }
  const std::string& value() const { return value_; }
  const Expr& lhs() const { return children_->first; }
  const Expr& rhs() const { return children_->second; }

  // Throws InvalidArgument when a mentioned variable is unassigned.
  bool Eval(const Valuation& v) const;
  void CollectVariables(std::vector<std::string>& out) const;
  std::string ToString() const;

 private:
  Kind kind_ = Kind::kTrue;
  std::string var_;
  std::string value_;
  std::shared_ptr<const std::pair<Expr, Expr>> children_;
};

struct VariableDecl {
  std::string name;
  std::vector<std::string> range;
};

inline const std::vector<std::string> kBoolRange = {"false", "true"};

// First matching case wins; `otherwise` covers the rest.
struct Equation {
  std::vector<std::pair<Expr, std::string>> cases;
  std::optional<std::string> otherwise;

  // Boolean variable defined by a boolean expression.
  static Equation FromBool(Expr e) { return Equation{{{std::move(e), "true"}}, "false"}; }
  static Equation Constant(std::string value) { return Equation{{}, std::move(value)}; }

  std::optional<std::string> Eval(const Valuation& v) const;
};

class Model {
 public:
  // Throws InvalidArgument on undeclared or duplicate variables, empty or
  // repeated range values, out-of-range values, missing or partial
  // equations, or cyclic dependencies.
  Model(std::string name, std::vector<VariableDecl> exogenous, std::vector<VariableDecl> endogenous,
        std::map<std::string, Equation> equations,
        std::vector<std::pair<std::string, Valuation>> contexts = {});

  const std::string& name() const { return name_; }
  const std::vector<VariableDecl>& exogenous() const { return exogenous_; }
  const std::vector<VariableDecl>& endogenous() const { return endogenous_; }
  const Equation& equation(const std::string& var) const { return equations_.at(var); }
  const std::vector<std::pair<std::string, Valuation>>& contexts() const { return contexts_; }
  const Valuation* FindContext(const std::string& name) const;

  const VariableDecl* Find(const std::string& var) const;
  bool IsEndogenous(const std::string& var) const;
  // Endogenous variables whose values `var`'s equation reads.
  const std::vector<std::string>& Parents(const std::string& var) const { return parents_.at(var); }
  // A dependency-respecting order of the endogenous variables.
  const std::vector<std::string>& order() const { return order_; }

  // Throws InvalidArgument unless `context` assigns every exogenous
  // variable a value in its range and nothing else.
  void CheckContext(const Valuation& context) const;

 private:
  std::string name_;
  std::vector<VariableDecl> exogenous_;
  std::vector<VariableDecl> endogenous_;
  std::map<std::string, Equation> equations_;
  std::vector<std::pair<std::string, Valuation>> contexts_;
  std::map<std::string, std::vector<std::string>> parents_;
  std::vector<std::string> order_;
};

// Context plus all endogenous values, evaluated in dependency order.
Valuation Solve(const Model& m, const Valuation& context);
// Same, in a caller-supplied order; throws InvalidArgument unless the order
// is a permutation of the endogenous variables respecting dependencies.
Valuation SolveInOrder(const Model& m, const Valuation& context,
                       const std::vector<std::string>& order);

// Replaces the equations of the intervened variables by constants.
Model Intervene(const Model& m, const Valuation& intervention);

// (M, u) |= [Y <- y] query
bool Holds(const Model& m, const Valuation& context, const Valuation& intervention,
           const Expr& query);

struct Witness {
  Valuation frozen;        // W = w, at their actual values
  Valuation alternative;   // x'
};

struct Cause {
  Valuation conjuncts;  // X = x, at their actual values
  Witness witness;
};

struct CauseSearchOptions {
  // Consider the variables the query mentions as candidate causes too.
  bool include_query_variables = false;
};

// Condition 2: some W outside X frozen at actual values and some x' make
// the query false. Returns the first witness (W by size, then x') found.
std::optional<Witness> FindWitness(const Model& m, const Valuation& context,
                                   const Valuation& conjuncts, const Expr& query);

// All minimal conjunctions of actual events with a witness, by increasing
// size. Throws InvalidArgument when the query is false in (M, u).
std::vector<Cause> ActualCauses(const Model& m, const Valuation& context, const Expr& query,
                                const CauseSearchOptions& options = {});

}  // namespace actcause::hp
