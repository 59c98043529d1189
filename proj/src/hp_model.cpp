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

#include "actcause/hp_model.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "actcause/error.hpp"

namespace actcause::hp {

// ---------------------------------------------------------------------------
// Expressions

Expr Expr::True() { return Expr(); }

Expr Expr::False() {
  Expr e;
  e.kind_ = Kind::kFalse;
  return e;
}

Expr Expr::Is(std::string var, std::string value) {
  Expr e;
  e.kind_ = Kind::kIs;
  e.var_ = std::move(var);
  e.value_ = std::move(value);
  return e;
}

Expr Expr::Not(Expr sub) {
  Expr e;
  e.kind_ = Kind::kNot;
  e.children_ = std::make_shared<const std::pair<Expr, Expr>>(std::move(sub), Expr());
  return e;
}

Expr Expr::And(Expr l, Expr r) {
  Expr e;
  e.kind_ = Kind::kAnd;
  e.children_ = std::make_shared<const std::pair<Expr, Expr>>(std::move(l), std::move(r));
  return e;
}

Expr Expr::Or(Expr l, Expr r) {
  Expr e;
  e.kind_ = Kind::kOr;
  e.children_ = std::make_shared<const std::pair<Expr, Expr>>(std::move(l), std::move(r));
  return e;
}

bool Expr::Eval(const Valuation& v) const {
  switch (kind_) {
    case Kind::kTrue:
      return true;
    case Kind::kFalse:
      return false;
    case Kind::kIs: {
      auto it = v.find(var_);
      if (it == v.end()) throw InvalidArgument("variable " + var_ + " has no value");
      return it->second == value_;
    }
    case Kind::kNot:
      return !lhs().Eval(v);
    case Kind::kAnd:
      return lhs().Eval(v) && rhs().Eval(v);
    case Kind::kOr:
      return lhs().Eval(v) || rhs().Eval(v);
  }
  return false;
}

void Expr::CollectVariables(std::vector<std::string>& out) const {
  switch (kind_) {
    case Kind::kIs:
      if (std::find(out.begin(), out.end(), var_) == out.end()) out.push_back(var_);
      return;
    case Kind::kNot:
      lhs().CollectVariables(out);
      return;
    case Kind::kAnd:
    case Kind::kOr:
      lhs().CollectVariables(out);
      rhs().CollectVariables(out);
      return;
    default:
      return;
  }
}

namespace {

int Level(const Expr& e) {
  switch (e.kind()) {
    case Expr::Kind::kOr:
      return 2;
    case Expr::Kind::kAnd:
      return 3;
    case Expr::Kind::kNot:
      return 4;
    default:
      return 5;
  }
}

std::string Wrap(const Expr& e, bool parens) {
  return parens ? "(" + e.ToString() + ")" : e.ToString();
}

}  // namespace

std::string Expr::ToString() const {
  switch (kind_) {
    case Kind::kTrue:
      return "true";
    case Kind::kFalse:
      return "false";
    case Kind::kIs:
      return var_ + " = " + value_;
    case Kind::kNot:
      return "!" + Wrap(lhs(), Level(lhs()) < 4);
    case Kind::kAnd:
    case Kind::kOr: {
      const int level = Level(*this);
      return Wrap(lhs(), Level(lhs()) < level) + (kind_ == Kind::kAnd ? " & " : " | ") +
             Wrap(rhs(), Level(rhs()) <= level);
    }
  }
  return "";
}

std::optional<std::string> Equation::Eval(const Valuation& v) const {
  for (const auto& [cond, value] : cases) {
    if (cond.Eval(v)) return value;
  }
  return otherwise;
}

// ---------------------------------------------------------------------------
// Models

namespace {

bool InRange(const VariableDecl& d, const std::string& value) {
  return std::find(d.range.begin(), d.range.end(), value) != d.range.end();
}

void CheckExprAgainst(const Model& m, const Expr& e, const std::string& where) {
  switch (e.kind()) {
    case Expr::Kind::kIs: {
      const VariableDecl* d = m.Find(e.var());
      if (!d) throw InvalidArgument(where + ": undeclared variable " + e.var());
      if (!InRange(*d, e.value())) {
        throw InvalidArgument(where + ": value " + e.value() + " not in the range of " + e.var());
      }
      return;
    }
    case Expr::Kind::kNot:
      CheckExprAgainst(m, e.lhs(), where);
      return;
    case Expr::Kind::kAnd:
    case Expr::Kind::kOr:
      CheckExprAgainst(m, e.lhs(), where);
      CheckExprAgainst(m, e.rhs(), where);
      return;
    default:
      return;
  }
}

// Calls `visit` with every assignment of the listed variables.
void ForEachAssignment(const Model& m, const std::vector<std::string>& vars,
                       const std::function<void(const Valuation&)>& visit) {
  Valuation v;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == vars.size()) {
      visit(v);
      return;
    }
    for (const auto& value : m.Find(vars[i])->range) {
      v[vars[i]] = value;
      rec(i + 1);
    }
  };
  rec(0);
}

}  // namespace

Model::Model(std::string name, std::vector<VariableDecl> exogenous,
             std::vector<VariableDecl> endogenous, std::map<std::string, Equation> equations,
             std::vector<std::pair<std::string, Valuation>> contexts)
    : name_(std::move(name)),
      exogenous_(std::move(exogenous)),
      endogenous_(std::move(endogenous)),
      equations_(std::move(equations)),
      contexts_(std::move(contexts)) {
  const std::string where = "model " + name_;
  std::set<std::string> names;
  for (const auto* group : {&exogenous_, &endogenous_}) {
    for (const auto& d : *group) {
      if (!names.insert(d.name).second) throw InvalidArgument(where + ": duplicate variable " + d.name);
      if (d.range.empty()) throw InvalidArgument(where + ": variable " + d.name + " has an empty range");
      std::set<std::string> values(d.range.begin(), d.range.end());
      if (values.size() != d.range.size()) {
        throw InvalidArgument(where + ": variable " + d.name + " repeats a range value");
      }
    }
  }
  for (const auto& [var, eq] : equations_) {
    if (!IsEndogenous(var)) {
      throw InvalidArgument(where + ": equation for non-endogenous variable " + var);
    }
  }
  for (const auto& d : endogenous_) {
    auto it = equations_.find(d.name);
    if (it == equations_.end()) throw InvalidArgument(where + ": variable " + d.name + " has no equation");
    const Equation& eq = it->second;
    const std::string ctx = where + ", equation of " + d.name;
    std::vector<std::string> inputs;
    for (const auto& [cond, value] : eq.cases) {
      CheckExprAgainst(*this, cond, ctx);
      if (!InRange(d, value)) throw InvalidArgument(ctx + ": value " + value + " out of range");
      cond.CollectVariables(inputs);
    }
    if (eq.otherwise && !InRange(d, *eq.otherwise)) {
      throw InvalidArgument(ctx + ": value " + *eq.otherwise + " out of range");
    }
    if (!eq.otherwise) {
      bool total = true;
      ForEachAssignment(*this, inputs, [&](const Valuation& v) {
        if (total && !eq.Eval(v)) total = false;
      });
      if (!total) throw InvalidArgument(ctx + ": equation is not total");
    }
    auto& parents = parents_[d.name];
    for (const auto& in : inputs) {
      if (IsEndogenous(in)) parents.push_back(in);
    }
  }

  // Kahn's algorithm; ties resolved by declaration order.
  std::set<std::string> placed;
  while (order_.size() < endogenous_.size()) {
    bool progress = false;
    for (const auto& d : endogenous_) {
      if (placed.count(d.name)) continue;
      const auto& ps = parents_[d.name];
      if (std::all_of(ps.begin(), ps.end(), [&](const std::string& p) { return placed.count(p) > 0; })) {
        order_.push_back(d.name);
        placed.insert(d.name);
        progress = true;
        break;
      }
    }
    if (!progress) throw InvalidArgument(where + ": dependencies are cyclic");
  }

  for (const auto& [cname, ctx] : contexts_) CheckContext(ctx);
}

const Valuation* Model::FindContext(const std::string& name) const {
  for (const auto& [cname, ctx] : contexts_) {
    if (cname == name) return &ctx;
  }
  return nullptr;
}

const VariableDecl* Model::Find(const std::string& var) const {
  for (const auto* group : {&exogenous_, &endogenous_}) {
    for (const auto& d : *group) {
      if (d.name == var) return &d;
    }
  }
  return nullptr;
}

bool Model::IsEndogenous(const std::string& var) const {
  return std::any_of(endogenous_.begin(), endogenous_.end(),
                     [&](const VariableDecl& d) { return d.name == var; });
}

void Model::CheckContext(const Valuation& context) const {
  for (const auto& d : exogenous_) {
    auto it = context.find(d.name);
    if (it == context.end()) throw InvalidArgument("context leaves " + d.name + " unassigned");
    if (!InRange(d, it->second)) {
      throw InvalidArgument("context value " + it->second + " not in the range of " + d.name);
    }
  }
  for (const auto& [var, value] : context) {
    const VariableDecl* d = Find(var);
    if (!d || IsEndogenous(var)) throw InvalidArgument("context assigns non-exogenous variable " + var);
  }
}

Valuation SolveInOrder(const Model& m, const Valuation& context,
                       const std::vector<std::string>& order) {
  m.CheckContext(context);
  std::set<std::string> seen;
  for (const auto& var : order) {
    if (!m.IsEndogenous(var) || !seen.insert(var).second) {
      throw InvalidArgument("solve order is not a permutation of the endogenous variables");
    }
    for (const auto& p : m.Parents(var)) {
      if (!seen.count(p) || p == var) {
        throw InvalidArgument("solve order puts " + var + " before its input " + p);
      }
    }
  }
  if (seen.size() != m.endogenous().size()) {
    throw InvalidArgument("solve order is not a permutation of the endogenous variables");
  }
  Valuation v = context;
  for (const auto& var : order) v[var] = *m.equation(var).Eval(v);
  return v;
}

Valuation Solve(const Model& m, const Valuation& context) {
  return SolveInOrder(m, context, m.order());
}

Model Intervene(const Model& m, const Valuation& intervention) {
  std::map<std::string, Equation> equations;
  for (const auto& d : m.endogenous()) equations.emplace(d.name, m.equation(d.name));
  for (const auto& [var, value] : intervention) {
    const VariableDecl* d = m.Find(var);
    if (!d || !m.IsEndogenous(var)) throw InvalidArgument("cannot intervene on non-endogenous " + var);
    if (!InRange(*d, value)) throw InvalidArgument("value " + value + " not in the range of " + var);
    equations[var] = Equation::Constant(value);
  }
  return Model(m.name(), m.exogenous(), m.endogenous(), std::move(equations), m.contexts());
}

bool Holds(const Model& m, const Valuation& context, const Valuation& intervention,
           const Expr& query) {
  CheckExprAgainst(m, query, "query");
  return query.Eval(Solve(Intervene(m, intervention), context));
}

// ---------------------------------------------------------------------------
// Actual causes

namespace {

// Calls `visit` with each size-k subset of `items` in lexicographic index
// order; stops when `visit` returns true.
bool ForEachSubset(const std::vector<std::string>& items, std::size_t k,
                   const std::function<bool(const std::vector<std::string>&)>& visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > items.size()) return false;
  while (true) {
    std::vector<std::string> subset;
    for (std::size_t i : idx) subset.push_back(items[i]);
    if (visit(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<Witness> FindWitness(const Model& m, const Valuation& context,
                                   const Valuation& conjuncts, const Expr& query) {
  const Valuation actual = Solve(m, context);
  std::vector<std::string> xs;
  for (const auto& [var, value] : conjuncts) xs.push_back(var);
  std::vector<std::string> rest;
  for (const auto& d : m.endogenous()) {
    if (!conjuncts.count(d.name)) rest.push_back(d.name);
  }
  std::optional<Witness> found;
  for (std::size_t k = 0; k <= rest.size() && !found; ++k) {
    ForEachSubset(rest, k, [&](const std::vector<std::string>& w_vars) {
      Valuation frozen;
      for (const auto& w : w_vars) frozen[w] = actual.at(w);
      ForEachAssignment(m, xs, [&](const Valuation& alternative) {
        if (found || alternative == conjuncts) return;
        Valuation iv = frozen;
        iv.insert(alternative.begin(), alternative.end());
        if (!Holds(m, context, iv, query)) found = Witness{frozen, alternative};
      });
      return found.has_value();
    });
  }
  return found;
}

std::vector<Cause> ActualCauses(const Model& m, const Valuation& context, const Expr& query,
                                const CauseSearchOptions& options) {
  CheckExprAgainst(m, query, "query");
  const Valuation actual = Solve(m, context);
  if (!query.Eval(actual)) throw InvalidArgument("query is false in the actual context");

  std::vector<std::string> query_vars;
  query.CollectVariables(query_vars);
  std::vector<std::string> candidates;
  for (const auto& d : m.endogenous()) {
    const bool in_query = std::find(query_vars.begin(), query_vars.end(), d.name) != query_vars.end();
    if (!in_query || options.include_query_variables) candidates.push_back(d.name);
  }

  std::vector<Cause> causes;
  for (std::size_t k = 1; k <= candidates.size(); ++k) {
    ForEachSubset(candidates, k, [&](const std::vector<std::string>& xs) {
      // A found cause inside xs makes xs non-minimal.
      for (const auto& c : causes) {
        const bool inside = std::all_of(c.conjuncts.begin(), c.conjuncts.end(), [&](const auto& kv) {
          return std::find(xs.begin(), xs.end(), kv.first) != xs.end();
        });
        if (inside) return false;
      }
      Valuation conjuncts;
      for (const auto& x : xs) conjuncts[x] = actual.at(x);
      if (auto w = FindWitness(m, context, conjuncts, query)) {
        causes.push_back({std::move(conjuncts), std::move(*w)});
      }
      return false;
    });
  }
  return causes;
}

}  // namespace actcause::hp
