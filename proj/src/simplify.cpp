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

#include "actcause/simplify.hpp"

namespace actcause {

std::optional<bool> DecideTermEquality(const Term& lhs, const Term& rhs) {
  if (lhs == rhs) return true;
  if (lhs.is_variable() || rhs.is_variable()) return std::nullopt;
  if (lhs.kind() != rhs.kind()) return false;
  if (lhs.kind() == Term::Kind::kName) return false;
  if (lhs.name() != rhs.name() || lhs.args().size() != rhs.args().size()) return false;
  bool all_equal = true;
  for (std::size_t i = 0; i < lhs.args().size(); ++i) {
    auto d = DecideTermEquality(lhs.args()[i], rhs.args()[i]);
    if (d == false) return false;
    if (!d) all_equal = false;
  }
  if (all_equal) return true;
  return std::nullopt;
}

namespace {

bool IsNegationOf(const Formula& a, const Formula& b) {
  return (a.is(FormulaKind::kNot) && a.lhs() == b) || (b.is(FormulaKind::kNot) && b.lhs() == a);
}

// `outer` is the operator being built (And or Or); `dual` the other one.
// Returns the absorbed result of l op r when one side absorbs the other.
std::optional<Formula> Absorb(FormulaKind dual, const Formula& l, const Formula& r) {
  if (r.is(dual) && (r.lhs() == l || r.rhs() == l)) return l;
  if (l.is(dual) && (l.lhs() == r || l.rhs() == r)) return r;
  return std::nullopt;
}

Formula SimplifyAnd(Formula l, Formula r) {
  if (l.is(FormulaKind::kFalse) || r.is(FormulaKind::kFalse)) return Formula::False();
  if (l.is(FormulaKind::kTrue)) return r;
  if (r.is(FormulaKind::kTrue)) return l;
  if (l == r) return l;
  if (IsNegationOf(l, r)) return Formula::False();
  if (auto a = Absorb(FormulaKind::kOr, l, r)) return *a;
  return Formula::And(std::move(l), std::move(r));
}

Formula SimplifyOr(Formula l, Formula r) {
  if (l.is(FormulaKind::kTrue) || r.is(FormulaKind::kTrue)) return Formula::True();
  if (l.is(FormulaKind::kFalse)) return r;
  if (r.is(FormulaKind::kFalse)) return l;
  if (l == r) return l;
  if (IsNegationOf(l, r)) return Formula::True();
  if (auto a = Absorb(FormulaKind::kAnd, l, r)) return *a;
  return Formula::Or(std::move(l), std::move(r));
}

}  // namespace

Formula Simplify(const Formula& f, const SimplifyOptions& options) {
  switch (f.kind()) {
    case FormulaKind::kTrue:
    case FormulaKind::kFalse:
    case FormulaKind::kAtom:
    case FormulaKind::kPoss:
      return f;
    case FormulaKind::kEqual: {
      if (!options.resolve_equalities) return f;
      auto d = DecideTermEquality(f.terms()[0], f.terms()[1]);
      if (!d) return f;
      return *d ? Formula::True() : Formula::False();
    }
    case FormulaKind::kNot: {
      Formula sub = Simplify(f.lhs(), options);
      if (sub.is(FormulaKind::kTrue)) return Formula::False();
      if (sub.is(FormulaKind::kFalse)) return Formula::True();
      if (sub.is(FormulaKind::kNot)) return sub.lhs();
      return Formula::Not(std::move(sub));
    }
    case FormulaKind::kAnd:
      return SimplifyAnd(Simplify(f.lhs(), options), Simplify(f.rhs(), options));
    case FormulaKind::kOr:
      return SimplifyOr(Simplify(f.lhs(), options), Simplify(f.rhs(), options));
    case FormulaKind::kForall:
    case FormulaKind::kExists: {
      Formula body = Simplify(f.body(), options);
      // Constant bodies fold regardless of the domain size.
      if (f.is(FormulaKind::kForall) && body.is(FormulaKind::kTrue)) return body;
      if (f.is(FormulaKind::kExists) && body.is(FormulaKind::kFalse)) return body;
      return f.is(FormulaKind::kForall) ? Formula::Forall(f.variable(), std::move(body))
                                        : Formula::Exists(f.variable(), std::move(body));
    }
    case FormulaKind::kAfter:
      return Formula::After(f.action(), Simplify(f.body(), options));
    case FormulaKind::kBox:
      return Formula::Box(Simplify(f.body(), options));
  }
  return f;
}

}  // namespace actcause
