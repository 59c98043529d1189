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

// Regression: rewriting a query about the future into an equivalent static
// query about the current state.

#pragma once

#include <cstddef>

#include "actcause/logic.hpp"
#include "actcause/theory.hpp"

namespace actcause {

struct RegressionResult {
  Formula formula;
  std::size_t step_count = 0;
  std::size_t size_before = 0;
  std::size_t size_after = 0;
};

// One step backwards through `action`: quantifiers are grounded over the
// finite domain, each fluent atom is replaced by its successor state axiom
// instance and each Poss atom by the regressed precondition. Throws
// InvalidArgument on a non-static or open formula.
Formula RegressStep(const BasicActionTheory& bat, const GroundAction& action, const Formula& f);

// R[z, f]: right-to-left fold of RegressStep over z. Remaining Poss atoms
// are replaced by their precondition axioms, so the result never mentions
// Poss; regress(<>, f) = f for Poss-free f.
RegressionResult Regress(const BasicActionTheory& bat, const Trace& z, const Formula& f);

// Replaces every Poss(t) by the precondition axiom instance for t.
Formula EliminatePoss(const BasicActionTheory& bat, const Formula& f);

}  // namespace actcause
