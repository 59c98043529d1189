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

#pragma once

#include <optional>

#include "actcause/logic.hpp"

namespace actcause {

// Decides t1 = t2 under unique names when the answer does not depend on
// the values of variables; nullopt otherwise.
std::optional<bool> DecideTermEquality(const Term& lhs, const Term& rhs);

struct SimplifyOptions {
  // Fold equalities decided by unique names to TrueConst/FalseConst.
  bool resolve_equalities = true;
};

// Equivalence-preserving cleanup: constant folding, unique-names equality
// resolution, double negation, idempotence, absorption and complementary
// literals between direct operands.
Formula Simplify(const Formula& f, const SimplifyOptions& options = {});

}  // namespace actcause
