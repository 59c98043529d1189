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

// Seeded generators for small random theories, sentences, traces, causal
// settings and boolean structural equation models. Used by the property
// tests, the acceptance suite and `verify-theorem1 --random`.
#pragma once

#include <cstddef>
#include <optional>
#include <random>

#include "actcause/evaluator.hpp"
#include "actcause/hp_model.hpp"
#include "actcause/logic.hpp"
#include "actcause/theory.hpp"

namespace actcause {

using Rng = std::mt19937_64;

struct RandomTheoryOptions {
  std::size_t max_objects = 3;
  std::size_t max_fluents = 4;
  std::size_t max_fluent_arity = 2;
  std::size_t max_actions = 3;
  std::size_t max_action_arity = 2;
};

// A valid closed theory over objects O1.., fluents F1.. and actions act1...
BasicActionTheory RandomTheory(Rng& rng, const RandomTheoryOptions& options = {});

// Static sentence with quantifiers, equality and (optionally) Poss atoms.
Formula RandomStaticSentence(Rng& rng, const Vocabulary& vocab, std::size_t depth = 3,
                             bool allow_poss = true);

// Random walk through actions possible in every initial state; stops early
// when nothing is possible.
Trace RandomExecutableTrace(Rng& rng, const Evaluator& ev, std::size_t max_length);

struct RandomSetting {
  BasicActionTheory theory;
  Trace narrative;
  Formula goal;
};

// A theory, a non-empty executable narrative and a goal that is entailed
// false initially and entailed true after the narrative.
RandomSetting RandomCausalSetting(Rng& rng, const RandomTheoryOptions& options = {},
                                  std::size_t max_narrative = 5);

// Boolean model with 1..max_endogenous endogenous variables X1.., one
// exogenous U_i per root variable, and a single context named "u".
hp::Model RandomBoolModel(Rng& rng, std::size_t max_endogenous = 5);

// Boolean query over the endogenous variables that holds in context "u".
hp::Expr RandomTrueQuery(Rng& rng, const hp::Model& m);

}  // namespace actcause
