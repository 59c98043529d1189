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

// Achievement causal chains: recursive direct/indirect achievement causes
// inside a narrative, the set Chain(z) of all (action, context) pairs of a
// trace, and the inclusion check between the two.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "actcause/cause.hpp"
#include "actcause/evaluator.hpp"
#include "actcause/logic.hpp"

namespace actcause {

// `action` executed right after `context`.
struct ActionSequencePair {
  GroundAction action;
  Trace context;

  friend auto operator<=>(const ActionSequencePair&, const ActionSequencePair&) = default;
};

enum class ChainClause {
  kDirect,    // the pair achieves the original goal
  kIndirect,  // the pair achieves the enabling goal of a later pair
};

struct ChainLink {
  ActionSequencePair pair;
  ChainClause clause = ChainClause::kDirect;
  // Recursion depth at which the pair was found; 0 is the original goal.
  std::size_t level = 0;
  Formula goal;
};

struct CausalChain {
  // Innermost level first, so the direct cause comes last.
  std::vector<ChainLink> links;

  std::vector<ActionSequencePair> pairs() const;
};

// The position where `goal` turns from entailed-false to entailed-true and
// stays entailed through every longer prefix of z. Absent when no such
// position exists. Throws std::logic_error if two positions qualify.
std::optional<ActionSequencePair> AchievementPair(const Evaluator& ev, const Trace& z,
                                                  const Formula& goal);
inline std::optional<ActionSequencePair> AchievementPair(const CausalSetting& setting) {
  return AchievementPair(setting.evaluator(), setting.narrative(), setting.goal());
}

CausalChain BsChain(const CausalSetting& setting);

// All pairs <a', z'> with z'.a' a prefix of z, in narrative order.
std::vector<ActionSequencePair> ChainOf(const Trace& z);

struct Theorem1Report {
  bool holds = false;
  Trace cause;
  std::vector<ActionSequencePair> bs_chain;
  std::vector<ActionSequencePair> chain;
  std::vector<ActionSequencePair> violations;
};

// Checks that every chain pair lies in Chain(achievement cause). Throws
// InvalidArgument when the setting has no achievement cause.
Theorem1Report VerifyTheorem1(const CausalSetting& setting);

}  // namespace actcause
