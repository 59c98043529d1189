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

// Counterfactual causes: minimal causes of a goal under three minimality
// orders, and achievement causes inside a narrative.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "actcause/evaluator.hpp"
#include "actcause/logic.hpp"

namespace actcause {

enum class MinimalityOrder { kLength, kFluent, kPlanAndEffect };

// Total orders offered on top of the plan-and-effect frontier.
enum class LexOrder { kFootprintThenLength, kLengthThenFootprint };

std::string ToString(MinimalityOrder order);
std::optional<MinimalityOrder> ParseMinimalityOrder(const std::string& text);

// Fluents whose successor state axioms mention an action symbol of z.
std::set<std::string> FluentFootprint(const BasicActionTheory& bat, const Trace& z);

struct RankedTrace {
  Trace trace;
  std::set<std::string> footprint;

  std::size_t footprint_size() const { return footprint.size(); }
  std::size_t length() const { return trace.size(); }
};

struct MinimalCauseOptions {
  MinimalityOrder order = MinimalityOrder::kLength;
  std::size_t horizon = 1;
  std::optional<LexOrder> lex;
  // Worker threads for goal checks within a search level.
  std::size_t jobs = 1;
  // Also return every achiever found within the horizon.
  bool keep_achievers = false;
};

enum class MinimalCauseStatus {
  kFound,
  kGoalNotInitiallyFalse,    // Sigma does not entail the negated goal
  kNoAchieverWithinHorizon,
};

struct MinimalCauseAnswer {
  MinimalCauseStatus status = MinimalCauseStatus::kFound;
  MinimalityOrder order = MinimalityOrder::kLength;
  std::optional<LexOrder> lex;
  std::size_t horizon = 0;
  bool base_holds = false;  // Sigma |= !goal
  std::size_t traces_examined = 0;
  std::vector<RankedTrace> causes;
  std::vector<RankedTrace> achievers;  // filled when keep_achievers is set
  std::string diagnostic;
};

// Executable traces within the horizon that make the goal entailed, reduced
// to the minimal ones under the chosen order. Achievers that contain another
// achiever as a proper subsequence are never minimal. Throws
// InvalidArgument for a zero horizon or a goal that is not a static
// sentence.
MinimalCauseAnswer MinimalCauses(const Evaluator& ev, const Formula& goal,
                                 const MinimalCauseOptions& options);

// Left-to-right pass over `suffix` keeping each action that is possible
// after base . kept-so-far.
Trace FilterTrace(const Evaluator& ev, const Trace& base, const Trace& suffix);

// <Sigma, z, phi> with Sigma |= exec(z) & [z]phi.
class CausalSetting {
 public:
  // Throws InvalidArgument when the goal is not a static sentence, the
  // narrative is not executable, or the goal is not entailed after it.
  CausalSetting(const Evaluator& ev, Trace narrative, Formula goal);

  const Evaluator& evaluator() const { return *ev_; }
  const Trace& narrative() const { return narrative_; }
  const Formula& goal() const { return goal_; }

 private:
  const Evaluator* ev_;
  Trace narrative_;
  Formula goal_;
};

struct PrefixReport {
  std::size_t length = 0;
  bool item1 = false;  // goal persists from this prefix to the end
  bool item2 = false;  // goal fails after the filtered remainder
  Trace filtered_remainder;
};

enum class AchievementStatus {
  kFound,
  kGoalInitiallyHolds,
  kNoCause,
};

struct AchievementAnswer {
  AchievementStatus status = AchievementStatus::kNoCause;
  Trace cause;
  Trace remainder;           // narrative minus the cause
  Trace filtered_remainder;  // FilterTrace(<>, remainder)
  std::vector<PrefixReport> prefixes;
  // Position sets of proper non-prefix subsequences of the cause that also
  // pass the persistence and filtered-counterfactual tests.
  std::vector<std::vector<std::size_t>> qualifying_subsequences;
  bool subsequence_check_skipped = false;
};

// Longest narrative prefix for which the subsequence re-check still runs.
inline constexpr std::size_t kMaxSubsequenceCheck = 16;

// The shortest narrative prefix after which the goal persists and whose
// filtered absence leaves the goal false.
AchievementAnswer AchievementCause(const CausalSetting& setting);

}  // namespace actcause
