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

#include "actcause/bs_chain.hpp"

#include <algorithm>
#include <stdexcept>

#include "actcause/error.hpp"
#include "actcause/regression.hpp"
#include "actcause/simplify.hpp"

namespace actcause {

std::vector<ActionSequencePair> CausalChain::pairs() const {
  std::vector<ActionSequencePair> out;
  out.reserve(links.size());
  for (const auto& l : links) out.push_back(l.pair);
  return out;
}

std::optional<ActionSequencePair> AchievementPair(const Evaluator& ev, const Trace& z,
                                                  const Formula& goal) {
  const std::size_t n = z.size();
  const Formula negated = Formula::Not(goal);
  std::vector<bool> holds(n + 1);
  std::vector<bool> fails(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    holds[k] = ev.Entails(z.Prefix(k), goal).entailed;
    fails[k] = ev.Entails(z.Prefix(k), negated).entailed;
  }
  std::optional<ActionSequencePair> found;
  bool persists = true;
  for (std::size_t i = n; i-- > 0;) {
    persists = persists && holds[i + 1];
    if (!persists) break;
    if (!fails[i]) continue;
    if (found) throw std::logic_error("achievement pair is not unique for goal " + ToString(goal));
    found = ActionSequencePair{z[i], z.Prefix(i)};
  }
  return found;
}

namespace {

void Accumulate(const Evaluator& ev, const Trace& z, const Formula& goal, std::size_t level,
                std::vector<ChainLink>& out) {
  auto pair = AchievementPair(ev, z, goal);
  if (!pair) return;
  const BasicActionTheory& bat = ev.theory();
  // Recursive goal: R[a', goal] & Poss(a'), kept static.
  Formula enabling =
      Simplify(Formula::And(RegressStep(bat, pair->action, goal), Formula::Poss(pair->action.ToTerm())));
  Accumulate(ev, pair->context, enabling, level + 1, out);
  out.push_back({*pair, level == 0 ? ChainClause::kDirect : ChainClause::kIndirect, level, goal});
}

}  // namespace

CausalChain BsChain(const CausalSetting& setting) {
  CausalChain chain;
  Accumulate(setting.evaluator(), setting.narrative(), setting.goal(), 0, chain.links);
  return chain;
}

std::vector<ActionSequencePair> ChainOf(const Trace& z) {
  std::vector<ActionSequencePair> out;
  out.reserve(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) out.push_back({z[i], z.Prefix(i)});
  return out;
}

Theorem1Report VerifyTheorem1(const CausalSetting& setting) {
  AchievementAnswer cause = AchievementCause(setting);
  if (cause.status != AchievementStatus::kFound) {
    throw InvalidArgument("the setting has no achievement cause");
  }
  Theorem1Report report;
  report.cause = cause.cause;
  report.bs_chain = BsChain(setting).pairs();
  report.chain = ChainOf(cause.cause);
  for (const auto& p : report.bs_chain) {
    if (std::find(report.chain.begin(), report.chain.end(), p) == report.chain.end()) {
      report.violations.push_back(p);
    }
  }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace actcause
