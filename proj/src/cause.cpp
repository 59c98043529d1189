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

#include "actcause/cause.hpp"

#include <algorithm>
#include <thread>

#include "actcause/error.hpp"
#include "actcause/theory.hpp"

namespace actcause {

std::string ToString(MinimalityOrder order) {
  switch (order) {
    case MinimalityOrder::kLength:
      return "length";
    case MinimalityOrder::kFluent:
      return "fluent";
    case MinimalityOrder::kPlanAndEffect:
      return "plan-effect";
  }
  return "";
}

std::optional<MinimalityOrder> ParseMinimalityOrder(const std::string& text) {
  if (text == "length") return MinimalityOrder::kLength;
  if (text == "fluent") return MinimalityOrder::kFluent;
  if (text == "plan-effect") return MinimalityOrder::kPlanAndEffect;
  return std::nullopt;
}

std::set<std::string> FluentFootprint(const BasicActionTheory& bat, const Trace& z) {
  std::set<std::string> symbols;
  for (const auto& act : z) symbols.insert(act.symbol);
  std::set<std::string> out;
  for (const auto& sym : symbols) {
    auto fluents = AffectedFluents(bat, sym);
    out.insert(fluents.begin(), fluents.end());
  }
  return out;
}

namespace {

void RequireGoal(const Vocabulary& vocab, const Formula& goal) {
  if (!IsStatic(goal)) throw InvalidArgument("goal must be static: " + ToString(goal));
  auto problems = WellFormednessProblems(vocab, goal);
  if (!problems.empty()) throw InvalidArgument("ill-formed goal: " + problems.front());
}

// True if some proper, non-empty subsequence of z is in `achievers`.
bool HasAchievingSubsequence(const Trace& z, const std::set<Trace>& achievers) {
  const std::size_t n = z.size();
  if (n > 20) throw InvalidArgument("trace too long for the subsequence check");
  const std::size_t full = (std::size_t{1} << n) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::vector<GroundAction> kept;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) kept.push_back(z[i]);
    }
    if (achievers.count(Trace(std::move(kept)))) return true;
  }
  return false;
}

struct Candidate {
  Trace trace;
  std::vector<State> states;
};

std::vector<bool> CheckGoal(const Evaluator& ev, const Formula& goal,
                            const std::vector<Candidate>& candidates, std::size_t jobs) {
  std::vector<char> result(candidates.size(), 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto& states = candidates[i].states;
      result[i] = std::all_of(states.begin(), states.end(),
                              [&](const State& s) { return ev.EvalStatic(s, goal); });
    }
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, candidates.size()));
  if (jobs == 1) {
    work(0, candidates.size());
  } else {
    std::vector<std::thread> workers;
    const std::size_t chunk = (candidates.size() + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < candidates.size(); begin += chunk) {
      workers.emplace_back(work, begin, std::min(candidates.size(), begin + chunk));
    }
    for (auto& w : workers) w.join();
  }
  return {result.begin(), result.end()};
}

bool Dominates(const RankedTrace& a, const RankedTrace& b) {
  return a.footprint_size() <= b.footprint_size() && a.length() <= b.length() &&
         (a.footprint_size() < b.footprint_size() || a.length() < b.length());
}

}  // namespace

MinimalCauseAnswer MinimalCauses(const Evaluator& ev, const Formula& goal,
                                 const MinimalCauseOptions& options) {
  if (options.horizon == 0) throw InvalidArgument("horizon must be at least 1");
  if (options.lex && options.order != MinimalityOrder::kPlanAndEffect) {
    throw InvalidArgument("a lexicographic order only applies to plan-effect minimality");
  }
  RequireGoal(ev.vocabulary(), goal);

  MinimalCauseAnswer answer;
  answer.order = options.order;
  answer.lex = options.lex;
  answer.horizon = options.horizon;
  answer.base_holds = ev.Entails(Formula::Not(goal)).entailed;
  if (!answer.base_holds) {
    answer.status = MinimalCauseStatus::kGoalNotInitiallyFalse;
    answer.diagnostic = "the theory does not entail the negated goal initially";
    return answer;
  }

  std::vector<Candidate> candidates;
  ev.ForEachExecutable(options.horizon, [&](const Trace& z, const std::vector<State>& states) {
    if (!z.empty()) candidates.push_back({z, states});
    return true;
  });
  answer.traces_examined = candidates.size();
  const std::vector<bool> achieves = CheckGoal(ev, goal, candidates, options.jobs);

  std::vector<RankedTrace> achievers;
  std::set<Trace> achiever_set;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (!achieves[i]) continue;
    achiever_set.insert(candidates[i].trace);
    achievers.push_back({candidates[i].trace, FluentFootprint(ev.theory(), candidates[i].trace)});
  }
  if (achievers.empty()) {
    answer.status = MinimalCauseStatus::kNoAchieverWithinHorizon;
    answer.diagnostic = "no executable trace of length <= " + std::to_string(options.horizon) +
                        " achieves the goal";
    return answer;
  }
  if (options.keep_achievers) answer.achievers = achievers;

  std::vector<RankedTrace> pool;
  for (auto& a : achievers) {
    if (!HasAchievingSubsequence(a.trace, achiever_set)) pool.push_back(std::move(a));
  }

  auto keep_min = [&pool](auto key) {
    auto best = key(*std::min_element(pool.begin(), pool.end(),
                                      [&](const auto& x, const auto& y) { return key(x) < key(y); }));
    std::erase_if(pool, [&](const RankedTrace& r) { return key(r) != best; });
  };
  switch (options.order) {
    case MinimalityOrder::kLength:
      keep_min([](const RankedTrace& r) { return r.length(); });
      break;
    case MinimalityOrder::kFluent:
      keep_min([](const RankedTrace& r) { return r.footprint_size(); });
      break;
    case MinimalityOrder::kPlanAndEffect: {
      std::vector<RankedTrace> frontier;
      for (const auto& r : pool) {
        const bool dominated = std::any_of(pool.begin(), pool.end(),
                                           [&](const RankedTrace& o) { return Dominates(o, r); });
        if (!dominated) frontier.push_back(r);
      }
      pool = std::move(frontier);
      if (options.lex == LexOrder::kFootprintThenLength) {
        keep_min([](const RankedTrace& r) { return std::pair(r.footprint_size(), r.length()); });
      } else if (options.lex == LexOrder::kLengthThenFootprint) {
        keep_min([](const RankedTrace& r) { return std::pair(r.length(), r.footprint_size()); });
      }
      break;
    }
  }
  answer.causes = std::move(pool);
  return answer;
}

Trace FilterTrace(const Evaluator& ev, const Trace& base, const Trace& suffix) {
  std::vector<State> states;
  for (const auto& s0 : ev.initial_states()) states.push_back(ev.Progress(s0, base));
  std::vector<GroundAction> kept;
  for (const auto& act : suffix) {
    const bool possible = std::all_of(states.begin(), states.end(),
                                      [&](const State& s) { return ev.Possible(s, act); });
    if (!possible) continue;
    kept.push_back(act);
    for (auto& s : states) s = ev.Successor(s, act);
  }
  return Trace(std::move(kept));
}

CausalSetting::CausalSetting(const Evaluator& ev, Trace narrative, Formula goal)
    : ev_(&ev), narrative_(std::move(narrative)), goal_(std::move(goal)) {
  RequireGoal(ev.vocabulary(), goal_);
  for (const auto& act : narrative_) {
    const Signature* sig = ev.vocabulary().FindAction(act.symbol);
    if (!sig || sig->arity != act.args.size()) {
      throw InvalidArgument("narrative action " + act.ToString() + " is not declared");
    }
  }
  ExecReport exec = ev.Executable(narrative_);
  if (!exec.executable) {
    throw InvalidArgument("narrative is not executable: step " +
                          std::to_string(*exec.failing_step) + " (" +
                          exec.failing_action->ToString() + ") is impossible");
  }
  if (!ev.Entails(narrative_, goal_).entailed) {
    throw InvalidArgument("goal does not hold after the narrative");
  }
}

AchievementAnswer AchievementCause(const CausalSetting& setting) {
  const Evaluator& ev = setting.evaluator();
  const Trace& z = setting.narrative();
  const Formula& goal = setting.goal();
  const Formula negated = Formula::Not(goal);

  AchievementAnswer answer;
  if (!ev.Entails(negated).entailed) {
    answer.status = AchievementStatus::kGoalInitiallyHolds;
    return answer;
  }

  const std::size_t n = z.size();
  // persists[m]: goal entailed after every prefix of length >= m.
  std::vector<bool> persists(n + 2, true);
  for (std::size_t m = n + 1; m-- > 0;) {
    persists[m] = persists[m + 1] && ev.Entails(z.Prefix(m), goal).entailed;
  }

  std::optional<std::size_t> found;
  for (std::size_t m = 0; m <= n; ++m) {
    PrefixReport report;
    report.length = m;
    report.item1 = persists[m];
    report.filtered_remainder = FilterTrace(ev, Trace(), z.Without(z.Prefix(m)));
    report.item2 = ev.Entails(report.filtered_remainder, negated).entailed;
    if (report.item1 && report.item2 && !found) found = m;
    answer.prefixes.push_back(std::move(report));
  }
  if (!found) {
    answer.status = AchievementStatus::kNoCause;
    return answer;
  }

  answer.status = AchievementStatus::kFound;
  answer.cause = z.Prefix(*found);
  answer.remainder = z.Without(answer.cause);
  answer.filtered_remainder = answer.prefixes[*found].filtered_remainder;

  const std::size_t len = *found;
  if (len > kMaxSubsequenceCheck) {
    answer.subsequence_check_skipped = true;
    return answer;
  }
  const std::size_t full = (std::size_t{1} << len) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    // Prefix position sets are covered by the shortest-first scan.
    if (((mask + 1) & mask) == 0) continue;
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < len; ++i) {
      if (mask & (std::size_t{1} << i)) positions.push_back(i);
    }
    if (!persists[positions.back() + 1]) continue;
    std::vector<GroundAction> rest;
    for (std::size_t i = 0; i < n; ++i) {
      if (i >= len || !(mask & (std::size_t{1} << i))) rest.push_back(z[i]);
    }
    Trace filtered = FilterTrace(ev, Trace(), Trace(std::move(rest)));
    if (ev.Entails(filtered, negated).entailed) answer.qualifying_subsequences.push_back(positions);
  }
  return answer;
}

}  // namespace actcause
