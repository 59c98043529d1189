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

#include "actcause/render.hpp"

namespace actcause {

Json TraceJson(const Trace& z) {
  Json out = Json::array();
  for (const auto& act : z) out.push_back(act.ToString());
  return out;
}

Json PairJson(const ActionSequencePair& p) {
  return Json{{"action", p.action.ToString()}, {"context", TraceJson(p.context)}};
}

std::string ToString(MinimalCauseStatus s) {
  switch (s) {
    case MinimalCauseStatus::kFound:
      return "found";
    case MinimalCauseStatus::kGoalNotInitiallyFalse:
      return "goal-not-initially-false";
    case MinimalCauseStatus::kNoAchieverWithinHorizon:
      return "no-achiever-within-horizon";
  }
  return "";
}

std::string ToString(AchievementStatus s) {
  switch (s) {
    case AchievementStatus::kFound:
      return "found";
    case AchievementStatus::kGoalInitiallyHolds:
      return "goal-initially-holds";
    case AchievementStatus::kNoCause:
      return "no-cause";
  }
  return "";
}

std::string ToString(ChainClause c) { return c == ChainClause::kDirect ? "direct" : "indirect"; }

std::string ToString(LexOrder l) {
  return l == LexOrder::kFootprintThenLength ? "footprint,length" : "length,footprint";
}

Json ToJson(const Verdict& v, const Vocabulary& vocab) {
  Json out{{"entailed", v.entailed}};
  if (v.counter_model) out["counterModel"] = v.counter_model->TrueAtoms(vocab);
  return out;
}

Json ToJson(const ExecReport& r) {
  Json out{{"executable", r.executable}};
  if (r.failing_step) out["failingStep"] = *r.failing_step;
  if (r.failing_action) out["failingAction"] = r.failing_action->ToString();
  return out;
}

Json ToJson(const RegressionResult& r) {
  return Json{{"formula", ToString(r.formula)},
              {"steps", r.step_count},
              {"sizeBefore", r.size_before},
              {"sizeAfter", r.size_after}};
}

namespace {

Json Ranked(const std::vector<RankedTrace>& ts, Json& coordinates) {
  Json traces = Json::array();
  coordinates = Json::array();
  for (const auto& t : ts) {
    traces.push_back(TraceJson(t.trace));
    coordinates.push_back(Json{{"footprint", t.footprint},
                               {"footprintSize", t.footprint_size()},
                               {"length", t.length()}});
  }
  return traces;
}

}  // namespace

Json ToJson(const MinimalCauseAnswer& a) {
  Json out{{"status", ToString(a.status)},
           {"order", ToString(a.order)},
           {"lex", a.lex ? Json(ToString(*a.lex)) : Json(nullptr)},
           {"horizon", a.horizon},
           {"baseHolds", a.base_holds},
           {"tracesExamined", a.traces_examined}};
  Json coords;
  out["causes"] = Ranked(a.causes, coords);
  out["coordinates"] = coords;
  if (!a.achievers.empty()) {
    Json acoords;
    out["achievers"] = Ranked(a.achievers, acoords);
    out["achieverCoordinates"] = acoords;
  }
  if (!a.diagnostic.empty()) out["diagnostic"] = a.diagnostic;
  return out;
}

Json ToJson(const AchievementAnswer& a) {
  Json out{{"status", ToString(a.status)},
           {"cause", TraceJson(a.cause)},
           {"filteredRemainder", TraceJson(a.filtered_remainder)},
           {"remainder", TraceJson(a.remainder)}};
  Json prefixes = Json::array();
  for (const auto& p : a.prefixes) {
    prefixes.push_back(Json{{"length", p.length},
                            {"item1", p.item1},
                            {"item2", p.item2},
                            {"filteredRemainder", TraceJson(p.filtered_remainder)}});
  }
  out["prefixes"] = prefixes;
  out["qualifyingSubsequences"] = a.qualifying_subsequences;
  out["subsequenceCheckSkipped"] = a.subsequence_check_skipped;
  return out;
}

Json ToJson(const CausalChain& c) {
  Json links = Json::array();
  for (const auto& l : c.links) {
    Json j = PairJson(l.pair);
    j["clause"] = ToString(l.clause);
    j["level"] = l.level;
    j["goal"] = ToString(l.goal);
    links.push_back(std::move(j));
  }
  return Json{{"chain", links}};
}

Json ToJson(const std::vector<ActionSequencePair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back(PairJson(p));
  return Json{{"chain", out}};
}

Json ToJson(const Theorem1Report& r) {
  auto list = [](const std::vector<ActionSequencePair>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(PairJson(p));
    return out;
  };
  return Json{{"holds", r.holds},
              {"cause", TraceJson(r.cause)},
              {"bsChain", list(r.bs_chain)},
              {"chain", list(r.chain)},
              {"violations", list(r.violations)}};
}

Json ToJson(const std::vector<hp::Cause>& causes) {
  Json out = Json::array();
  for (const auto& c : causes) {
    out.push_back(Json{{"conjuncts", c.conjuncts},
                       {"witness", Json{{"frozen", c.witness.frozen},
                                        {"alternative", c.witness.alternative}}}});
  }
  return Json{{"causes", out}};
}

Json Envelope(const std::string& command, Json input, Json result,
              const std::vector<std::string>& diagnostics) {
  return Json{{"command", command},
              {"input", std::move(input)},
              {"result", std::move(result)},
              {"diagnostics", diagnostics}};
}

std::string Dump(const Json& j, bool pretty) { return j.dump(pretty ? 2 : -1) + "\n"; }

}  // namespace actcause
