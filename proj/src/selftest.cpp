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

#include "actcause/selftest.hpp"

#include <functional>
#include <set>

#include "actcause/bs_chain.hpp"
#include "actcause/cause.hpp"
#include "actcause/fixtures.hpp"
#include "actcause/hp_model.hpp"
#include "actcause/parser.hpp"

namespace actcause {

namespace {

Trace T(const Vocabulary& v, const std::string& text) { return ParseTrace(text, v); }

std::string Show(const std::vector<RankedTrace>& ts) {
  std::string out = "{";
  for (std::size_t i = 0; i < ts.size(); ++i) out += (i ? ", " : "") + ts[i].trace.ToString();
  return out + "}";
}

std::string Show(const std::vector<ActionSequencePair>& ps) {
  std::string out = "{";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out += (i ? ", " : "") + std::string("<") + ps[i].action.ToString() + ", " +
           ps[i].context.ToString() + ">";
  }
  return out + "}";
}

std::string Show(const std::vector<hp::Cause>& cs) {
  std::string out = "{";
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out += i ? ", " : "";
    bool first = true;
    for (const auto& [k, v] : cs[i].conjuncts) {
      out += (first ? "" : " & ") + k + "=" + v;
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

std::vector<SelftestRow> RunSelftest() {
  std::vector<SelftestRow> rows;
  auto check = [&](const std::string& name, const std::function<std::string()>& body) {
    SelftestRow row{name, false, ""};
    try {
      row.detail = body();
      row.pass = row.detail.empty();
    } catch (const std::exception& e) {
      row.detail = std::string("exception: ") + e.what();
    }
    rows.push_back(std::move(row));
  };

  const Document& doc = BlocksWorld();
  const Evaluator ev(doc.theory);
  const Vocabulary& v = ev.vocabulary();
  auto goal = [&](const char* name) { return *doc.FindGoal(name); };

  check("entailment: pickup(C) then drop(C) breaks C", [&]() -> std::string {
    return ev.Entails(ParseQuery("[pickup(C)][drop(C)] Broken(C)", v)).entailed ? "" : "not entailed";
  });
  check("entailment: pickup(D) then quench(D) makes D fragile", [&]() -> std::string {
    return ev.Entails(ParseQuery("[pickup(D)][quench(D)] Fragile(D)", v)).entailed ? ""
                                                                                  : "not entailed";
  });

  auto minimal = [&](const char* name, const char* g, MinimalityOrder order,
                     std::vector<std::string> expected) {
    check(name, [&, g, order, expected]() -> std::string {
      MinimalCauseOptions opt;
      opt.order = order;
      opt.horizon = 5;
      auto ans = MinimalCauses(ev, goal(g), opt);
      std::set<Trace> got;
      for (const auto& c : ans.causes) got.insert(c.trace);
      std::set<Trace> want;
      for (const auto& e : expected) want.insert(T(v, e));
      return got == want ? "" : "got " + Show(ans.causes);
    });
  };
  minimal("minimal cause, length order: Broken(C)", "brokenC", MinimalityOrder::kLength,
          {"pickup(C); drop(C)"});
  minimal("minimal cause, length order: exists x. Holding(x)", "existsHolding",
          MinimalityOrder::kLength, {"pickup(C)", "pickup(D)"});
  minimal("minimal cause, fluent order: Broken(C) | Broken(D)", "brokenCorD",
          MinimalityOrder::kFluent, {"pickup(C); drop(C)"});
  minimal("minimal cause, plan-and-effect order: Broken(D)", "brokenD",
          MinimalityOrder::kPlanAndEffect, {"pickup(D); quench(D); drop(D)"});

  check("filter of the five-action narrative without pickup(C)", [&]() -> std::string {
    const Trace z = *doc.FindNarrative("breakBoth");
    const Trace got = FilterTrace(ev, Trace(), z.Without(z.Prefix(1)));
    return got == T(v, "pickup(D); quench(D); drop(D)") ? "" : "got " + got.ToString();
  });

  auto achievement = [&](const char* name, const char* g, const char* n, const char* cause,
                         const char* filtered) {
    check(name, [&, g, n, cause, filtered]() -> std::string {
      CausalSetting setting(ev, *doc.FindNarrative(n), goal(g));
      auto ans = AchievementCause(setting);
      if (ans.cause != T(v, cause)) return "cause " + ans.cause.ToString();
      if (ans.filtered_remainder != T(v, filtered)) {
        return "filtered remainder " + ans.filtered_remainder.ToString();
      }
      return "";
    });
  };
  achievement("achievement cause: Broken(C) after pickup(C), drop(C), pickup(D)", "brokenC",
              "dropCthenD", "pickup(C); drop(C)", "pickup(D)");
  achievement("achievement cause: Holding(C) | Holding(D) needs both pickups", "holdingCorD",
              "pickupBoth", "pickup(C); pickup(D)", "");
  achievement("achievement cause: Broken(C) | Broken(D) keeps the redundant pickup(D)",
              "brokenCorD", "breakBoth", "pickup(C); drop(C); pickup(D)", "");
  check("achievement cause: pickup(C) alone fails the counterfactual test", [&]() -> std::string {
    CausalSetting setting(ev, *doc.FindNarrative("pickupBoth"), goal("holdingCorD"));
    auto ans = AchievementCause(setting);
    if (ans.prefixes.size() < 2) return "missing prefix report";
    return ans.prefixes[1].item2 ? "counterfactual check passes for pickup(C) alone" : "";
  });

  check("achievement chain: Broken(C) | Holding(D)", [&]() -> std::string {
    CausalSetting setting(ev, *doc.FindNarrative("dropCthenD"), goal("brokenCorHoldingD"));
    auto pairs = BsChain(setting).pairs();
    std::vector<ActionSequencePair> want = {{GroundAction{"pickup", {"C"}}, Trace()},
                                            {GroundAction{"drop", {"C"}}, T(v, "pickup(C)")}};
    return pairs == want ? "" : "got " + Show(pairs);
  });
  check("Chain of the achievement cause adds pickup(D) only", [&]() -> std::string {
    CausalSetting setting(ev, *doc.FindNarrative("dropCthenD"), goal("brokenCorHoldingD"));
    auto report = VerifyTheorem1(setting);
    if (!report.holds) return "inclusion fails: " + Show(report.violations);
    std::set<ActionSequencePair> extra(report.chain.begin(), report.chain.end());
    for (const auto& p : report.bs_chain) extra.erase(p);
    std::set<ActionSequencePair> want = {
        {GroundAction{"pickup", {"D"}}, T(v, "pickup(C); drop(C)")}};
    return extra == want ? "" : "extra pairs " + Show(std::vector<ActionSequencePair>(extra.begin(), extra.end()));
  });

  auto hp_causes = [&](const char* name, const char* model, const char* query,
                       std::vector<hp::Valuation> expected) {
    check(name, [&, model, query, expected]() -> std::string {
      const hp::Model& m = *doc.FindModel(model);
      auto causes = hp::ActualCauses(m, m.contexts().front().second, ParseHpExpr(query));
      std::vector<hp::Valuation> got;
      for (const auto& c : causes) got.push_back(c.conjuncts);
      return got == expected ? "" : "got " + Show(causes);
    });
  };
  hp_causes("forest fire, disjunctive: MD & L together", "forest_fire_disjunctive", "FF",
            {{{"L", "true"}, {"MD", "true"}}});
  hp_causes("forest fire, conjunctive: MD and L each", "forest_fire_conjunctive", "FF",
            {{{"MD", "true"}}, {{"L", "true"}}});
  hp_causes("pickups without timing: PC & PD together", "pickup_untimed", "GL",
            {{{"PC", "true"}, {"PD", "true"}}});
  check("pickups with timing: PC is a cause of GL", [&]() -> std::string {
    const hp::Model& m = *doc.FindModel("pickup_temporal");
    auto causes = hp::ActualCauses(m, m.contexts().front().second, ParseHpExpr("GL"));
    for (const auto& c : causes) {
      if (c.conjuncts == hp::Valuation{{"PC", "true"}}) return "";
    }
    return "got " + Show(causes);
  });
  return rows;
}

}  // namespace actcause
