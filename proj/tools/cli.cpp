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

#include "cli.hpp"

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "actcause/bs_chain.hpp"
#include "actcause/cause.hpp"
#include "actcause/error.hpp"
#include "actcause/evaluator.hpp"
#include "actcause/hp_model.hpp"
#include "actcause/parser.hpp"
#include "actcause/random.hpp"
#include "actcause/regression.hpp"
#include "actcause/render.hpp"
#include "actcause/selftest.hpp"

namespace actcause {

namespace {

constexpr int kOk = 0;
constexpr int kNoAnswer = 1;
constexpr int kInputError = 2;

// Bad command-line input that is not a parse or validation error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parse error inside a command-line argument rather than the input file.
struct ArgParseError {
  std::string origin;
  ParseError error;
};

struct Options {
  std::string input;
  std::string mode;
  bool pretty = false;
  std::string goal;
  std::string narrative;
  std::string trace;
  std::string query;
  std::string order = "length";
  std::size_t horizon = 0;
  std::string lex;
  bool all = false;
  std::size_t jobs = 1;
  std::size_t random = 0;
  std::uint64_t seed = 1;
  std::string model;
  std::string hp_query;
  std::string context;
  bool include_query_vars = false;
};

std::size_t CompletionCap() {
  const char* env = std::getenv("ACTCAUSE_OPEN_MODE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCompletionCap;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(env, &used);
    if (used != std::string(env).size() || v == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(std::string("ACTCAUSE_OPEN_MODE_CAP must be a positive integer, got '") +
                     env + "'");
  }
}

template <typename F>
auto InArgument(const std::string& origin, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw ArgParseError{origin, e};
  }
}

class Session {
 public:
  explicit Session(const Options& opt) : opt_(opt) {
    if (opt.input.empty()) throw UsageError("missing input file (-i)");
    std::ifstream in(opt.input, std::ios::binary);
    if (!in) throw UsageError("cannot read input file " + opt.input);
    std::stringstream buf;
    buf << in.rdbuf();
    doc_ = ParseDocument(buf.str());
    BasicActionTheory bat = doc_.theory;
    if (opt.mode == "open") {
      bat = bat.WithInitialMode(InitialMode::kOpen);
    } else if (opt.mode == "closed") {
      bat = bat.WithInitialMode(InitialMode::kClosed);
    } else if (!opt.mode.empty()) {
      throw UsageError("--mode must be 'closed' or 'open'");
    }
    ev_ = std::make_unique<Evaluator>(std::move(bat), CompletionCap());
    input_["file"] = opt.input;
    input_["mode"] = ev_->theory().initial().mode == InitialMode::kClosed ? "closed" : "open";
  }

  const Document& doc() const { return doc_; }
  const Evaluator& ev() const { return *ev_; }
  const Vocabulary& vocab() const { return ev_->vocabulary(); }
  Json& input() { return input_; }

  Formula Goal() {
    if (opt_.goal.empty()) throw UsageError("missing --goal");
    Formula g;
    if (const Formula* named = doc_.FindGoal(opt_.goal)) {
      g = *named;
      input_["goalName"] = opt_.goal;
    } else {
      g = InArgument("--goal", [&] { return ParseGoal(opt_.goal, vocab()); });
    }
    input_["goal"] = ToString(g);
    return g;
  }

  // --narrative NAME or --trace TEXT; empty trace when neither is given
  // unless `required`.
  Trace Narrative(bool required) {
    if (!opt_.narrative.empty() && !opt_.trace.empty()) {
      throw UsageError("--narrative and --trace are mutually exclusive");
    }
    Trace z;
    if (!opt_.narrative.empty()) {
      const Trace* named = doc_.FindNarrative(opt_.narrative);
      if (named == nullptr) throw UsageError("no narrative named " + opt_.narrative);
      z = *named;
      input_["narrativeName"] = opt_.narrative;
    } else if (!opt_.trace.empty()) {
      z = InArgument("--trace", [&] { return ParseTrace(opt_.trace, vocab()); });
    } else if (required) {
      throw UsageError("missing --narrative or --trace");
    }
    input_["narrative"] = TraceJson(z);
    return z;
  }

 private:
  const Options& opt_;
  Document doc_;
  std::unique_ptr<Evaluator> ev_;
  Json input_ = Json::object();
};

int Emit(std::ostream& out, const Options& opt, const std::string& command, Json input, Json result,
         int code) {
  out << Dump(Envelope(command, std::move(input), std::move(result)), opt.pretty);
  return code;
}

int RunCheck(const Options& opt, std::ostream& out) {
  Session s(opt);
  const Trace z = s.Narrative(false);
  const Formula q = InArgument("query", [&] { return ParseQuery(opt.query, s.vocab()); });
  s.input()["query"] = ToString(q);
  return Emit(out, opt, "check", s.input(), ToJson(s.ev().Entails(z, q), s.vocab()), kOk);
}

int RunExec(const Options& opt, std::ostream& out) {
  Session s(opt);
  const Trace z = s.Narrative(true);
  return Emit(out, opt, "exec", s.input(), ToJson(s.ev().Executable(z)), kOk);
}

int RunRegress(const Options& opt, std::ostream& out) {
  Session s(opt);
  Formula f;
  if (!opt.query.empty()) {
    if (!opt.goal.empty()) throw UsageError("give either a formula or --goal, not both");
    f = InArgument("query", [&] { return ParseQuery(opt.query, s.vocab()); });
    s.input()["query"] = ToString(f);
  } else {
    f = s.Goal();
  }
  // Leading [t] operators extend the trace: R[z.t1..tn, body].
  Trace z = s.Narrative(false);
  while (f.is(FormulaKind::kAfter) && f.action().ground()) {
    z = z.Then(GroundAction::FromTerm(f.action()));
    f = Formula(f.body());
  }
  if (!IsStatic(f)) throw UsageError("regress needs [t1]...[tn] followed by a static formula");
  return Emit(out, opt, "regress", s.input(), ToJson(Regress(s.ev().theory(), z, f)), kOk);
}

int RunMinimalCause(const Options& opt, std::ostream& out) {
  Session s(opt);
  const Formula g = s.Goal();
  MinimalCauseOptions mo;
  auto order = ParseMinimalityOrder(opt.order);
  if (!order) throw UsageError("--order must be length, fluent or plan-effect");
  mo.order = *order;
  if (opt.horizon == 0) throw UsageError("--horizon must be at least 1");
  mo.horizon = opt.horizon;
  if (!opt.lex.empty()) {
    if (opt.lex == "footprint,length") {
      mo.lex = LexOrder::kFootprintThenLength;
    } else if (opt.lex == "length,footprint") {
      mo.lex = LexOrder::kLengthThenFootprint;
    } else {
      throw UsageError("--lex must be footprint,length or length,footprint");
    }
  }
  mo.jobs = opt.jobs == 0 ? 1 : opt.jobs;
  mo.keep_achievers = opt.all;
  s.input()["order"] = opt.order;
  s.input()["horizon"] = opt.horizon;
  const MinimalCauseAnswer ans = MinimalCauses(s.ev(), g, mo);
  return Emit(out, opt, "minimal-cause", s.input(), ToJson(ans),
              ans.status == MinimalCauseStatus::kFound ? kOk : kNoAnswer);
}

int RunAchievementCause(const Options& opt, std::ostream& out) {
  Session s(opt);
  const Formula g = s.Goal();
  const Trace z = s.Narrative(true);
  const CausalSetting setting(s.ev(), z, g);
  const AchievementAnswer ans = AchievementCause(setting);
  return Emit(out, opt, "achievement-cause", s.input(), ToJson(ans),
              ans.status == AchievementStatus::kFound ? kOk : kNoAnswer);
}

int RunBsChain(const Options& opt, std::ostream& out) {
  Session s(opt);
  const Formula g = s.Goal();
  const Trace z = s.Narrative(true);
  const CausalSetting setting(s.ev(), z, g);
  return Emit(out, opt, "bs-chain", s.input(), ToJson(BsChain(setting)), kOk);
}

int RunChain(const Options& opt, std::ostream& out) {
  Session s(opt);
  const Trace z = s.Narrative(true);
  return Emit(out, opt, "chain", s.input(), ToJson(ChainOf(z)), kOk);
}

int RunVerifyTheorem1(const Options& opt, std::ostream& out) {
  if (opt.random == 0) {
    Session s(opt);
    const Formula g = s.Goal();
    const Trace z = s.Narrative(true);
    const CausalSetting setting(s.ev(), z, g);
    const Theorem1Report report = VerifyTheorem1(setting);
    return Emit(out, opt, "verify-theorem1", s.input(), ToJson(report),
                report.holds ? kOk : kNoAnswer);
  }
  Rng rng(opt.seed);
  Json failures = Json::array();
  for (std::size_t i = 0; i < opt.random; ++i) {
    const RandomSetting rs = RandomCausalSetting(rng);
    std::string problem;
    Json detail;
    try {
      const Evaluator ev(rs.theory);
      const CausalSetting setting(ev, rs.narrative, rs.goal);
      const Theorem1Report report = VerifyTheorem1(setting);
      if (!report.holds) {
        problem = "inclusion violated";
        detail = ToJson(report);
      }
    } catch (const std::logic_error& e) {
      problem = e.what();
    }
    if (!problem.empty()) {
      failures.push_back(Json{{"index", i},
                              {"problem", problem},
                              {"theory", RenderTheory(rs.theory)},
                              {"narrative", TraceJson(rs.narrative)},
                              {"goal", ToString(rs.goal)},
                              {"report", detail}});
    }
  }
  Json input{{"random", opt.random}, {"seed", opt.seed}};
  Json result{{"settings", opt.random}, {"violations", failures.size()}, {"failures", failures}};
  return Emit(out, opt, "verify-theorem1", std::move(input), std::move(result),
              failures.empty() ? kOk : kNoAnswer);
}

int RunHpCause(const Options& opt, std::ostream& out) {
  Session s(opt);
  if (opt.model.empty()) throw UsageError("missing --model");
  const hp::Model* m = s.doc().FindModel(opt.model);
  if (m == nullptr) throw UsageError("no hpmodel named " + opt.model);
  if (m->contexts().empty() && opt.context.empty()) {
    throw UsageError("model " + opt.model + " declares no context");
  }
  std::string ctx_name = opt.context.empty() ? m->contexts().front().first : opt.context;
  const hp::Valuation* ctx = m->FindContext(ctx_name);
  if (ctx == nullptr) throw UsageError("no context named " + ctx_name + " in " + opt.model);
  if (opt.hp_query.empty()) throw UsageError("missing --query");
  const hp::Expr q = InArgument("--query", [&] { return ParseHpExpr(opt.hp_query); });
  hp::CauseSearchOptions co;
  co.include_query_variables = opt.include_query_vars;
  const auto causes = hp::ActualCauses(*m, *ctx, q, co);
  Json input{{"file", opt.input}, {"model", opt.model}, {"context", ctx_name},
             {"query", q.ToString()}};
  Json result = ToJson(causes);
  result["actual"] = hp::Solve(*m, *ctx);
  return Emit(out, opt, "hp-cause", std::move(input), std::move(result),
              causes.empty() ? kNoAnswer : kOk);
}

int RunSelftestCommand(const Options& opt, std::ostream& out) {
  const auto rows = RunSelftest();
  std::size_t failed = 0;
  if (opt.pretty) {
    Json j = Json::array();
    for (const auto& r : rows) j.push_back(Json{{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    out << Dump(Envelope("selftest", Json::object(), j), true);
    for (const auto& r : rows) failed += r.pass ? 0 : 1;
    return failed == 0 ? kOk : kNoAnswer;
  }
  for (const auto& r : rows) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.pass) {
      out << "  -- " << r.detail;
      ++failed;
    }
    out << "\n";
  }
  out << (rows.size() - failed) << "/" << rows.size() << " passed\n";
  return failed == 0 ? kOk : kNoAnswer;
}

void AddCommon(CLI::App* cmd, Options& opt) {
  cmd->add_option("-i,--input", opt.input, "Theory file");
  cmd->add_option("--mode", opt.mode, "Override the initial mode (closed|open)");
  cmd->add_flag("--pretty", opt.pretty, "Indented output");
}

void AddSetting(CLI::App* cmd, Options& opt) {
  cmd->add_option("--goal", opt.goal, "Goal name from the file, or a goal formula");
  cmd->add_option("--narrative", opt.narrative, "Narrative name from the file");
  cmd->add_option("--trace", opt.trace, "Narrative given inline, e.g. \"pickup(C); drop(C)\"");
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Counterfactual causes in basic action theories", "actcause"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "Entailment of a query after an optional narrative");
  AddCommon(check, opt);
  AddSetting(check, opt);
  check->add_option("query", opt.query, "Query formula")->required();

  auto* exec = app.add_subcommand("exec", "Executability report for a narrative");
  AddCommon(exec, opt);
  AddSetting(exec, opt);

  auto* regress = app.add_subcommand("regress", "Regress a query to a formula about the initial state");
  AddCommon(regress, opt);
  AddSetting(regress, opt);
  regress->add_option("query", opt.query, "Static formula (instead of --goal)");

  auto* minimal = app.add_subcommand("minimal-cause", "Minimal causes of a goal");
  AddCommon(minimal, opt);
  AddSetting(minimal, opt);
  minimal->add_option("--order", opt.order, "length | fluent | plan-effect");
  minimal->add_option("--horizon", opt.horizon, "Longest trace considered")->required();
  minimal->add_option("--lex", opt.lex, "footprint,length | length,footprint (plan-effect only)");
  minimal->add_flag("--all", opt.all, "Also list every achiever within the horizon");
  minimal->add_option("--jobs", opt.jobs, "Worker threads");

  auto* achievement = app.add_subcommand("achievement-cause", "Achievement cause in a narrative");
  AddCommon(achievement, opt);
  AddSetting(achievement, opt);

  auto* bs = app.add_subcommand("bs-chain", "Achievement causal chain of a narrative");
  AddCommon(bs, opt);
  AddSetting(bs, opt);

  auto* chain = app.add_subcommand("chain", "All (action, context) pairs of a narrative");
  AddCommon(chain, opt);
  AddSetting(chain, opt);

  auto* thm = app.add_subcommand("verify-theorem1",
                                 "Check that the chain lies within the achievement cause");
  AddCommon(thm, opt);
  AddSetting(thm, opt);
  thm->add_option("--random", opt.random, "Check this many random settings instead");
  thm->add_option("--seed", opt.seed, "Seed for --random");

  auto* hpc = app.add_subcommand("hp-cause", "Actual causes in a structural equation model");
  AddCommon(hpc, opt);
  hpc->add_option("--model", opt.model, "Model name")->required();
  hpc->add_option("--query", opt.hp_query, "Query, e.g. \"FF = true\"")->required();
  hpc->add_option("--context", opt.context, "Context name (default: first declared)");
  hpc->add_flag("--include-query-vars", opt.include_query_vars,
                "Allow variables mentioned in the query as causes");

  auto* self = app.add_subcommand("selftest", "Run the built-in fixture checks");
  self->add_flag("--pretty", opt.pretty, "JSON table instead of text");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    if (command == "check") return RunCheck(opt, out);
    if (command == "exec") return RunExec(opt, out);
    if (command == "regress") return RunRegress(opt, out);
    if (command == "minimal-cause") return RunMinimalCause(opt, out);
    if (command == "achievement-cause") return RunAchievementCause(opt, out);
    if (command == "bs-chain") return RunBsChain(opt, out);
    if (command == "chain") return RunChain(opt, out);
    if (command == "verify-theorem1") return RunVerifyTheorem1(opt, out);
    if (command == "hp-cause") return RunHpCause(opt, out);
    if (command == "selftest") return RunSelftestCommand(opt, out);
  } catch (const ArgParseError& e) {
    err << e.origin << ":" << e.error.span().column << ": error: " << e.error.message() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    err << opt.input << ":" << e.span().line << ":" << e.span().column
        << ": error: " << e.message() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    for (const auto& v : e.violations()) err << opt.input << ": error: " << v << "\n";
    return kInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  err << "error: unknown command " << command << "\n";
  return kInputError;
}

}  // namespace actcause
