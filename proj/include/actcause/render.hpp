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

// JSON rendering of engine results. Keys keep insertion order so output is
// byte-stable; traces are arrays of canonical action strings and formulas
// use the DSL surface syntax.
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "actcause/bs_chain.hpp"
#include "actcause/cause.hpp"
#include "actcause/evaluator.hpp"
#include "actcause/hp_model.hpp"
#include "actcause/regression.hpp"

namespace actcause {

using Json = nlohmann::ordered_json;

Json TraceJson(const Trace& z);
Json PairJson(const ActionSequencePair& p);

Json ToJson(const Verdict& v, const Vocabulary& vocab);
Json ToJson(const ExecReport& r);
Json ToJson(const RegressionResult& r);
Json ToJson(const MinimalCauseAnswer& a);
Json ToJson(const AchievementAnswer& a);
Json ToJson(const CausalChain& c);
// {"chain": [...]} for a plain pair list such as Chain(z).
Json ToJson(const std::vector<ActionSequencePair>& pairs);
Json ToJson(const Theorem1Report& r);
Json ToJson(const std::vector<hp::Cause>& causes);

std::string ToString(MinimalCauseStatus s);
std::string ToString(AchievementStatus s);
std::string ToString(ChainClause c);
std::string ToString(LexOrder l);

Json Envelope(const std::string& command, Json input, Json result,
              const std::vector<std::string>& diagnostics = {});

// Compact single line, or indented with `pretty`; always newline-terminated.
std::string Dump(const Json& j, bool pretty = false);

}  // namespace actcause
