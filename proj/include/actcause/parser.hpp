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

// Text front-end: theories, goals, narratives and structural equation
// models in one file.
//
//   file       := domainDecl { section }
//   domainDecl := "domain" "{" "objects:" names ";" "fluents:" sigs ";"
//                 "actions:" sigs ";" "}"
//   section    := poss | ssa | init | goal | narrative | hpmodel
//   poss       := "poss" action-pattern ":" formula ";"
//   ssa        := "ssa" fluent-pattern ":" formula ";"   (may use variable a)
//   init       := "init" ("closed"|"open") "{" { literal ";" } "}"
//   goal       := "goal" NAME ":" formula ";"
//   narrative  := "narrative" NAME ":" [ action { ";" action } ] ";"
//   hpmodel    := "hpmodel" NAME "{" { exo | endo | equation | context } "}"
//
// Signatures are written name/arity. Connectives: ! & | -> <-> = != and
// forall/exists x[: action]. body, [t] body, box body, Poss(t).
// Line comments start with //.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "actcause/error.hpp"
#include "actcause/hp_model.hpp"
#include "actcause/logic.hpp"
#include "actcause/theory.hpp"

namespace actcause {

struct SourceSpan {
  std::size_t start = 0;  // byte offsets, start <= end
  std::size_t end = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan span, std::string message, std::vector<std::string> expected = {});

  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourceSpan span_;
  std::string message_;
  std::vector<std::string> expected_;
};

struct Document {
  BasicActionTheory theory;
  std::vector<std::pair<std::string, Formula>> goals;
  std::vector<std::pair<std::string, Trace>> narratives;
  std::vector<hp::Model> hp_models;

  const Formula* FindGoal(const std::string& name) const;
  const Trace* FindNarrative(const std::string& name) const;
  const hp::Model* FindModel(const std::string& name) const;
};

// Parses and validates a whole file. Throws ParseError for lexical and
// syntactic problems and ValidationError for an invalid theory.
Document ParseDocument(std::string_view text);
BasicActionTheory ParseTheory(std::string_view text);

// Static sentence over the vocabulary.
Formula ParseGoal(std::string_view text, const Vocabulary& vocab);
// Any sentence, including [t] and box.
Formula ParseQuery(std::string_view text, const Vocabulary& vocab);
// Ground actions separated by ';' (a trailing ';' is allowed).
Trace ParseTrace(std::string_view text, const Vocabulary& vocab);
// Boolean combination of "X = x" events; a bare X means X = true.
hp::Expr ParseHpExpr(std::string_view text);

// DSL text that parses back to an equal theory.
std::string RenderTheory(const BasicActionTheory& bat);
std::string RenderTrace(const Trace& z);

}  // namespace actcause
