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

#include "actcause/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>

namespace actcause {

ParseError::ParseError(SourceSpan span, std::string message, std::vector<std::string> expected)
    : Error(std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + message),
      span_(span),
      message_(std::move(message)),
      expected_(std::move(expected)) {}

const Formula* Document::FindGoal(const std::string& name) const {
  for (const auto& [n, g] : goals) {
    if (n == name) return &g;
  }
  return nullptr;
}

const Trace* Document::FindNarrative(const std::string& name) const {
  for (const auto& [n, z] : narratives) {
    if (n == name) return &z;
  }
  return nullptr;
}

const hp::Model* Document::FindModel(const std::string& name) const {
  for (const auto& m : hp_models) {
    if (m.name() == name) return &m;
  }
  return nullptr;
}

namespace {

// ---------------------------------------------------------------------------
// Lexer

enum class TokenKind { kIdent, kNumber, kPunct, kEnd };

struct Token {
  TokenKind kind;
  std::string text;
  SourceSpan span;
};

const std::vector<std::string> kPuncts = {"<->", "->", ":=", "!=", "{", "}", "(", ")", "[", "]",
                                          ";",   ":",  ",",  ".",  "=", "!", "&", "|", "/"};

const std::set<std::string> kReserved = {
    "domain", "poss",   "ssa",   "init",    "goal",    "narrative", "hpmodel", "forall",
    "exists", "box",    "true",  "false",   "Poss",    "closed",    "open",    "objects",
    "fluents", "actions", "exo", "endo",    "context", "case",      "else",    "bool",
    "action", "object"};

std::vector<Token> Lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 2) == "//") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    SourceSpan span{i, i, line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      std::string word(text.substr(i, j - i));
      advance(j - i);
      span.end = i;
      out.push_back({TokenKind::kIdent, std::move(word), span});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      std::string num(text.substr(i, j - i));
      advance(j - i);
      span.end = i;
      out.push_back({TokenKind::kNumber, std::move(num), span});
      continue;
    }
    bool matched = false;
    for (const auto& p : kPuncts) {
      if (text.substr(i, p.size()) == p) {
        advance(p.size());
        span.end = i;
        out.push_back({TokenKind::kPunct, p, span});
        matched = true;
        break;
      }
    }
    if (!matched) {
      span.end = i + 1;
      throw ParseError(span, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({TokenKind::kEnd, "", SourceSpan{text.size(), text.size(), line, col}});
  return out;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lex(text)) {}

  void set_vocabulary(const Vocabulary* vocab) { vocab_ = vocab; }

  Document ParseFile();
  Formula ParseSentence();
  Trace ParseTraceList();
  hp::Expr ParseHpExprOnly();

  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  bool AtEnd() const { return Peek().kind == TokenKind::kEnd; }
  void ExpectEnd() {
    if (!AtEnd()) Fail("unexpected '" + Peek().text + "'", {"end of input"});
  }

  [[noreturn]] void Fail(const std::string& message, std::vector<std::string> expected = {}) const {
    throw ParseError(Peek().span, message, std::move(expected));
  }
  [[noreturn]] void FailAt(const Token& tok, const std::string& message) const {
    throw ParseError(tok.span, message);
  }

 private:
  bool IsPunct(const std::string& p, std::size_t ahead = 0) const {
    return Peek(ahead).kind == TokenKind::kPunct && Peek(ahead).text == p;
  }
  bool IsWord(const std::string& w, std::size_t ahead = 0) const {
    return Peek(ahead).kind == TokenKind::kIdent && Peek(ahead).text == w;
  }
  bool Accept(const std::string& p) {
    if (IsPunct(p) || IsWord(p)) {
      ++pos_;
      return true;
    }
    return false;
  }
  const Token& Expect(const std::string& p) {
    if (!IsPunct(p) && !IsWord(p)) {
      Fail("expected '" + p + "'" + (AtEnd() ? "" : ", got '" + Peek().text + "'"), {p});
    }
    return tokens_[pos_++];
  }
  const Token& ExpectIdent(const std::string& what) {
    if (Peek().kind != TokenKind::kIdent) Fail("expected " + what, {what});
    return tokens_[pos_++];
  }
  const Token& ExpectName(const std::string& what) {
    const Token& tok = ExpectIdent(what);
    if (kReserved.count(tok.text)) FailAt(tok, "'" + tok.text + "' is a reserved word");
    return tok;
  }

  // Declarations
  void ParseDomain();
  std::vector<Signature> ParseSigList();
  std::vector<Variable> ParseParams(const std::string& owner, std::size_t arity);
  void ParsePoss();
  void ParseSsa();
  void ParseInit();
  void ParseGoalDecl();
  void ParseNarrativeDecl();
  void ParseHpModel();
  GroundAction ParseGroundAction();

  // Formulas
  Formula ParseFormula();
  Formula ParseIff();
  Formula ParseImplies();
  Formula ParseOr();
  Formula ParseAnd();
  Formula ParseUnary();
  Formula ParseQuantified();
  Formula ParsePrimary();
  Term ParseTerm();
  const Variable* Lookup(const std::string& name) const;
  void CheckBindable(const Token& tok) const;

  // HP expressions
  hp::Expr ParseHpOr();
  hp::Expr ParseHpAnd();
  hp::Expr ParseHpUnary();

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Vocabulary* vocab_ = nullptr;
  std::vector<Variable> scope_;

  // File-level accumulation
  Vocabulary file_vocab_;
  std::optional<InitialTheory> initial_;
  std::vector<PreconditionClause> preconditions_;
  std::vector<SuccessorStateAxiom> ssas_;
  Document doc_;
  std::set<std::string> section_names_;
};

// --- File -------------------------------------------------------------------

Document Parser::ParseFile() {
  if (!IsWord("domain")) Fail("expected 'domain'", {"domain"});
  ParseDomain();
  vocab_ = &file_vocab_;
  while (!AtEnd()) {
    if (IsWord("poss")) {
      ParsePoss();
    } else if (IsWord("ssa")) {
      ParseSsa();
    } else if (IsWord("init")) {
      ParseInit();
    } else if (IsWord("goal")) {
      ParseGoalDecl();
    } else if (IsWord("narrative")) {
      ParseNarrativeDecl();
    } else if (IsWord("hpmodel")) {
      ParseHpModel();
    } else {
      Fail("expected a section, got '" + Peek().text + "'",
           {"poss", "ssa", "init", "goal", "narrative", "hpmodel"});
    }
  }
  doc_.theory = BasicActionTheory(file_vocab_, initial_.value_or(InitialTheory{}),
                                  std::move(preconditions_), std::move(ssas_));
  RequireValid(doc_.theory);
  return std::move(doc_);
}

std::vector<Signature> Parser::ParseSigList() {
  std::vector<Signature> out;
  if (IsPunct(";")) return out;
  do {
    const Token& name = ExpectName("symbol name");
    Expect("/");
    if (Peek().kind != TokenKind::kNumber) Fail("expected arity", {"number"});
    out.push_back({name.text, std::stoul(tokens_[pos_++].text)});
  } while (Accept(","));
  return out;
}

void Parser::ParseDomain() {
  Expect("domain");
  Expect("{");
  Expect("objects");
  Expect(":");
  std::vector<std::string> objects;
  if (!IsPunct(";")) {
    do {
      objects.push_back(ExpectName("object name").text);
    } while (Accept(","));
  }
  Expect(";");
  Expect("fluents");
  Expect(":");
  auto fluents = ParseSigList();
  Expect(";");
  Expect("actions");
  Expect(":");
  auto actions = ParseSigList();
  Expect(";");
  Expect("}");
  file_vocab_ = Vocabulary(std::move(objects), std::move(fluents), std::move(actions));
}

void Parser::CheckBindable(const Token& tok) const {
  if (kReserved.count(tok.text) && tok.text != "a") FailAt(tok, "'" + tok.text + "' is a reserved word");
  if (vocab_ && (vocab_->ObjectIndex(tok.text) || vocab_->FindFluent(tok.text) ||
                 vocab_->FindAction(tok.text))) {
    FailAt(tok, "variable " + tok.text + " clashes with a declared symbol");
  }
}

std::vector<Variable> Parser::ParseParams(const std::string& owner, std::size_t arity) {
  std::vector<Variable> params;
  if (Accept("(")) {
    if (!IsPunct(")")) {
      do {
        const Token& tok = ExpectIdent("parameter");
        CheckBindable(tok);
        if (tok.text == kActionVariable.name) FailAt(tok, "parameter name a is reserved");
        params.push_back({tok.text, Sort::kObject});
      } while (Accept(","));
    }
    Expect(")");
  }
  (void)owner;
  (void)arity;
  return params;
}

void Parser::ParsePoss() {
  Expect("poss");
  const Token& name = ExpectName("action name");
  PreconditionClause clause;
  clause.action = name.text;
  clause.params = ParseParams(name.text, 0);
  Expect(":");
  scope_ = clause.params;
  clause.condition = ParseFormula();
  scope_.clear();
  Expect(";");
  preconditions_.push_back(std::move(clause));
}

void Parser::ParseSsa() {
  Expect("ssa");
  const Token& name = ExpectName("fluent name");
  SuccessorStateAxiom ssa;
  ssa.fluent = name.text;
  ssa.params = ParseParams(name.text, 0);
  Expect(":");
  scope_ = ssa.params;
  scope_.push_back(kActionVariable);
  ssa.rhs = ParseFormula();
  scope_.clear();
  Expect(";");
  ssas_.push_back(std::move(ssa));
}

void Parser::ParseInit() {
  const Token& kw = Expect("init");
  if (initial_) FailAt(kw, "duplicate init section");
  InitialTheory init;
  if (Accept("closed")) {
    init.mode = InitialMode::kClosed;
  } else if (Accept("open")) {
    init.mode = InitialMode::kOpen;
  } else {
    Fail("expected 'closed' or 'open'", {"closed", "open"});
  }
  Expect("{");
  while (!IsPunct("}")) {
    std::vector<Variable> bound;
    while (Accept("forall")) {
      do {
        const Token& tok = ExpectIdent("variable");
        CheckBindable(tok);
        bound.push_back({tok.text, Sort::kObject});
      } while (Accept(","));
      Expect(".");
    }
    const bool positive = !Accept("!");
    const Token& fl = ExpectName("fluent name");
    struct Arg {
      std::string text;
      bool is_var;
      Token tok;
    };
    std::vector<Arg> args;
    if (Accept("(")) {
      if (!IsPunct(")")) {
        do {
          const Token& tok = ExpectIdent("argument");
          const bool is_var = std::any_of(bound.begin(), bound.end(),
                                          [&](const Variable& v) { return v.name == tok.text; });
          if (!is_var && !vocab_->ObjectIndex(tok.text)) {
            FailAt(tok, "initial literal argument " + tok.text + " is neither an object nor bound");
          }
          args.push_back({tok.text, is_var, tok});
        } while (Accept(","));
      }
      Expect(")");
    }
    Expect(";");
    // Expand the universal prefix over the finite domain.
    std::map<std::string, std::string> binding;
    std::function<void(std::size_t)> expand = [&](std::size_t k) {
      if (k == bound.size()) {
        GroundAtom atom{fl.text, {}};
        for (const auto& a : args) atom.args.push_back(a.is_var ? binding.at(a.text) : a.text);
        init.literals.push_back({std::move(atom), positive});
        return;
      }
      for (const auto& obj : vocab_->objects()) {
        binding[bound[k].name] = obj;
        expand(k + 1);
      }
    };
    expand(0);
  }
  Expect("}");
  initial_ = std::move(init);
}

void Parser::ParseGoalDecl() {
  Expect("goal");
  const Token& name = ExpectName("goal name");
  if (!section_names_.insert("goal:" + name.text).second) FailAt(name, "duplicate goal " + name.text);
  Expect(":");
  const Token start = Peek();
  Formula f = ParseFormula();
  if (!IsStatic(f)) FailAt(start, "goal must be static");
  auto problems = WellFormednessProblems(*vocab_, f);
  if (!problems.empty()) FailAt(start, problems.front());
  Expect(";");
  doc_.goals.emplace_back(name.text, std::move(f));
}

GroundAction Parser::ParseGroundAction() {
  const Token& sym = ExpectIdent("action");
  const Signature* sig = vocab_->FindAction(sym.text);
  if (!sig) FailAt(sym, "undeclared action " + sym.text);
  GroundAction act{sym.text, {}};
  if (Accept("(")) {
    if (!IsPunct(")")) {
      do {
        const Token& arg = ExpectIdent("object");
        if (!vocab_->ObjectIndex(arg.text)) {
          FailAt(arg, "action argument " + arg.text + " is not a declared object");
        }
        act.args.push_back(arg.text);
      } while (Accept(","));
    }
    Expect(")");
  }
  if (act.args.size() != sig->arity) {
    FailAt(sym, "action " + sym.text + " expects " + std::to_string(sig->arity) +
                    " arguments, got " + std::to_string(act.args.size()));
  }
  return act;
}

bool IsSectionKeyword(const Token& t) {
  static const std::set<std::string> kSections = {"poss", "ssa", "init", "goal", "narrative", "hpmodel"};
  return t.kind == TokenKind::kEnd || (t.kind == TokenKind::kIdent && kSections.count(t.text) > 0);
}

void Parser::ParseNarrativeDecl() {
  Expect("narrative");
  const Token& name = ExpectName("narrative name");
  if (!section_names_.insert("narrative:" + name.text).second) {
    FailAt(name, "duplicate narrative " + name.text);
  }
  Expect(":");
  std::vector<GroundAction> actions;
  if (!Accept(";")) {
    while (true) {
      actions.push_back(ParseGroundAction());
      Expect(";");
      if (IsSectionKeyword(Peek())) break;
    }
  }
  doc_.narratives.emplace_back(name.text, Trace(std::move(actions)));
}

void Parser::ParseHpModel() {
  Expect("hpmodel");
  const Token& name = ExpectName("model name");
  if (!section_names_.insert("hpmodel:" + name.text).second) {
    FailAt(name, "duplicate hpmodel " + name.text);
  }
  Expect("{");
  std::vector<hp::VariableDecl> exo;
  std::vector<hp::VariableDecl> endo;
  std::map<std::string, hp::Equation> equations;
  std::vector<std::pair<std::string, hp::Valuation>> contexts;
  std::map<std::string, bool> is_bool;

  auto parse_range = [&]() {
    if (Accept("bool")) return hp::kBoolRange;
    std::vector<std::string> range;
    Expect("{");
    do {
      range.push_back(ExpectIdent("value").text);
    } while (Accept(","));
    Expect("}");
    return range;
  };

  const Token start = Peek();
  while (!Accept("}")) {
    if (IsWord("exo") || IsWord("endo")) {
      const bool exogenous = IsWord("exo");
      ++pos_;
      const Token& var = ExpectName("variable name");
      Expect(":");
      const bool boolean = IsWord("bool");
      hp::VariableDecl decl{var.text, parse_range()};
      is_bool[var.text] = boolean;
      Expect(";");
      (exogenous ? exo : endo).push_back(std::move(decl));
    } else if (IsWord("context")) {
      ++pos_;
      const Token& cname = ExpectName("context name");
      hp::Valuation ctx;
      Expect("{");
      while (!Accept("}")) {
        const Token& var = ExpectIdent("variable");
        Expect("=");
        ctx[var.text] = ExpectIdent("value").text;
        Expect(";");
      }
      contexts.emplace_back(cname.text, std::move(ctx));
    } else if (Peek().kind == TokenKind::kIdent && IsPunct(":=", 1)) {
      const Token& var = ExpectName("variable name");
      Expect(":=");
      hp::Equation eq;
      if (Accept("case")) {
        Expect("{");
        while (!Accept("}")) {
          if (Accept("else")) {
            Expect(":");
            eq.otherwise = ExpectIdent("value").text;
            Expect(";");
            continue;
          }
          hp::Expr cond = ParseHpOr();
          Expect(":");
          eq.cases.emplace_back(std::move(cond), ExpectIdent("value").text);
          Expect(";");
        }
      } else {
        eq = hp::Equation::FromBool(ParseHpOr());
      }
      Expect(";");
      if (equations.count(var.text)) FailAt(var, "duplicate equation for " + var.text);
      equations.emplace(var.text, std::move(eq));
    } else {
      Fail("expected exo, endo, context or an equation", {"exo", "endo", "context", ":="});
    }
  }
  try {
    doc_.hp_models.emplace_back(name.text, std::move(exo), std::move(endo), std::move(equations),
                                std::move(contexts));
  } catch (const InvalidArgument& e) {
    FailAt(start, e.what());
  }
}

// --- Formulas ---------------------------------------------------------------

Formula Parser::ParseSentence() { return ParseFormula(); }

Formula Parser::ParseFormula() {
  if (IsWord("forall") || IsWord("exists") || IsWord("box")) return ParseQuantified();
  return ParseIff();
}

Formula Parser::ParseQuantified() {
  if (Accept("box")) return Formula::Box(ParseFormula());
  const bool universal = IsWord("forall");
  ++pos_;
  std::vector<Variable> vars;
  do {
    const Token& tok = ExpectIdent("variable");
    CheckBindable(tok);
    Variable v{tok.text, Sort::kObject};
    if (Accept(":")) {
      if (Accept("action")) {
        v.sort = Sort::kAction;
      } else if (!Accept("object")) {
        Fail("expected sort 'object' or 'action'", {"object", "action"});
      }
    }
    vars.push_back(std::move(v));
  } while (Accept(","));
  Expect(".");
  const std::size_t mark = scope_.size();
  scope_.insert(scope_.end(), vars.begin(), vars.end());
  Formula body = ParseFormula();
  scope_.resize(mark);
  for (std::size_t i = vars.size(); i-- > 0;) {
    body = universal ? Formula::Forall(vars[i], std::move(body))
                     : Formula::Exists(vars[i], std::move(body));
  }
  return body;
}

Formula Parser::ParseIff() {
  Formula lhs = ParseImplies();
  while (Accept("<->")) {
    Formula rhs = ParseImplies();
    lhs = Formula::Or(Formula::And(lhs, rhs), Formula::And(Formula::Not(lhs), Formula::Not(rhs)));
  }
  return lhs;
}

Formula Parser::ParseImplies() {
  Formula lhs = ParseOr();
  if (Accept("->")) {
    Formula rhs = IsWord("forall") || IsWord("exists") || IsWord("box") ? ParseQuantified()
                                                                         : ParseImplies();
    return Formula::Or(Formula::Not(lhs), rhs);
  }
  return lhs;
}

Formula Parser::ParseOr() {
  Formula lhs = ParseAnd();
  while (Accept("|")) lhs = Formula::Or(lhs, ParseAnd());
  return lhs;
}

Formula Parser::ParseAnd() {
  Formula lhs = ParseUnary();
  while (Accept("&")) lhs = Formula::And(lhs, ParseUnary());
  return lhs;
}

Formula Parser::ParseUnary() {
  if (Accept("!")) return Formula::Not(ParseUnary());
  if (IsPunct("[")) {
    const Token& open = Expect("[");
    Term t = ParseTerm();
    if (t.sort() != Sort::kAction) FailAt(open, "[.] expects an action term");
    Expect("]");
    return Formula::After(std::move(t), ParseUnary());
  }
  if (IsWord("forall") || IsWord("exists") || IsWord("box")) return ParseQuantified();
  return ParsePrimary();
}

const Variable* Parser::Lookup(const std::string& name) const {
  for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
    if (it->name == name) return &*it;
  }
  return nullptr;
}

Formula Parser::ParsePrimary() {
  if (Accept("(")) {
    Formula f = ParseFormula();
    Expect(")");
    return f;
  }
  if (Accept("true")) return Formula::True();
  if (Accept("false")) return Formula::False();
  if (IsWord("Poss")) {
    const Token& kw = Expect("Poss");
    Expect("(");
    Term t = ParseTerm();
    Expect(")");
    if (t.sort() != Sort::kAction) FailAt(kw, "Poss expects an action term");
    return Formula::Poss(std::move(t));
  }
  if (Peek().kind != TokenKind::kIdent) {
    Fail(AtEnd() ? "unexpected end of input" : "unexpected '" + Peek().text + "'", {"formula"});
  }
  const Token& head = Peek();
  const bool is_term_head = Lookup(head.text) || vocab_->ObjectIndex(head.text) ||
                            vocab_->FindAction(head.text);
  if (!is_term_head) {
    // Fluent atom, declared or not (undeclared fluents are reported by
    // validation).
    ++pos_;
    std::vector<Term> args;
    if (Accept("(")) {
      if (!IsPunct(")")) {
        do {
          const Token& at = Peek();
          Term t = ParseTerm();
          if (t.sort() != Sort::kObject) FailAt(at, "fluent arguments must be objects");
          args.push_back(std::move(t));
        } while (Accept(","));
      }
      Expect(")");
    } else if (!vocab_->FindFluent(head.text)) {
      FailAt(head, "unbound variable " + head.text);
    }
    if (IsPunct("=") || IsPunct("!=")) Fail("fluent atoms cannot be compared with '='");
    return Formula::Atom(head.text, std::move(args));
  }
  Term lhs = ParseTerm();
  const bool negated = IsPunct("!=");
  if (!Accept("=") && !Accept("!=")) Fail("expected '=' or '!=' after term", {"=", "!="});
  const Token& at = Peek();
  Term rhs = ParseTerm();
  if (lhs.sort() != rhs.sort()) FailAt(at, "equality between terms of different sorts");
  return negated ? Formula::NotEqual(std::move(lhs), std::move(rhs))
                 : Formula::Equal(std::move(lhs), std::move(rhs));
}

Term Parser::ParseTerm() {
  const Token& tok = ExpectIdent("term");
  if (const Variable* v = Lookup(tok.text)) {
    if (IsPunct("(")) FailAt(tok, "variable " + tok.text + " cannot take arguments");
    return Term::Var(*v);
  }
  if (vocab_->ObjectIndex(tok.text)) return Term::Name(tok.text);
  if (const Signature* sig = vocab_->FindAction(tok.text)) {
    std::vector<Term> args;
    if (Accept("(")) {
      if (!IsPunct(")")) {
        do {
          const Token& at = Peek();
          Term t = ParseTerm();
          if (t.sort() != Sort::kObject) FailAt(at, "action arguments must be objects");
          args.push_back(std::move(t));
        } while (Accept(","));
      }
      Expect(")");
    }
    if (args.size() != sig->arity) {
      FailAt(tok, "action " + tok.text + " expects " + std::to_string(sig->arity) +
                      " arguments, got " + std::to_string(args.size()));
    }
    return Term::Action(tok.text, std::move(args));
  }
  if (IsPunct("(")) FailAt(tok, "undeclared action " + tok.text);
  FailAt(tok, "unbound variable " + tok.text);
}

Trace Parser::ParseTraceList() {
  std::vector<GroundAction> actions;
  while (!AtEnd()) {
    actions.push_back(ParseGroundAction());
    if (!Accept(";")) break;
  }
  ExpectEnd();
  return Trace(std::move(actions));
}

// --- HP expressions ---------------------------------------------------------

hp::Expr Parser::ParseHpExprOnly() {
  hp::Expr e = ParseHpOr();
  ExpectEnd();
  return e;
}

hp::Expr Parser::ParseHpOr() {
  hp::Expr lhs = ParseHpAnd();
  while (true) {
    if (Accept("|")) {
      lhs = hp::Expr::Or(lhs, ParseHpAnd());
    } else if (Accept("->")) {
      lhs = hp::Expr::Or(hp::Expr::Not(lhs), ParseHpAnd());
    } else {
      return lhs;
    }
  }
}

hp::Expr Parser::ParseHpAnd() {
  hp::Expr lhs = ParseHpUnary();
  while (Accept("&")) lhs = hp::Expr::And(lhs, ParseHpUnary());
  return lhs;
}

hp::Expr Parser::ParseHpUnary() {
  if (Accept("!")) return hp::Expr::Not(ParseHpUnary());
  if (Accept("(")) {
    hp::Expr e = ParseHpOr();
    Expect(")");
    return e;
  }
  if (Accept("true")) return hp::Expr::True();
  if (Accept("false")) return hp::Expr::False();
  const Token& var = ExpectIdent("variable");
  if (Accept("=")) return hp::Expr::Is(var.text, ExpectIdent("value").text);
  if (Accept("!=")) return hp::Expr::Not(hp::Expr::Is(var.text, ExpectIdent("value").text));
  return hp::Expr::Is(var.text, "true");
}

}  // namespace

// ---------------------------------------------------------------------------
// Entry points

Document ParseDocument(std::string_view text) {
  Parser p(text);
  return p.ParseFile();
}

BasicActionTheory ParseTheory(std::string_view text) { return ParseDocument(text).theory; }

Formula ParseQuery(std::string_view text, const Vocabulary& vocab) {
  Parser p(text);
  p.set_vocabulary(&vocab);
  if (p.AtEnd()) p.Fail("expected a formula", {"formula"});
  Formula f = p.ParseSentence();
  p.ExpectEnd();
  auto problems = WellFormednessProblems(vocab, f);
  if (!problems.empty()) {
    throw ParseError(SourceSpan{0, text.size(), 1, 1}, problems.front());
  }
  return f;
}

Formula ParseGoal(std::string_view text, const Vocabulary& vocab) {
  Formula f = ParseQuery(text, vocab);
  if (!IsStatic(f)) throw ParseError(SourceSpan{0, text.size(), 1, 1}, "goal must be static");
  return f;
}

Trace ParseTrace(std::string_view text, const Vocabulary& vocab) {
  Parser p(text);
  p.set_vocabulary(&vocab);
  return p.ParseTraceList();
}

hp::Expr ParseHpExpr(std::string_view text) {
  Parser p(text);
  return p.ParseHpExprOnly();
}

std::string RenderTrace(const Trace& z) {
  std::string out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (i > 0) out += "; ";
    out += z[i].ToString();
  }
  return out;
}

namespace {

std::string RenderSigs(const std::vector<Signature>& sigs) {
  std::string out;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (i > 0) out += ", ";
    out += sigs[i].name + "/" + std::to_string(sigs[i].arity);
  }
  return out;
}

std::string RenderParams(const std::vector<Variable>& params) {
  if (params.empty()) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ", ";
    out += params[i].name;
  }
  return out + ")";
}

}  // namespace

std::string RenderTheory(const BasicActionTheory& bat) {
  const Vocabulary& vocab = bat.vocabulary();
  std::string out = "domain {\n  objects: ";
  for (std::size_t i = 0; i < vocab.objects().size(); ++i) {
    if (i > 0) out += ", ";
    out += vocab.objects()[i];
  }
  out += ";\n  fluents: " + RenderSigs(vocab.fluents()) + ";\n";
  out += "  actions: " + RenderSigs(vocab.actions()) + ";\n}\n\n";
  for (const auto& c : bat.preconditions()) {
    out += "poss " + c.action + RenderParams(c.params) + ": " + ToString(c.condition) + ";\n";
  }
  out += "\n";
  for (const auto& s : bat.ssas()) {
    out += "ssa " + s.fluent + RenderParams(s.params) + ": " + ToString(s.rhs) + ";\n";
  }
  out += "\ninit ";
  out += bat.initial().mode == InitialMode::kClosed ? "closed" : "open";
  out += " {\n";
  for (const auto& lit : bat.initial().literals) {
    out += "  " + std::string(lit.positive ? "" : "!") + lit.atom.ToString() + ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace actcause
