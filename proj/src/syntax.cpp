/* Copyright 2026 The dedkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "dedkit/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "dedkit/error.hpp"

namespace dedkit {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

bool is_lower_ident(std::string_view s) {
  if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::islower(u) || std::isdigit(u) || c == '_';
  });
}

bool is_upper_ident(std::string_view s) {
  if (s.empty() || !std::isupper(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || c == '_';
  });
}

const SymbolDecl* find_decl(const std::vector<SymbolDecl>& decls,
                            std::string_view name) {
  for (const auto& d : decls)
    if (d.name == name) return &d;
  return nullptr;
}

}  // namespace

// ---------------------------------------------------------------------------
// Signature

void Signature::check_fresh(const std::string& name) const {
  if (find_decl(predicates_, name) || find_decl(functions_, name) ||
      has_variable(name))
    throw SignatureError("symbol '" + name + "' declared twice");
}

void Signature::add_predicate(std::string name, int arity) {
  if (!is_upper_ident(name))
    throw SignatureError("predicate name '" + name + "' must match [A-Z][A-Za-z0-9_]*");
  // (A x) and (E x) would be ambiguous with a predicate spelled A or E.
  if (name == "A" || name == "E")
    throw SignatureError("predicate name '" + name + "' is reserved for quantifiers");
  if (arity < 0) throw SignatureError("negative arity for '" + name + "'");
  check_fresh(name);
  predicates_.push_back({std::move(name), arity});
}

void Signature::add_function(std::string name, int arity) {
  if (!is_lower_ident(name))
    throw SignatureError("function name '" + name + "' must match [a-z][a-z0-9_]*");
  if (arity < 0) throw SignatureError("negative arity for '" + name + "'");
  check_fresh(name);
  functions_.push_back({std::move(name), arity});
}

void Signature::add_variable(std::string name) {
  if (!is_lower_ident(name))
    throw SignatureError("variable name '" + name + "' must match [a-z][a-z0-9_]*");
  check_fresh(name);
  variables_.push_back(std::move(name));
}

std::optional<int> Signature::predicate_arity(std::string_view name) const {
  if (const auto* d = find_decl(predicates_, name)) return d->arity;
  return std::nullopt;
}

std::optional<int> Signature::function_arity(std::string_view name) const {
  if (const auto* d = find_decl(functions_, name)) return d->arity;
  return std::nullopt;
}

bool Signature::has_variable(std::string_view name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

bool Signature::is_variable_spelling(std::string_view name) const {
  return is_lower_ident(name) && !find_decl(functions_, name);
}

std::string Signature::to_string() const {
  std::string out = "sig";
  for (const auto& p : predicates_) out += " " + p.name + "/" + std::to_string(p.arity);
  for (const auto& f : functions_) out += " " + f.name + "/" + std::to_string(f.arity);
  for (const auto& v : variables_) out += " " + v;
  return out;
}

Signature parse_signature(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string word;
  Signature sig;
  bool first = true;
  while (in >> word) {
    if (first && word == "sig") {
      first = false;
      continue;
    }
    first = false;
    auto slash = word.find('/');
    if (slash == std::string::npos) {
      sig.add_variable(word);
      continue;
    }
    std::string name = word.substr(0, slash);
    std::string arity_text = word.substr(slash + 1);
    if (arity_text.empty() ||
        !std::all_of(arity_text.begin(), arity_text.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw SignatureError("bad arity in declaration '" + word + "'");
    int arity = std::stoi(arity_text);
    if (!name.empty() && std::isupper(static_cast<unsigned char>(name[0])))
      sig.add_predicate(name, arity);
    else
      sig.add_function(name, arity);
  }
  return sig;
}

// ---------------------------------------------------------------------------
// Terms and formulas

Term Term::variable(std::string name) {
  std::size_t h = mix(0x51, std::hash<std::string>{}(name));
  return Term(std::make_shared<const Node>(Node{true, std::move(name), {}, h}));
}

Term Term::apply(std::string function, std::vector<Term> args) {
  std::size_t h = mix(0x52, std::hash<std::string>{}(function));
  for (const auto& a : args) h = mix(h, a.hash());
  return Term(std::make_shared<const Node>(
      Node{false, std::move(function), std::move(args), h}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.is_variable() != b.is_variable() ||
      a.name() != b.name())
    return false;
  return a.args() == b.args();
}

Formula Formula::atom(std::string predicate, std::vector<Term> args) {
  std::size_t h = mix(0x61, std::hash<std::string>{}(predicate));
  for (const auto& a : args) h = mix(h, a.hash());
  return Formula(std::make_shared<const Node>(
      Node{Connective::kAtom, std::move(predicate), std::move(args), {}, 0, h}));
}

Formula Formula::negation(Formula operand) {
  std::size_t h = mix(0x62, operand.hash());
  int d = operand.depth() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::kNot, {}, {}, {std::move(operand)}, d, h}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  std::size_t h = mix(mix(0x63, lhs.hash()), rhs.hash());
  int d = std::max(lhs.depth(), rhs.depth()) + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::kImplies, {}, {}, {std::move(lhs), std::move(rhs)}, d, h}));
}

Formula Formula::forall(std::string variable, Formula body) {
  std::size_t h = mix(mix(0x64, std::hash<std::string>{}(variable)), body.hash());
  int d = body.depth() + 1;
  return Formula(std::make_shared<const Node>(
      Node{Connective::kForAll, std::move(variable), {}, {std::move(body)}, d, h}));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  return negation(implies(std::move(lhs), negation(std::move(rhs))));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return implies(negation(std::move(lhs)), std::move(rhs));
}

Formula Formula::exists(std::string variable, Formula body) {
  return negation(forall(std::move(variable), negation(std::move(body))));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.depth() != b.depth())
    return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.name == y.name && x.args == y.args && x.sub == y.sub;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { kIdent, kTilde, kLParen, kRParen, kArrow, kAmp, kBar, kComma, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
        ++j;
      out.push_back({Tok::kIdent, std::string(s.substr(i, j - i)), i});
      i = j;
      continue;
    }
    switch (c) {
      case '~': out.push_back({Tok::kTilde, "~", i}); break;
      case '(': out.push_back({Tok::kLParen, "(", i}); break;
      case ')': out.push_back({Tok::kRParen, ")", i}); break;
      case '&': out.push_back({Tok::kAmp, "&", i}); break;
      case '|': out.push_back({Tok::kBar, "|", i}); break;
      case ',': out.push_back({Tok::kComma, ",", i}); break;
      case '-':
        if (i + 1 < s.size() && s[i + 1] == '>') {
          out.push_back({Tok::kArrow, "->", i});
          ++i;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    ++i;
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig)
      : toks_(tokenize(text)), sig_(sig) {}

  Formula formula_to_end() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Term term_to_end() {
    Term t = term();
    expect_end();
    return t;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& take() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      throw ParseError(std::string("expected ") + what + describe(peek()), peek().pos);
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::kEnd)
      throw ParseError("trailing input" + describe(peek()), peek().pos);
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::kEnd) return ", found end of input";
    return ", found '" + t.text + "'";
  }

  Formula formula() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kTilde:
        ++pos_;
        return Formula::negation(formula());
      case Tok::kLParen: {
        const Token& next = peek(1);
        if (next.kind == Tok::kIdent && (next.text == "A" || next.text == "E")) {
          bool universal = next.text == "A";
          pos_ += 2;
          const Token& v = peek();
          if (v.kind != Tok::kIdent || !sig_.is_variable_spelling(v.text))
            throw ParseError("expected a variable after quantifier" + describe(v), v.pos);
          std::string var = v.text;
          ++pos_;
          expect(Tok::kRParen, "')' after quantified variable");
          Formula body = formula();
          return universal ? Formula::forall(var, body) : Formula::exists(var, body);
        }
        ++pos_;
        Formula lhs = formula();
        const Token& op = take();
        Formula rhs = formula();
        expect(Tok::kRParen, "')'");
        switch (op.kind) {
          case Tok::kArrow: return Formula::implies(lhs, rhs);
          case Tok::kAmp: return Formula::conjunction(lhs, rhs);
          case Tok::kBar: return Formula::disjunction(lhs, rhs);
          default:
            throw ParseError("expected '->', '&' or '|'" + describe(op), op.pos);
        }
      }
      case Tok::kIdent:
        return atom();
      default:
        throw ParseError("expected a formula" + describe(t), t.pos);
    }
  }

  Formula atom() {
    const Token& t = take();
    if (!std::isupper(static_cast<unsigned char>(t.text[0])))
      throw ParseError("expected a predicate, found '" + t.text + "'", t.pos);
    auto arity = sig_.predicate_arity(t.text);
    if (!arity) throw ParseError("undeclared predicate '" + t.text + "'", t.pos);
    std::vector<Term> args = arguments(t, *arity);
    return Formula::atom(t.text, std::move(args));
  }

  std::vector<Term> arguments(const Token& head, int arity) {
    std::vector<Term> args;
    if (peek().kind == Tok::kLParen) {
      ++pos_;
      args.push_back(term());
      while (peek().kind == Tok::kComma) {
        ++pos_;
        args.push_back(term());
      }
      expect(Tok::kRParen, "')' closing argument list");
    }
    if (static_cast<int>(args.size()) != arity)
      throw ParseError("arity mismatch: '" + head.text + "' takes " +
                           std::to_string(arity) + " argument(s), given " +
                           std::to_string(args.size()),
                       head.pos);
    return args;
  }

  Term term() {
    const Token& t = take();
    if (t.kind != Tok::kIdent || !std::islower(static_cast<unsigned char>(t.text[0])))
      throw ParseError("expected a term" + describe(t), t.pos);
    if (auto arity = sig_.function_arity(t.text))
      return Term::apply(t.text, arguments(t, *arity));
    if (!sig_.is_variable_spelling(t.text))
      throw ParseError("bad variable name '" + t.text + "'", t.pos);
    if (peek().kind == Tok::kLParen)
      throw ParseError("undeclared function '" + t.text + "'", t.pos);
    return Term::variable(t.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const Signature& sig_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  return Parser(text, sig).formula_to_end();
}

Term parse_term(std::string_view text, const Signature& sig) {
  return Parser(text, sig).term_to_end();
}

// ---------------------------------------------------------------------------
// Printer

namespace {

void print_term_to(const Term& t, std::string& out) {
  out += t.name();
  if (t.is_variable() || t.args().empty()) return;
  out += '(';
  for (std::size_t i = 0; i < t.args().size(); ++i) {
    if (i) out += ", ";
    print_term_to(t.args()[i], out);
  }
  out += ')';
}

void print_formula_to(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::kAtom:
      out += f.name();
      if (!f.args().empty()) {
        out += '(';
        for (std::size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ", ";
          print_term_to(f.args()[i], out);
        }
        out += ')';
      }
      return;
    case Connective::kNot:
      out += '~';
      print_formula_to(f.operand(), out);
      return;
    case Connective::kImplies:
      out += '(';
      print_formula_to(f.lhs(), out);
      out += " -> ";
      print_formula_to(f.rhs(), out);
      out += ')';
      return;
    case Connective::kForAll:
      out += "(A " + f.name() + ") ";
      print_formula_to(f.operand(), out);
      return;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_term_to(t, out);
  return out;
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_formula_to(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Well-formedness and variables

namespace {

void check_term(const Term& t, const Signature& sig) {
  if (t.is_variable()) {
    if (!sig.is_variable_spelling(t.name()))
      throw SignatureError("'" + t.name() + "' is not a variable spelling");
    return;
  }
  auto arity = sig.function_arity(t.name());
  if (!arity) throw SignatureError("undeclared function '" + t.name() + "'");
  if (*arity != static_cast<int>(t.args().size()))
    throw SignatureError("arity mismatch for '" + t.name() + "'");
  for (const auto& a : t.args()) check_term(a, sig);
}

void collect_term_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_variable()) {
    out.insert(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_term_vars(a, out);
}

bool term_mentions(const Term& t, std::string_view v) {
  if (t.is_variable()) return t.name() == v;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return term_mentions(a, v); });
}

void collect_free(const Formula& f, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  switch (f.kind()) {
    case Connective::kAtom: {
      std::set<std::string> vs;
      for (const auto& a : f.args()) collect_term_vars(a, vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Connective::kNot:
      collect_free(f.operand(), bound, out);
      return;
    case Connective::kImplies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Connective::kForAll: {
      bool fresh = bound.insert(f.name()).second;
      collect_free(f.operand(), bound, out);
      if (fresh) bound.erase(f.name());
      return;
    }
  }
}

void collect_term_order(const Term& t, std::vector<std::string>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end())
      out.push_back(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_term_order(a, out);
}

}  // namespace

void check_well_formed(const Formula& f, const Signature& sig) {
  switch (f.kind()) {
    case Connective::kAtom: {
      auto arity = sig.predicate_arity(f.name());
      if (!arity) throw SignatureError("undeclared predicate '" + f.name() + "'");
      if (*arity != static_cast<int>(f.args().size()))
        throw SignatureError("arity mismatch for '" + f.name() + "'");
      for (const auto& a : f.args()) check_term(a, sig);
      return;
    }
    case Connective::kNot:
      check_well_formed(f.operand(), sig);
      return;
    case Connective::kImplies:
      check_well_formed(f.lhs(), sig);
      check_well_formed(f.rhs(), sig);
      return;
    case Connective::kForAll:
      if (!sig.is_variable_spelling(f.name()))
        throw SignatureError("'" + f.name() + "' is not a variable spelling");
      check_well_formed(f.operand(), sig);
      return;
  }
}

std::set<std::string> term_vars(const Term& t) {
  std::set<std::string> out;
  collect_term_vars(t, out);
  return out;
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool occurs_free(std::string_view v, const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom:
      return std::any_of(f.args().begin(), f.args().end(),
                         [&](const Term& a) { return term_mentions(a, v); });
    case Connective::kNot:
      return occurs_free(v, f.operand());
    case Connective::kImplies:
      return occurs_free(v, f.lhs()) || occurs_free(v, f.rhs());
    case Connective::kForAll:
      return f.name() != v && occurs_free(v, f.operand());
  }
  return false;
}

void collect_variables(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Connective::kAtom:
      for (const auto& a : f.args()) collect_term_order(a, out);
      return;
    case Connective::kNot:
      collect_variables(f.operand(), out);
      return;
    case Connective::kImplies:
      collect_variables(f.lhs(), out);
      collect_variables(f.rhs(), out);
      return;
    case Connective::kForAll:
      if (std::find(out.begin(), out.end(), f.name()) == out.end())
        out.push_back(f.name());
      collect_variables(f.operand(), out);
      return;
  }
}

// ---------------------------------------------------------------------------
// Substitution

bool is_free_for(const Term& t, std::string_view v, const Formula& f) {
  switch (f.kind()) {
    case Connective::kAtom:
      return true;
    case Connective::kNot:
      return is_free_for(t, v, f.operand());
    case Connective::kImplies:
      return is_free_for(t, v, f.lhs()) && is_free_for(t, v, f.rhs());
    case Connective::kForAll:
      if (f.name() == v || !occurs_free(v, f.operand())) return true;
      return !term_mentions(t, f.name()) && is_free_for(t, v, f.operand());
  }
  return true;
}

Term substitute(const Term& in, std::string_view v, const Term& t) {
  if (in.is_variable()) return in.name() == v ? t : in;
  if (in.args().empty()) return in;
  std::vector<Term> args;
  args.reserve(in.args().size());
  for (const auto& a : in.args()) args.push_back(substitute(a, v, t));
  return Term::apply(in.name(), std::move(args));
}

namespace {

Formula substitute_unchecked(const Formula& f, std::string_view v, const Term& t) {
  if (!occurs_free(v, f)) return f;
  switch (f.kind()) {
    case Connective::kAtom: {
      std::vector<Term> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(substitute(a, v, t));
      return Formula::atom(f.name(), std::move(args));
    }
    case Connective::kNot:
      return Formula::negation(substitute_unchecked(f.operand(), v, t));
    case Connective::kImplies:
      return Formula::implies(substitute_unchecked(f.lhs(), v, t),
                              substitute_unchecked(f.rhs(), v, t));
    case Connective::kForAll:
      return Formula::forall(f.name(), substitute_unchecked(f.operand(), v, t));
  }
  return f;
}

}  // namespace

Formula substitute(const Formula& f, std::string_view v, const Term& t) {
  if (!is_free_for(t, v, f))
    throw CaptureError("substituting " + print_term(t) + " for " + std::string(v) +
                       " in " + print_formula(f) + " would capture a variable");
  return substitute_unchecked(f, v, t);
}

}  // namespace dedkit
