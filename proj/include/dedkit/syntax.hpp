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

// First-order syntax over a declared finite signature.
//
// Formulas use the primitive connectives ~, ->, and (A x) only. The parser
// accepts &, | and (E x) as abbreviations and expands them on the way in:
//
//   (X & Y)  ==  ~(X -> ~Y)
//   (X | Y)  ==  (~X -> Y)
//   (E x) F  ==  ~(A x) ~F
//
// Terms and formulas are immutable values with shared structure, so copying
// is cheap and equality is structural (not up to renaming of bound
// variables).

#ifndef DEDKIT_SYNTAX_HPP_
#define DEDKIT_SYNTAX_HPP_

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dedkit {

struct SymbolDecl {
  std::string name;
  int arity = 0;
  friend bool operator==(const SymbolDecl&, const SymbolDecl&) = default;
};

// Declared predicates (uppercase), functions and constants (lowercase, arity
// 0 means constant) and an ordered list of variables. Variables need not be
// declared to appear in a formula; the declared order only matters for
// Godel coding and for search enumeration.
class Signature {
 public:
  Signature() = default;

  void add_predicate(std::string name, int arity);
  void add_function(std::string name, int arity);
  void add_variable(std::string name);

  const std::vector<SymbolDecl>& predicates() const { return predicates_; }
  const std::vector<SymbolDecl>& functions() const { return functions_; }
  const std::vector<std::string>& variables() const { return variables_; }

  std::optional<int> predicate_arity(std::string_view name) const;
  std::optional<int> function_arity(std::string_view name) const;
  bool has_variable(std::string_view name) const;

  // A lowercase identifier that is not a declared function or constant.
  bool is_variable_spelling(std::string_view name) const;

  // "sig P/0 R/1 c/0 x y": predicates, then functions, then variables.
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;

 private:
  void check_fresh(const std::string& name) const;

  std::vector<SymbolDecl> predicates_;
  std::vector<SymbolDecl> functions_;
  std::vector<std::string> variables_;
};

// Accepts "sig <decl> ..." or the bare declaration list. NAME/n declares a
// predicate (uppercase) or function (lowercase); a bare lowercase name
// declares a variable.
Signature parse_signature(std::string_view text);

class Term {
 public:
  static Term variable(std::string name);
  static Term apply(std::string function, std::vector<Term> args = {});

  bool is_variable() const { return node_->is_variable; }
  const std::string& name() const { return node_->name; }
  const std::vector<Term>& args() const { return node_->args; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Term& a, const Term& b);

 private:
  struct Node {
    bool is_variable;
    std::string name;
    std::vector<Term> args;
    std::size_t hash;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

enum class Connective { kAtom, kNot, kImplies, kForAll };

class Formula {
 public:
  static Formula atom(std::string predicate, std::vector<Term> args = {});
  static Formula negation(Formula operand);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(std::string variable, Formula body);

  // Abbreviations, expanded to primitives.
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula exists(std::string variable, Formula body);

  Connective kind() const;
  bool is_atom() const { return kind() == Connective::kAtom; }
  bool is_not() const { return kind() == Connective::kNot; }
  bool is_implies() const { return kind() == Connective::kImplies; }
  bool is_forall() const { return kind() == Connective::kForAll; }

  // Predicate name for atoms, bound variable for (A x).
  const std::string& name() const;
  const std::vector<Term>& args() const;
  // Operand of ~ or body of (A x).
  const Formula& operand() const;
  const Formula& lhs() const;
  const Formula& rhs() const;

  // Connective nesting depth; atoms have depth 0.
  int depth() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Connective kind;
  std::string name;
  std::vector<Term> args;
  std::vector<Formula> sub;
  int depth;
  std::size_t hash;
};

inline Connective Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const std::vector<Term>& Formula::args() const { return node_->args; }
inline const Formula& Formula::operand() const { return node_->sub[0]; }
inline const Formula& Formula::lhs() const { return node_->sub[0]; }
inline const Formula& Formula::rhs() const { return node_->sub[1]; }
inline int Formula::depth() const { return node_->depth; }
inline std::size_t Formula::hash() const { return node_->hash; }

Formula parse_formula(std::string_view text, const Signature& sig);
Term parse_term(std::string_view text, const Signature& sig);

std::string print_term(const Term& t);
std::string print_formula(const Formula& f);

// Throws SignatureError on an undeclared symbol, an arity mismatch, or a
// variable spelled like a declared function.
void check_well_formed(const Formula& f, const Signature& sig);

std::set<std::string> term_vars(const Term& t);
std::set<std::string> free_vars(const Formula& f);
bool occurs_free(std::string_view v, const Formula& f);
inline bool is_closed(const Formula& f) { return free_vars(f).empty(); }

// Every variable occurring in f, free or bound, in preorder of first
// occurrence, appended to out when not already present.
void collect_variables(const Formula& f, std::vector<std::string>& out);

bool is_free_for(const Term& t, std::string_view v, const Formula& f);

Term substitute(const Term& in, std::string_view v, const Term& t);
// Replaces the free occurrences of v by t. Throws CaptureError unless
// is_free_for(t, v, f); bound variables are never renamed.
Formula substitute(const Formula& f, std::string_view v, const Term& t);

}  // namespace dedkit

template <>
struct std::hash<dedkit::Term> {
  std::size_t operator()(const dedkit::Term& t) const noexcept {
    return t.hash();
  }
};

template <>
struct std::hash<dedkit::Formula> {
  std::size_t operator()(const dedkit::Formula& f) const noexcept {
    return f.hash();
  }
};

#endif  // DEDKIT_SYNTAX_HPP_
