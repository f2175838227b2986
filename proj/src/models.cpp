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

#include "dedkit/models.hpp"

#include <algorithm>
#include <utility>

#include "dedkit/error.hpp"

namespace dedkit {

namespace {

std::size_t table_rows(std::size_t k, int arity) {
  std::size_t rows = 1;
  for (int i = 0; i < arity; ++i) rows *= k;
  return rows;
}

}  // namespace

Interpretation::Interpretation(Signature sig, std::size_t domain_size)
    : sig_(std::move(sig)), size_(domain_size) {
  if (size_ == 0) throw PreconditionError("domain must be nonempty");
  for (const auto& p : sig_.predicates())
    predicates_.emplace_back(table_rows(size_, p.arity), std::uint8_t{0});
  for (const auto& f : sig_.functions())
    functions_.emplace_back(table_rows(size_, f.arity), std::size_t{0});
}

std::size_t Interpretation::predicate_index(std::string_view name) const {
  const auto& ps = sig_.predicates();
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (ps[i].name == name) return i;
  throw PreconditionError("interpretation has no predicate '" + std::string(name) + "'");
}

std::size_t Interpretation::function_index(std::string_view name) const {
  const auto& fs = sig_.functions();
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (fs[i].name == name) return i;
  throw PreconditionError("interpretation has no function '" + std::string(name) + "'");
}

std::size_t Interpretation::row(std::span<const std::size_t> args, int arity) const {
  if (static_cast<int>(args.size()) != arity)
    throw PreconditionError("wrong number of arguments for table lookup");
  std::size_t r = 0;
  for (std::size_t a : args) {
    if (a >= size_) throw PreconditionError("argument outside the domain");
    r = r * size_ + a;
  }
  return r;
}

bool Interpretation::holds(std::string_view predicate,
                           std::span<const std::size_t> args) const {
  std::size_t i = predicate_index(predicate);
  return predicates_[i][row(args, sig_.predicates()[i].arity)] != 0;
}

std::size_t Interpretation::apply(std::string_view function,
                                  std::span<const std::size_t> args) const {
  std::size_t i = function_index(function);
  return functions_[i][row(args, sig_.functions()[i].arity)];
}

void Interpretation::set_predicate(std::string_view predicate,
                                   std::span<const std::size_t> args, bool value) {
  std::size_t i = predicate_index(predicate);
  predicates_[i][row(args, sig_.predicates()[i].arity)] = value ? 1 : 0;
}

void Interpretation::set_function(std::string_view function,
                                  std::span<const std::size_t> args, std::size_t value) {
  if (value >= size_) throw PreconditionError("function value outside the domain");
  std::size_t i = function_index(function);
  functions_[i][row(args, sig_.functions()[i].arity)] = value;
}

std::string Interpretation::to_string() const {
  auto row_text = [&](std::size_t r, int arity) {
    std::vector<std::size_t> digits(static_cast<std::size_t>(arity));
    for (int i = arity - 1; i >= 0; --i) {
      digits[static_cast<std::size_t>(i)] = r % size_;
      r /= size_;
    }
    std::string out = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(digits[i]);
    }
    return out + ")";
  };
  std::string out = "domain " + std::to_string(size_) + "\n";
  for (std::size_t i = 0; i < predicates_.size(); ++i)
    for (std::size_t r = 0; r < predicates_[i].size(); ++r)
      out += "table " + sig_.predicates()[i].name + " " +
             row_text(r, sig_.predicates()[i].arity) + " = " +
             (predicates_[i][r] ? "true" : "false") + "\n";
  for (std::size_t i = 0; i < functions_.size(); ++i)
    for (std::size_t r = 0; r < functions_[i].size(); ++r)
      out += "table " + sig_.functions()[i].name + " " +
             row_text(r, sig_.functions()[i].arity) + " = " +
             std::to_string(functions_[i][r]) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using Env = std::vector<std::pair<std::string_view, std::size_t>>;

std::size_t eval_term(const Term& t, const Interpretation& m, const Env& env) {
  if (t.is_variable()) {
    for (auto it = env.rbegin(); it != env.rend(); ++it)
      if (it->first == t.name()) return it->second;
    throw PreconditionError("variable '" + t.name() + "' is unassigned");
  }
  std::vector<std::size_t> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(eval_term(a, m, env));
  return m.apply(t.name(), args);
}

bool eval(const Formula& f, const Interpretation& m, Env& env) {
  switch (f.kind()) {
    case Connective::kAtom: {
      std::vector<std::size_t> args;
      args.reserve(f.args().size());
      for (const auto& a : f.args()) args.push_back(eval_term(a, m, env));
      return m.holds(f.name(), args);
    }
    case Connective::kNot:
      return !eval(f.operand(), m, env);
    case Connective::kImplies:
      return !eval(f.lhs(), m, env) || eval(f.rhs(), m, env);
    case Connective::kForAll: {
      env.emplace_back(f.name(), 0);
      bool all = true;
      for (std::size_t v = 0; v < m.domain_size() && all; ++v) {
        env.back().second = v;
        all = eval(f.operand(), m, env);
      }
      env.pop_back();
      return all;
    }
  }
  return false;
}

void require_closed(const Formula& f) {
  if (!is_closed(f))
    throw PreconditionError("formula " + print_formula(f) + " is not closed");
}

}  // namespace

bool evaluate(const Formula& f, const Interpretation& m, const Assignment& s) {
  Env env;
  env.reserve(s.size() + 4);
  for (const auto& [name, value] : s) {
    if (value >= m.domain_size())
      throw PreconditionError("assignment of '" + name + "' is outside the domain");
    env.emplace_back(name, value);
  }
  return eval(f, m, env);
}

// ---------------------------------------------------------------------------
// Enumeration

InterpretationStream::InterpretationStream(const Signature& sig, std::size_t k)
    : current_(sig, k) {}

const Interpretation* InterpretationStream::next() {
  if (done_) return nullptr;
  if (!started_) {
    started_ = true;
    return &current_;
  }
  const std::size_t max_value = current_.size_ - 1;
  for (auto t = current_.functions_.rbegin(); t != current_.functions_.rend(); ++t)
    for (auto c = t->rbegin(); c != t->rend(); ++c) {
      if (*c < max_value) {
        ++*c;
        return &current_;
      }
      *c = 0;
    }
  for (auto t = current_.predicates_.rbegin(); t != current_.predicates_.rend(); ++t)
    for (auto c = t->rbegin(); c != t->rend(); ++c) {
      if (*c == 0) {
        *c = 1;
        return &current_;
      }
      *c = 0;
    }
  done_ = true;
  return nullptr;
}

std::vector<Interpretation> enumerate_interpretations(const Signature& sig, std::size_t k) {
  std::vector<Interpretation> out;
  InterpretationStream stream(sig, k);
  while (const Interpretation* m = stream.next()) out.push_back(*m);
  return out;
}

std::optional<std::uint64_t> count_interpretations(const Signature& sig, std::size_t k) {
  unsigned __int128 total = 1;
  const unsigned __int128 limit = ~std::uint64_t{0};
  auto times = [&](std::size_t base, std::size_t exponent) {
    for (std::size_t i = 0; i < exponent; ++i) {
      total *= base;
      if (total > limit) return false;
    }
    return true;
  };
  for (const auto& p : sig.predicates())
    if (!times(2, table_rows(k, p.arity))) return std::nullopt;
  for (const auto& f : sig.functions())
    if (!times(k, table_rows(k, f.arity))) return std::nullopt;
  return static_cast<std::uint64_t>(total);
}

// ---------------------------------------------------------------------------
// Entailment and soundness

EntailmentVerdict check_entailment(std::span<const Formula> theory, const Formula& goal,
                                   const Signature& sig, std::size_t max_size) {
  for (const auto& t : theory) require_closed(t);
  require_closed(goal);
  for (std::size_t k = 1; k <= max_size; ++k) {
    InterpretationStream stream(sig, k);
    while (const Interpretation* m = stream.next()) {
      bool model_of_theory = std::all_of(theory.begin(), theory.end(),
                                         [&](const Formula& t) { return evaluate(t, *m); });
      if (model_of_theory && !evaluate(goal, *m)) return {*m};
    }
  }
  return {};
}

bool check_soundness(const Deduction& d, const Interpretation& m) {
  for (const auto& h : d.hypotheses) require_closed(h);
  for (const auto& s : d.steps) require_closed(s.formula);
  for (const auto& h : d.hypotheses)
    if (!evaluate(h, m)) return true;
  return std::all_of(d.steps.begin(), d.steps.end(),
                     [&](const Step& s) { return evaluate(s.formula, m); });
}

}  // namespace dedkit
