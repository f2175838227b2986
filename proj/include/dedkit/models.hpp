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

// Finite-model semantics. Domains are {0, ..., k-1}; there is no built-in
// equality.

#ifndef DEDKIT_MODELS_HPP_
#define DEDKIT_MODELS_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dedkit/kernel.hpp"

namespace dedkit {

class Interpretation {
 public:
  // Every predicate false, every function constantly 0.
  Interpretation(Signature sig, std::size_t domain_size);

  const Signature& signature() const { return sig_; }
  std::size_t domain_size() const { return size_; }

  bool holds(std::string_view predicate, std::span<const std::size_t> args) const;
  std::size_t apply(std::string_view function, std::span<const std::size_t> args) const;

  void set_predicate(std::string_view predicate, std::span<const std::size_t> args, bool value);
  void set_function(std::string_view function, std::span<const std::size_t> args,
                    std::size_t value);

  // "domain k", then one "table <symbol> (<args>) = <value>" line per row,
  // predicates first, rows in lexicographic order.
  std::string to_string() const;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;

 private:
  friend class InterpretationStream;

  std::size_t predicate_index(std::string_view name) const;
  std::size_t function_index(std::string_view name) const;
  std::size_t row(std::span<const std::size_t> args, int arity) const;

  Signature sig_;
  std::size_t size_;
  std::vector<std::vector<std::uint8_t>> predicates_;
  std::vector<std::vector<std::size_t>> functions_;
};

using Assignment = std::map<std::string, std::size_t, std::less<>>;

// Tarskian satisfaction. Throws PreconditionError if a free variable of f is
// unassigned.
bool evaluate(const Formula& f, const Interpretation& m, const Assignment& s = {});

// Every interpretation of sig over a domain of exactly k elements. The table
// cells (predicates in declaration order, then functions, each table in
// row order) form an odometer whose last cell turns fastest; false < true.
class InterpretationStream {
 public:
  InterpretationStream(const Signature& sig, std::size_t k);

  // Next interpretation, or nullptr once the stream is exhausted. The
  // pointer stays valid until the following call.
  const Interpretation* next();

 private:
  Interpretation current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Interpretation> enumerate_interpretations(const Signature& sig, std::size_t k);

// Number of interpretations of size k; nullopt when it exceeds 2^64 - 1.
std::optional<std::uint64_t> count_interpretations(const Signature& sig, std::size_t k);

struct EntailmentVerdict {
  // Canonically first model (by size, then stream order) of all of T in
  // which the goal fails.
  std::optional<Interpretation> counterexample;

  bool holds() const { return !counterexample.has_value(); }
};

// Scans sizes 1..max_size. A verdict without counterexample is evidence,
// not proof. Throws PreconditionError on an open formula.
EntailmentVerdict check_entailment(std::span<const Formula> theory, const Formula& goal,
                                   const Signature& sig, std::size_t max_size);

// True iff some hypothesis of d is false in m or every step of d is true in
// m. Throws PreconditionError on an open hypothesis or step.
bool check_soundness(const Deduction& d, const Interpretation& m);

}  // namespace dedkit

#endif  // DEDKIT_MODELS_HPP_
