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

// The trusted core. Everything else in the library produces deductions; only
// verify_deduction decides whether they are correct.
//
// Axiom schemas (B, C, D formulas; x a variable; t a term):
//
//   A1  B -> (C -> B)
//   A2  (B -> (C -> D)) -> ((B -> C) -> (B -> D))
//   A3  (~C -> ~B) -> ((~C -> B) -> C)
//   A4  (A x) B -> B[x:=t]          t free for x in B
//   A5  (A x)(B -> C) -> (B -> (A x) C)   x not free in B
//
// Rules: modus ponens, and generalisation on a variable that is free in no
// hypothesis.

#ifndef DEDKIT_KERNEL_HPP_
#define DEDKIT_KERNEL_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dedkit/syntax.hpp"

namespace dedkit {

enum class AxiomSchema { kA1 = 1, kA2, kA3, kA4, kA5 };

std::string_view schema_name(AxiomSchema s);

// The schema is never recorded; the verifier rediscovers it.
struct ByAxiom {
  friend bool operator==(const ByAxiom&, const ByAxiom&) = default;
};
// All indices are 1-based.
struct ByHypothesis {
  std::size_t index;
  friend bool operator==(const ByHypothesis&, const ByHypothesis&) = default;
};
struct ByModusPonens {
  std::size_t antecedent;   // step holding B
  std::size_t implication;  // step holding B -> C
  friend bool operator==(const ByModusPonens&, const ByModusPonens&) = default;
};
struct ByGeneralization {
  std::size_t premise;
  std::string variable;
  friend bool operator==(const ByGeneralization&, const ByGeneralization&) = default;
};

using Justification =
    std::variant<ByAxiom, ByHypothesis, ByModusPonens, ByGeneralization>;

struct Step {
  Formula formula;
  Justification why;
  friend bool operator==(const Step&, const Step&) = default;
};

struct Deduction {
  Signature sig;
  std::vector<Formula> hypotheses;
  std::vector<Step> steps;

  // Formula of the last step. Undefined on an empty deduction.
  const Formula& conclusion() const { return steps.back().formula; }
  std::vector<Formula> formulas() const;
};

struct Verdict {
  bool ok = true;
  std::size_t step = 0;  // 1-based index of the first bad step, 0 when ok
  std::string reason;

  explicit operator bool() const { return ok; }
  static Verdict success() { return {}; }
  static Verdict failure(std::size_t step, std::string reason) {
    return {false, step, std::move(reason)};
  }
};

// First schema of A1..A5 that f instantiates.
std::optional<AxiomSchema> match_axiom(const Formula& f);

Verdict verify_deduction(const Deduction& d);

// Finds a justification for each line, trying in order: an axiom schema, the
// first equal hypothesis, modus ponens over earlier pairs by increasing
// (implication, antecedent), generalisation over earlier lines by increasing
// index. Throws ElaborationError naming the first line that has none.
Deduction infer_justifications(std::span<const Formula> formulas,
                               std::span<const Formula> hypotheses,
                               const Signature& sig);

}  // namespace dedkit

#endif  // DEDKIT_KERNEL_HPP_
