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

// Proof transformations around the Deduction Theorem. None of these is
// trusted: every result is an ordinary Deduction that verify_deduction must
// accept. Preconditions are checked and reported as PreconditionError.

#ifndef DEDKIT_DEDTHM_HPP_
#define DEDKIT_DEDTHM_HPP_

#include <cstddef>

#include "dedkit/kernel.hpp"

namespace dedkit {

// The five-line derivation of a -> a from no hypotheses:
//   1. a -> ((a -> a) -> a)                                  A1
//   2. (a -> ((a -> a) -> a)) -> ((a -> (a -> a)) -> (a -> a))  A2
//   3. (a -> (a -> a)) -> (a -> a)                           mp 1 2
//   4. a -> (a -> a)                                         A1
//   5. a -> a                                                mp 4 3
Deduction prove_self_implication(const Formula& a, const Signature& sig);

// From a deduction of B whose last hypothesis is the closed formula a, builds
// a deduction of a -> B from the remaining hypotheses. Each original line
// B_i becomes a block ending in a -> B_i:
//
//   axiom / other hyp:  B_i, B_i -> (a -> B_i), a -> B_i
//   the hypothesis a:   the five lines of prove_self_implication(a)
//   mp j k:             A2 instance, then two mp lines
//   gen j x:            (A x)(a -> B_j), A5 instance, a -> (A x) B_j
//
// Dispatch is on the recorded justification, not on formula shape.
Deduction discharge(const Deduction& d, const Formula& a);

// Inverse direction: from a deduction of a -> B, adds a as the last
// hypothesis and appends "a ; hyp" and "B ; mp".
Deduction undischarge(const Deduction& d, const Formula& a);

// Chains a deduction of A from T with a deduction of B from T, A into a
// deduction of B from T. Lines of the second deduction that cite A as a
// hypothesis are re-derived by modus ponens from A and a spliced copy of
// prove_self_implication(A).
Deduction concat(const Deduction& d_a, const Deduction& d_b);

// Same steps, with the closed formula a appended to the hypotheses.
Deduction weaken(const Deduction& d, const Formula& a);

// Moves hypothesis `index` (1-based) to the end of the list and renumbers
// the hyp justifications to match.
Deduction move_hypothesis_to_end(const Deduction& d, std::size_t index);

}  // namespace dedkit

#endif  // DEDKIT_DEDTHM_HPP_
