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

// Arithmetization of formulas and deductions.
//
// A sequence <a_1, ..., a_k> of positive naturals is coded as
//
//   2^a_1 * 3^a_2 * 5^a_3 * ... * p_k^a_k
//
// A formula is coded as the sequence of its preorder token codes (no
// parentheses: arities come from the signature). A deduction is coded as the
// sequence of the codes of its step formulas; justifications are not coded.
//
// Deduction codes are towers: the exponent of each prime is itself a formula
// code, so all but the smallest deductions have far more digits than could
// ever be written out. GodelNumber therefore keeps such a number in factored
// form (its exponent list) and stores it as an integer only below
// 2^kMaterializeBits. Both forms denote the same natural number; equality
// and ordering are exact in either.

#ifndef DEDKIT_GODEL_HPP_
#define DEDKIT_GODEL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "dedkit/kernel.hpp"

namespace dedkit {

class GodelNumber {
 public:
  static constexpr unsigned long kMaterializeBits = 1ul << 16;

  // The code of the empty sequence.
  GodelNumber() : rep_(mpz_class(1)) {}
  // value must be >= 1.
  explicit GodelNumber(mpz_class value);

  // prod p_j^e_j with every e_j >= 1.
  static GodelNumber from_exponents(std::vector<mpz_class> exponents);

  // Decimal digits, or "seq:e1,e2,..." for the factored form. Throws
  // DecodeError on malformed text.
  static GodelNumber parse(std::string_view text);
  // Decimal when materialized, "seq:e1,e2,..." otherwise.
  std::string to_string() const;

  bool is_materialized() const { return std::holds_alternative<mpz_class>(rep_); }
  // Only when materialized.
  const mpz_class& value() const { return std::get<mpz_class>(rep_); }

  // Reads the number as a sequence code. nullopt when the prime support has
  // a gap; empty for 1.
  std::optional<std::vector<mpz_class>> exponents() const;

  friend bool operator==(const GodelNumber& a, const GodelNumber& b);
  friend std::strong_ordering operator<=>(const GodelNumber& a, const GodelNumber& b);

 private:
  std::variant<mpz_class, std::vector<mpz_class>> rep_;
};

// not 1, implies 2, forall 3; the i-th variable, function and predicate of
// the signature get 4+3i, 5+3i and 6+3i respectively.
class SymbolCode {
 public:
  enum class Kind { kNot, kImplies, kForAll, kVariable, kFunction, kPredicate };
  struct Entry {
    Kind kind;
    std::string symbol;
    int arity = 0;
  };

  static constexpr unsigned long kNot = 1;
  static constexpr unsigned long kImplies = 2;
  static constexpr unsigned long kForAll = 3;

  explicit SymbolCode(const Signature& sig) : sig_(sig) {}

  const Signature& signature() const { return sig_; }

  std::optional<unsigned long> variable(std::string_view name) const;
  std::optional<unsigned long> function(std::string_view name) const;
  std::optional<unsigned long> predicate(std::string_view name) const;

  std::optional<Entry> lookup(const mpz_class& code) const;

  // One "code <symbol> <n>" line per symbol, connectives first.
  std::string dump() const;

 private:
  Signature sig_;
};

// Throws EncodeError on a symbol without a code.
GodelNumber encode_formula(const Formula& f, const SymbolCode& codes);
// Throws DecodeError when n is not the code of a formula over sig.
Formula decode_formula(const GodelNumber& n, const Signature& sig);

// Codes any formula sequence; no verification.
GodelNumber encode_sequence(std::span<const Formula> formulas, const SymbolCode& codes);
std::vector<Formula> decode_sequence(const GodelNumber& n, const Signature& sig);

// Codes the step formulas of a verified deduction. Throws
// PreconditionError if d does not verify.
GodelNumber encode_deduction(const Deduction& d, const SymbolCode& codes);

// The proof relation: x codes a formula sequence that elaborates into a
// verified deduction from T whose last formula has code y. Total; any decode
// or elaboration failure is simply false.
bool proof_check(const GodelNumber& x, const GodelNumber& y,
                 std::span<const Formula> theory, const Signature& sig);

struct SearchBounds {
  std::size_t max_len = 1;
  std::size_t pool_depth = 1;
};

struct SearchResult {
  Deduction deduction;
  GodelNumber number;
};

// Bounded, deterministic proof search. Returns a deduction of goal from
// theory whose proof tree has at most max_len nodes (so at most max_len
// lines), together with its code; nullopt means the bound was exhausted, not
// that goal is unprovable. See search.cpp for the search order.
std::optional<SearchResult> search_deduction(const Formula& goal,
                                             std::span<const Formula> theory,
                                             const Signature& sig,
                                             SearchBounds bounds);

// Maps a witness x of (T, a) |- B to a witness of T |- a -> B by decoding,
// discharging a, and re-encoding. Throws PreconditionError on an invalid
// witness or an open a.
GodelNumber transport_discharge(const GodelNumber& x, const Formula& a,
                                std::span<const Formula> theory, const Signature& sig);

// Maps a witness u of T |- B to a witness of T |- a -> B by appending the A1
// instance B -> (a -> B) and one modus ponens line.
GodelNumber transport_weaken(const GodelNumber& u, const Formula& a,
                             std::span<const Formula> theory, const Signature& sig);

// Decodes and elaborates a witness against theory. Throws PreconditionError
// if x is not a valid deduction code.
Deduction elaborate_witness(const GodelNumber& x, std::span<const Formula> theory,
                            const Signature& sig);

}  // namespace dedkit

#endif  // DEDKIT_GODEL_HPP_
