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

#include "dedkit/godel.hpp"

#include <mpfr.h>

#include <algorithm>
#include <bit>
#include <cctype>

#include "dedkit/dedthm.hpp"
#include "dedkit/error.hpp"
#include "primes.hpp"

namespace dedkit {

// ---------------------------------------------------------------------------
// GodelNumber

GodelNumber::GodelNumber(mpz_class value) : rep_(std::move(value)) {
  if (std::get<mpz_class>(rep_) < 1) throw DecodeError("Godel numbers start at 1");
}

GodelNumber GodelNumber::from_exponents(std::vector<mpz_class> exponents) {
  for (const auto& e : exponents)
    if (e < 1) throw PreconditionError("sequence exponents must be positive");

  GodelNumber out;
  mpz_class product = 1;
  PrimeWalker primes;
  for (const auto& e : exponents) {
    unsigned long p = primes.next();
    // p^e >= 2^(e * (bits(p) - 1)); bail out before computing a huge power.
    mpz_class floor_bits = e * static_cast<unsigned long>(std::bit_width(p) - 1);
    if (floor_bits > kMaterializeBits) {
      out.rep_ = std::move(exponents);
      return out;
    }
    mpz_class power;
    mpz_ui_pow_ui(power.get_mpz_t(), p, e.get_ui());
    product *= power;
    if (mpz_sizeinbase(product.get_mpz_t(), 2) > kMaterializeBits) {
      out.rep_ = std::move(exponents);
      return out;
    }
  }
  out.rep_ = std::move(product);
  return out;
}

GodelNumber GodelNumber::parse(std::string_view text) {
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  if (text.starts_with("seq:")) {
    text.remove_prefix(4);
    std::vector<mpz_class> exps;
    while (true) {
      auto comma = text.find(',');
      std::string_view item = text.substr(0, comma);
      if (!all_digits(item))
        throw DecodeError("malformed exponent '" + std::string(item) + "'");
      mpz_class e(std::string(item), 10);
      if (e < 1) throw DecodeError("sequence exponents must be positive");
      exps.push_back(std::move(e));
      if (comma == std::string_view::npos) break;
      text.remove_prefix(comma + 1);
    }
    return from_exponents(std::move(exps));
  }
  if (!all_digits(text))
    throw DecodeError("not a decimal number: '" + std::string(text) + "'");
  return GodelNumber(mpz_class(std::string(text), 10));
}

std::string GodelNumber::to_string() const {
  if (is_materialized()) return value().get_str();
  std::string out = "seq:";
  const auto& exps = std::get<std::vector<mpz_class>>(rep_);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ',';
    out += exps[i].get_str();
  }
  return out;
}

std::optional<std::vector<mpz_class>> GodelNumber::exponents() const {
  if (!is_materialized()) return std::get<std::vector<mpz_class>>(rep_);
  std::vector<mpz_class> out;
  mpz_class n = value();
  PrimeWalker primes;
  while (n > 1) {
    mpz_class p = primes.next();
    mp_bitcnt_t e = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    if (e == 0) return std::nullopt;
    out.emplace_back(static_cast<unsigned long>(e));
  }
  return out;
}

namespace {

bool exceeds_limit(const mpz_class& v) {
  return mpz_sizeinbase(v.get_mpz_t(), 2) > GodelNumber::kMaterializeBits;
}

// RAII wrapper; MPFR has no C++ value type of its own.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~Real() { mpfr_clear(v_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

// log2 of a number given either as an integer or as a prime-exponent list,
// accumulated into sum; |terms| accumulates into magnitude for the error
// bound.
void add_log2(const GodelNumber& n, int sign, mpfr_prec_t prec, mpfr_ptr sum,
              mpfr_ptr magnitude) {
  Real term(prec), tmp(prec);
  auto accumulate = [&] {
    if (sign < 0) mpfr_neg(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(sum, sum, term.get(), MPFR_RNDN);
    mpfr_abs(tmp.get(), term.get(), MPFR_RNDN);
    mpfr_add(magnitude, magnitude, tmp.get(), MPFR_RNDU);
    mpfr_add_ui(magnitude, magnitude, 1, MPFR_RNDU);
  };
  if (n.is_materialized()) {
    mpfr_set_z(term.get(), n.value().get_mpz_t(), MPFR_RNDN);
    mpfr_log2(term.get(), term.get(), MPFR_RNDN);
    accumulate();
    return;
  }
  PrimeWalker primes;
  const auto exps = n.exponents();
  for (const auto& e : *exps) {
    mpfr_set_ui(term.get(), primes.next(), MPFR_RNDN);
    mpfr_log2(term.get(), term.get(), MPFR_RNDN);
    mpfr_set_z(tmp.get(), e.get_mpz_t(), MPFR_RNDN);
    mpfr_mul(term.get(), term.get(), tmp.get(), MPFR_RNDN);
    accumulate();
  }
}

std::size_t max_exponent_bits(const GodelNumber& n) {
  if (n.is_materialized()) return mpz_sizeinbase(n.value().get_mpz_t(), 2);
  std::size_t bits = 0;
  const auto exps = n.exponents();
  for (const auto& e : *exps)
    bits = std::max(bits, mpz_sizeinbase(e.get_mpz_t(), 2));
  return bits;
}

// Sign of log2(a) - log2(b) for a != b, refined until it is certain.
std::strong_ordering compare_by_logarithm(const GodelNumber& a, const GodelNumber& b) {
  mpfr_prec_t prec = static_cast<mpfr_prec_t>(
      std::max(max_exponent_bits(a), max_exponent_bits(b)) + 128);
  while (true) {
    Real sum(prec), magnitude(64), bound(64);
    mpfr_set_zero(sum.get(), 1);
    mpfr_set_zero(magnitude.get(), 1);
    add_log2(a, +1, prec, sum.get(), magnitude.get());
    add_log2(b, -1, prec, sum.get(), magnitude.get());
    // Each term carries a few ulps of relative error.
    mpfr_mul_2si(bound.get(), magnitude.get(), 8 - static_cast<long>(prec), MPFR_RNDU);
    if (mpfr_cmpabs(sum.get(), bound.get()) > 0)
      return mpfr_sgn(sum.get()) > 0 ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
    prec *= 2;
  }
}

}  // namespace

bool operator==(const GodelNumber& a, const GodelNumber& b) {
  if (a.is_materialized() && b.is_materialized()) return a.value() == b.value();
  if (!a.is_materialized() && !b.is_materialized())
    return std::get<std::vector<mpz_class>>(a.rep_) ==
           std::get<std::vector<mpz_class>>(b.rep_);
  const GodelNumber& m = a.is_materialized() ? a : b;
  const GodelNumber& f = a.is_materialized() ? b : a;
  // A factored number is at least 2^kMaterializeBits.
  if (!exceeds_limit(m.value())) return false;
  return m.exponents() == f.exponents();
}

std::strong_ordering operator<=>(const GodelNumber& a, const GodelNumber& b) {
  if (a.is_materialized() && b.is_materialized()) {
    int c = cmp(a.value(), b.value());
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }
  if (a == b) return std::strong_ordering::equal;
  if (a.is_materialized() && !exceeds_limit(a.value())) return std::strong_ordering::less;
  if (b.is_materialized() && !exceeds_limit(b.value())) return std::strong_ordering::greater;
  if (!a.is_materialized() && !b.is_materialized()) {
    // Pointwise domination settles most cases without logarithms.
    const auto& ea = std::get<std::vector<mpz_class>>(a.rep_);
    const auto& eb = std::get<std::vector<mpz_class>>(b.rep_);
    auto dominated = [](const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
      if (x.size() > y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] > y[i]) return false;
      return true;
    };
    if (dominated(ea, eb)) return std::strong_ordering::less;
    if (dominated(eb, ea)) return std::strong_ordering::greater;
  }
  return compare_by_logarithm(a, b);
}

// ---------------------------------------------------------------------------
// SymbolCode

namespace {

template <typename Seq, typename Name>
std::optional<unsigned long> position_code(const Seq& seq, Name name_of,
                                           std::string_view name, unsigned long base) {
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (name_of(seq[i]) == name) return base + 3 * i;
  return std::nullopt;
}

}  // namespace

std::optional<unsigned long> SymbolCode::variable(std::string_view name) const {
  return position_code(sig_.variables(), [](const std::string& s) -> const std::string& { return s; },
                       name, 4);
}

std::optional<unsigned long> SymbolCode::function(std::string_view name) const {
  return position_code(sig_.functions(), [](const SymbolDecl& d) -> const std::string& { return d.name; },
                       name, 5);
}

std::optional<unsigned long> SymbolCode::predicate(std::string_view name) const {
  return position_code(sig_.predicates(), [](const SymbolDecl& d) -> const std::string& { return d.name; },
                       name, 6);
}

std::optional<SymbolCode::Entry> SymbolCode::lookup(const mpz_class& code) const {
  if (code < 1 || !code.fits_ulong_p()) return std::nullopt;
  unsigned long c = code.get_ui();
  if (c == kNot) return Entry{Kind::kNot, "~", 1};
  if (c == kImplies) return Entry{Kind::kImplies, "->", 2};
  if (c == kForAll) return Entry{Kind::kForAll, "A", 2};
  std::size_t i = (c - 4) / 3;
  switch ((c - 4) % 3) {
    case 0:
      if (i < sig_.variables().size()) return Entry{Kind::kVariable, sig_.variables()[i], 0};
      break;
    case 1:
      if (i < sig_.functions().size())
        return Entry{Kind::kFunction, sig_.functions()[i].name, sig_.functions()[i].arity};
      break;
    case 2:
      if (i < sig_.predicates().size())
        return Entry{Kind::kPredicate, sig_.predicates()[i].name, sig_.predicates()[i].arity};
      break;
  }
  return std::nullopt;
}

std::string SymbolCode::dump() const {
  std::string out = "code ~ 1\ncode -> 2\ncode A 3\n";
  std::size_t n = std::max({sig_.variables().size(), sig_.functions().size(),
                            sig_.predicates().size()});
  for (std::size_t i = 0; i < n; ++i) {
    if (i < sig_.variables().size())
      out += "code " + sig_.variables()[i] + " " + std::to_string(4 + 3 * i) + "\n";
    if (i < sig_.functions().size())
      out += "code " + sig_.functions()[i].name + " " + std::to_string(5 + 3 * i) + "\n";
    if (i < sig_.predicates().size())
      out += "code " + sig_.predicates()[i].name + " " + std::to_string(6 + 3 * i) + "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formula and sequence coding

namespace {

void term_tokens(const Term& t, const SymbolCode& codes, std::vector<unsigned long>& out) {
  if (t.is_variable()) {
    auto c = codes.variable(t.name());
    if (!c) throw EncodeError("variable '" + t.name() + "' has no code in the signature");
    out.push_back(*c);
    return;
  }
  auto c = codes.function(t.name());
  if (!c) throw EncodeError("function '" + t.name() + "' has no code in the signature");
  out.push_back(*c);
  for (const auto& a : t.args()) term_tokens(a, codes, out);
}

void formula_tokens(const Formula& f, const SymbolCode& codes,
                    std::vector<unsigned long>& out) {
  switch (f.kind()) {
    case Connective::kAtom: {
      auto c = codes.predicate(f.name());
      if (!c) throw EncodeError("predicate '" + f.name() + "' has no code in the signature");
      out.push_back(*c);
      for (const auto& a : f.args()) term_tokens(a, codes, out);
      return;
    }
    case Connective::kNot:
      out.push_back(SymbolCode::kNot);
      formula_tokens(f.operand(), codes, out);
      return;
    case Connective::kImplies:
      out.push_back(SymbolCode::kImplies);
      formula_tokens(f.lhs(), codes, out);
      formula_tokens(f.rhs(), codes, out);
      return;
    case Connective::kForAll: {
      auto v = codes.variable(f.name());
      if (!v) throw EncodeError("variable '" + f.name() + "' has no code in the signature");
      out.push_back(SymbolCode::kForAll);
      out.push_back(*v);
      formula_tokens(f.operand(), codes, out);
      return;
    }
  }
}

class TokenReader {
 public:
  TokenReader(const std::vector<mpz_class>& toks, const SymbolCode& codes)
      : toks_(toks), codes_(codes) {}

  Formula formula() {
    SymbolCode::Entry e = next("a formula");
    switch (e.kind) {
      case SymbolCode::Kind::kNot:
        return Formula::negation(formula());
      case SymbolCode::Kind::kImplies: {
        Formula lhs = formula();
        return Formula::implies(lhs, formula());
      }
      case SymbolCode::Kind::kForAll: {
        SymbolCode::Entry v = next("a quantified variable");
        if (v.kind != SymbolCode::Kind::kVariable)
          throw DecodeError("token " + std::to_string(pos_) + ": quantifier not followed by a variable");
        return Formula::forall(v.symbol, formula());
      }
      case SymbolCode::Kind::kPredicate: {
        std::vector<Term> args;
        for (int i = 0; i < e.arity; ++i) args.push_back(term());
        return Formula::atom(e.symbol, std::move(args));
      }
      default:
        throw DecodeError("token " + std::to_string(pos_) + ": term symbol '" + e.symbol +
                          "' where a formula was expected");
    }
  }

  bool done() const { return pos_ == toks_.size(); }

 private:
  Term term() {
    SymbolCode::Entry e = next("a term");
    if (e.kind == SymbolCode::Kind::kVariable) return Term::variable(e.symbol);
    if (e.kind != SymbolCode::Kind::kFunction)
      throw DecodeError("token " + std::to_string(pos_) + ": '" + e.symbol +
                        "' where a term was expected");
    std::vector<Term> args;
    for (int i = 0; i < e.arity; ++i) args.push_back(term());
    return Term::apply(e.symbol, std::move(args));
  }

  SymbolCode::Entry next(const char* wanted) {
    if (pos_ >= toks_.size())
      throw DecodeError(std::string("truncated token stream: expected ") + wanted);
    const mpz_class& code = toks_[pos_++];
    auto e = codes_.lookup(code);
    if (!e)
      throw DecodeError("token " + std::to_string(pos_) + ": unknown symbol code " +
                        (mpz_sizeinbase(code.get_mpz_t(), 10) < 40 ? code.get_str() : "(large)"));
    return *e;
  }

  const std::vector<mpz_class>& toks_;
  const SymbolCode& codes_;
  std::size_t pos_ = 0;
};

}  // namespace

GodelNumber encode_formula(const Formula& f, const SymbolCode& codes) {
  std::vector<unsigned long> toks;
  formula_tokens(f, codes, toks);
  // Formula codes stay materialized whatever their size: they are the
  // exponents of deduction codes.
  mpz_class product = 1, power;
  PrimeWalker primes;
  for (unsigned long t : toks) {
    mpz_ui_pow_ui(power.get_mpz_t(), primes.next(), t);
    product *= power;
  }
  return GodelNumber(std::move(product));
}

Formula decode_formula(const GodelNumber& n, const Signature& sig) {
  auto toks = n.exponents();
  if (!toks) throw DecodeError("not a sequence code: gap in prime support");
  if (toks->empty()) throw DecodeError("1 codes the empty sequence, not a formula");
  SymbolCode codes(sig);
  TokenReader reader(*toks, codes);
  Formula f = reader.formula();
  if (!reader.done()) throw DecodeError("overlong token stream after a complete formula");
  return f;
}

GodelNumber encode_sequence(std::span<const Formula> formulas, const SymbolCode& codes) {
  std::vector<mpz_class> exps;
  exps.reserve(formulas.size());
  for (const auto& f : formulas) {
    GodelNumber g = encode_formula(f, codes);
    exps.push_back(g.value());
  }
  return GodelNumber::from_exponents(std::move(exps));
}

std::vector<Formula> decode_sequence(const GodelNumber& n, const Signature& sig) {
  auto exps = n.exponents();
  if (!exps) throw DecodeError("not a sequence code: gap in prime support");
  std::vector<Formula> out;
  out.reserve(exps->size());
  for (auto& e : *exps) out.push_back(decode_formula(GodelNumber(std::move(e)), sig));
  return out;
}

GodelNumber encode_deduction(const Deduction& d, const SymbolCode& codes) {
  if (Verdict v = verify_deduction(d); !v)
    throw PreconditionError("deduction does not verify (step " + std::to_string(v.step) +
                            ": " + v.reason + ")");
  auto formulas = d.formulas();
  return encode_sequence(formulas, codes);
}

// ---------------------------------------------------------------------------
// The proof relation and witness transport

Deduction elaborate_witness(const GodelNumber& x, std::span<const Formula> theory,
                            const Signature& sig) {
  try {
    std::vector<Formula> lines = decode_sequence(x, sig);
    if (lines.empty()) throw PreconditionError("invalid witness: empty sequence");
    Deduction d = infer_justifications(lines, theory, sig);
    if (Verdict v = verify_deduction(d); !v)
      throw PreconditionError("invalid witness: step " + std::to_string(v.step) + ": " +
                              v.reason);
    return d;
  } catch (const PreconditionError&) {
    throw;
  } catch (const Error& e) {
    throw PreconditionError(std::string("invalid witness: ") + e.what());
  }
}

bool proof_check(const GodelNumber& x, const GodelNumber& y,
                 std::span<const Formula> theory, const Signature& sig) {
  try {
    Deduction d = elaborate_witness(x, theory, sig);
    return encode_formula(d.conclusion(), SymbolCode(sig)) == y;
  } catch (const Error&) {
    return false;
  }
}

namespace {

void require_closed(const Formula& a) {
  if (!is_closed(a))
    throw PreconditionError("formula " + print_formula(a) + " is not closed");
}

}  // namespace

GodelNumber transport_discharge(const GodelNumber& x, const Formula& a,
                                std::span<const Formula> theory, const Signature& sig) {
  require_closed(a);
  std::vector<Formula> extended(theory.begin(), theory.end());
  extended.push_back(a);
  Deduction d = elaborate_witness(x, extended, sig);
  return encode_deduction(discharge(d, a), SymbolCode(sig));
}

GodelNumber transport_weaken(const GodelNumber& u, const Formula& a,
                             std::span<const Formula> theory, const Signature& sig) {
  require_closed(a);
  Deduction d = elaborate_witness(u, theory, sig);
  Formula b = d.conclusion();
  Formula a_b = Formula::implies(a, b);
  std::size_t b_line = d.steps.size();
  d.steps.push_back({Formula::implies(b, a_b), ByAxiom{}});
  d.steps.push_back({a_b, ByModusPonens{b_line, b_line + 1}});
  return encode_deduction(d, SymbolCode(sig));
}

}  // namespace dedkit
