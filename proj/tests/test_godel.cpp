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

#include <gtest/gtest.h>

#include <map>
#include <random>

#include "dedkit/dedthm.hpp"
#include "dedkit/error.hpp"
#include "dedkit/godel.hpp"
#include "dedkit/script.hpp"
#include "coding_oracle.hpp"
#include "generators.hpp"

namespace dedkit {
namespace {

using testing::F;
using testing::test_signature;

using testing::Oracle;

mpz_class pow2(unsigned long e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

Signature p_sig() { return parse_signature("sig P/0 Q/0 R/1 c/0 x y"); }

TEST(SymbolCode, Table) {
  SymbolCode codes(p_sig());
  EXPECT_EQ(codes.variable("x"), 4u);
  EXPECT_EQ(codes.variable("y"), 7u);
  EXPECT_EQ(codes.function("c"), 5u);
  EXPECT_EQ(codes.predicate("P"), 6u);
  EXPECT_EQ(codes.predicate("Q"), 9u);
  EXPECT_EQ(codes.predicate("R"), 12u);
  EXPECT_FALSE(codes.predicate("S"));
  EXPECT_FALSE(codes.lookup(8));
  EXPECT_EQ(codes.lookup(12)->symbol, "R");
  EXPECT_EQ(codes.lookup(12)->arity, 1);
  EXPECT_EQ(codes.lookup(2)->kind, SymbolCode::Kind::kImplies);
  EXPECT_EQ(codes.dump(),
            "code ~ 1\ncode -> 2\ncode A 3\ncode x 4\ncode c 5\ncode P 6\ncode y 7\n"
            "code Q 9\ncode R 12\n");
}

TEST(EncodeFormula, HandValues) {
  EXPECT_EQ(encode_formula(F("P"), SymbolCode(p_sig())), GodelNumber(64));
  Signature r = parse_signature("R/1 x");
  GodelNumber n = encode_formula(parse_formula("~R(x)", r), SymbolCode(r));
  EXPECT_EQ(n.to_string(), "911250");
  EXPECT_EQ(n.value(), Oracle::product({1, 6, 4}));
}

TEST(EncodeFormula, UnknownSymbol) {
  Signature small = parse_signature("P/0");
  EXPECT_THROW(encode_formula(F("Q"), SymbolCode(small)), EncodeError);
  EXPECT_THROW(encode_formula(F("R(x)"), SymbolCode(parse_signature("R/1"))), EncodeError);
}

TEST(DecodeFormula, Examples) {
  EXPECT_EQ(decode_formula(GodelNumber(64), p_sig()), F("P"));
  Signature r = parse_signature("R/1 x");
  EXPECT_EQ(decode_formula(GodelNumber(911250), r), parse_formula("~R(x)", r));
}

TEST(DecodeFormula, NotACode) {
  Signature sig = p_sig();
  auto bad = [](std::vector<unsigned long> exps) { return GodelNumber(Oracle::product(exps)); };
  EXPECT_THROW(decode_formula(GodelNumber(7), sig), DecodeError);        // gap
  EXPECT_THROW(decode_formula(GodelNumber(10), sig), DecodeError);       // 2 * 5
  EXPECT_THROW(decode_formula(GodelNumber(1), sig), DecodeError);        // empty
  EXPECT_THROW(decode_formula(bad({2}), sig), DecodeError);  // -> alone
  EXPECT_THROW(decode_formula(bad({6, 6}), sig), DecodeError);  // P P
  EXPECT_THROW(decode_formula(bad({8}), sig), DecodeError);  // unknown
  EXPECT_THROW(decode_formula(bad({3, 6, 6}), sig), DecodeError);  // (A P)
  EXPECT_THROW(decode_formula(bad({12}), sig), DecodeError);  // R without term
  EXPECT_THROW(decode_formula(bad({12, 6}), sig), DecodeError);  // R(P)
  EXPECT_THROW(decode_formula(bad({4}), sig), DecodeError);  // bare x
  EXPECT_THROW(decode_formula(bad({1000}), sig), DecodeError);  // beyond table
}

TEST(EncodeFormula, AgreesWithOracleAndRoundTrips) {
  Signature sig = p_sig();
  SymbolCode codes(sig);
  Oracle oracle(sig);
  std::vector<Formula> atoms = testing::test_atoms();
  atoms.push_back(Formula::atom("R", {Term::variable("y")}));
  auto all = testing::all_formulas(2, atoms, {"x", "y"});
  std::map<mpz_class, Formula> seen;
  for (const auto& f : all) {
    GodelNumber n = encode_formula(f, codes);
    ASSERT_TRUE(n.is_materialized());
    ASSERT_EQ(n.value(), oracle.code(f)) << print_formula(f);
    ASSERT_EQ(decode_formula(n, sig), f);
    ASSERT_TRUE(seen.emplace(n.value(), f).second) << "collision at " << print_formula(f);
  }
}

TEST(GodelNumber, TextForms) {
  EXPECT_EQ(GodelNumber().to_string(), "1");
  EXPECT_EQ(GodelNumber::parse("18446744073709551616").value(), pow2(64));
  EXPECT_EQ(GodelNumber::parse("  64\n"), GodelNumber(64));
  EXPECT_EQ(GodelNumber::parse("seq:1,6,4"), GodelNumber(911250));
  EXPECT_THROW(GodelNumber::parse("0"), DecodeError);
  EXPECT_THROW(GodelNumber::parse("-3"), DecodeError);
  EXPECT_THROW(GodelNumber::parse("12a"), DecodeError);
  EXPECT_THROW(GodelNumber::parse(""), DecodeError);
  EXPECT_THROW(GodelNumber::parse("seq:"), DecodeError);
  EXPECT_THROW(GodelNumber::parse("seq:1,,2"), DecodeError);
  EXPECT_THROW(GodelNumber::parse("seq:1,0"), DecodeError);

  GodelNumber big = GodelNumber::from_exponents({mpz_class(64), mpz_class("1000000000000")});
  EXPECT_FALSE(big.is_materialized());
  EXPECT_EQ(big.to_string(), "seq:64,1000000000000");
  EXPECT_EQ(GodelNumber::parse(big.to_string()), big);
}

TEST(GodelNumber, Exponents) {
  EXPECT_EQ(GodelNumber(911250).exponents(),
            (std::vector<mpz_class>{1, 6, 4}));
  EXPECT_FALSE(GodelNumber(10).exponents());
  EXPECT_TRUE(GodelNumber(1).exponents()->empty());
}

TEST(GodelNumber, MaterializationBoundary) {
  // 2^65536 has 65537 bits, one more than the limit.
  GodelNumber at = GodelNumber::from_exponents({mpz_class(65535)});
  GodelNumber over = GodelNumber::from_exponents({mpz_class(65536)});
  EXPECT_TRUE(at.is_materialized());
  EXPECT_FALSE(over.is_materialized());
  EXPECT_LT(at, over);
  // The same value given as an integer compares equal to its factored form.
  EXPECT_EQ(GodelNumber(pow2(65536)), over);
  EXPECT_EQ(over, GodelNumber(pow2(65536)));
}

// Ordering of factored numbers against exact integer arithmetic.
TEST(GodelNumber, OrderingMatchesExactComparison) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<unsigned long> e(1, 50000);
  std::vector<std::vector<unsigned long>> cases = {
      {70000}, {1, 44166}, {70001}, {1, 1, 30150}, {70000, 1}, {2, 44166}};
  for (int i = 0; i < 40; ++i) cases.push_back({e(rng) + 30000, e(rng) / 8 + 1});
  auto exact = [](const std::vector<unsigned long>& v) { return Oracle::product(v); };
  auto number = [](const std::vector<unsigned long>& v) {
    std::vector<mpz_class> m(v.begin(), v.end());
    return GodelNumber::from_exponents(m);
  };
  for (const auto& a : cases)
    for (const auto& b : cases) {
      int want = cmp(exact(a), exact(b));
      auto got = number(a) <=> number(b);
      EXPECT_EQ(want < 0, got < 0);
      EXPECT_EQ(want == 0, got == 0);
      EXPECT_EQ(want > 0, got > 0);
    }
}

TEST(EncodeDeduction, OneLine) {
  Formula p = F("P");
  Deduction d{p_sig(), {p}, {{p, ByHypothesis{1}}}};
  GodelNumber n = encode_deduction(d, SymbolCode(d.sig));
  EXPECT_EQ(n.to_string(), "18446744073709551616");
  EXPECT_EQ(n.value(), pow2(64));
}

TEST(EncodeDeduction, TwoLines) {
  Formula p = F("P"), ax = F("(P -> (Q -> P))");
  Deduction d{p_sig(), {p}, {{p, ByHypothesis{1}}, {ax, ByAxiom{}}}};
  GodelNumber n = encode_deduction(d, SymbolCode(d.sig));
  Oracle oracle(d.sig);
  EXPECT_FALSE(n.is_materialized());
  EXPECT_EQ(n.exponents(), (std::vector<mpz_class>{64, oracle.code(ax)}));
  EXPECT_EQ(decode_sequence(n, d.sig), d.formulas());
}

TEST(EncodeDeduction, RejectsUnverified) {
  Deduction d{p_sig(), {}, {{F("P"), ByAxiom{}}}};
  EXPECT_THROW(encode_deduction(d, SymbolCode(d.sig)), PreconditionError);
}

TEST(ProofCheck, Examples) {
  Signature sig = p_sig();
  GodelNumber x(pow2(64)), y(64);
  std::vector<Formula> t = {F("P")};
  EXPECT_TRUE(proof_check(x, y, t, sig));
  EXPECT_FALSE(proof_check(x, y, {}, sig));
  EXPECT_FALSE(proof_check(GodelNumber(7), y, t, sig));
  EXPECT_FALSE(proof_check(x, GodelNumber(512), t, sig));
  EXPECT_FALSE(proof_check(GodelNumber(1), y, t, sig));
  // y that is not a formula code.
  EXPECT_FALSE(proof_check(x, GodelNumber(7), t, sig));
}

TEST(Search, OneLineFromHypothesis) {
  Signature sig = p_sig();
  std::vector<Formula> t = {F("P")};
  auto r = search_deduction(F("P"), t, sig, {1, 1});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->deduction.steps.size(), 1u);
  EXPECT_EQ(r->number.value(), pow2(64));
}

TEST(Search, SelfImplication) {
  Signature sig = p_sig();
  Formula goal = F("(P -> P)");
  auto r = search_deduction(goal, {}, sig, {5, 2});
  ASSERT_TRUE(r);
  EXPECT_TRUE(verify_deduction(r->deduction));
  EXPECT_LE(r->deduction.steps.size(), 5u);
  EXPECT_EQ(r->deduction.conclusion(), goal);
  EXPECT_TRUE(proof_check(r->number, encode_formula(goal, SymbolCode(sig)), {}, sig));
  // Reproducible.
  auto again = search_deduction(goal, {}, sig, {5, 2});
  EXPECT_EQ(again->deduction.steps, r->deduction.steps);
  EXPECT_EQ(again->number, r->number);
  // Four nodes are not enough.
  EXPECT_FALSE(search_deduction(goal, {}, sig, {4, 2}));
}

TEST(Search, UnprovableAtomReportsNone) {
  Signature sig = p_sig();
  for (std::size_t len : {1u, 3u, 5u, 7u})
    EXPECT_FALSE(search_deduction(F("P"), {}, sig, {len, 1}));
  EXPECT_THROW(search_deduction(F("P"), {}, sig, {0, 1}), PreconditionError);
}

TEST(Search, UsesModusPonensAndGeneralization) {
  Signature sig = p_sig();
  std::vector<Formula> t = {F("P"), F("(P -> Q)")};
  auto r = search_deduction(F("Q"), t, sig, {3, 1});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->deduction.steps.size(), 3u);

  std::vector<Formula> u = {F("(A x) R(x)")};
  auto g = search_deduction(F("(A y) R(c)"), u, sig, {5, 1});
  ASSERT_TRUE(g);
  EXPECT_TRUE(verify_deduction(g->deduction));
  Formula goal = F("(A y) R(c)");
  EXPECT_TRUE(proof_check(g->number, encode_formula(goal, SymbolCode(sig)), u, sig));
}

TEST(TransportDischarge, SelfImplication) {
  Signature sig = p_sig();
  GodelNumber z = transport_discharge(GodelNumber(pow2(64)), F("P"), {}, sig);
  EXPECT_TRUE(proof_check(z, encode_formula(F("(P -> P)"), SymbolCode(sig)), {}, sig));
  EXPECT_EQ(decode_sequence(z, sig), prove_self_implication(F("P"), sig).formulas());
}

TEST(TransportDischarge, OtherHypothesis) {
  Signature sig = p_sig();
  std::vector<Formula> t = {F("Q")};
  GodelNumber x(pow2(512));  // Q is 2^9, so its one-line deduction is 2^512
  GodelNumber z = transport_discharge(x, F("P"), t, sig);
  EXPECT_TRUE(proof_check(z, encode_formula(F("(P -> Q)"), SymbolCode(sig)), t, sig));
  std::vector<Formula> expected = {F("Q"), F("(Q -> (P -> Q))"), F("(P -> Q)")};
  EXPECT_EQ(decode_sequence(z, sig), expected);
}

TEST(TransportDischarge, Errors) {
  Signature sig = p_sig();
  EXPECT_THROW(transport_discharge(GodelNumber(7), F("P"), {}, sig), PreconditionError);
  EXPECT_THROW(transport_discharge(GodelNumber(pow2(64)), F("Q"), {}, sig), PreconditionError);
  EXPECT_THROW(transport_discharge(GodelNumber(pow2(64)), F("R(x)"), {}, sig),
               PreconditionError);
}

TEST(TransportWeaken, Examples) {
  Signature sig = p_sig();
  SymbolCode codes(sig);
  std::vector<Formula> t = {F("P")};
  GodelNumber z = transport_weaken(GodelNumber(pow2(64)), F("Q"), t, sig);
  EXPECT_TRUE(proof_check(z, encode_formula(F("(Q -> P)"), codes), t, sig));
  EXPECT_EQ(decode_sequence(z, sig).size(), 3u);

  Deduction selfimp = prove_self_implication(F("P"), sig);
  GodelNumber u = encode_deduction(selfimp, codes);
  GodelNumber w = transport_weaken(u, F("P"), {}, sig);
  EXPECT_TRUE(proof_check(w, encode_formula(F("(P -> (P -> P))"), codes), {}, sig));

  EXPECT_THROW(transport_weaken(GodelNumber(7), F("Q"), t, sig), PreconditionError);
  EXPECT_THROW(transport_weaken(GodelNumber(pow2(64)), F("Q"), {}, sig), PreconditionError);
}

class GeneratedCodes : public ::testing::Test {
 protected:
  std::mt19937_64 rng{777};
  testing::DeductionGen gen{rng};
};

TEST_F(GeneratedCodes, RoundTripAndProofCheck) {
  for (int i = 0; i < 150; ++i) {
    Deduction d = gen.make({});
    SymbolCode codes(d.sig);
    GodelNumber n = encode_deduction(d, codes);
    ASSERT_EQ(decode_sequence(n, d.sig), d.formulas());
    ASSERT_EQ(GodelNumber::parse(n.to_string()), n);
    EXPECT_TRUE(proof_check(n, encode_formula(d.conclusion(), codes), d.hypotheses, d.sig));
  }
}

TEST_F(GeneratedCodes, PrefixesAreSmaller) {
  for (int i = 0; i < 100; ++i) {
    Deduction d = gen.make({});
    SymbolCode codes(d.sig);
    std::vector<Formula> fs = d.formulas();
    GodelNumber prev;
    for (std::size_t n = 1; n <= fs.size(); ++n) {
      GodelNumber cur = encode_sequence(std::span<const Formula>(fs.data(), n), codes);
      ASSERT_LT(prev, cur);
      ASSERT_GT(cur, prev);
      prev = cur;
    }
  }
}

TEST_F(GeneratedCodes, TransportDischargeIsAWitness) {
  testing::DeductionOptions opt;
  opt.closed_last_hypothesis = true;
  for (int i = 0; i < 100; ++i) {
    Deduction d = gen.make(opt);
    SymbolCode codes(d.sig);
    Formula a = d.hypotheses.back();
    std::vector<Formula> t(d.hypotheses.begin(), d.hypotheses.end() - 1);
    GodelNumber x = encode_deduction(d, codes);
    ASSERT_TRUE(proof_check(x, encode_formula(d.conclusion(), codes), d.hypotheses, d.sig));
    GodelNumber z = transport_discharge(x, a, t, d.sig);
    Formula goal = Formula::implies(a, d.conclusion());
    EXPECT_TRUE(proof_check(z, encode_formula(goal, codes), t, d.sig));
    // And back: undischarging the decoded witness recovers (T, a) |- B.
    Deduction back = undischarge(elaborate_witness(z, t, d.sig), a);
    EXPECT_TRUE(proof_check(encode_deduction(back, codes),
                            encode_formula(d.conclusion(), codes), d.hypotheses, d.sig));
  }
}

}  // namespace
}  // namespace dedkit
