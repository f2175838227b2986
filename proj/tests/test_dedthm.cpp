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

#include <algorithm>
#include <random>

#include "dedkit/dedthm.hpp"
#include "dedkit/error.hpp"
#include "dedkit/script.hpp"
#include "generators.hpp"

namespace dedkit {
namespace {

using testing::F;
using testing::test_signature;

Deduction make(std::vector<Formula> hyps, std::vector<Step> steps) {
  return Deduction{test_signature(), std::move(hyps), std::move(steps)};
}

bool contains(const Deduction& d, const Formula& f) {
  return std::any_of(d.steps.begin(), d.steps.end(),
                     [&](const Step& s) { return s.formula == f; });
}

TEST(SelfImplication, AtomicFormula) {
  Deduction d = prove_self_implication(F("P"), test_signature());
  ASSERT_TRUE(verify_deduction(d));
  EXPECT_TRUE(d.hypotheses.empty());
  ASSERT_EQ(d.steps.size(), 5u);
  EXPECT_EQ(d.conclusion(), F("(P -> P)"));
  std::vector<Formula> expected = {
      F("(P -> ((P -> P) -> P))"),
      F("((P -> ((P -> P) -> P)) -> ((P -> (P -> P)) -> (P -> P)))"),
      F("((P -> (P -> P)) -> (P -> P))"),
      F("(P -> (P -> P))"),
      F("(P -> P)"),
  };
  EXPECT_EQ(d.formulas(), expected);
}

TEST(SelfImplication, QuantifiedAndOpenFormulas) {
  Deduction d = prove_self_implication(F("(A x) R(x)"), test_signature());
  ASSERT_TRUE(verify_deduction(d));
  EXPECT_EQ(d.conclusion(), F("((A x) R(x) -> (A x) R(x))"));
  std::mt19937_64 rng(3);
  testing::FormulaGen gen(rng);
  for (int i = 0; i < 200; ++i) {
    Formula a = gen.open(3);
    Deduction e = prove_self_implication(a, test_signature());
    ASSERT_TRUE(verify_deduction(e));
    EXPECT_EQ(e.steps.size(), 5u);
    std::set<std::string> fv;
    for (const auto& f : e.formulas()) {
      auto s = free_vars(f);
      fv.insert(s.begin(), s.end());
    }
    EXPECT_EQ(fv, free_vars(a));
    EXPECT_EQ(free_vars(e.conclusion()), free_vars(a));
  }
}

TEST(Discharge, CaseHypothesisIsA) {
  Formula p = F("P");
  Deduction d = make({p}, {{p, ByHypothesis{1}}});
  Deduction out = discharge(d, p);
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_TRUE(out.hypotheses.empty());
  EXPECT_EQ(out.steps, prove_self_implication(p, test_signature()).steps);
}

TEST(Discharge, CaseOtherHypothesis) {
  Formula p = F("P"), q = F("Q");
  Deduction d = make({q, p}, {{q, ByHypothesis{1}}});
  Deduction out = discharge(d, p);
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.hypotheses, std::vector<Formula>{q});
  std::vector<Step> expected = {
      {q, ByHypothesis{1}},
      {F("(Q -> (P -> Q))"), ByAxiom{}},
      {F("(P -> Q)"), ByModusPonens{1, 2}},
  };
  EXPECT_EQ(out.steps, expected);
}

TEST(Discharge, CaseAxiom) {
  Formula p = F("P");
  Formula ax = F("(Q -> (P -> Q))");
  Deduction out = discharge(make({p}, {{ax, ByAxiom{}}}), p);
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.steps.size(), 3u);
  EXPECT_EQ(out.conclusion(), Formula::implies(p, ax));
}

TEST(Discharge, CaseModusPonens) {
  Formula p = F("P"), pq = F("(P -> Q)"), q = F("Q");
  Deduction d = make({pq, p}, {{pq, ByHypothesis{1}}, {p, ByHypothesis{2}}, {q, ByModusPonens{2, 1}}});
  ASSERT_TRUE(verify_deduction(d));
  Deduction out = discharge(d, p);
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.hypotheses, std::vector<Formula>{pq});
  EXPECT_EQ(out.conclusion(), F("(P -> Q)"));
  EXPECT_TRUE(contains(out, F("((P -> (P -> Q)) -> ((P -> P) -> (P -> Q)))")));
}

TEST(Discharge, CaseGeneralization) {
  Formula all = F("(A x) R(x)"), p = F("P");
  Deduction d = make({all, p}, {
                                   {all, ByHypothesis{1}},
                                   {F("((A x) R(x) -> R(x))"), ByAxiom{}},
                                   {F("R(x)"), ByModusPonens{1, 2}},
                                   {all, ByGeneralization{3, "x"}},
                               });
  ASSERT_TRUE(verify_deduction(d));
  Deduction out = discharge(d, p);
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.hypotheses, std::vector<Formula>{all});
  EXPECT_EQ(out.conclusion(), F("(P -> (A x) R(x))"));
  EXPECT_TRUE(contains(out, F("((A x) (P -> R(x)) -> (P -> (A x) R(x)))")));
  EXPECT_TRUE(contains(out, F("(A x) (P -> R(x))")));
}

TEST(Discharge, Preconditions) {
  Formula p = F("P"), rx = F("R(x)");
  // Open formula.
  EXPECT_THROW(discharge(make({rx}, {{rx, ByHypothesis{1}}}), rx), PreconditionError);
  // Not the last hypothesis.
  EXPECT_THROW(discharge(make({p, F("Q")}, {{p, ByHypothesis{1}}}), p), PreconditionError);
  // No hypotheses at all.
  EXPECT_THROW(discharge(make({}, {{F("(P -> (Q -> P))"), ByAxiom{}}}), p), PreconditionError);
  // Unverified input.
  EXPECT_THROW(discharge(make({p}, {{F("Q"), ByHypothesis{1}}}), p), PreconditionError);
}

TEST(Discharge, JustificationNotShapeDecidesTheCase) {
  // The hypothesis a is itself an axiom instance but is cited as hyp.
  Formula a = F("(P -> (Q -> P))");
  Deduction d = make({a}, {{a, ByAxiom{}}, {a, ByHypothesis{1}}});
  Deduction out = discharge(d, a);
  ASSERT_TRUE(verify_deduction(out));
  // 3 lines for the axiom, 5 for the hypothesis.
  EXPECT_EQ(out.steps.size(), 8u);
}

TEST(Undischarge, SelfImplication) {
  Deduction d = prove_self_implication(F("P"), test_signature());
  Deduction out = undischarge(d, F("P"));
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.steps.size(), 7u);
  EXPECT_EQ(out.hypotheses, std::vector<Formula>{F("P")});
  EXPECT_EQ(out.conclusion(), F("P"));
}

TEST(Undischarge, HypothesisImplication) {
  Formula pq = F("(P -> Q)");
  Deduction out = undischarge(make({pq}, {{pq, ByHypothesis{1}}}), F("P"));
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.hypotheses, (std::vector<Formula>{pq, F("P")}));
  EXPECT_EQ(out.conclusion(), F("Q"));
}

TEST(Undischarge, Errors) {
  Formula pq = F("(P -> Q)");
  EXPECT_THROW(undischarge(make({pq}, {{pq, ByHypothesis{1}}}), F("Q")), PreconditionError);
  Formula p = F("P");
  EXPECT_THROW(undischarge(make({p}, {{p, ByHypothesis{1}}}), p), PreconditionError);
  // Adding the open R(x) would invalidate the generalization on x.
  Formula ax = F("(R(x) -> (P -> R(x)))");
  Deduction d = make({}, {{ax, ByAxiom{}},
                          {F("(A x) (R(x) -> (P -> R(x)))"), ByGeneralization{1, "x"}},
                          {F("((A x) (R(x) -> (P -> R(x))) -> (R(x) -> (P -> R(x))))"), ByAxiom{}},
                          {ax, ByModusPonens{2, 3}}});
  ASSERT_TRUE(verify_deduction(d));
  EXPECT_THROW(undischarge(d, F("R(x)")), PreconditionError);
}

TEST(Concat, LemmaUsedOnce) {
  Formula p = F("P");
  Deduction d_a = make({p}, {{p, ByHypothesis{1}}});
  Deduction d_b = make({p, p}, {{p, ByHypothesis{2}}});
  Deduction out = concat(d_a, d_b);
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.hypotheses, std::vector<Formula>{p});
  EXPECT_EQ(out.conclusion(), p);
  // d_a's line, the self-implication splice, and the re-derived lemma.
  ASSERT_EQ(out.steps.size(), 7u);
  EXPECT_EQ(out.steps[0], d_a.steps[0]);
  EXPECT_EQ(out.steps[6].formula, p);
  EXPECT_EQ(out.steps[6].why, Justification{(ByModusPonens{1, 6})});
}

TEST(Concat, NoSpliceWhenLemmaUnused) {
  Formula p = F("P"), ax = F("(Q -> (P -> Q))");
  Deduction d_a = make({p}, {{p, ByHypothesis{1}}});
  Deduction d_b = make({p, p}, {{ax, ByAxiom{}}, {p, ByHypothesis{1}}});
  Deduction out = concat(d_a, d_b);
  ASSERT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.steps.size(), 3u);
}

TEST(Concat, ShapeMismatch) {
  Deduction d_a = prove_self_implication(F("P"), test_signature());
  Formula q = F("Q");
  Deduction d_b = make({F("(P -> P)"), q}, {{q, ByHypothesis{2}}});
  try {
    concat(d_a, d_b);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("hypothesis-shape mismatch"), std::string::npos);
  }
}

TEST(Weaken, Examples) {
  Formula p = F("P"), q = F("Q");
  Deduction d = make({p}, {{p, ByHypothesis{1}}});
  Deduction out = weaken(d, q);
  EXPECT_TRUE(verify_deduction(out));
  EXPECT_EQ(out.hypotheses, (std::vector<Formula>{p, q}));
  EXPECT_EQ(out.steps, d.steps);

  Deduction e = weaken(prove_self_implication(p, test_signature()), F("(A x) R(x)"));
  EXPECT_TRUE(verify_deduction(e));
  EXPECT_EQ(e.hypotheses, std::vector<Formula>{F("(A x) R(x)")});

  EXPECT_THROW(weaken(d, F("R(x)")), PreconditionError);
}

TEST(MoveHypothesis, ReindexesCitations) {
  Formula p = F("P"), q = F("Q");
  Deduction d = make({p, q}, {{p, ByHypothesis{1}}, {q, ByHypothesis{2}}});
  Deduction out = move_hypothesis_to_end(d, 1);
  EXPECT_EQ(out.hypotheses, (std::vector<Formula>{q, p}));
  EXPECT_TRUE(verify_deduction(out));
  EXPECT_THROW(move_hypothesis_to_end(d, 3), PreconditionError);
}

class Generated : public ::testing::Test {
 protected:
  std::mt19937_64 rng{2026};
  testing::DeductionGen gen{rng};
  testing::FormulaGen fgen{rng};
};

TEST_F(Generated, DischargeCorrectnessLengthAndRoundTrip) {
  testing::DeductionOptions opt;
  opt.closed_last_hypothesis = true;
  for (int i = 0; i < 300; ++i) {
    Deduction d = gen.make(opt);
    ASSERT_TRUE(verify_deduction(d)) << print_script(d);
    Formula a = d.hypotheses.back();
    Deduction out = discharge(d, a);
    Verdict v = verify_deduction(out);
    ASSERT_TRUE(v) << print_script(d) << "=>\n" << print_script(out) << v.reason;
    EXPECT_EQ(out.hypotheses,
              std::vector<Formula>(d.hypotheses.begin(), d.hypotheses.end() - 1));
    EXPECT_EQ(out.conclusion(), Formula::implies(a, d.conclusion()));
    EXPECT_LE(out.steps.size(), 5 * d.steps.size());
    Deduction back = undischarge(out, a);
    EXPECT_TRUE(verify_deduction(back));
    EXPECT_EQ(back.hypotheses, d.hypotheses);
    EXPECT_EQ(back.conclusion(), d.conclusion());
    EXPECT_EQ(parse_script(print_script(out)).steps, out.steps);
  }
}

TEST_F(Generated, ConcatComposesWitnesses) {
  for (int i = 0; i < 200; ++i) {
    Deduction d_a = gen.make({});
    testing::DeductionOptions opt;
    std::vector<Formula> hyps = d_a.hypotheses;
    hyps.push_back(d_a.conclusion());
    opt.hypotheses = hyps;
    Deduction d_b = gen.make(opt);
    ASSERT_TRUE(verify_deduction(d_b));
    Deduction out = concat(d_a, d_b);
    ASSERT_TRUE(verify_deduction(out)) << print_script(d_a) << print_script(d_b);
    EXPECT_EQ(out.hypotheses, d_a.hypotheses);
    EXPECT_EQ(out.conclusion(), d_b.conclusion());
  }
}

TEST_F(Generated, WeakenPreservesVerification) {
  for (int i = 0; i < 200; ++i) {
    Deduction d = gen.make({});
    Formula a = fgen.closed(3);
    Deduction out = weaken(d, a);
    EXPECT_TRUE(verify_deduction(out));
    EXPECT_EQ(out.formulas(), d.formulas());
  }
}

}  // namespace
}  // namespace dedkit
