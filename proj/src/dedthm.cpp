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

#include "dedkit/dedthm.hpp"

#include "dedkit/error.hpp"

namespace dedkit {

namespace {

void require_verified(const Deduction& d, const char* what) {
  Verdict v = verify_deduction(d);
  if (!v)
    throw PreconditionError(std::string(what) + " does not verify (step " +
                            std::to_string(v.step) + ": " + v.reason + ")");
}

void require_closed(const Formula& a) {
  if (!is_closed(a))
    throw PreconditionError("formula " + print_formula(a) + " is not closed");
}

// Appends a step and returns its 1-based index.
std::size_t emit(std::vector<Step>& out, Formula f, Justification why) {
  out.push_back({std::move(f), std::move(why)});
  return out.size();
}

// Appends the self-implication derivation of a; returns the index of a -> a.
std::size_t emit_self_implication(std::vector<Step>& out, const Formula& a) {
  Formula aa = Formula::implies(a, a);
  Formula s1 = Formula::implies(a, Formula::implies(aa, a));
  Formula s4 = Formula::implies(a, aa);
  Formula s3 = Formula::implies(s4, aa);
  Formula s2 = Formula::implies(s1, s3);
  std::size_t i1 = emit(out, s1, ByAxiom{});
  std::size_t i2 = emit(out, s2, ByAxiom{});
  std::size_t i3 = emit(out, s3, ByModusPonens{i1, i2});
  std::size_t i4 = emit(out, s4, ByAxiom{});
  return emit(out, aa, ByModusPonens{i4, i3});
}

}  // namespace

Deduction prove_self_implication(const Formula& a, const Signature& sig) {
  Deduction d{sig, {}, {}};
  emit_self_implication(d.steps, a);
  return d;
}

Deduction discharge(const Deduction& d, const Formula& a) {
  require_closed(a);
  if (d.hypotheses.empty() || !(d.hypotheses.back() == a))
    throw PreconditionError("formula " + print_formula(a) +
                            " is not the last hypothesis of the deduction");
  require_verified(d, "input deduction");

  const std::size_t discharged = d.hypotheses.size();
  Deduction out{d.sig, {d.hypotheses.begin(), d.hypotheses.end() - 1}, {}};
  out.steps.reserve(5 * d.steps.size());
  // translated[i]: output line proving a -> B_{i+1}.
  std::vector<std::size_t> translated;
  translated.reserve(d.steps.size());

  for (const Step& step : d.steps) {
    const Formula& b = step.formula;
    Formula a_b = Formula::implies(a, b);

    if (const auto* h = std::get_if<ByHypothesis>(&step.why);
        h && h->index == discharged) {
      translated.push_back(emit_self_implication(out.steps, a));

    } else if (std::holds_alternative<ByAxiom>(step.why) ||
               std::holds_alternative<ByHypothesis>(step.why)) {
      std::size_t i = emit(out.steps, b, step.why);
      std::size_t j = emit(out.steps, Formula::implies(b, a_b), ByAxiom{});
      translated.push_back(emit(out.steps, a_b, ByModusPonens{i, j}));

    } else if (const auto* mp = std::get_if<ByModusPonens>(&step.why)) {
      const Formula& bj = d.steps[mp->antecedent - 1].formula;
      std::size_t t_j = translated[mp->antecedent - 1];
      std::size_t t_k = translated[mp->implication - 1];
      Formula a_bj = Formula::implies(a, bj);
      Formula a_bk = Formula::implies(a, Formula::implies(bj, b));
      Formula tail = Formula::implies(a_bj, a_b);
      std::size_t ax = emit(out.steps, Formula::implies(a_bk, tail), ByAxiom{});
      std::size_t m1 = emit(out.steps, tail, ByModusPonens{t_k, ax});
      translated.push_back(emit(out.steps, a_b, ByModusPonens{t_j, m1}));

    } else {
      const auto& g = std::get<ByGeneralization>(step.why);
      const Formula& bj = d.steps[g.premise - 1].formula;
      Formula general = Formula::forall(g.variable, Formula::implies(a, bj));
      std::size_t gi = emit(out.steps, general,
                            ByGeneralization{translated[g.premise - 1], g.variable});
      std::size_t ax = emit(out.steps, Formula::implies(general, a_b), ByAxiom{});
      translated.push_back(emit(out.steps, a_b, ByModusPonens{gi, ax}));
    }
  }
  return out;
}

Deduction undischarge(const Deduction& d, const Formula& a) {
  require_verified(d, "input deduction");
  const Formula& c = d.conclusion();
  if (!c.is_implies() || !(c.lhs() == a))
    throw PreconditionError("conclusion " + print_formula(c) +
                            " is not an implication with antecedent " + print_formula(a));
  Deduction out = d;
  out.hypotheses.push_back(a);
  std::size_t conclusion_line = out.steps.size();
  std::size_t hyp_line = emit(out.steps, a, ByHypothesis{out.hypotheses.size()});
  emit(out.steps, c.rhs(), ByModusPonens{hyp_line, conclusion_line});
  // An open a can clash with a generalisation made in d.
  if (Verdict v = verify_deduction(out); !v)
    throw PreconditionError("adding " + print_formula(a) +
                            " as a hypothesis invalidates step " + std::to_string(v.step) +
                            ": " + v.reason);
  return out;
}

Deduction concat(const Deduction& d_a, const Deduction& d_b) {
  require_verified(d_a, "first deduction");
  require_verified(d_b, "second deduction");
  const Formula& a = d_a.conclusion();
  const std::size_t a_index = d_a.hypotheses.size() + 1;
  bool shape_ok = d_b.hypotheses.size() == a_index &&
                  d_b.hypotheses.back() == a &&
                  std::equal(d_a.hypotheses.begin(), d_a.hypotheses.end(),
                             d_b.hypotheses.begin());
  if (!shape_ok)
    throw PreconditionError(
        "hypothesis-shape mismatch: second deduction must have the first's "
        "hypotheses followed by its conclusion");

  Deduction out{d_a.sig, d_a.hypotheses, d_a.steps};
  const std::size_t a_line = out.steps.size();

  bool cites_a = false;
  for (const auto& s : d_b.steps)
    if (const auto* h = std::get_if<ByHypothesis>(&s.why); h && h->index == a_index)
      cites_a = true;
  std::size_t identity_line = cites_a ? emit_self_implication(out.steps, a) : 0;

  const std::size_t offset = out.steps.size();
  for (const auto& s : d_b.steps) {
    Justification why = s.why;
    if (auto* h = std::get_if<ByHypothesis>(&why); h && h->index == a_index) {
      why = ByModusPonens{a_line, identity_line};
    } else if (auto* mp = std::get_if<ByModusPonens>(&why)) {
      mp->antecedent += offset;
      mp->implication += offset;
    } else if (auto* g = std::get_if<ByGeneralization>(&why)) {
      g->premise += offset;
    }
    out.steps.push_back({s.formula, std::move(why)});
  }
  return out;
}

Deduction weaken(const Deduction& d, const Formula& a) {
  require_closed(a);
  require_verified(d, "input deduction");
  Deduction out = d;
  out.hypotheses.push_back(a);
  return out;
}

Deduction move_hypothesis_to_end(const Deduction& d, std::size_t index) {
  const std::size_t n = d.hypotheses.size();
  if (index < 1 || index > n)
    throw PreconditionError("hypothesis index " + std::to_string(index) + " out of range");
  Deduction out = d;
  out.hypotheses.erase(out.hypotheses.begin() + static_cast<std::ptrdiff_t>(index - 1));
  out.hypotheses.push_back(d.hypotheses[index - 1]);
  for (auto& s : out.steps) {
    if (auto* h = std::get_if<ByHypothesis>(&s.why)) {
      if (h->index == index)
        h->index = n;
      else if (h->index > index)
        --h->index;
    }
  }
  return out;
}

}  // namespace dedkit
