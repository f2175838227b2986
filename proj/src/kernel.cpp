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

#include "dedkit/kernel.hpp"

#include <unordered_map>

#include "dedkit/error.hpp"

namespace dedkit {

std::string_view schema_name(AxiomSchema s) {
  switch (s) {
    case AxiomSchema::kA1: return "A1";
    case AxiomSchema::kA2: return "A2";
    case AxiomSchema::kA3: return "A3";
    case AxiomSchema::kA4: return "A4";
    case AxiomSchema::kA5: return "A5";
  }
  return "?";
}

std::vector<Formula> Deduction::formulas() const {
  std::vector<Formula> out;
  out.reserve(steps.size());
  for (const auto& s : steps) out.push_back(s.formula);
  return out;
}

namespace {

bool is_a1(const Formula& f) {
  // B -> (C -> B)
  return f.is_implies() && f.rhs().is_implies() && f.rhs().rhs() == f.lhs();
}

bool is_a2(const Formula& f) {
  // (B -> (C -> D)) -> ((B -> C) -> (B -> D))
  if (!f.is_implies()) return false;
  const Formula& l = f.lhs();
  const Formula& r = f.rhs();
  if (!l.is_implies() || !l.rhs().is_implies()) return false;
  if (!r.is_implies() || !r.lhs().is_implies() || !r.rhs().is_implies()) return false;
  const Formula& b = l.lhs();
  const Formula& c = l.rhs().lhs();
  const Formula& d = l.rhs().rhs();
  return r.lhs().lhs() == b && r.lhs().rhs() == c && r.rhs().lhs() == b &&
         r.rhs().rhs() == d;
}

bool is_a3(const Formula& f) {
  // (~C -> ~B) -> ((~C -> B) -> C)
  if (!f.is_implies()) return false;
  const Formula& l = f.lhs();
  const Formula& r = f.rhs();
  if (!l.is_implies() || !l.lhs().is_not() || !l.rhs().is_not()) return false;
  if (!r.is_implies() || !r.lhs().is_implies()) return false;
  const Formula& c = l.lhs().operand();
  const Formula& b = l.rhs().operand();
  return r.lhs().lhs() == l.lhs() && r.lhs().rhs() == b && r.rhs() == c;
}

// Walks B (with x free) against its supposed instance, looking for the term
// that replaced the first free occurrence of x.
enum class Probe { kMismatch, kNoOccurrence, kFound };

Probe probe_term(const Term& b, const Term& r, std::string_view x, bool shadowed,
                 std::optional<Term>& found) {
  if (b.is_variable()) {
    if (b.name() == x && !shadowed) {
      found = r;
      return Probe::kFound;
    }
    return b == r ? Probe::kNoOccurrence : Probe::kMismatch;
  }
  if (r.is_variable() || r.name() != b.name() || r.args().size() != b.args().size())
    return Probe::kMismatch;
  for (std::size_t i = 0; i < b.args().size(); ++i) {
    Probe p = probe_term(b.args()[i], r.args()[i], x, shadowed, found);
    if (p != Probe::kNoOccurrence) return p;
  }
  return Probe::kNoOccurrence;
}

Probe probe(const Formula& b, const Formula& r, std::string_view x, bool shadowed,
            std::optional<Term>& found) {
  if (b.kind() != r.kind()) return Probe::kMismatch;
  switch (b.kind()) {
    case Connective::kAtom:
      if (b.name() != r.name() || b.args().size() != r.args().size())
        return Probe::kMismatch;
      for (std::size_t i = 0; i < b.args().size(); ++i) {
        Probe p = probe_term(b.args()[i], r.args()[i], x, shadowed, found);
        if (p != Probe::kNoOccurrence) return p;
      }
      return Probe::kNoOccurrence;
    case Connective::kNot:
      return probe(b.operand(), r.operand(), x, shadowed, found);
    case Connective::kImplies: {
      Probe p = probe(b.lhs(), r.lhs(), x, shadowed, found);
      if (p != Probe::kNoOccurrence) return p;
      return probe(b.rhs(), r.rhs(), x, shadowed, found);
    }
    case Connective::kForAll:
      if (b.name() != r.name()) return Probe::kMismatch;
      return probe(b.operand(), r.operand(), x, shadowed || b.name() == x, found);
  }
  return Probe::kMismatch;
}

bool is_a4(const Formula& f) {
  // (A x) B -> B[x:=t]
  if (!f.is_implies() || !f.lhs().is_forall()) return false;
  const std::string& x = f.lhs().name();
  const Formula& b = f.lhs().operand();
  const Formula& r = f.rhs();
  std::optional<Term> t;
  switch (probe(b, r, x, false, t)) {
    case Probe::kMismatch:
      return false;
    case Probe::kNoOccurrence:
      return b == r;
    case Probe::kFound:
      return is_free_for(*t, x, b) && substitute(b, x, *t) == r;
  }
  return false;
}

bool is_a5(const Formula& f) {
  // (A x)(B -> C) -> (B -> (A x) C)
  if (!f.is_implies() || !f.lhs().is_forall() || !f.lhs().operand().is_implies())
    return false;
  const std::string& x = f.lhs().name();
  const Formula& b = f.lhs().operand().lhs();
  const Formula& c = f.lhs().operand().rhs();
  const Formula& r = f.rhs();
  return r.is_implies() && r.lhs() == b && r.rhs().is_forall() &&
         r.rhs().name() == x && r.rhs().operand() == c && !occurs_free(x, b);
}

std::string index_text(std::size_t i) { return std::to_string(i); }

}  // namespace

std::optional<AxiomSchema> match_axiom(const Formula& f) {
  if (is_a1(f)) return AxiomSchema::kA1;
  if (is_a2(f)) return AxiomSchema::kA2;
  if (is_a3(f)) return AxiomSchema::kA3;
  if (is_a4(f)) return AxiomSchema::kA4;
  if (is_a5(f)) return AxiomSchema::kA5;
  return std::nullopt;
}

Verdict verify_deduction(const Deduction& d) {
  if (d.steps.empty()) return Verdict::failure(0, "deduction has no steps");
  for (const auto& h : d.hypotheses) {
    try {
      check_well_formed(h, d.sig);
    } catch (const SignatureError& e) {
      return Verdict::failure(0, std::string("ill-formed hypothesis: ") + e.what());
    }
  }

  for (std::size_t k = 1; k <= d.steps.size(); ++k) {
    const Step& step = d.steps[k - 1];
    try {
      check_well_formed(step.formula, d.sig);
    } catch (const SignatureError& e) {
      return Verdict::failure(k, std::string("ill-formed formula: ") + e.what());
    }
    auto earlier = [&](std::size_t i) { return i >= 1 && i < k; };

    if (std::holds_alternative<ByAxiom>(step.why)) {
      if (!match_axiom(step.formula))
        return Verdict::failure(k, "not an instance of any axiom schema");

    } else if (const auto* h = std::get_if<ByHypothesis>(&step.why)) {
      if (h->index < 1 || h->index > d.hypotheses.size())
        return Verdict::failure(k, "hypothesis index " + index_text(h->index) +
                                       " out of range");
      if (!(d.hypotheses[h->index - 1] == step.formula))
        return Verdict::failure(k, "formula differs from hypothesis " +
                                       index_text(h->index));

    } else if (const auto* mp = std::get_if<ByModusPonens>(&step.why)) {
      if (!earlier(mp->antecedent) || !earlier(mp->implication))
        return Verdict::failure(k, "modus ponens refers to a step that does not precede it");
      const Formula& imp = d.steps[mp->implication - 1].formula;
      if (!imp.is_implies() || !(imp.lhs() == d.steps[mp->antecedent - 1].formula) ||
          !(imp.rhs() == step.formula))
        return Verdict::failure(k, "step " + index_text(mp->implication) +
                                       " is not step " + index_text(mp->antecedent) +
                                       " -> this formula");

    } else if (const auto* g = std::get_if<ByGeneralization>(&step.why)) {
      if (!earlier(g->premise))
        return Verdict::failure(k, "generalization refers to a step that does not precede it");
      if (!step.formula.is_forall() || step.formula.name() != g->variable ||
          !(step.formula.operand() == d.steps[g->premise - 1].formula))
        return Verdict::failure(k, "formula is not (A " + g->variable + ") of step " +
                                       index_text(g->premise));
      for (std::size_t i = 0; i < d.hypotheses.size(); ++i)
        if (occurs_free(g->variable, d.hypotheses[i]))
          return Verdict::failure(k, "generalization on variable " + g->variable +
                                         " which is free in hypothesis " +
                                         index_text(i + 1));
    }
  }
  return Verdict::success();
}

Deduction infer_justifications(std::span<const Formula> formulas,
                               std::span<const Formula> hypotheses,
                               const Signature& sig) {
  Deduction d{sig, {hypotheses.begin(), hypotheses.end()}, {}};
  d.steps.reserve(formulas.size());
  // First line holding each formula seen so far.
  std::unordered_map<Formula, std::size_t> first_line;

  auto gen_allowed = [&](const std::string& v) {
    for (const auto& h : hypotheses)
      if (occurs_free(v, h)) return false;
    return true;
  };

  for (std::size_t k = 1; k <= formulas.size(); ++k) {
    const Formula& f = formulas[k - 1];
    std::optional<Justification> why;

    if (match_axiom(f)) why = ByAxiom{};

    if (!why) {
      for (std::size_t h = 0; h < hypotheses.size(); ++h)
        if (hypotheses[h] == f) {
          why = ByHypothesis{h + 1};
          break;
        }
    }

    if (!why) {
      // For each implication line j in order, the antecedent with smallest i.
      for (std::size_t j = 1; j < k && !why; ++j) {
        const Formula& imp = d.steps[j - 1].formula;
        if (!imp.is_implies() || !(imp.rhs() == f)) continue;
        auto it = first_line.find(imp.lhs());
        if (it != first_line.end()) why = ByModusPonens{it->second, j};
      }
    }

    if (!why && f.is_forall() && gen_allowed(f.name())) {
      auto it = first_line.find(f.operand());
      if (it != first_line.end()) why = ByGeneralization{it->second, f.name()};
    }

    if (!why)
      throw ElaborationError("no justification found for line " + std::to_string(k) +
                                 ": " + print_formula(f),
                             k);
    d.steps.push_back({f, std::move(*why)});
    first_line.emplace(f, k);
  }
  return d;
}

}  // namespace dedkit
