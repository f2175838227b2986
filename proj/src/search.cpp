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

// Bounded proof search.
//
// The search is goal-directed. A formula is proved by, in this order:
//   1. an axiom instance (one line),
//   2. the first equal hypothesis (one line),
//   3. modus ponens from X and X -> goal, for X ranging over the pool in
//      pool order,
//   4. generalisation, when the goal is (A v) B and v is free in no
//      hypothesis.
// Proof size is the number of nodes of the proof tree. For each formula the
// search finds a proof of least size, and among those the first one in the
// order above; sub-proofs are chosen the same way, so results are
// reproducible. The tree is flattened post-order with repeated formulas
// shared, so the returned deduction never has more lines than the tree has
// nodes.
//
// The pool (the candidate cut formulas X) starts from
//   - the atoms over the declared predicates, with arguments drawn from the
//     declared variables, the constants, and functions applied to those,
//   - every subformula of the hypotheses and of the goal,
// and is closed pool_depth times under ~, -> and (A v) for each declared
// variable v.

#include <algorithm>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "dedkit/error.hpp"
#include "dedkit/godel.hpp"

namespace dedkit {

namespace {

struct ProofNode {
  enum class Rule { kAxiom, kHypothesis, kModusPonens, kGeneralization };
  Rule rule;
  Formula formula;
  std::size_t size;
  std::size_t hypothesis = 0;
  std::shared_ptr<const ProofNode> antecedent = nullptr;   // mp: X; gen: premise
  std::shared_ptr<const ProofNode> implication = nullptr;  // mp: X -> goal
};

using ProofPtr = std::shared_ptr<const ProofNode>;

void subformulas(const Formula& f, std::vector<Formula>& out,
                 std::unordered_set<Formula>& seen) {
  if (!seen.insert(f).second) return;
  switch (f.kind()) {
    case Connective::kAtom:
      break;
    case Connective::kNot:
    case Connective::kForAll:
      subformulas(f.operand(), out, seen);
      break;
    case Connective::kImplies:
      subformulas(f.lhs(), out, seen);
      subformulas(f.rhs(), out, seen);
      break;
  }
  out.push_back(f);
}

// All tuples of `arity` items from `items`, in lexicographic order.
template <typename T, typename F>
void for_each_tuple(const std::vector<T>& items, int arity, F&& fn) {
  std::vector<T> tuple;
  auto rec = [&](auto&& self, int left) -> void {
    if (left == 0) {
      fn(tuple);
      return;
    }
    for (const auto& item : items) {
      tuple.push_back(item);
      self(self, left - 1);
      tuple.pop_back();
    }
  };
  rec(rec, arity);
}

std::vector<Formula> build_pool(const Formula& goal, std::span<const Formula> theory,
                                const Signature& sig, std::size_t depth) {
  std::vector<Term> basic;
  for (const auto& v : sig.variables()) basic.push_back(Term::variable(v));
  for (const auto& f : sig.functions())
    if (f.arity == 0) basic.push_back(Term::apply(f.name));
  std::vector<Term> terms = basic;
  for (const auto& f : sig.functions())
    if (f.arity > 0)
      for_each_tuple(basic, f.arity, [&](const std::vector<Term>& args) {
        terms.push_back(Term::apply(f.name, args));
      });

  std::vector<Formula> pool;
  std::unordered_set<Formula> seen;
  auto add = [&](Formula f) {
    if (seen.insert(f).second) pool.push_back(std::move(f));
  };
  for (const auto& p : sig.predicates())
    for_each_tuple(terms, p.arity,
                   [&](const std::vector<Term>& args) { add(Formula::atom(p.name, args)); });

  std::vector<Formula> subs;
  std::unordered_set<Formula> sub_seen;
  for (const auto& h : theory) subformulas(h, subs, sub_seen);
  subformulas(goal, subs, sub_seen);
  for (auto& f : subs) add(std::move(f));

  for (std::size_t level = 0; level < depth; ++level) {
    const std::vector<Formula> layer = pool;
    for (const auto& f : layer) add(Formula::negation(f));
    for (const auto& f : layer)
      for (const auto& g : layer) add(Formula::implies(f, g));
    for (const auto& v : sig.variables())
      for (const auto& f : layer) add(Formula::forall(v, f));
  }
  return pool;
}

class Searcher {
 public:
  Searcher(std::span<const Formula> theory, std::vector<Formula> pool)
      : theory_(theory), pool_(std::move(pool)) {}

  // Least-size proof of f with at most `cap` nodes, or null.
  ProofPtr solve(const Formula& f, std::size_t cap) {
    // Element references survive rehashing, so m stays valid across the
    // recursive calls below.
    Memo& m = memo_[f];
    if (m.proof) return m.proof->size <= cap ? m.proof : nullptr;
    while (m.refuted_upto < cap) {
      std::size_t size = m.refuted_upto + 1;
      if (ProofPtr p = attempt(f, size)) {
        m.proof = p;
        return p;
      }
      m.refuted_upto = size;
    }
    return nullptr;
  }

 private:
  struct Memo {
    ProofPtr proof;
    std::size_t refuted_upto = 0;
  };

  // A proof of exactly `size` nodes; none smaller exists.
  ProofPtr attempt(const Formula& f, std::size_t size) {
    using Rule = ProofNode::Rule;
    if (size == 1) {
      if (match_axiom(f))
        return std::make_shared<const ProofNode>(ProofNode{Rule::kAxiom, f, 1});
      for (std::size_t i = 0; i < theory_.size(); ++i)
        if (theory_[i] == f)
          return std::make_shared<const ProofNode>(
              ProofNode{Rule::kHypothesis, f, 1, i + 1});
      return nullptr;
    }
    if (size >= 3) {
      for (const auto& x : pool_) {
        ProofPtr left = solve(x, size - 2);
        if (!left) continue;
        std::size_t rest = size - 1 - left->size;
        if (rest == 0) continue;
        ProofPtr right = solve(Formula::implies(x, f), rest);
        if (!right || left->size + right->size + 1 != size) continue;
        return std::make_shared<const ProofNode>(
            ProofNode{Rule::kModusPonens, f, size, 0, left, right});
      }
    }
    if (f.is_forall() && gen_allowed(f.name())) {
      ProofPtr premise = solve(f.operand(), size - 1);
      if (premise && premise->size + 1 == size)
        return std::make_shared<const ProofNode>(
            ProofNode{Rule::kGeneralization, f, size, 0, premise});
    }
    return nullptr;
  }

  bool gen_allowed(const std::string& v) const {
    return std::none_of(theory_.begin(), theory_.end(),
                        [&](const Formula& h) { return occurs_free(v, h); });
  }

  std::span<const Formula> theory_;
  std::vector<Formula> pool_;
  std::unordered_map<Formula, Memo> memo_;
};

std::size_t flatten(const ProofPtr& p, std::vector<Step>& out,
                    std::unordered_map<Formula, std::size_t>& line_of) {
  if (auto it = line_of.find(p->formula); it != line_of.end()) return it->second;
  Justification why;
  switch (p->rule) {
    case ProofNode::Rule::kAxiom:
      why = ByAxiom{};
      break;
    case ProofNode::Rule::kHypothesis:
      why = ByHypothesis{p->hypothesis};
      break;
    case ProofNode::Rule::kModusPonens: {
      std::size_t i = flatten(p->antecedent, out, line_of);
      std::size_t j = flatten(p->implication, out, line_of);
      why = ByModusPonens{i, j};
      break;
    }
    case ProofNode::Rule::kGeneralization:
      why = ByGeneralization{flatten(p->antecedent, out, line_of), p->formula.name()};
      break;
  }
  out.push_back({p->formula, std::move(why)});
  line_of.emplace(p->formula, out.size());
  return out.size();
}

}  // namespace

std::optional<SearchResult> search_deduction(const Formula& goal,
                                             std::span<const Formula> theory,
                                             const Signature& sig,
                                             SearchBounds bounds) {
  if (bounds.max_len < 1) throw PreconditionError("max_len must be at least 1");
  Searcher searcher(theory, build_pool(goal, theory, sig, bounds.pool_depth));
  ProofPtr proof = searcher.solve(goal, bounds.max_len);
  if (!proof) return std::nullopt;

  Deduction d{sig, {theory.begin(), theory.end()}, {}};
  std::unordered_map<Formula, std::size_t> line_of;
  flatten(proof, d.steps, line_of);
  GodelNumber number = encode_deduction(d, SymbolCode(sig));
  return SearchResult{std::move(d), std::move(number)};
}

}  // namespace dedkit
