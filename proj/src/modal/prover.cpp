// Copyright 2026 The slowprov Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Goal-directed GLT prover emitting Hilbert derivations.
//
// A goal G is treated propositionally over its variables and modal atoms.
// Every assignment falsifying G yields hypotheses (true modal atoms) and
// candidate goals (false modal atoms); it is closed by proving
// "hyps -> P" for one candidate P with a modal rule:
//
//   [.]B from [.]A_i, []C_j:  prove A_i, [.]A_i, []C_j, [.][]C_j, [.]B |- B,
//       distribute [.] over it and finish with the Loeb axiom for [.].
//   []B  from [.]A_i, []C_j:  prove A_i, [.]A_i, C_j, []C_j, [.]C_j, []B |- B,
//       distribute [] over it and finish with []([]B -> B) -> []B, derived
//       from Loeb for [.] together with T1, T3 and T4.
//
// The lemmas are then combined with G by a single tautology line.

#include <map>
#include <memory>
#include <unordered_map>

#include "slowprov/decide.hpp"

namespace slowprov::modal {

namespace {

Formula chain(const std::vector<Formula>& antecedents, Formula consequent) {
  for (auto it = antecedents.rbegin(); it != antecedents.rend(); ++it) {
    consequent = Formula::imp(*it, consequent);
  }
  return consequent;
}

Formula modal(Op m, Formula a) { return Formula::unary(m, std::move(a)); }

class Builder {
 public:
  Builder() { proof_.system = System::kGLT; }

  ProofObject& proof() { return proof_; }
  Formula formula(std::size_t line) const { return proof_.lines[line].formula; }

  std::size_t add(Formula f, Rule r, std::vector<std::size_t> refs = {}) {
    if (auto it = lines_.find(f); it != lines_.end()) return it->second;
    proof_.lines.push_back(ProofLine{f, r, std::move(refs)});
    lines_.emplace(f, proof_.lines.size() - 1);
    return proof_.lines.size() - 1;
  }

  std::size_t mp(std::size_t a, std::size_t ab) {
    return add(formula(ab).rhs(), Rule::kMP, {a, ab});
  }

  // From lines P1..Pn derives `conclusion` via the tautology
  // P1 -> ... -> Pn -> conclusion.
  std::size_t by_taut(const std::vector<std::size_t>& premises, const Formula& conclusion) {
    if (auto it = lines_.find(conclusion); it != lines_.end()) return it->second;
    std::vector<Formula> ps;
    for (std::size_t p : premises) ps.push_back(formula(p));
    std::size_t cur = add(chain(ps, conclusion), Rule::kTaut);
    for (std::size_t p : premises) cur = mp(p, cur);
    return cur;
  }

  std::size_t nec(Op m, std::size_t line) {
    const std::size_t t = add(Formula::tri(formula(line)), Rule::kNecTri, {line});
    if (m == Op::kTriangle) return t;
    const Formula a = formula(line);
    const std::size_t t1 = add(Formula::imp(Formula::tri(a), Formula::box(a)), Rule::kAxT1);
    return mp(t, t1);
  }

  std::size_t k_axiom(Op m, const Formula& a, const Formula& b) {
    return add(Formula::imp(modal(m, Formula::imp(a, b)),
                            Formula::imp(modal(m, a), modal(m, b))),
               m == Op::kTriangle ? Rule::kAxKTri : Rule::kAxKBox);
  }

  // From C1 -> ... -> Ck -> D derives MC1 -> ... -> MCk -> MD.
  std::size_t distribute(Op m, std::size_t line, std::size_t count) {
    std::size_t cur = nec(m, line);
    std::vector<Formula> prefix;
    Formula rest = formula(line);
    for (std::size_t i = 0; i < count; ++i) {
      const Formula c = rest.lhs();
      const Formula r = rest.rhs();
      const std::size_t k = k_axiom(m, c, r);
      if (i == 0) {
        cur = mp(cur, k);
      } else {
        cur = by_taut({cur, k}, chain(prefix, Formula::imp(modal(m, c), modal(m, r))));
      }
      prefix.push_back(modal(m, c));
      rest = r;
    }
    return cur;
  }

  // From X -> Y derives MX -> MY.
  std::size_t mono(Op m, std::size_t line) { return distribute(m, line, 1); }

  // [.]A -> [.][.]A.
  std::size_t four_tri(const Formula& a) {
    const Formula ta = Formula::tri(a);
    const Formula x = Formula::conj(a, ta);
    const Formula tx = Formula::tri(x);
    const std::size_t m1 = mono(Op::kTriangle, add(Formula::imp(x, a), Rule::kTaut));
    const std::size_t s = by_taut({m1}, Formula::imp(a, Formula::imp(tx, x)));
    const std::size_t d = distribute(Op::kTriangle, s, 1);
    const std::size_t l =
        add(Formula::imp(Formula::tri(Formula::imp(tx, x)), tx), Rule::kAxLTri);
    const std::size_t m2 = mono(Op::kTriangle, add(Formula::imp(x, ta), Rule::kTaut));
    return by_taut({d, l, m2}, Formula::imp(ta, Formula::tri(ta)));
  }

  // []([]B -> B) -> []B.
  std::size_t loeb_box(const Formula& b) {
    const Formula bb = Formula::box(b);
    const Formula tb = Formula::tri(b);
    const Formula box_refl = Formula::imp(bb, b);
    const Formula tri_refl = Formula::imp(tb, b);
    const std::size_t t1 = add(Formula::imp(tb, bb), Rule::kAxT1);
    const std::size_t x = by_taut({t1}, Formula::imp(box_refl, tri_refl));
    const std::size_t z = mono(Op::kBox, x);
    const std::size_t l = add(Formula::imp(Formula::tri(tri_refl), tb), Rule::kAxLTri);
    const std::size_t w = mono(Op::kBox, l);
    const std::size_t t3 = add(Formula::imp(Formula::box(tri_refl), Formula::box(Formula::tri(tri_refl))),
                               Rule::kAxT3);
    const std::size_t t4 = add(Formula::imp(Formula::box(tb), bb), Rule::kAxT4);
    return by_taut({z, t3, w, t4}, Formula::imp(Formula::box(box_refl), bb));
  }

  std::size_t axiom_t1(const Formula& a) {
    return add(Formula::imp(Formula::tri(a), Formula::box(a)), Rule::kAxT1);
  }
  std::size_t axiom_t2(const Formula& a) {
    return add(Formula::imp(Formula::box(a), Formula::tri(Formula::box(a))), Rule::kAxT2);
  }
  std::size_t axiom_t3(const Formula& a) {
    return add(Formula::imp(Formula::box(a), Formula::box(Formula::tri(a))), Rule::kAxT3);
  }

 private:
  ProofObject proof_;
  std::unordered_map<Formula, std::size_t, FormulaHash> lines_;
};

struct PropPlan;

struct ModalPlan {
  std::vector<Formula> hyps;  // modal atoms, [.]A or []C
  Formula goal;               // [.]B or []B
  Formula inner;
  std::shared_ptr<const PropPlan> inner_plan;
  std::optional<Rule> axiom;  // set when hyps -> goal is an axiom instance
};

struct PropPlan {
  enum class Kind { kTaut, kAxiom, kCases } kind;
  Rule axiom = Rule::kTaut;
  std::vector<std::shared_ptr<const ModalPlan>> lemmas;
};

struct NodeBudgetExceeded {};

void atoms_of(const Formula& f, std::vector<Formula>& out,
              std::unordered_map<Formula, std::size_t, FormulaHash>& index) {
  if (f.op() == Op::kVar || f.is_modal()) {
    if (index.emplace(f, out.size()).second) out.push_back(f);
    return;
  }
  if (f.is_unary()) atoms_of(f.lhs(), out, index);
  if (f.is_binary()) {
    atoms_of(f.lhs(), out, index);
    atoms_of(f.rhs(), out, index);
  }
}

bool eval_bool(const Formula& f, const std::unordered_map<Formula, std::size_t, FormulaHash>& index,
               std::uint64_t mask) {
  switch (f.op()) {
    case Op::kBot:
      return false;
    case Op::kTop:
      return true;
    case Op::kNot:
      return !eval_bool(f.lhs(), index, mask);
    case Op::kAnd:
      return eval_bool(f.lhs(), index, mask) && eval_bool(f.rhs(), index, mask);
    case Op::kOr:
      return eval_bool(f.lhs(), index, mask) || eval_bool(f.rhs(), index, mask);
    case Op::kImplies:
      return !eval_bool(f.lhs(), index, mask) || eval_bool(f.rhs(), index, mask);
    case Op::kIff:
      return eval_bool(f.lhs(), index, mask) == eval_bool(f.rhs(), index, mask);
    default:
      return (mask >> index.at(f)) & 1U;
  }
}

std::optional<Rule> axiom_of(const Formula& f) {
  static const Rule kAxioms[] = {Rule::kAxKTri, Rule::kAxLTri, Rule::kAxKBox, Rule::kAxT1,
                                 Rule::kAxT2,   Rule::kAxT3,   Rule::kAxT4};
  for (Rule r : kAxioms) {
    ProofObject p;
    p.system = System::kGLT;
    p.lines.push_back(ProofLine{f, r, {}});
    if (check_proof(p).ok) return r;
  }
  return std::nullopt;
}

constexpr std::size_t kMaxSearchAtoms = 14;

class Search {
 public:
  explicit Search(std::uint64_t max_nodes) : max_nodes_(max_nodes) {}

  std::shared_ptr<const PropPlan> prove(const Formula& g, std::size_t depth) {
    const std::string key = std::to_string(depth) + "|" + render(g);
    if (auto it = prop_memo_.find(key); it != prop_memo_.end()) return it->second;
    tick();
    std::shared_ptr<const PropPlan> result = prove_uncached(g, depth);
    prop_memo_.emplace(key, result);
    return result;
  }

 private:
  void tick() {
    if (++nodes_ > max_nodes_) throw NodeBudgetExceeded{};
  }

  std::shared_ptr<const PropPlan> prove_uncached(const Formula& g, std::size_t depth) {
    std::vector<Formula> atoms;
    std::unordered_map<Formula, std::size_t, FormulaHash> index;
    atoms_of(g, atoms, index);
    if (atoms.size() <= 26 && is_tautology(g)) {
      return std::make_shared<PropPlan>(PropPlan{PropPlan::Kind::kTaut, Rule::kTaut, {}});
    }
    if (auto r = axiom_of(g)) {
      return std::make_shared<PropPlan>(PropPlan{PropPlan::Kind::kAxiom, *r, {}});
    }
    if (depth == 0 || atoms.size() > kMaxSearchAtoms) return nullptr;

    auto plan = std::make_shared<PropPlan>(PropPlan{PropPlan::Kind::kCases, Rule::kTaut, {}});
    std::map<std::string, bool> used;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
      tick();
      if (eval_bool(g, index, mask)) continue;
      std::vector<Formula> hyps;
      std::vector<Formula> goals;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (!atoms[i].is_modal()) continue;
        ((mask >> i) & 1U ? hyps : goals).push_back(atoms[i]);
      }
      std::shared_ptr<const ModalPlan> found = axiom_lemma(hyps, goals);
      for (const Formula& goal : goals) {
        if (found) break;
        found = prove_modal(hyps, goal, depth);
      }
      if (!found) return nullptr;
      const std::string lemma_key = render(chain(found->hyps, found->goal));
      if (!used.emplace(lemma_key, true).second) continue;
      plan->lemmas.push_back(found);
    }
    return plan;
  }

  static std::shared_ptr<const ModalPlan> axiom_lemma(const std::vector<Formula>& hyps,
                                                      const std::vector<Formula>& goals) {
    for (const Formula& goal : goals) {
      for (const Formula& h : hyps) {
        if (auto r = axiom_of(Formula::imp(h, goal))) {
          return std::make_shared<ModalPlan>(ModalPlan{{h}, goal, Formula(), nullptr, r});
        }
      }
    }
    return nullptr;
  }

  std::shared_ptr<const ModalPlan> prove_modal(const std::vector<Formula>& hyps,
                                               const Formula& goal, std::size_t depth) {
    std::string key = std::to_string(depth) + "|" + render(goal);
    for (const Formula& h : hyps) key += "|" + render(h);
    if (auto it = modal_memo_.find(key); it != modal_memo_.end()) return it->second;
    tick();

    const Formula& b = goal.lhs();
    std::vector<Formula> inner_hyps;
    for (const Formula& h : hyps) {
      const Formula& x = h.lhs();
      if (h.op() == Op::kTriangle) {
        inner_hyps.push_back(x);
        inner_hyps.push_back(h);
      } else if (goal.op() == Op::kTriangle) {
        inner_hyps.push_back(h);
        inner_hyps.push_back(Formula::tri(h));
      } else {
        inner_hyps.push_back(x);
        inner_hyps.push_back(h);
        inner_hyps.push_back(Formula::tri(x));
      }
    }
    const Formula premise = goal.op() == Op::kTriangle ? Formula::tri(b) : Formula::box(b);
    const Formula inner = chain(inner_hyps, Formula::imp(premise, b));
    std::shared_ptr<const ModalPlan> result;
    if (auto p = prove(inner, depth - 1)) {
      result = std::make_shared<ModalPlan>(ModalPlan{hyps, goal, inner, p, std::nullopt});
    }
    modal_memo_.emplace(key, result);
    return result;
  }

  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::unordered_map<std::string, std::shared_ptr<const PropPlan>> prop_memo_;
  std::unordered_map<std::string, std::shared_ptr<const ModalPlan>> modal_memo_;
};

class Emitter {
 public:
  std::size_t prop(const PropPlan& plan, const Formula& g) {
    switch (plan.kind) {
      case PropPlan::Kind::kTaut:
        return b_.add(g, Rule::kTaut);
      case PropPlan::Kind::kAxiom:
        return b_.add(g, plan.axiom);
      case PropPlan::Kind::kCases:
        break;
    }
    std::vector<std::size_t> lemmas;
    for (const auto& m : plan.lemmas) lemmas.push_back(modal(*m));
    return b_.by_taut(lemmas, g);
  }

  ProofObject take() { return std::move(b_.proof()); }
  Builder& builder() { return b_; }

 private:
  std::size_t modal(const ModalPlan& plan) {
    if (plan.axiom) return b_.add(chain(plan.hyps, plan.goal), *plan.axiom);
    const Op m = plan.goal.op();
    const Formula& b = plan.goal.lhs();
    const std::size_t inner = prop(*plan.inner_plan, plan.inner);
    std::size_t count = 0;
    std::vector<std::size_t> support;
    for (const Formula& h : plan.hyps) {
      const Formula& x = h.lhs();
      if (m == Op::kTriangle) {
        count += 2;
        if (h.op() == Op::kTriangle) {
          support.push_back(b_.add(Formula::imp(h, h), Rule::kTaut));
          support.push_back(b_.four_tri(x));
        } else {
          const std::size_t t2 = b_.axiom_t2(x);
          support.push_back(t2);
          support.push_back(
              b_.by_taut({t2, b_.four_tri(h)}, Formula::imp(h, Formula::tri(Formula::tri(h)))));
        }
      } else if (h.op() == Op::kTriangle) {
        count += 2;
        support.push_back(b_.axiom_t1(x));
        support.push_back(b_.by_taut({b_.four_tri(x), b_.axiom_t1(h)},
                                     Formula::imp(h, Formula::box(h))));
      } else {
        count += 3;
        support.push_back(b_.add(Formula::imp(h, h), Rule::kTaut));
        support.push_back(b_.by_taut({b_.axiom_t2(x), b_.axiom_t1(h)},
                                     Formula::imp(h, Formula::box(h))));
        support.push_back(b_.axiom_t3(x));
      }
    }
    const std::size_t dist = b_.distribute(m, inner, count);
    std::size_t finish;
    if (m == Op::kTriangle) {
      const Formula refl = Formula::imp(Formula::tri(b), b);
      finish = b_.add(Formula::imp(Formula::tri(refl), Formula::tri(b)), Rule::kAxLTri);
    } else {
      finish = b_.loeb_box(b);
    }
    std::vector<std::size_t> premises{dist, finish};
    premises.insert(premises.end(), support.begin(), support.end());
    return b_.by_taut(premises, chain(plan.hyps, plan.goal));
  }

  Builder b_;
};

}  // namespace

std::optional<ProofObject> glt_prove(const Formula& a, std::size_t depth, std::uint64_t max_nodes) {
  const Formula g = desugar(a);
  std::shared_ptr<const PropPlan> plan;
  try {
    plan = Search(max_nodes).prove(g, depth);
  } catch (const NodeBudgetExceeded&) {
    return std::nullopt;
  }
  if (!plan) return std::nullopt;
  Emitter e;
  std::size_t last = e.prop(*plan, g);
  if (!(g == a)) last = e.builder().by_taut({last}, a);
  ProofObject proof = e.take();
  // Line dedup can leave the goal earlier in the list; restate it last.
  if (!(proof.lines.back().formula == a)) {
    proof.lines.push_back(ProofLine{Formula::imp(a, a), Rule::kTaut, {}});
    proof.lines.push_back(ProofLine{a, Rule::kMP, {last, proof.lines.size() - 1}});
  }
  const CheckResult check = check_proof(proof);
  if (!check.ok) {
    throw std::logic_error("internal error: prover emitted an invalid proof at line " +
                           std::to_string(check.line) + ": " + check.reason);
  }
  return proof;
}

}  // namespace slowprov::modal
