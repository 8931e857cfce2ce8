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

// Decision procedure for GL with a single modality M.
//
// A type is a pair (v, X): v assigns the variables, X is the set of boxed
// subformulas M B_i that hold. A type with box set X is realizable in a
// finite transitive irreflexive tree iff for every i outside X there is a
// realizable type (v', Y) with Y containing X and i (a maximal refuting
// successor satisfies M B_i by Loeb), satisfying B_j for every j in X and
// refuting B_i. Realizability depends on X only and Y is strictly larger,
// so box sets are processed by decreasing size.

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "slowprov/decide.hpp"

namespace slowprov::modal {

namespace {

struct Program {
  struct Node {
    Op op;
    int a = -1;
    int b = -1;
    int slot = -1;  // variable index or box index
  };
  std::vector<Node> nodes;
  std::vector<std::string> vars;
  std::vector<int> body;  // node index of B_i for box i
  int root = -1;
};

Program compile(const Formula& phi, Op modality) {
  Program p;
  std::unordered_map<Formula, int, FormulaHash> index;
  std::set<std::string> var_set = variables(phi);
  p.vars.assign(var_set.begin(), var_set.end());
  for (const Formula& g : subformulas(phi)) {
    Program::Node n{g.op()};
    if (g.op() == Op::kVar) {
      n.slot = static_cast<int>(
          std::lower_bound(p.vars.begin(), p.vars.end(), g.name()) - p.vars.begin());
    } else if (g.is_unary()) {
      n.a = index.at(g.lhs());
      if (g.op() == modality) {
        n.slot = static_cast<int>(p.body.size());
        p.body.push_back(n.a);
      } else if (g.op() != Op::kNot) {
        throw SemanticsMismatch("unexpected modality in single-modality formula");
      }
    } else if (g.is_binary()) {
      n.a = index.at(g.lhs());
      n.b = index.at(g.rhs());
    }
    index.emplace(g, static_cast<int>(p.nodes.size()));
    p.nodes.push_back(n);
  }
  p.root = index.at(phi);
  return p;
}

// Truth of every node under type (v, X).
void evaluate(const Program& p, std::uint32_t v, std::uint32_t x, std::vector<char>& out) {
  out.resize(p.nodes.size());
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const Program::Node& n = p.nodes[i];
    bool r = false;
    switch (n.op) {
      case Op::kBot:
        r = false;
        break;
      case Op::kTop:
        r = true;
        break;
      case Op::kVar:
        r = (v >> n.slot) & 1U;
        break;
      case Op::kNot:
        r = !out[n.a];
        break;
      case Op::kAnd:
        r = out[n.a] && out[n.b];
        break;
      case Op::kOr:
        r = out[n.a] || out[n.b];
        break;
      case Op::kImplies:
        r = !out[n.a] || out[n.b];
        break;
      case Op::kIff:
        r = out[n.a] == out[n.b];
        break;
      default:
        r = (x >> n.slot) & 1U;
    }
    out[i] = r;
  }
}

struct Witness {
  std::uint32_t v;
  std::uint32_t y;
};

class TypeElimination {
 public:
  TypeElimination(const Program& p, std::uint64_t max_work) : p_(p), max_work_(max_work) {}

  // False if the work cap was hit.
  bool run() {
    const std::size_t k = p_.body.size();
    const std::size_t nv = p_.vars.size();
    if (k + nv > 24) return false;
    const std::uint32_t nx = 1U << k;
    const std::uint32_t nvals = 1U << nv;
    if (!charge(static_cast<std::uint64_t>(nx) * nvals * p_.nodes.size())) return false;

    body_mask_.assign(static_cast<std::size_t>(nx) * nvals, 0);
    root_true_.assign(static_cast<std::size_t>(nx) * nvals, 0);
    std::vector<char> vals;
    for (std::uint32_t x = 0; x < nx; ++x) {
      for (std::uint32_t v = 0; v < nvals; ++v) {
        evaluate(p_, v, x, vals);
        std::uint32_t bm = 0;
        for (std::size_t i = 0; i < k; ++i) {
          if (vals[p_.body[i]]) bm |= 1U << i;
        }
        body_mask_[cell(v, x)] = bm;
        root_true_[cell(v, x)] = vals[p_.root];
      }
    }

    std::vector<std::uint32_t> order(nx);
    for (std::uint32_t x = 0; x < nx; ++x) order[x] = x;
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
      return std::popcount(a) > std::popcount(b);
    });

    survive_.assign(nx, 0);
    size_.assign(nx, 0);
    children_.assign(nx, {});
    for (std::uint32_t x : order) {
      bool ok = true;
      std::size_t total = 1;
      std::vector<Witness> kids;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if ((x >> i) & 1U) continue;
        bool refuted = false;
        for (const Witness& w : kids) {
          if (!((body_mask_[cell(w.v, w.y)] >> i) & 1U)) refuted = true;
        }
        if (refuted) continue;
        std::optional<Witness> best;
        if (!find_witness(x, i, best)) return false;
        if (!best) {
          ok = false;
          break;
        }
        kids.push_back(*best);
        total += size_[best->y];
      }
      if (ok) {
        survive_[x] = 1;
        size_[x] = total;
        children_[x] = std::move(kids);
      }
    }
    return true;
  }

  // A refuting type, if any.
  std::optional<Witness> refutation() const {
    const std::uint32_t nx = 1U << p_.body.size();
    const std::uint32_t nvals = 1U << p_.vars.size();
    std::optional<Witness> best;
    for (std::uint32_t x = 0; x < nx; ++x) {
      if (!survive_[x]) continue;
      for (std::uint32_t v = 0; v < nvals; ++v) {
        if (root_true_[cell(v, x)]) continue;
        if (!best || size_[x] < size_[best->y]) best = Witness{v, x};
      }
    }
    return best;
  }

  std::size_t tree_size(std::uint32_t x) const { return size_[x]; }

  KripkeModel unravel(Witness root) const {
    std::vector<std::size_t> parent{0};
    std::vector<Witness> type{root};
    for (std::size_t at = 0; at < type.size(); ++at) {
      for (const Witness& w : children_[type[at].y]) {
        parent.push_back(at);
        type.push_back(w);
      }
    }
    KripkeModel m = KripkeModel::from_parents(parent);
    for (std::size_t j = 0; j < p_.vars.size(); ++j) {
      WorldSet s = 0;
      for (std::size_t w = 0; w < type.size(); ++w) {
        if ((type[w].v >> j) & 1U) s |= bit(w);
      }
      m.val[p_.vars[j]] = s;
    }
    return m;
  }

 private:
  std::size_t cell(std::uint32_t v, std::uint32_t x) const {
    return (static_cast<std::size_t>(x) << p_.vars.size()) | v;
  }

  bool charge(std::uint64_t units) {
    work_ += units;
    return work_ <= max_work_;
  }

  // Smallest surviving witness refuting B_i above box set x.
  bool find_witness(std::uint32_t x, std::size_t i, std::optional<Witness>& best) {
    const std::size_t k = p_.body.size();
    const std::uint32_t full = (1U << k) - 1;
    const std::uint32_t base = x | (1U << i);
    const std::uint32_t free = full & ~base;
    const std::uint32_t nvals = 1U << p_.vars.size();
    // Enumerate supersets y of base via subsets of `free`.
    std::uint32_t sub = free;
    for (;;) {
      const std::uint32_t y = base | sub;
      if (survive_[y]) {
        if (!charge(nvals)) return false;
        for (std::uint32_t v = 0; v < nvals; ++v) {
          const std::uint32_t bm = body_mask_[cell(v, y)];
          if ((bm & x) == x && !((bm >> i) & 1U)) {
            if (!best || size_[y] < size_[best->y]) best = Witness{v, y};
            break;
          }
        }
      }
      if (sub == 0) break;
      sub = (sub - 1) & free;
    }
    return true;
  }

  const Program& p_;
  std::uint64_t max_work_;
  std::uint64_t work_ = 0;
  std::vector<std::uint32_t> body_mask_;
  std::vector<char> root_true_;
  std::vector<char> survive_;
  std::vector<std::size_t> size_;
  std::vector<std::vector<Witness>> children_;
};

Formula translate_gl2(const Formula& f) {
  if (f.op() == Op::kBox) {
    const Formula a = translate_gl2(f.lhs());
    return Formula::tri(Formula::tri(a));
  }
  if (f.is_unary()) return Formula::unary(f.op(), translate_gl2(f.lhs()));
  if (f.is_binary()) return Formula::binary(f.op(), translate_gl2(f.lhs()), translate_gl2(f.rhs()));
  return f;
}

DecisionOutcome decide_single_modality(const Formula& original, const Formula& phi, Op modality,
                                       Semantics replay, const DecideLimits& limits) {
  const Program prog = compile(phi, modality);
  TypeElimination te(prog, limits.max_work);
  if (!te.run()) {
    return Inconclusive{limits.max_work, "type elimination exceeded the work cap"};
  }
  auto refuting = te.refutation();
  if (!refuting) {
    return Theorem{std::nullopt, "type elimination over " + std::to_string(prog.body.size()) +
                                     " boxed subformulas: no realizable type refutes the formula"};
  }
  if (te.tree_size(refuting->y) > limits.max_countermodel_worlds) {
    return Inconclusive{limits.max_countermodel_worlds,
                        "refutable, but the countermodel tree exceeds the world cap"};
  }
  KripkeModel m = te.unravel(*refuting);
  if (has(truth_set(m, original, replay), m.root)) {
    throw std::logic_error("internal error: countermodel does not replay");
  }
  return Countermodel{std::move(m), 0};
}

}  // namespace

DecisionOutcome gl_decide(const Formula& a, const DecideLimits& limits) {
  if (contains_op(a, Op::kTriangle) || contains_op(a, Op::kNabla)) {
    throw SemanticsMismatch("GL formulas use [] and <> only");
  }
  return decide_single_modality(a, desugar(a), Op::kBox, Semantics::kGL, limits);
}

DecisionOutcome gl2_decide(const Formula& a, const DecideLimits& limits) {
  return decide_single_modality(a, translate_gl2(desugar(a)), Op::kTriangle, Semantics::kGL2,
                                limits);
}

DecisionOutcome decide(System s, const Formula& a, const DecideLimits& limits) {
  switch (s) {
    case System::kGL:
      return gl_decide(a, limits);
    case System::kGL2:
      return gl2_decide(a, limits);
    case System::kGLT:
      return glt_decide(a, limits);
  }
  throw std::invalid_argument("unknown system");
}

}  // namespace slowprov::modal
