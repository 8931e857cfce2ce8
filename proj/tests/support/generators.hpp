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

// Seeded random generators for property tests.

#ifndef SLOWPROV_TESTS_GENERATORS_HPP_
#define SLOWPROV_TESTS_GENERATORS_HPP_

#include <random>
#include <string>
#include <vector>

#include "slowprov/formula.hpp"
#include "slowprov/itercalc.hpp"
#include "slowprov/ordinal.hpp"

namespace slowprov::testing {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Ordinal below w^w^w (nested exponents up to `depth`), built as a sum of
// random terms so that non-canonical inputs are normalized by add().
inline Ordinal random_ordinal(Rng& rng, int depth = 2, std::uint64_t max_terms = 3,
                              std::uint64_t max_coeff = 4) {
  Ordinal out = Ordinal::zero();
  const std::uint64_t terms = uniform(rng, 0, max_terms);
  for (std::uint64_t i = 0; i < terms; ++i) {
    Ordinal e = depth > 0 && uniform(rng, 0, 2) != 0 ? random_ordinal(rng, depth - 1, 2, 3)
                                                     : Ordinal::zero();
    out = add(out, mul(omega_pow(e), Ordinal::finite(uniform(rng, 1, max_coeff))));
  }
  return out;
}

// Ordinal strictly below w^w: a polynomial in w with small coefficients.
inline Ordinal random_below_omega_omega(Rng& rng, std::uint64_t max_degree = 3,
                                        std::uint64_t max_coeff = 3) {
  Ordinal out = Ordinal::zero();
  for (std::uint64_t d = max_degree + 1; d-- > 0;) {
    if (uniform(rng, 0, 1) == 0) continue;
    out = add(out, mul(omega_pow(Ordinal::finite(d)), Ordinal::finite(uniform(rng, 1, max_coeff))));
  }
  return out;
}

// Random formula over `vars`; `bimodal` allows [.] and <.>.
inline modal::Formula random_formula(Rng& rng, int depth, const std::vector<std::string>& vars,
                                     bool bimodal = true, bool diamonds = true) {
  using modal::Formula;
  using modal::Op;
  if (depth <= 0 || uniform(rng, 0, 5) == 0) {
    const std::uint64_t k = uniform(rng, 0, vars.size() + 1);
    if (k == vars.size()) return Formula::top();
    if (k == vars.size() + 1) return Formula::bot();
    return Formula::var(vars[k]);
  }
  std::vector<Op> ops = {Op::kNot, Op::kAnd, Op::kOr, Op::kImplies, Op::kIff, Op::kBox};
  if (diamonds) ops.push_back(Op::kDiamond);
  if (bimodal) {
    ops.push_back(Op::kTriangle);
    if (diamonds) ops.push_back(Op::kNabla);
  }
  const Op op = ops[uniform(rng, 0, ops.size() - 1)];
  switch (op) {
    case Op::kNot:
    case Op::kBox:
    case Op::kDiamond:
    case Op::kTriangle:
    case Op::kNabla:
      return Formula::unary(op, random_formula(rng, depth - 1, vars, bimodal, diamonds));
    default:
      return Formula::binary(op, random_formula(rng, depth - 1, vars, bimodal, diamonds),
                             random_formula(rng, depth - 1, vars, bimodal, diamonds));
  }
}

// Exponent for an iteration operator: mostly small, sometimes e0.
inline Ordinal random_iter_exponent(Rng& rng, iter::OpKind op) {
  if (op == iter::OpKind::kR) return Ordinal::finite(uniform(rng, 1, 5));
  switch (uniform(rng, 0, 5)) {
    case 0:
      return Ordinal::epsilon_zero();
    case 1:
    case 2:
      return Ordinal::finite(uniform(rng, 1, 4));
    default: {
      Ordinal e = random_ordinal(rng, 1, 2, 3);
      return e.is_zero() ? Ordinal::omega() : e;
    }
  }
}

// Unmerged random expression (may contain adjacent equal operators).
inline iter::IterExpr random_iter(Rng& rng, std::uint64_t max_len = 5) {
  static const iter::OpKind kOps[] = {iter::OpKind::kB, iter::OpKind::kS1, iter::OpKind::kS2,
                                      iter::OpKind::kR};
  static const char* kAtoms[] = {"p", "q"};
  iter::IterExpr e;
  e.atom = kAtoms[uniform(rng, 0, 1)];
  const std::uint64_t len = uniform(rng, 0, max_len);
  for (std::uint64_t i = 0; i < len; ++i) {
    const iter::OpKind op = kOps[uniform(rng, 0, 3)];
    e.stack.push_back({op, random_iter_exponent(rng, op)});
  }
  return e;
}

}  // namespace slowprov::testing

#endif  // SLOWPROV_TESTS_GENERATORS_HPP_
