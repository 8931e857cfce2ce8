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

#ifndef SLOWPROV_ITERCALC_HPP_
#define SLOWPROV_ITERCALC_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "slowprov/ordinal.hpp"

namespace slowprov::iter {

// B: ordinary provability. S1, S2: the slow predicates. R: square-root
// provability.
enum class OpKind { kB, kS1, kS2, kR };

const char* op_name(OpKind k);

struct Entry {
  OpKind op;
  Ordinal exp;  // in [1, e0]; finite for R

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.op == b.op && a.exp == b.exp;
  }
};

// An atom under a stack of iterated operators. `stack[0]` is applied
// first (innermost); text lists operators outermost first, so
// "S2^2 B^w p" has stack [(B, w), (S2, 2)].
struct IterExpr {
  std::string atom;
  std::vector<Entry> stack;

  friend bool operator==(const IterExpr& a, const IterExpr& b) {
    return a.atom == b.atom && a.stack == b.stack;
  }
};

class IterParseError : public std::invalid_argument {
 public:
  IterParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// expr := (op ("^" ord)?)* ident,  op in {B, S1, S2, R}; a missing
// exponent is 1. Adjacent equal operators are merged with the addition law
// (inner exponent first): "B^a B^b p" becomes B^{b+a} p. An inner e0
// followed by a further power of the same operator has no representable
// sum and stays as two entries.
IterExpr parse_iter(std::string_view text);
std::string render_iter(const IterExpr& e);

// Merges adjacent equal operators where the sum is representable.
IterExpr merge_adjacent(IterExpr e);

struct NormalizeOptions {
  // Also drop S1^a (0 < a < e0) directly below a B.
  bool box_absorbs_s1 = false;
};

enum class Strategy { kInnermostFirst, kOutermostFirst };

// Rules, to fixpoint, followed by merging:
//   R^{2k+m}     -> B^k then R^m on top (m in {0, 1})
//   S2^{w*q+m}   -> B^q then S2^m on top (q >= 1, m finite)
//   S1^{e0}      -> B
// Zero exponents are elided.
IterExpr normalize(const IterExpr& e, const NormalizeOptions& opts = {},
                   Strategy strategy = Strategy::kInnermostFirst);

enum class Entailment { kYes, kUnknown };

// Yes iff the normal forms have the same atom and length and, position by
// position, either the operators agree and the exponent does not grow
// backwards (exp1 <= exp2), or the left operator is S1, S2 or R, the right
// one is B and exp1 <= exp2. Never answers No.
Entailment entails(const IterExpr& e1, const IterExpr& e2, const NormalizeOptions& opts = {});

}  // namespace slowprov::iter

#endif  // SLOWPROV_ITERCALC_HPP_
