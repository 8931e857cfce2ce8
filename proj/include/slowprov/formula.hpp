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

#ifndef SLOWPROV_FORMULA_HPP_
#define SLOWPROV_FORMULA_HPP_

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slowprov::modal {

// Box is the fast (ordinary) provability modality, Triangle the slow one.
// Diamond and Nabla are their duals, kept as distinct nodes.
enum class Op {
  kBot,
  kTop,
  kVar,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kIff,
  kBox,
  kDiamond,
  kTriangle,
  kNabla,
};

struct FormulaNode;

// Immutable bimodal formula with structural equality.
class Formula {
 public:
  Formula() = default;  // null; only valid as a placeholder

  static Formula bot();
  static Formula top();
  static Formula var(std::string name);
  static Formula unary(Op op, Formula a);
  static Formula binary(Op op, Formula a, Formula b);

  static Formula neg(Formula a) { return unary(Op::kNot, std::move(a)); }
  static Formula conj(Formula a, Formula b) { return binary(Op::kAnd, std::move(a), std::move(b)); }
  static Formula disj(Formula a, Formula b) { return binary(Op::kOr, std::move(a), std::move(b)); }
  static Formula imp(Formula a, Formula b) {
    return binary(Op::kImplies, std::move(a), std::move(b));
  }
  static Formula iff(Formula a, Formula b) { return binary(Op::kIff, std::move(a), std::move(b)); }
  static Formula box(Formula a) { return unary(Op::kBox, std::move(a)); }
  static Formula tri(Formula a) { return unary(Op::kTriangle, std::move(a)); }

  bool is_null() const { return node_ == nullptr; }
  Op op() const;
  const std::string& name() const;  // kVar only
  const Formula& lhs() const;       // unary operand or left operand
  const Formula& rhs() const;       // right operand of binary nodes
  std::size_t hash() const;
  std::size_t size() const;  // node count

  bool is_unary() const;
  bool is_binary() const;
  bool is_modal() const;  // Box, Diamond, Triangle or Nabla

  friend bool operator==(const Formula& a, const Formula& b);
  // Arbitrary but fixed total order (used for sets and determinism).
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

class FormulaParseError : public std::invalid_argument {
 public:
  FormulaParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// iff := imp ("<->" imp)*        left-associative
// imp := or ("->" imp)?          right-associative
// or  := and ("|" and)*
// and := un ("&" un)*
// un  := "~" un | "[]" un | "<>" un | "[.]" un | "<.>" un | atom
// atom := "true" | "false" | ident | "(" iff ")"
Formula parse_formula(std::string_view text);

// Canonical text with minimal parentheses.
std::string render(const Formula& f);

// All distinct subformulas, children before parents, first occurrence order.
std::vector<Formula> subformulas(const Formula& f);

// Rewrites <>A as ~[]~A and <.>A as ~[.]~A, recursively.
Formula desugar(const Formula& f);

std::set<std::string> variables(const Formula& f);
bool contains_op(const Formula& f, Op op);
std::size_t modal_depth(const Formula& f);

}  // namespace slowprov::modal

#endif  // SLOWPROV_FORMULA_HPP_
