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

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "slowprov/formula.hpp"

namespace slowprov::modal {

struct FormulaNode {
  Op op;
  std::string name;
  Formula lhs;
  Formula rhs;
  std::size_t hash;
  std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

int arity(Op op) {
  switch (op) {
    case Op::kBot:
    case Op::kTop:
    case Op::kVar:
      return 0;
    case Op::kNot:
    case Op::kBox:
    case Op::kDiamond:
    case Op::kTriangle:
    case Op::kNabla:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

Formula Formula::bot() {
  static const Formula f(std::make_shared<FormulaNode>(
      FormulaNode{Op::kBot, "", {}, {}, mix(0, static_cast<std::size_t>(Op::kBot)), 1}));
  return f;
}

Formula Formula::top() {
  static const Formula f(std::make_shared<FormulaNode>(
      FormulaNode{Op::kTop, "", {}, {}, mix(0, static_cast<std::size_t>(Op::kTop)), 1}));
  return f;
}

Formula Formula::var(std::string name) {
  const std::size_t h = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(Op::kVar));
  return Formula(
      std::make_shared<FormulaNode>(FormulaNode{Op::kVar, std::move(name), {}, {}, h, 1}));
}

Formula Formula::unary(Op op, Formula a) {
  if (arity(op) != 1 || a.is_null()) throw std::invalid_argument("bad unary formula");
  const std::size_t h = mix(a.hash(), static_cast<std::size_t>(op) * 31);
  const std::size_t s = a.size() + 1;
  return Formula(std::make_shared<FormulaNode>(FormulaNode{op, "", std::move(a), {}, h, s}));
}

Formula Formula::binary(Op op, Formula a, Formula b) {
  if (arity(op) != 2 || a.is_null() || b.is_null()) {
    throw std::invalid_argument("bad binary formula");
  }
  const std::size_t h = mix(mix(a.hash(), static_cast<std::size_t>(op) * 131), b.hash());
  const std::size_t s = a.size() + b.size() + 1;
  return Formula(
      std::make_shared<FormulaNode>(FormulaNode{op, "", std::move(a), std::move(b), h, s}));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->lhs; }
const Formula& Formula::rhs() const { return node_->rhs; }
std::size_t Formula::hash() const { return node_ ? node_->hash : 0; }
std::size_t Formula::size() const { return node_ ? node_->size : 0; }
bool Formula::is_unary() const { return arity(op()) == 1; }
bool Formula::is_binary() const { return arity(op()) == 2; }

bool Formula::is_modal() const {
  const Op o = op();
  return o == Op::kBox || o == Op::kDiamond || o == Op::kTriangle || o == Op::kNabla;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_ == nullptr || b.node_ == nullptr) return false;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  if (a.node_->op != b.node_->op) return false;
  switch (arity(a.node_->op)) {
    case 0:
      return a.node_->name == b.node_->name;
    case 1:
      return a.node_->lhs == b.node_->lhs;
    default:
      return a.node_->lhs == b.node_->lhs && a.node_->rhs == b.node_->rhs;
  }
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (a.node_ == nullptr || b.node_ == nullptr) return a.node_ == nullptr;
  if (a.node_->size != b.node_->size) return a.node_->size < b.node_->size;
  if (a.node_->op != b.node_->op) return a.node_->op < b.node_->op;
  switch (arity(a.node_->op)) {
    case 0:
      return a.node_->name < b.node_->name;
    case 1:
      return a.node_->lhs < b.node_->lhs;
    default:
      if (a.node_->lhs == b.node_->lhs) return a.node_->rhs < b.node_->rhs;
      return a.node_->lhs < b.node_->lhs;
  }
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (seen.contains(g)) return;
    if (g.is_unary()) walk(g.lhs());
    if (g.is_binary()) {
      walk(g.lhs());
      walk(g.rhs());
    }
    if (seen.insert(g).second) out.push_back(g);
  };
  walk(f);
  return out;
}

Formula desugar(const Formula& f) {
  std::unordered_map<Formula, Formula, FormulaHash> memo;
  std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
    if (auto it = memo.find(g); it != memo.end()) return it->second;
    Formula r;
    if (g.is_binary()) {
      r = Formula::binary(g.op(), go(g.lhs()), go(g.rhs()));
    } else if (g.is_unary()) {
      Formula a = go(g.lhs());
      switch (g.op()) {
        case Op::kDiamond:
          r = Formula::neg(Formula::box(Formula::neg(a)));
          break;
        case Op::kNabla:
          r = Formula::neg(Formula::tri(Formula::neg(a)));
          break;
        default:
          r = Formula::unary(g.op(), a);
      }
    } else {
      r = g;
    }
    memo.emplace(g, r);
    return r;
  };
  return go(f);
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  for (const Formula& g : subformulas(f)) {
    if (g.op() == Op::kVar) out.insert(g.name());
  }
  return out;
}

bool contains_op(const Formula& f, Op op) {
  const auto subs = subformulas(f);
  return std::any_of(subs.begin(), subs.end(), [op](const Formula& g) { return g.op() == op; });
}

std::size_t modal_depth(const Formula& f) {
  std::unordered_map<Formula, std::size_t, FormulaHash> depth;
  for (const Formula& g : subformulas(f)) {
    std::size_t d = 0;
    if (g.is_unary()) d = depth[g.lhs()] + (g.is_modal() ? 1 : 0);
    if (g.is_binary()) d = std::max(depth[g.lhs()], depth[g.rhs()]);
    depth[g] = d;
  }
  return depth[f];
}

}  // namespace slowprov::modal
