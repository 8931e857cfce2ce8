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

#include <cctype>

#include "slowprov/formula.hpp"

namespace slowprov::modal {

FormulaParseError::FormulaParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("formula syntax error at " + std::to_string(position) + ": " +
                            message),
      position_(position) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse_iff();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  Formula parse_iff() {
    Formula f = parse_imp();
    while (accept("<->")) f = Formula::iff(f, parse_imp());
    return f;
  }

  Formula parse_imp() {
    Formula f = parse_or();
    if (accept("->")) return Formula::imp(f, parse_imp());
    return f;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept("|")) f = Formula::disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (accept("&")) f = Formula::conj(f, parse_unary());
    return f;
  }

  Formula parse_unary() {
    if (accept("~")) return Formula::neg(parse_unary());
    if (accept("[]")) return Formula::box(parse_unary());
    if (accept("[.]")) return Formula::tri(parse_unary());
    if (accept("<>")) return Formula::unary(Op::kDiamond, parse_unary());
    if (accept("<.>")) return Formula::unary(Op::kNabla, parse_unary());
    return parse_atom();
  }

  Formula parse_atom() {
    skip_ws();
    if (accept("(")) {
      Formula f = parse_iff();
      if (!accept(")")) fail("expected ')'");
      return f;
    }
    if (pos_ < text_.size() && ident_start(text_[pos_])) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      const std::string word(text_.substr(start, pos_ - start));
      if (word == "true") return Formula::top();
      if (word == "false") return Formula::bot();
      return Formula::var(word);
    }
    fail(pos_ == text_.size() ? "unexpected end of input" : "expected a formula");
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw FormulaParseError(pos_, message);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Binding strength; larger binds tighter.
int level(Op op) {
  switch (op) {
    case Op::kIff:
      return 1;
    case Op::kImplies:
      return 2;
    case Op::kOr:
      return 3;
    case Op::kAnd:
      return 4;
    case Op::kNot:
    case Op::kBox:
    case Op::kDiamond:
    case Op::kTriangle:
    case Op::kNabla:
      return 5;
    default:
      return 6;
  }
}

const char* symbol(Op op) {
  switch (op) {
    case Op::kIff:
      return " <-> ";
    case Op::kImplies:
      return " -> ";
    case Op::kOr:
      return " | ";
    case Op::kAnd:
      return " & ";
    case Op::kNot:
      return "~";
    case Op::kBox:
      return "[]";
    case Op::kDiamond:
      return "<>";
    case Op::kTriangle:
      return "[.]";
    case Op::kNabla:
      return "<.>";
    default:
      return "";
  }
}

void render_into(const Formula& f, std::string& out);

void render_child(const Formula& f, int min_level, std::string& out) {
  if (level(f.op()) < min_level) {
    out += '(';
    render_into(f, out);
    out += ')';
  } else {
    render_into(f, out);
  }
}

void render_into(const Formula& f, std::string& out) {
  const Op op = f.op();
  switch (op) {
    case Op::kBot:
      out += "false";
      return;
    case Op::kTop:
      out += "true";
      return;
    case Op::kVar:
      out += f.name();
      return;
    default:
      break;
  }
  const int lv = level(op);
  if (f.is_unary()) {
    out += symbol(op);
    render_child(f.lhs(), lv, out);
    return;
  }
  // Left-associative operators accept their own kind on the left,
  // implication accepts itself on the right.
  const bool right_assoc = op == Op::kImplies;
  render_child(f.lhs(), right_assoc ? lv + 1 : lv, out);
  out += symbol(op);
  render_child(f.rhs(), right_assoc ? lv : lv + 1, out);
}

}  // namespace

Formula parse_formula(std::string_view text) { return FormulaParser(text).parse_all(); }

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace slowprov::modal
