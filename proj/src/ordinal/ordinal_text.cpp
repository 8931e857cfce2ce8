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

#include "slowprov/ordinal.hpp"

namespace slowprov {

OrdinalParseError::OrdinalParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("ordinal syntax error at " + std::to_string(position) + ": " +
                            message),
      position_(position) {}

namespace {

class OrdinalParser {
 public:
  OrdinalParser(std::string_view text, std::size_t pos) : text_(text), pos_(pos) {}

  std::size_t pos() const { return pos_; }

  Ordinal parse_ord() {
    skip_ws();
    if (peek_word("e0")) {
      pos_ += 2;
      return Ordinal::epsilon_zero();
    }
    if (peek() == '0') {
      ++pos_;
      if (std::isdigit(static_cast<unsigned char>(peek()))) fail("leading zero in number");
      return Ordinal();
    }
    Ordinal result = parse_term();
    for (;;) {
      skip_ws();
      if (peek() != '+') break;
      ++pos_;
      result = add(result, parse_term());
    }
    return result;
  }

 private:
  Ordinal parse_term() {
    skip_ws();
    if (peek() == 'w') {
      ++pos_;
      Ordinal exponent = Ordinal::finite(1);
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        exponent = parse_atom();
      }
      skip_ws();
      Natural coefficient(1);
      if (peek() == '*') {
        ++pos_;
        coefficient = parse_nat();
      }
      return mul(omega_pow(exponent), Ordinal::finite(coefficient));
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Ordinal::finite(parse_nat());
    fail("expected a term ('w' or a positive number)");
  }

  Ordinal parse_atom() {
    skip_ws();
    if (peek() == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (peek() == '(') {
      ++pos_;
      const std::size_t start = pos_;
      Ordinal inner = parse_ord();
      if (inner.is_epsilon_zero()) {
        pos_ = start;
        fail("e0 cannot be an exponent");
      }
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) return Ordinal::finite(parse_nat());
    fail("expected an exponent ('w', a number or a parenthesized ordinal)");
  }

  Natural parse_nat() {
    skip_ws();
    const std::size_t start = pos_;
    if (peek() < '1' || peek() > '9') fail("expected a positive number");
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Natural(std::string(text_.substr(start, pos_ - start)));
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool peek_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw OrdinalParseError(pos_, message); }

  std::string_view text_;
  std::size_t pos_;
};

std::string render_atom(const Ordinal& e) {
  if (e == Ordinal::omega()) return "w";
  if (e.is_finite()) return e.as_finite()->get_str();
  return "(" + to_string(e) + ")";
}

}  // namespace

Ordinal parse_ordinal_prefix(std::string_view text, std::size_t& pos) {
  OrdinalParser parser(text, pos);
  Ordinal result = parser.parse_ord();
  pos = parser.pos();
  return result;
}

Ordinal parse_ordinal(std::string_view text) {
  std::size_t pos = 0;
  Ordinal result = parse_ordinal_prefix(text, pos);
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos != text.size()) throw OrdinalParseError(pos, "unexpected trailing input");
  return result;
}

std::string to_string(const Ordinal& a) {
  if (a.is_zero()) return "0";
  if (a.is_epsilon_zero()) return "e0";
  std::string out;
  for (const CnfTerm& t : a.terms()) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += t.coefficient.get_str();
      continue;
    }
    out += 'w';
    if (!(t.exponent == Ordinal::finite(1))) out += "^" + render_atom(t.exponent);
    if (t.coefficient != 1) out += "*" + t.coefficient.get_str();
  }
  return out;
}

}  // namespace slowprov
