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

#include "slowprov/itercalc.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

namespace slowprov::iter {

IterParseError::IterParseError(std::size_t position, const std::string& message)
    : std::invalid_argument("iteration syntax error at " + std::to_string(position) + ": " +
                            message),
      position_(position) {}

const char* op_name(OpKind k) {
  switch (k) {
    case OpKind::kB:
      return "B";
    case OpKind::kS1:
      return "S1";
    case OpKind::kS2:
      return "S2";
    case OpKind::kR:
      return "R";
  }
  return "?";
}

namespace {

std::optional<OpKind> op_from(std::string_view w) {
  if (w == "B") return OpKind::kB;
  if (w == "S1") return OpKind::kS1;
  if (w == "S2") return OpKind::kS2;
  if (w == "R") return OpKind::kR;
  return std::nullopt;
}

// inner + outer, if representable.
std::optional<Ordinal> merged(const Ordinal& inner, const Ordinal& outer) {
  if (inner.is_epsilon_zero()) return std::nullopt;
  if (outer.is_epsilon_zero()) return Ordinal::epsilon_zero();
  return add(inner, outer);
}

// Returns q and m if e = w*q + m with q >= 1 and m finite.
std::optional<std::pair<Natural, Natural>> omega_times(const Ordinal& e) {
  if (e.is_epsilon_zero()) return std::nullopt;
  auto t = e.terms();
  if (t.empty() || !(t[0].exponent == Ordinal::finite(1))) return std::nullopt;
  if (t.size() == 1) return std::make_pair(t[0].coefficient, Natural(0));
  if (t.size() == 2 && t[1].exponent.is_zero()) return std::make_pair(t[0].coefficient, t[1].coefficient);
  return std::nullopt;
}

// Rewrites stack[i] in place if a rule applies there.
bool rewrite_at(std::vector<Entry>& s, std::size_t i, const NormalizeOptions& opts) {
  const Entry e = s[i];
  std::vector<Entry> repl;
  switch (e.op) {
    case OpKind::kR: {
      const Natural n = *e.exp.as_finite();
      if (n < 2) return false;
      const Natural k = n / 2;
      const Natural m = n % 2;
      repl.push_back({OpKind::kB, Ordinal::finite(k)});
      if (m != 0) repl.push_back({OpKind::kR, Ordinal::finite(m)});
      break;
    }
    case OpKind::kS2: {
      auto qm = omega_times(e.exp);
      if (!qm) return false;
      repl.push_back({OpKind::kB, Ordinal::finite(qm->first)});
      if (qm->second != 0) repl.push_back({OpKind::kS2, Ordinal::finite(qm->second)});
      break;
    }
    case OpKind::kS1:
      if (e.exp.is_epsilon_zero()) {
        repl.push_back({OpKind::kB, Ordinal::finite(1)});
        break;
      }
      if (opts.box_absorbs_s1 && i + 1 < s.size() && s[i + 1].op == OpKind::kB) {
        break;  // dropped
      }
      return false;
    case OpKind::kB:
      return false;
  }
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), repl.begin(), repl.end());
  return true;
}

// Merges stack[i] with stack[i + 1] if possible.
bool merge_at(std::vector<Entry>& s, std::size_t i) {
  if (i + 1 >= s.size() || s[i].op != s[i + 1].op) return false;
  auto sum = merged(s[i].exp, s[i + 1].exp);
  if (!sum) return false;
  s[i].exp = *sum;
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  return true;
}

}  // namespace

IterExpr merge_adjacent(IterExpr e) {
  std::vector<Entry> out;
  for (const Entry& x : e.stack) {
    if (!out.empty() && out.back().op == x.op) {
      if (auto sum = merged(out.back().exp, x.exp)) {
        out.back().exp = *sum;
        continue;
      }
    }
    out.push_back(x);
  }
  e.stack = std::move(out);
  return e;
}

IterExpr parse_iter(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<Entry> outer_first;
  IterExpr result;
  for (;;) {
    skip_ws();
    const std::size_t start = pos;
    if (pos >= text.size() || !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      throw IterParseError(pos, pos >= text.size() ? "missing atom" : "expected an operator or atom");
    }
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    const std::string_view word = text.substr(start, pos - start);
    auto op = op_from(word);
    if (!op) {
      result.atom = std::string(word);
      skip_ws();
      if (pos != text.size()) throw IterParseError(pos, "unexpected input after the atom");
      break;
    }
    Ordinal exp = Ordinal::finite(1);
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      const std::size_t exp_pos = pos;
      try {
        exp = parse_ordinal_prefix(text, pos);
      } catch (const OrdinalParseError& e) {
        throw IterParseError(e.position(), e.what());
      }
      if (exp.is_zero()) throw IterParseError(exp_pos, "exponents must be at least 1");
      if (*op == OpKind::kR && !exp.is_finite()) {
        throw IterParseError(exp_pos, "R only takes finite exponents");
      }
    }
    outer_first.push_back({*op, exp});
  }
  result.stack.assign(outer_first.rbegin(), outer_first.rend());
  return merge_adjacent(std::move(result));
}

std::string render_iter(const IterExpr& e) {
  std::string out;
  for (auto it = e.stack.rbegin(); it != e.stack.rend(); ++it) {
    out += op_name(it->op);
    if (!(it->exp == Ordinal::finite(1))) out += "^" + to_string(it->exp);
    out += ' ';
  }
  return out + e.atom;
}

IterExpr normalize(const IterExpr& e, const NormalizeOptions& opts, Strategy strategy) {
  IterExpr r = merge_adjacent(e);
  std::vector<Entry>& s = r.stack;
  for (bool changed = true; changed;) {
    changed = false;
    const std::size_t n = s.size();
    for (std::size_t k = 0; k < n && !changed; ++k) {
      const std::size_t i = strategy == Strategy::kInnermostFirst ? k : n - 1 - k;
      changed = rewrite_at(s, i, opts) || merge_at(s, i);
    }
  }
  return r;
}

Entailment entails(const IterExpr& e1, const IterExpr& e2, const NormalizeOptions& opts) {
  const IterExpr a = normalize(e1, opts);
  const IterExpr b = normalize(e2, opts);
  if (a.atom != b.atom || a.stack.size() != b.stack.size()) return Entailment::kUnknown;
  for (std::size_t i = 0; i < a.stack.size(); ++i) {
    const Entry& x = a.stack[i];
    const Entry& y = b.stack[i];
    if (!(x.exp <= y.exp)) return Entailment::kUnknown;
    if (x.op == y.op) continue;
    if (y.op == OpKind::kB) continue;  // S1, S2 and R each entail B
    return Entailment::kUnknown;
  }
  return Entailment::kYes;
}

}  // namespace slowprov::iter
