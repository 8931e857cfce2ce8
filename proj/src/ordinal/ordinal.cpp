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

#include "slowprov/ordinal.hpp"

#include <utility>

namespace slowprov {

namespace {

std::shared_ptr<const detail::OrdinalRep> make_rep(std::vector<CnfTerm> terms) {
  auto rep = std::make_shared<detail::OrdinalRep>();
  rep->terms = std::move(terms);
  return rep;
}

void require_below_e0(const Ordinal& a, const char* op) {
  if (a.is_epsilon_zero()) {
    throw OrdinalError(OrdinalErrorCode::kEpsilonZeroOperand,
                       std::string("e0 is not a valid operand of ") + op);
  }
}

}  // namespace

Ordinal Ordinal::epsilon_zero() {
  static const auto rep = [] {
    auto r = std::make_shared<detail::OrdinalRep>();
    r->epsilon_zero = true;
    return std::shared_ptr<const detail::OrdinalRep>(r);
  }();
  return Ordinal(rep);
}

Ordinal Ordinal::finite(const Natural& n) {
  if (sgn(n) < 0) throw std::invalid_argument("negative ordinal");
  if (sgn(n) == 0) return Ordinal();
  return Ordinal(make_rep({CnfTerm{Ordinal(), n}}));
}

Ordinal Ordinal::omega() {
  static const Ordinal w(make_rep({CnfTerm{Ordinal::finite(1), Natural(1)}}));
  return w;
}

Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (sgn(terms[i].coefficient) <= 0) {
      throw std::invalid_argument("CNF coefficients must be positive");
    }
    if (terms[i].exponent.is_epsilon_zero()) {
      throw std::invalid_argument("e0 cannot be a CNF exponent");
    }
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw std::invalid_argument("CNF exponents must be strictly decreasing");
    }
  }
  if (terms.empty()) return Ordinal();
  return Ordinal(make_rep(std::move(terms)));
}

bool Ordinal::is_epsilon_zero() const { return rep_ != nullptr && rep_->epsilon_zero; }

bool Ordinal::is_finite() const {
  if (rep_ == nullptr) return true;
  return !rep_->epsilon_zero && rep_->terms.size() == 1 && rep_->terms[0].exponent.is_zero();
}

std::optional<Natural> Ordinal::as_finite() const {
  if (rep_ == nullptr) return Natural(0);
  if (!is_finite()) return std::nullopt;
  return rep_->terms[0].coefficient;
}

std::span<const CnfTerm> Ordinal::terms() const {
  if (rep_ == nullptr) return {};
  return rep_->terms;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.rep_ == b.rep_) return true;
  return compare(a, b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) { return compare(a, b); }

std::strong_ordering compare(const Ordinal& a, const Ordinal& b) {
  if (a.is_epsilon_zero() || b.is_epsilon_zero()) {
    return a.is_epsilon_zero() <=> b.is_epsilon_zero();
  }
  auto ta = a.terms();
  auto tb = b.terms();
  const std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(ta[i].exponent, tb[i].exponent); c != 0) return c;
    const int cc = cmp(ta[i].coefficient, tb[i].coefficient);
    if (cc != 0) return cc <=> 0;
  }
  return ta.size() <=> tb.size();
}

Ordinal add(const Ordinal& a, const Ordinal& b) {
  require_below_e0(a, "addition");
  require_below_e0(b, "addition");
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;

  auto ta = a.terms();
  auto tb = b.terms();
  const Ordinal& lead = tb.front().exponent;
  std::vector<CnfTerm> out;
  out.reserve(ta.size() + tb.size());
  // Terms of a below b's leading exponent are absorbed.
  for (const CnfTerm& t : ta) {
    auto c = compare(t.exponent, lead);
    if (c > 0) {
      out.push_back(t);
    } else if (c == 0) {
      out.push_back(CnfTerm{lead, t.coefficient + tb.front().coefficient});
    } else {
      break;
    }
  }
  if (out.empty() || !(out.back().exponent == lead)) out.push_back(tb.front());
  out.insert(out.end(), tb.begin() + 1, tb.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal mul(const Ordinal& a, const Ordinal& b) {
  require_below_e0(a, "multiplication");
  require_below_e0(b, "multiplication");
  if (a.is_zero() || b.is_zero()) return Ordinal();

  auto ta = a.terms();
  const Ordinal& lead = ta.front().exponent;
  Ordinal result;
  // a * (w^b0 c0 + ... ) = a*w^b0*c0 + ...  (left distributivity).
  for (const CnfTerm& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      // a * c multiplies only the leading coefficient.
      std::vector<CnfTerm> terms(ta.begin(), ta.end());
      terms.front().coefficient *= t.coefficient;
      piece = Ordinal::from_terms(std::move(terms));
    } else {
      piece = Ordinal::from_terms({CnfTerm{add(lead, t.exponent), t.coefficient}});
    }
    result = add(result, piece);
  }
  return result;
}

Ordinal omega_pow(const Ordinal& a) {
  require_below_e0(a, "w^x");
  return Ordinal::from_terms({CnfTerm{a, Natural(1)}});
}

Ordinal omega_tower(const Ordinal& base, std::uint64_t n) {
  require_below_e0(base, "the w-tower");
  Ordinal cur = base;
  for (std::uint64_t i = 0; i < n; ++i) cur = omega_pow(cur);
  return cur;
}

Classification classify(const Ordinal& a) {
  if (a.is_zero()) return {OrdinalKind::kZero, std::nullopt};
  if (a.is_epsilon_zero()) return {OrdinalKind::kLimit, std::nullopt};
  auto t = a.terms();
  if (!t.back().exponent.is_zero()) return {OrdinalKind::kLimit, std::nullopt};
  std::vector<CnfTerm> terms(t.begin(), t.end());
  if (terms.back().coefficient == 1) {
    terms.pop_back();
  } else {
    terms.back().coefficient -= 1;
  }
  return {OrdinalKind::kSuccessor, Ordinal::from_terms(std::move(terms))};
}

Ordinal fund_seq(const Ordinal& lambda, const Natural& n) {
  if (sgn(n) < 0) throw std::invalid_argument("negative fundamental-sequence index");
  if (lambda.is_epsilon_zero()) {
    if (n >= kMaxTowerHeight) {
      throw OrdinalError(OrdinalErrorCode::kTooLarge, "e0[n] tower too tall to represent");
    }
    return omega_n(n.get_ui() + 1);
  }
  if (classify(lambda).kind != OrdinalKind::kLimit) {
    throw OrdinalError(OrdinalErrorCode::kNotALimit, to_string(lambda) + " is not a limit");
  }

  auto t = lambda.terms();
  std::vector<CnfTerm> terms(t.begin(), t.end());
  CnfTerm last = terms.back();
  terms.pop_back();
  if (last.coefficient > 1) terms.push_back(CnfTerm{last.exponent, last.coefficient - 1});

  Classification e = classify(last.exponent);
  if (e.kind == OrdinalKind::kSuccessor) {
    terms.push_back(CnfTerm{*e.predecessor, n + 1});
  } else {
    terms.push_back(CnfTerm{fund_seq(last.exponent, n), Natural(1)});
  }
  return Ordinal::from_terms(std::move(terms));
}

Ordinal stepdown_one(const Ordinal& a, const Natural& n) {
  Classification c = classify(a);
  switch (c.kind) {
    case OrdinalKind::kZero:
      throw OrdinalError(OrdinalErrorCode::kZeroInput, "0 has no stepdown successor");
    case OrdinalKind::kSuccessor:
      return *c.predecessor;
    case OrdinalKind::kLimit:
      break;
  }
  return fund_seq(a, n);
}

PathResult stepdown_path(const Ordinal& a, const Natural& n, const Ordinal& target,
                         std::uint64_t step_budget) {
  PathResult result{PathResult::Outcome::kStepBudgetExceeded, {a}};
  Ordinal cur = a;
  for (std::uint64_t steps = 0;; ++steps) {
    auto c = compare(cur, target);
    if (c == 0) {
      result.outcome = PathResult::Outcome::kReached;
      return result;
    }
    if (c < 0 || cur.is_zero()) {
      result.outcome = PathResult::Outcome::kNotOnPath;
      return result;
    }
    if (steps == step_budget) return result;
    cur = stepdown_one(cur, n);
    result.path.push_back(cur);
  }
}

}  // namespace slowprov
