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

#ifndef SLOWPROV_ORDINAL_HPP_
#define SLOWPROV_ORDINAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace slowprov {

using Natural = mpz_class;

struct CnfTerm;

namespace detail {
struct OrdinalRep;
}

// An ordinal in [0, e0], stored in coefficient Cantor normal form:
//   w^{e_0}*c_0 + ... + w^{e_k}*c_k  with e_0 > ... > e_k and c_i >= 1.
// e0 is a distinguished top element and never appears as an exponent.
// Values are immutable and share structure, so copies are cheap.
class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal zero() { return Ordinal(); }
  static Ordinal epsilon_zero();
  static Ordinal finite(const Natural& n);
  static Ordinal finite(std::uint64_t n) { return finite(Natural(static_cast<unsigned long>(n))); }
  static Ordinal omega();

  // Builds an ordinal from terms that are already canonical; throws
  // std::invalid_argument otherwise.
  static Ordinal from_terms(std::vector<CnfTerm> terms);

  bool is_zero() const { return rep_ == nullptr; }
  bool is_epsilon_zero() const;
  bool is_finite() const;
  // Value if the ordinal is a natural number.
  std::optional<Natural> as_finite() const;

  // Empty for zero and for e0.
  std::span<const CnfTerm> terms() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::shared_ptr<const detail::OrdinalRep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const detail::OrdinalRep> rep_;
};

struct CnfTerm {
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(const CnfTerm& a, const CnfTerm& b) {
    return a.exponent == b.exponent && a.coefficient == b.coefficient;
  }
};

namespace detail {
struct OrdinalRep {
  bool epsilon_zero = false;
  std::vector<CnfTerm> terms;
};
}  // namespace detail

enum class OrdinalErrorCode { kEpsilonZeroOperand, kNotALimit, kZeroInput, kTooLarge };

class OrdinalError : public std::domain_error {
 public:
  OrdinalError(OrdinalErrorCode code, const std::string& what)
      : std::domain_error(what), code_(code) {}
  OrdinalErrorCode code() const { return code_; }

 private:
  OrdinalErrorCode code_;
};

// Syntax error in ordinal text; `position` is a 0-based byte offset.
class OrdinalParseError : public std::invalid_argument {
 public:
  OrdinalParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Grammar:
//   ord  := term ("+" term)* | "0" | "e0"
//   term := "w" ("^" atom)? ("*" nat)? | nat
//   atom := "w" | nat | "(" ord ")"
// Non-canonical input such as "3+w" is normalized by ordinal addition.
Ordinal parse_ordinal(std::string_view text);

// Parses an ordinal prefix of `text` starting at `pos`, advancing `pos` past
// it. Used by grammars that embed ordinals (iteration exponents).
Ordinal parse_ordinal_prefix(std::string_view text, std::size_t& pos);

std::string to_string(const Ordinal& a);

std::strong_ordering compare(const Ordinal& a, const Ordinal& b);

// Ordinal arithmetic. Operands must be below e0 (OrdinalError otherwise).
Ordinal add(const Ordinal& a, const Ordinal& b);
Ordinal mul(const Ordinal& a, const Ordinal& b);
Ordinal omega_pow(const Ordinal& a);

// w^base_n: w^a_0 = a, w^a_{n+1} = w^{w^a_n}.
Ordinal omega_tower(const Ordinal& base, std::uint64_t n);

// w_n = w^1_n.
inline Ordinal omega_n(std::uint64_t n) { return omega_tower(Ordinal::finite(1), n); }

enum class OrdinalKind { kZero, kSuccessor, kLimit };

struct Classification {
  OrdinalKind kind;
  std::optional<Ordinal> predecessor;  // set iff kind == kSuccessor
};

Classification classify(const Ordinal& a);

// Standard fundamental sequence lambda[n]; lambda must be a limit (e0 included).
// e0[n] = w_{n+1}. Throws OrdinalError(kTooLarge) if e0[n] would need a tower
// taller than `kMaxTowerHeight`.
inline constexpr std::uint64_t kMaxTowerHeight = 1u << 20;
Ordinal fund_seq(const Ordinal& lambda, const Natural& n);
inline Ordinal fund_seq(const Ordinal& lambda, std::uint64_t n) {
  return fund_seq(lambda, Natural(static_cast<unsigned long>(n)));
}

// One step of the stepdown relation: a[n] for limits, predecessor otherwise.
Ordinal stepdown_one(const Ordinal& a, const Natural& n);
inline Ordinal stepdown_one(const Ordinal& a, std::uint64_t n) {
  return stepdown_one(a, Natural(static_cast<unsigned long>(n)));
}

struct PathResult {
  enum class Outcome { kReached, kNotOnPath, kStepBudgetExceeded };

  Outcome outcome;
  // For kReached: path.front() is the start, path.back() the target and
  // steps() == path.size() - 1. Otherwise the prefix that was walked.
  std::vector<Ordinal> path;

  std::uint64_t steps() const { return path.empty() ? 0 : path.size() - 1; }
  bool reached() const { return outcome == Outcome::kReached; }
};

// Follows the (deterministic) n-stepdown sequence from `a` looking for
// `target`. Paths strictly decrease, so the walk stops as soon as it passes
// below the target.
PathResult stepdown_path(const Ordinal& a, const Natural& n, const Ordinal& target,
                         std::uint64_t step_budget);
inline PathResult stepdown_path(const Ordinal& a, std::uint64_t n, const Ordinal& target,
                                std::uint64_t step_budget) {
  return stepdown_path(a, Natural(static_cast<unsigned long>(n)), target, step_budget);
}

}  // namespace slowprov

#endif  // SLOWPROV_ORDINAL_HPP_
