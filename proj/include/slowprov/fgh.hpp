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

#ifndef SLOWPROV_FGH_HPP_
#define SLOWPROV_FGH_HPP_

#include <cstdint>
#include <map>
#include <stdexcept>
#include <variant>

#include "slowprov/ordinal.hpp"

namespace slowprov::fgh {

// Limits for one evaluation. Both caps must be positive.
struct EvalBudget {
  std::uint64_t max_bit_length;
  std::uint64_t max_steps;

  // 2^29 bits admits F_3(2) (about 4.03e8 bits); F_4(3) is far beyond it.
  static constexpr std::uint64_t kDeskBitLength = std::uint64_t{1} << 29;
  static constexpr std::uint64_t kDeskSteps = 10'000'000;

  static EvalBudget desk() { return {kDeskBitLength, kDeskSteps}; }

  // Throws std::invalid_argument unless both caps are positive.
  void validate() const;
};

// How F_0 and F_1 compositions are unfolded.
//   kAccelerated: F_0^k(n) = n+k and F_1^k(n) = 2^k(n+1)-1 are applied in one step.
//   kRaw: every increment is its own step.
enum class Unfolding { kAccelerated, kRaw };

struct Exceeded {
  enum class Limit { kSteps, kBits };
  Limit limit;
  std::uint64_t steps_used;
  std::uint64_t largest_bit_length;
};

struct Value {
  Natural v;
  std::uint64_t steps_used = 0;
};

using EvalResult = std::variant<Value, Exceeded>;

inline bool has_value(const EvalResult& r) { return std::holds_alternative<Value>(r); }
inline const Natural& value_of(const EvalResult& r) { return std::get<Value>(r).v; }

struct LessEqual {
  Natural v;
};
struct Greater {};

using ThresholdResult = std::variant<LessEqual, Greater, Exceeded>;

// F_alpha(n) for alpha <= e0:
//   F_0(n) = n+1,  F_{a+1}(n) = F_a^{n+1}(n),  F_lambda(n) = F_{lambda[n]}(n).
// Evaluated with an explicit work stack; budget exhaustion is a result.
EvalResult eval_F(const Ordinal& alpha, const Natural& n, const EvalBudget& budget,
                  Unfolding mode = Unfolding::kAccelerated);

// i-fold composition F_alpha^i(n).
EvalResult eval_F_iter(const Ordinal& alpha, const Natural& i, const Natural& n,
                       const EvalBudget& budget, Unfolding mode = Unfolding::kAccelerated);

// Decides F_alpha(n) <= threshold. Every value produced while unfolding is
// a lower bound of the final value (n < F^i(n) for i >= 1), so the search
// stops with Greater as soon as one exceeds the threshold. It also stops
// when a pending index a >= 2 meets a current value v >= 1 with
// F_2(v) > threshold, since a steps down to 2 at v and F_a(v) >= F_2(v).
// Exceeded is returned only when the step cap runs out first.
ThresholdResult compare_F_to(const Ordinal& alpha, const Natural& n, const Natural& threshold,
                             const EvalBudget& budget);

// F_{e0}(x -' z) with truncated subtraction.
EvalResult eval_F_shifted(const Natural& z, const Natural& x, const EvalBudget& budget);

// Thrown by SlowFunctions when a membership test for l(n) cannot be decided
// within the budget.
class Undecided : public std::runtime_error {
 public:
  Undecided(std::uint64_t n, std::uint64_t m);
  std::uint64_t n() const { return n_; }
  std::uint64_t m() const { return m_; }

 private:
  std::uint64_t n_;
  std::uint64_t m_;
};

// l(n) = max({0} U {m | 0<m<n and F_{w_{l(m)}}(m) <= n}),  r(n) = F_{w_{l(n)}}(n).
//
// One object is one evaluation session; it memoizes l. Not thread-safe,
// but independent sessions may run concurrently.
class SlowFunctions {
 public:
  explicit SlowFunctions(EvalBudget budget);

  std::uint64_t l(std::uint64_t n);
  EvalResult r(std::uint64_t n);

  const EvalBudget& budget() const { return budget_; }

 private:
  bool qualifies(std::uint64_t m, std::uint64_t n);

  EvalBudget budget_;
  std::map<std::uint64_t, std::uint64_t> memo_;
};

}  // namespace slowprov::fgh

#endif  // SLOWPROV_FGH_HPP_
