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

#include "slowprov/fgh.hpp"

#include <optional>
#include <vector>

namespace slowprov::fgh {

void EvalBudget::validate() const {
  if (max_bit_length == 0 || max_steps == 0) {
    throw std::invalid_argument("evaluation budget caps must be positive");
  }
}

namespace {

std::uint64_t bit_length(const Natural& v) {
  return sgn(v) == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
}

// Unfolds F_alpha^count(n) with an explicit stack of pending compositions.
// A frame (index, remaining) means "apply F_index `remaining` more times to
// the current value".
class Unfolder {
 public:
  enum class Stop { kDone, kGreater, kExceeded };

  Unfolder(const EvalBudget& budget, Unfolding mode, const Natural* threshold)
      : budget_(budget), mode_(mode), threshold_(threshold) {
    budget_.validate();
  }

  Stop run(const Ordinal& alpha, const Natural& count, const Natural& n) {
    value_ = n;
    if (auto s = observe(); s != Stop::kDone) return s;
    std::vector<Frame> stack;
    if (sgn(count) > 0) stack.push_back(Frame{alpha, count});

    while (!stack.empty()) {
      if (steps_ == budget_.max_steps) return exceed(Exceeded::Limit::kSteps);
      ++steps_;

      const Ordinal index = stack.back().index;
      if (threshold_ != nullptr && floor_exceeds_threshold(index)) return Stop::kGreater;
      Classification c = classify(index);

      if (c.kind == OrdinalKind::kZero) {
        Frame& top = stack.back();
        if (mode_ == Unfolding::kAccelerated) {
          value_ += top.remaining;
          stack.pop_back();
        } else {
          value_ += 1;
          if (--top.remaining == 0) stack.pop_back();
        }
      } else if (c.kind == OrdinalKind::kSuccessor && mode_ == Unfolding::kAccelerated &&
                 c.predecessor->is_zero()) {
        // F_1^k(v) = 2^k (v+1) - 1.
        const Natural k = stack.back().remaining;
        stack.pop_back();
        if (auto s = apply_f1_power(k); s != Stop::kDone) return s;
        continue;
      } else {
        Frame& top = stack.back();
        Frame next;
        if (c.kind == OrdinalKind::kSuccessor) {
          next = Frame{*c.predecessor, value_ + 1};
        } else {
          try {
            next = Frame{fund_seq(index, value_), Natural(1)};
          } catch (const OrdinalError& e) {
            if (e.code() != OrdinalErrorCode::kTooLarge) throw;
            return exceed(Exceeded::Limit::kBits);
          }
        }
        if (--top.remaining == 0) stack.pop_back();
        stack.push_back(std::move(next));
        continue;
      }
      if (auto s = observe(); s != Stop::kDone) return s;
    }
    return Stop::kDone;
  }

  const Natural& value() const { return value_; }
  std::uint64_t steps() const { return steps_; }
  const Exceeded& exceeded() const { return exceeded_; }

 private:
  struct Frame {
    Ordinal index;
    Natural remaining;
  };

  // Every index a >= 2 steps down to 2 at parameter v >= 1 (an infinite
  // path passes w and then v+1), so F_a(v) >= F_2(v) = 2^(v+1) (v+1) - 1.
  // Checked once per distinct value.
  bool floor_exceeds_threshold(const Ordinal& index) {
    if (sgn(value_) == 0 || (floor_checked_ && floor_value_ == value_)) return false;
    if (index < Ordinal::finite(2)) return false;
    const Natural v1 = value_ + 1;
    const std::uint64_t t_bits = bit_length(*threshold_);
    if (v1 + bit_length(v1) - 1 > t_bits) return true;
    Natural floor;
    mpz_mul_2exp(floor.get_mpz_t(), v1.get_mpz_t(), v1.get_ui());
    floor -= 1;
    if (floor > *threshold_) return true;
    floor_checked_ = true;
    floor_value_ = value_;
    return false;
  }

  Stop apply_f1_power(const Natural& k) {
    Natural base = value_ + 1;
    const std::uint64_t b = bit_length(base);
    // The result has k+b-1 or k+b bits; decide threshold and cap before
    // materializing it.
    if (threshold_ != nullptr) {
      if (k + b - 1 > bit_length(*threshold_)) return Stop::kGreater;
    }
    if (k + b - 1 > budget_.max_bit_length) return exceed(Exceeded::Limit::kBits);
    mpz_mul_2exp(value_.get_mpz_t(), base.get_mpz_t(), k.get_ui());
    value_ -= 1;
    return observe();
  }

  Stop observe() {
    const std::uint64_t bits = bit_length(value_);
    if (bits > largest_bits_) largest_bits_ = bits;
    if (threshold_ != nullptr && value_ > *threshold_) return Stop::kGreater;
    if (bits > budget_.max_bit_length) return exceed(Exceeded::Limit::kBits);
    return Stop::kDone;
  }

  Stop exceed(Exceeded::Limit limit) {
    exceeded_ = Exceeded{limit, steps_, largest_bits_};
    return Stop::kExceeded;
  }

  EvalBudget budget_;
  Unfolding mode_;
  const Natural* threshold_;
  Natural value_;
  std::uint64_t steps_ = 0;
  std::uint64_t largest_bits_ = 0;
  bool floor_checked_ = false;
  Natural floor_value_;
  Exceeded exceeded_{};
};

EvalResult finish(Unfolder& u, Unfolder::Stop stop) {
  if (stop == Unfolder::Stop::kExceeded) return u.exceeded();
  return Value{u.value(), u.steps()};
}

void require_index(const Ordinal& alpha) {
  (void)alpha;  // every Ordinal is <= e0 by construction
}

}  // namespace

EvalResult eval_F(const Ordinal& alpha, const Natural& n, const EvalBudget& budget,
                  Unfolding mode) {
  return eval_F_iter(alpha, Natural(1), n, budget, mode);
}

EvalResult eval_F_iter(const Ordinal& alpha, const Natural& i, const Natural& n,
                       const EvalBudget& budget, Unfolding mode) {
  require_index(alpha);
  if (sgn(i) < 0 || sgn(n) < 0) throw std::invalid_argument("negative argument");
  Unfolder u(budget, mode, nullptr);
  return finish(u, u.run(alpha, i, n));
}

ThresholdResult compare_F_to(const Ordinal& alpha, const Natural& n, const Natural& threshold,
                             const EvalBudget& budget) {
  if (sgn(n) < 0 || sgn(threshold) < 0) throw std::invalid_argument("negative argument");
  Unfolder u(budget, Unfolding::kAccelerated, &threshold);
  switch (u.run(alpha, Natural(1), n)) {
    case Unfolder::Stop::kDone:
      return LessEqual{u.value()};
    case Unfolder::Stop::kGreater:
      return Greater{};
    case Unfolder::Stop::kExceeded:
      break;
  }
  return u.exceeded();
}

EvalResult eval_F_shifted(const Natural& z, const Natural& x, const EvalBudget& budget) {
  Natural arg = x - z;
  if (sgn(arg) < 0) arg = 0;
  return eval_F(Ordinal::epsilon_zero(), arg, budget);
}

Undecided::Undecided(std::uint64_t n, std::uint64_t m)
    : std::runtime_error("l(" + std::to_string(n) + ") undecided: membership of m=" +
                         std::to_string(m) + " exceeded the budget"),
      n_(n),
      m_(m) {}

SlowFunctions::SlowFunctions(EvalBudget budget) : budget_(budget) { budget_.validate(); }

bool SlowFunctions::qualifies(std::uint64_t m, std::uint64_t n) {
  const Ordinal index = omega_n(l(m));
  ThresholdResult t = compare_F_to(index, Natural(static_cast<unsigned long>(m)),
                                   Natural(static_cast<unsigned long>(n)), budget_);
  if (std::holds_alternative<Exceeded>(t)) throw Undecided(n, m);
  return std::holds_alternative<LessEqual>(t);
}

std::uint64_t SlowFunctions::l(std::uint64_t n) {
  if (n <= 1) return 0;
  if (auto it = memo_.find(n); it != memo_.end()) return it->second;
  // Fill smaller values first so the recursion stays shallow.
  for (std::uint64_t m = 2; m < n; ++m) {
    if (!memo_.contains(m)) l(m);
  }
  std::uint64_t result = 0;
  for (std::uint64_t m = n - 1; m >= 1; --m) {
    if (qualifies(m, n)) {
      result = m;
      break;
    }
  }
  memo_.emplace(n, result);
  return result;
}

EvalResult SlowFunctions::r(std::uint64_t n) {
  return eval_F(omega_n(l(n)), Natural(static_cast<unsigned long>(n)), budget_);
}

}  // namespace slowprov::fgh
