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

#include <gtest/gtest.h>

#include <vector>

#include "slowprov/fgh.hpp"
#include "slowprov/oracles.hpp"
#include "support/generators.hpp"

namespace slowprov::fgh {
namespace {

Ordinal P(const char* s) { return parse_ordinal(s); }

const EvalBudget kGenerous{std::uint64_t{1} << 24, 50'000'000};
const EvalBudget kSmall{1 << 12, 100'000};

Natural value(const EvalResult& r) {
  EXPECT_TRUE(has_value(r));
  return has_value(r) ? value_of(r) : Natural(-1);
}

// F_1 by repeated increment, F_2 by repeated F_1: written out by hand.
Natural hand_F1(Natural x) {
  Natural v = x;
  for (Natural i = 0; i <= x; ++i) v += 1;
  return v;
}

TEST(Budget, Validation) {
  EXPECT_THROW((EvalBudget{0, 1}.validate()), std::invalid_argument);
  EXPECT_THROW((EvalBudget{1, 0}.validate()), std::invalid_argument);
  EXPECT_NO_THROW(EvalBudget::desk().validate());
  EXPECT_THROW(eval_F(Ordinal::zero(), 1, EvalBudget{0, 1}), std::invalid_argument);
}

TEST(EvalF, Examples) {
  EXPECT_EQ(value(eval_F(Ordinal::zero(), 5, kSmall)), 6);
  EXPECT_EQ(value(eval_F(Ordinal::finite(1), 4, kSmall)), 9);
  EXPECT_EQ(value(eval_F(Ordinal::omega(), 1, kGenerous)), 7);
  EXPECT_EQ(value(eval_F(Ordinal::finite(2), 2, kGenerous)), 23);
  EXPECT_EQ(value(eval_F(Ordinal::zero(), 0, kSmall)), 1);
}

TEST(EvalF, RawAndAcceleratedAgree) {
  for (unsigned n = 0; n <= 6; ++n) {
    for (const char* a : {"0", "1", "2", "w", "w+1"}) {
      const EvalResult raw = eval_F(P(a), n, kGenerous, Unfolding::kRaw);
      const EvalResult fast = eval_F(P(a), n, kGenerous);
      if (has_value(raw)) {
        ASSERT_TRUE(has_value(fast));
        EXPECT_EQ(value_of(raw), value_of(fast)) << a << " " << n;
      }
    }
  }
}

TEST(EvalF, BudgetExceededCarriesDiagnostics) {
  const EvalResult r = eval_F(Ordinal::finite(4), 3, EvalBudget::desk());
  ASSERT_FALSE(has_value(r));
  const Exceeded& e = std::get<Exceeded>(r);
  EXPECT_EQ(e.limit, Exceeded::Limit::kBits);
  EXPECT_LE(e.largest_bit_length, EvalBudget::kDeskBitLength);

  const EvalResult s = eval_F(Ordinal::finite(2), 20, EvalBudget{1 << 20, 10}, Unfolding::kRaw);
  ASSERT_FALSE(has_value(s));
  EXPECT_EQ(std::get<Exceeded>(s).limit, Exceeded::Limit::kSteps);
  EXPECT_EQ(std::get<Exceeded>(s).steps_used, 10u);
}

TEST(EvalFIter, Examples) {
  EXPECT_EQ(value(eval_F_iter(Ordinal::finite(1), 0, 9, kSmall)), 9);
  EXPECT_EQ(value(eval_F_iter(Ordinal::finite(1), 2, 1, kSmall)), 7);
  EXPECT_EQ(value(eval_F_iter(Ordinal::zero(), 10, 0, kSmall)), 10);
  EXPECT_EQ(value(eval_F_iter(Ordinal::zero(), 10, 0, kSmall, Unfolding::kRaw)), 10);
}

TEST(CompareFTo, Examples) {
  auto le = compare_F_to(Ordinal::finite(1), 4, 9, kSmall);
  ASSERT_TRUE(std::holds_alternative<LessEqual>(le));
  EXPECT_EQ(std::get<LessEqual>(le).v, 9);
  EXPECT_TRUE(std::holds_alternative<Greater>(compare_F_to(Ordinal::zero(), 5, 5, kSmall)));
  EXPECT_TRUE(std::holds_alternative<Greater>(compare_F_to(Ordinal::omega(), 3, 10, kSmall)));
  EXPECT_TRUE(std::holds_alternative<Greater>(compare_F_to(Ordinal::omega(), 3, 10, EvalBudget{8, 5})));
  EXPECT_TRUE(std::holds_alternative<Greater>(compare_F_to(P("w^w"), 7, 12, kSmall)));
}

TEST(CompareFTo, AgreesWithEvaluation) {
  for (const char* a : {"0", "1", "2", "3", "w", "w+1", "w*2", "w^2"}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const EvalResult v = eval_F(P(a), n, kGenerous);
      if (!has_value(v)) continue;
      const Natural exact = value_of(v);
      for (const Natural& t : std::vector<Natural>{exact - 1, exact, exact + 1, Natural(0), Natural(100)}) {
        if (t < 0) continue;
        const ThresholdResult r = compare_F_to(P(a), n, t, kGenerous);
        if (exact <= t) {
          ASSERT_TRUE(std::holds_alternative<LessEqual>(r)) << a << " " << n << " " << t;
          EXPECT_EQ(std::get<LessEqual>(r).v, exact);
        } else {
          EXPECT_TRUE(std::holds_alternative<Greater>(r)) << a << " " << n << " " << t;
        }
      }
    }
  }
}

TEST(Shifted, Examples) {
  EXPECT_EQ(value(eval_F_shifted(1, 0, kGenerous)), 1);
  EXPECT_EQ(value(eval_F_shifted(5, 3, kGenerous)), 1);
  EXPECT_FALSE(has_value(eval_F_shifted(2, 3, EvalBudget::desk())));
  // F_e0(0) = F_w(0) = F_1(0) = 1.
  EXPECT_EQ(value(eval_F_shifted(0, 0, kGenerous)), 1);
  EXPECT_EQ(value(eval_F_shifted(9, 9, kGenerous)), 1);
  EXPECT_FALSE(has_value(eval_F_shifted(0, 1, kSmall)));
}

TEST(SlowFunctions, LExamplesAndTable) {
  SlowFunctions s(EvalBudget::desk());
  const std::uint64_t expected[] = {0, 0, 0, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2};
  for (std::uint64_t n = 0; n <= 12; ++n) EXPECT_EQ(s.l(n), expected[n]) << n;
}

TEST(SlowFunctions, RExamples) {
  SlowFunctions s(EvalBudget::desk());
  EXPECT_EQ(value(s.r(1)), 3);
  EXPECT_EQ(value(s.r(2)), 5);
  EXPECT_FALSE(has_value(s.r(3)));
}

TEST(SlowFunctions, UndecidedIsReportedNotGuessed) {
  // Two-bit values: up to n = 4 every candidate m <= 3 is decided, but the
  // candidate m = 4 for n = 5 does not fit.
  SlowFunctions s(EvalBudget{2, 1000});
  EXPECT_EQ(s.l(3), 1u);
  EXPECT_EQ(s.l(4), 1u);
  try {
    s.l(5);
    FAIL() << "expected Undecided";
  } catch (const Undecided& u) {
    EXPECT_EQ(u.n(), 5u);
    EXPECT_EQ(u.m(), 4u);
  }
}

TEST(FghProperties, ClosedForms) {
  for (unsigned x = 0; x <= 64; ++x) {
    EXPECT_EQ(value(eval_F(Ordinal::finite(1), x, kSmall, Unfolding::kRaw)), 2 * x + 1);
    EXPECT_EQ(hand_F1(x), 2 * x + 1);
  }
  for (unsigned long x = 0; x <= 12; ++x) {
    Natural expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, x + 1);
    expected = expected * (x + 1) - 1;
    EXPECT_EQ(value(eval_F(Ordinal::finite(2), x, kGenerous, Unfolding::kRaw)), expected);
  }
}

TEST(FghProperties, OracleAgreement) {
  testing::Rng rng(21);
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    const Ordinal a = testing::random_below_omega_omega(rng, 2, 2);
    const unsigned n = static_cast<unsigned>(testing::uniform(rng, 0, 3));
    const EvalResult r = eval_F(a, n, kGenerous);
    if (!has_value(r)) continue;
    ++compared;
    EXPECT_EQ(value_of(r), oracles::oracle_F(a, n)) << to_string(a) << " " << n;
  }
  EXPECT_GT(compared, 50);
}

TEST(FghProperties, MonotoneInArgumentAndStrictGrowth) {
  for (const char* a : {"0", "1", "2", "w", "w+1", "w*2"}) {
    Natural prev = -1;
    for (unsigned n = 0; n <= 4; ++n) {
      const EvalResult r = eval_F(P(a), n, kGenerous);
      if (!has_value(r)) break;
      EXPECT_GT(value_of(r), n);
      EXPECT_GE(value_of(r), prev);
      prev = value_of(r);
      for (unsigned i = 1; i <= 3; ++i) {
        const EvalResult it = eval_F_iter(P(a), i, n, kGenerous);
        if (has_value(it)) {
          EXPECT_GT(value_of(it), n);
        }
      }
    }
  }
}

TEST(FghProperties, StepdownCoherence) {
  for (const char* a : {"1", "2", "3", "w", "w+1", "w+2", "w*2", "w^2"}) {
    for (unsigned n = 0; n <= 3; ++n) {
      const EvalResult r = eval_F(P(a), n, kGenerous);
      if (!has_value(r)) continue;
      const PathResult path = stepdown_path(P(a), n, Ordinal::zero(), 1'000'000);
      ASSERT_TRUE(path.reached());
      for (const Ordinal& b : path.path) {
        const EvalResult rb = eval_F(b, n, kGenerous);
        ASSERT_TRUE(has_value(rb));
        EXPECT_LE(value_of(rb), value_of(r));
      }
    }
  }
}

TEST(Oracle, Examples) {
  EXPECT_EQ(oracles::oracle_F(Ordinal::finite(2), 2), 23);
  EXPECT_EQ(oracles::oracle_F(Ordinal::zero(), 0), 1);
  EXPECT_EQ(oracles::oracle_F(Ordinal::omega(), 1), 7);
  EXPECT_THROW(oracles::oracle_F(Ordinal::finite(4), 3), oracles::HardCapExceeded);
  EXPECT_THROW(oracles::oracle_F(Ordinal::finite(3), 2, 1000), oracles::HardCapExceeded);
}

}  // namespace
}  // namespace slowprov::fgh
