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

#include "slowprov/itercalc.hpp"
#include "support/generators.hpp"

namespace slowprov::iter {
namespace {

IterExpr E(const char* s) { return parse_iter(s); }
std::string N(const char* s, NormalizeOptions opts = {}) { return render_iter(normalize(E(s), opts)); }

TEST(IterParse, Examples) {
  const IterExpr a = E("S2^w p");
  EXPECT_EQ(a.atom, "p");
  ASSERT_EQ(a.stack.size(), 1u);
  EXPECT_EQ(a.stack[0], (Entry{OpKind::kS2, Ordinal::omega()}));

  const IterExpr b = E("B B p");
  ASSERT_EQ(b.stack.size(), 1u);
  EXPECT_EQ(b.stack[0], (Entry{OpKind::kB, Ordinal::finite(2)}));

  const IterExpr c = E("S2^2 B^w q");
  ASSERT_EQ(c.stack.size(), 2u);
  EXPECT_EQ(c.stack[0].op, OpKind::kB);
  EXPECT_EQ(c.stack[1].op, OpKind::kS2);

  EXPECT_TRUE(E("p").stack.empty());
  EXPECT_EQ(E("S1^e0 x1").stack[0].exp, Ordinal::epsilon_zero());
}

TEST(IterParse, Errors) {
  EXPECT_THROW(E("R^w p"), IterParseError);
  EXPECT_THROW(E("R^e0 p"), IterParseError);
  EXPECT_THROW(E(""), IterParseError);
  EXPECT_THROW(E("B"), IterParseError);
  EXPECT_THROW(E("B^ p"), IterParseError);
  EXPECT_THROW(E("p B"), IterParseError);
  EXPECT_THROW(E("B^(0) p"), IterParseError);
}

TEST(IterRender, Examples) {
  EXPECT_EQ(render_iter(E("S2^w p")), "S2^w p");
  EXPECT_EQ(render_iter(E("B B p")), "B^2 p");
  EXPECT_EQ(render_iter(E("B^1 p")), "B p");
  EXPECT_EQ(render_iter(E("S2^2 B^w q")), "S2^2 B^w q");
  EXPECT_EQ(render_iter(E("p")), "p");
}

TEST(IterMerge, InnerEpsilonZeroStaysSeparate) {
  EXPECT_EQ(render_iter(E("B B^e0 p")), "B B^e0 p");
  EXPECT_EQ(render_iter(E("B^e0 B p")), "B^e0 p");
}

TEST(Normalize, Examples) {
  EXPECT_EQ(N("S2^w p"), "B p");
  EXPECT_EQ(N("R R p"), "B p");
  EXPECT_EQ(N("S1^e0 p"), "B p");
  EXPECT_EQ(N("B^2 B^w p"), "B^w+2 p");
  EXPECT_EQ(N("R^5 p"), "R B^2 p");
  EXPECT_EQ(N("S2^w*2+1 p"), "S2 B^2 p");
  EXPECT_EQ(N("S2^3 p"), "S2^3 p");
  EXPECT_EQ(N("B R R S2^w p"), "B^3 p");
  EXPECT_EQ(N("S1^e0 B S1^e0 p"), "B^3 p");
}

TEST(Normalize, BoxAbsorbsS1Option) {
  NormalizeOptions absorb;
  absorb.box_absorbs_s1 = true;
  EXPECT_EQ(N("B S1^w p"), "B S1^w p");
  EXPECT_EQ(N("B S1^w p", absorb), "B p");
  EXPECT_EQ(N("S1 B p", absorb), "S1 B p");
}

TEST(Entails, Examples) {
  EXPECT_EQ(entails(E("S1 p"), E("B p")), Entailment::kYes);
  EXPECT_EQ(entails(E("B p"), E("S1 p")), Entailment::kUnknown);
  EXPECT_EQ(entails(E("B p"), E("B^w p")), Entailment::kYes);
  EXPECT_EQ(entails(E("B^w p"), E("B p")), Entailment::kUnknown);
  EXPECT_EQ(entails(E("R R p"), E("B p")), Entailment::kYes);
  EXPECT_EQ(entails(E("B p"), E("B q")), Entailment::kUnknown);
  EXPECT_EQ(entails(E("S2 B p"), E("S2^3 B^2 p")), Entailment::kYes);
  EXPECT_EQ(entails(E("S1 R p"), E("B R p")), Entailment::kYes);
  EXPECT_EQ(entails(E("S2 B p"), E("B^2 p")), Entailment::kUnknown);
}

TEST(IterProperties, RenderParseRoundtrip) {
  testing::Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const IterExpr e = merge_adjacent(testing::random_iter(rng));
    ASSERT_EQ(parse_iter(render_iter(e)), e) << render_iter(e);
  }
}

TEST(IterProperties, NoAdjacentEqualOperatorsAfterParse) {
  testing::Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const IterExpr e = parse_iter(render_iter(testing::random_iter(rng)));
    for (std::size_t j = 0; j + 1 < e.stack.size(); ++j) {
      if (e.stack[j].op == e.stack[j + 1].op) {
        EXPECT_TRUE(e.stack[j].exp.is_epsilon_zero()) << render_iter(e);
      }
    }
  }
}

TEST(IterProperties, NormalizeIsIdempotent) {
  testing::Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    const IterExpr e = testing::random_iter(rng);
    for (bool absorb : {false, true}) {
      NormalizeOptions opts;
      opts.box_absorbs_s1 = absorb;
      const IterExpr once = normalize(e, opts);
      ASSERT_EQ(normalize(once, opts), once) << render_iter(e);
    }
  }
}

TEST(IterProperties, StrategiesAgree) {
  testing::Rng rng(44);
  for (int i = 0; i < 500; ++i) {
    const IterExpr e = testing::random_iter(rng, 6);
    for (bool absorb : {false, true}) {
      NormalizeOptions opts;
      opts.box_absorbs_s1 = absorb;
      ASSERT_EQ(normalize(e, opts, Strategy::kInnermostFirst),
                normalize(e, opts, Strategy::kOutermostFirst))
          << render_iter(e) << " absorb=" << absorb;
    }
  }
}

TEST(IterProperties, NormalFormsContainNoRedex) {
  testing::Rng rng(45);
  for (int i = 0; i < 500; ++i) {
    const IterExpr n = normalize(testing::random_iter(rng));
    for (const Entry& x : n.stack) {
      if (x.op == OpKind::kR) {
        EXPECT_EQ(x.exp, Ordinal::finite(1));
      }
      if (x.op == OpKind::kS1) {
        EXPECT_NE(x.exp, Ordinal::epsilon_zero());
      }
      if (x.op == OpKind::kS2) {
        // w*q+m with q >= 1 is a redex; w^2 and above are not.
        EXPECT_TRUE(x.exp.is_finite() || x.exp >= omega_pow(Ordinal::finite(2))) << render_iter(n);
      }
    }
  }
}

TEST(IterProperties, AdditionOrder) {
  testing::Rng rng(46);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = testing::random_ordinal(rng, 1);
    Ordinal b = testing::random_ordinal(rng, 1);
    if (a.is_zero()) a = Ordinal::finite(1);
    if (b.is_zero()) b = Ordinal::finite(1);
    const std::string text = "B^" + to_string(a) + " B^" + to_string(b) + " p";
    const IterExpr n = normalize(parse_iter(text));
    ASSERT_EQ(n.stack.size(), 1u);
    EXPECT_EQ(n.stack[0].exp, add(b, a)) << text;
  }
  // The orientation matters: 1 + w = w but w + 1 > w.
  EXPECT_EQ(N("B B^w p"), "B^w+1 p");
  EXPECT_EQ(N("B^w B p"), "B^w p");
}

TEST(IterProperties, EntailsReflexiveAndTransitive) {
  testing::Rng rng(47);
  std::vector<IterExpr> sample;
  // Short stacks over one atom so that comparable pairs actually occur.
  while (sample.size() < 50) {
    IterExpr e = normalize(testing::random_iter(rng, 2));
    e.atom = "p";
    sample.push_back(e);
  }
  int chains = 0;
  for (const IterExpr& a : sample) {
    EXPECT_EQ(entails(a, a), Entailment::kYes) << render_iter(a);
    for (const IterExpr& b : sample) {
      if (entails(a, b) != Entailment::kYes) continue;
      for (const IterExpr& c : sample) {
        if (entails(b, c) != Entailment::kYes) continue;
        ++chains;
        EXPECT_EQ(entails(a, c), Entailment::kYes)
            << render_iter(a) << " / " << render_iter(b) << " / " << render_iter(c);
      }
    }
  }
  EXPECT_GT(chains, 50);
}

}  // namespace
}  // namespace slowprov::iter
