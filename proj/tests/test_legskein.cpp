#include <gtest/gtest.h>

#include <cstdlib>
#include <tuple>

#include "support.hpp"

using namespace frontkit;
using frontkit::testing::P1;
using frontkit::testing::random_front;

namespace {

const FrontWord kTrefoil = parse_front("l1 l3 x2 x2 x2 r1 r1");

LaurentPoly1 R_of(const FrontWord& w) { return ruling_polynomial(w); }

// Random fronts that have at least one ruling; words with a zero pattern
// are dispatched by the reducer's first check and exercise nothing else.
FrontWord ruled_front(std::mt19937_64& g, int len = 12, int strands = 8) {
  for (;;) {
    FrontWord w = random_front(g, len, strands);
    if (!ruling_polynomial(w).is_zero()) return w;
  }
}

std::vector<std::size_t> skein_sites(const FrontWord& w) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k + 1 < w.size(); ++k)
    if (w[k].kind == LetterKind::LeftCusp && w[k + 1].kind == LetterKind::Crossing &&
        std::abs(w[k].index - w[k + 1].index) == 1)
      out.push_back(k);
  return out;
}

}  // namespace

TEST(SkeinExpand, ThreeTermsTwoWithoutTheCrossing) {
  const FrontWord w = parse_front("l1 l2 x1 r1 r1");
  const WordExpr e = skein_expand(w, 1);
  ASSERT_EQ(e.size(), 3u);
  int fewer = 0;
  for (const auto& [word, c] : e.terms()) fewer += word.crossings() == w.crossings() - 1;
  EXPECT_EQ(fewer, 2);
  EXPECT_EQ(e.evaluate(R_of), R_of(w));
}

TEST(SkeinExpand, PatternMismatch) {
  try {
    skein_expand(parse_front("l1 r1"), 0);
    FAIL();
  } catch (const SkeinError& err) {
    EXPECT_EQ(std::string(err.what()).rfind("PATTERN_MISMATCH", 0), 0u);
  }
  EXPECT_THROW(skein_expand(kTrefoil, 0), SkeinError);  // l1 l3: no crossing
  EXPECT_THROW(skein_expand(kTrefoil, 6), SkeinError);  // past the end
}

TEST(SkeinExpand, TrefoilEveryApplicableSite) {
  const FrontWord w = parse_front("l1 l2 x1 x2 x1 l1 x2 r1 r1 r1");
  ASSERT_FALSE(skein_sites(w).empty());
  for (std::size_t s : skein_sites(w)) EXPECT_EQ(skein_expand(w, s).evaluate(R_of), R_of(w));
  // The two sides of the relation swap roles.
  const WordExpr there = skein_expand(w, skein_sites(w).front());
  for (const auto& [word, c] : there.terms()) {
    if (word.crossings() != w.crossings() || c != LaurentPoly1(1)) continue;
    WordExpr back;
    back.add(skein_expand(word, skein_sites(w).front()));
    EXPECT_TRUE(back.terms().count(w));
  }
}

TEST(SkeinExpand, HoldsForTheRulingPolynomialAtRandomSites) {
  std::mt19937_64 g(41);
  int checked = 0;
  while (checked < 300) {
    const FrontWord w = random_front(g, 12, 8);
    for (std::size_t s : skein_sites(w)) {
      EXPECT_EQ(skein_expand(w, s).evaluate(R_of), R_of(w)) << w << " @" << s;
      ++checked;
    }
  }
}

TEST(Canonicalize, SpecExample) {
  EXPECT_EQ(canonicalize(parse_front("l1 l3 x1 x3 r3 r1")), canonicalize(parse_front("l1 l3 x3 x1 r3 r1")));
}

TEST(Canonicalize, IdempotentAndValuePreserving) {
  std::mt19937_64 g(43);
  for (int trial = 0; trial < 100; ++trial) {
    const FrontWord w = random_front(g, 10, 6);
    const FrontWord c = canonicalize(w);
    EXPECT_EQ(canonicalize(c), c) << w;
    EXPECT_EQ(R_of(c), R_of(w)) << w;
    EXPECT_EQ(c.size(), w.size());
  }
}

TEST(Canonicalize, BothSidesOfEveryCommutationAgree) {
  std::mt19937_64 g(47);
  int pairs = 0;
  for (int trial = 0; trial < 600; ++trial) {
    // Uniqueness is promised for classes small enough to enumerate.
    const FrontWord w = random_front(g, 7, 6);
    if (!detail::class_minimum(w.letters())) continue;
    const FrontWord c = canonicalize(w);
    for (const Move& m : applicable_moves(w, MoveKind::Commute)) {
      EXPECT_EQ(canonicalize(apply_move(w, m)), c) << w << " / " << m.str();
      ++pairs;
    }
  }
  EXPECT_GT(pairs, 100);
}

TEST(Canonicalize, ListedCommutationsInMinimalContext) {
  // Each family instantiated on a stack of eyes, closed off by right cusps.
  std::mt19937_64 g(71);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int eyes = 2 + static_cast<int>(g() % 3);
    std::vector<TangleLetter> letters(static_cast<std::size_t>(eyes), L(1));
    int n = 2 * eyes;
    const LetterKind kinds[] = {LetterKind::LeftCusp, LetterKind::Crossing, LetterKind::RightCusp};
    TangleLetter a{kinds[g() % 3], 1 + static_cast<int>(g() % static_cast<unsigned>(n))};
    TangleLetter b{kinds[g() % 3], 1 + static_cast<int>(g() % static_cast<unsigned>(n))};
    auto n1 = apply_count(n, a);
    if (!n1) continue;
    auto n2 = apply_count(*n1, b);
    if (!n2 || *n2 == 0) continue;
    for (const auto& [a2, b2] : commute_results(a, b)) {
      auto lhs = letters, rhs = letters;
      lhs.insert(lhs.end(), {a, b});
      rhs.insert(rhs.end(), {a2, b2});
      for (int k = *n2 / 2; k > 0; --k) {
        lhs.push_back(R(1));
        rhs.push_back(R(1));
      }
      EXPECT_EQ(canonicalize(FrontWord(lhs)), canonicalize(FrontWord(rhs))) << FrontWord(lhs);
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(EvaluateB, SpecExamples) {
  EXPECT_EQ(evaluate_B(parse_front("l1 r1")), P1("1"));
  EXPECT_TRUE(evaluate_B(parse_front("l1 x1 r1")).is_zero());
  EXPECT_EQ(evaluate_B(kTrefoil), P1("2 + z^2"));
  EXPECT_EQ(evaluate_B(parse_front("l1 r1 l1 r1")), zpow(-1));
}

TEST(EvaluateB, MatchesRulingPolynomialMemoOnAndOff) {
  std::mt19937_64 g(53);
  for (int trial = 0; trial < 200; ++trial) {
    const FrontWord w = trial % 2 ? ruled_front(g) : random_front(g, 12, 8);
    EvaluateOptions off;
    off.memoize = false;
    EXPECT_EQ(evaluate_B(w), R_of(w)) << w;
    EXPECT_EQ(evaluate_B(w, off), R_of(w)) << w;
  }
}

TEST(EvaluateB, EveryIntermediateExpressionKeepsItsValue) {
  std::mt19937_64 g(59);
  long long observed = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const FrontWord w = ruled_front(g, 10, 6);
    EvaluateOptions o;
    o.memoize = false;
    o.observe = [&](const FrontWord& start, const WordExpr& current) {
      ++observed;
      EXPECT_EQ(current.evaluate(R_of), R_of(start)) << start;
    };
    evaluate_B(w, o);
  }
  EXPECT_GT(observed, 100);
}

TEST(EvaluateB, MeasureDecreasesWithinEachFrame) {
  std::mt19937_64 g(61);
  std::set<std::string> rules;
  for (int trial = 0; trial < 300; ++trial) {
    const FrontWord w = ruled_front(g);
    ReductionTrace trace;
    EvaluateOptions o;
    o.memoize = false;
    o.trace = &trace;
    evaluate_B(w, o);
    std::map<int, ReductionMeasure> last;
    for (const auto& step : trace.steps) {
      rules.insert(step.rule);
      const auto& m = step.measure;
      if (auto it = last.find(step.frame); it != last.end()) {
        const auto& p = it->second;
        EXPECT_LT(std::tie(m.L, m.M, m.N1, m.N2), std::tie(p.L, p.M, p.N1, p.N2)) << w << " " << step.rule;
      }
      last[step.frame] = m;
    }
  }
  for (const char* r : {"commute", "eye", "unknot", "type1", "type2", "type3", "skein-type2", "skein-type3",
                        "extend-upper", "extend-lower", "zigzag"})
    EXPECT_TRUE(rules.count(r)) << r;
}

TEST(EvaluateB, FuelLimit) {
  EvaluateOptions o;
  o.fuel = 1;
  try {
    evaluate_B(parse_front("l1 l3 x2 x2 x2 x2 x2 r1 r1"), o);
    FAIL();
  } catch (const FuelExhausted& e) {
    EXPECT_EQ(std::string(e.what()).rfind("FUEL_EXHAUSTED", 0), 0u);
  }
  ::setenv("FRONTKIT_FUEL", "1", 1);
  EXPECT_THROW(evaluate_B(parse_front("l1 l3 x2 x2 x2 x2 x2 r1 r1")), FuelExhausted);
  ::unsetenv("FRONTKIT_FUEL");
  EXPECT_EQ(evaluate_B(parse_front("l1 l3 x2 x2 x2 x2 x2 r1 r1")), P1("z^4 + 4*z^2 + 3"));
}
