#include <gtest/gtest.h>

#include <algorithm>

#include "support.hpp"

using namespace frontkit;
using frontkit::testing::P1;
using frontkit::testing::random_front;

namespace {

const FrontWord kTrefoil = parse_front("l1 l3 x2 x2 x2 r1 r1");

SweepState eyes(std::vector<int> partner) { return SweepState{std::move(partner), 0, {}}; }

std::vector<Ruling> sorted(std::vector<Ruling> v) {
  std::sort(v.begin(), v.end());
  return v;
}

FrontWord concat(const FrontWord& a, const FrontWord& b) {
  auto letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return FrontWord(letters);
}

}  // namespace

TEST(SweepStep, SwitchBetweenDisjointEyesKeepsPairing) {
  auto next = sweep_step(eyes({1, 0, 3, 2}), X(2), true, false);
  ASSERT_TRUE(next);
  EXPECT_EQ(next->partner, (std::vector<int>{1, 0, 3, 2}));
  EXPECT_EQ(next->switches, 1);
}

TEST(SweepStep, SwitchBetweenInterleavedEyesDies) {
  EXPECT_FALSE(sweep_step(eyes({2, 3, 0, 1}), X(2), true, false));
}

TEST(SweepStep, NonSwitchSwapsOccupants) {
  auto next = sweep_step(eyes({1, 0, 3, 2}), X(2), false, false);
  ASSERT_TRUE(next);
  EXPECT_EQ(next->partner, (std::vector<int>{2, 3, 0, 1}));
}

TEST(SweepStep, SelfCrossingOfAnEyeDies) {
  EXPECT_FALSE(sweep_step(eyes({1, 0}), X(1), false, false));
  EXPECT_FALSE(sweep_step(eyes({1, 0}), X(1), true, false));
}

TEST(Rulings, Enumeration) {
  EXPECT_EQ(enumerate_rulings(parse_front("l1 r1")), (std::vector<Ruling>{Ruling{}}));
  EXPECT_TRUE(enumerate_rulings(parse_front("l1 x1 r1")).empty());
  auto t = sorted(enumerate_rulings(kTrefoil));
  ASSERT_EQ(t.size(), 3u);
  std::vector<int> sizes;
  for (const auto& r : t) sizes.push_back(r.size());
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{1, 1, 3}));
}

TEST(Rulings, IsRuling) {
  EXPECT_TRUE(is_ruling(parse_front("l1 r1"), Ruling{}));
  EXPECT_TRUE(is_ruling(kTrefoil, Ruling{{0}}));
  EXPECT_FALSE(is_ruling(kTrefoil, Ruling{{1}}));
  EXPECT_TRUE(is_ruling(kTrefoil, Ruling{{2}}));
  EXPECT_TRUE(is_ruling(kTrefoil, Ruling{{0, 1, 2}}));
  EXPECT_FALSE(is_ruling(kTrefoil, Ruling{}));
}

TEST(Rulings, Polynomials) {
  EXPECT_EQ(ruling_polynomial(parse_front("l1 r1")), P1("1"));
  EXPECT_EQ(ruling_polynomial(parse_front("l1 r1 l1 r1")), zpow(-1));
  EXPECT_EQ(ruling_polynomial(kTrefoil), P1("2 + z^2"));
  EXPECT_EQ(oriented_ruling_polynomial(orient(parse_front("l1 r1"))), P1("1"));
  EXPECT_TRUE(oriented_ruling_polynomial(orient(parse_front("l1 x1 r1"))).is_zero());
  EXPECT_EQ(oriented_ruling_polynomial(orient(kTrefoil)), P1("2 + z^2"));
}

TEST(Rulings, ZeroPatternsKillEverything) {
  for (const char* w : {"l1 x1 r1", "l1 l2 r1 r1", "l1 l1 r2 r1", "l1 l3 x2 x2 x3 r3 r1", "l1 l2 x2 r1 r1"}) {
    EXPECT_TRUE(ruling_polynomial(parse_front(w)).is_zero()) << w;
    EXPECT_TRUE(brute_force_rulings(parse_front(w)).empty()) << w;
  }
}

TEST(Rulings, SweepMatchesExhaustiveOracle) {
  std::mt19937_64 g(17);
  for (int trial = 0; trial < 400; ++trial) {
    const FrontWord w = random_front(g, 12, 8);
    if (w.crossings() > 12) continue;
    EXPECT_EQ(sorted(enumerate_rulings(w)), sorted(brute_force_rulings(w))) << w;
    for (const auto& ch : all_orientations(components(w).count)) {
      const OrientedFront of = orient(w, ch);
      EXPECT_EQ(sorted(enumerate_oriented_rulings(of)), sorted(brute_force_rulings(w, &of))) << w;
    }
  }
}

TEST(Rulings, PolynomialMatchesEnumerationWithAndWithoutMemo) {
  std::mt19937_64 g(19);
  for (int trial = 0; trial < 300; ++trial) {
    const FrontWord w = random_front(g, 14, 8);
    const auto expected = generating_polynomial(enumerate_rulings(w), w.left_cusps());
    EXPECT_EQ(ruling_polynomial(w, {true}), expected) << w;
    EXPECT_EQ(ruling_polynomial(w, {false}), expected) << w;
    const OrientedFront of = orient(w);
    const auto oexpected = generating_polynomial(enumerate_oriented_rulings(of), w.left_cusps());
    EXPECT_EQ(oriented_ruling_polynomial(of, {true}), oexpected) << w;
    EXPECT_EQ(oriented_ruling_polynomial(of, {false}), oexpected) << w;
  }
}

TEST(Rulings, OrientedRulingsAreRulingsWithPositiveSwitches) {
  std::mt19937_64 g(23);
  for (int trial = 0; trial < 200; ++trial) {
    const FrontWord w = random_front(g, 12, 8);
    const auto all = sorted(enumerate_rulings(w));
    const auto positions = w.crossing_positions();
    for (const auto& ch : all_orientations(components(w).count)) {
      const OrientedFront of = orient(w, ch);
      for (const auto& r : enumerate_oriented_rulings(of)) {
        EXPECT_TRUE(std::binary_search(all.begin(), all.end(), r)) << w;
        for (int s : r.switches) EXPECT_EQ(crossing_sign(of, positions[static_cast<std::size_t>(s)]), 1) << w;
      }
    }
  }
}

TEST(Rulings, SplitUnionMultipliesWithZInverse) {
  std::mt19937_64 g(29);
  for (int trial = 0; trial < 100; ++trial) {
    const FrontWord a = random_front(g, 8, 6), b = random_front(g, 8, 6);
    EXPECT_EQ(ruling_polynomial(concat(a, b)), zpow(-1) * ruling_polynomial(a) * ruling_polynomial(b))
        << a << " + " << b;
  }
}

TEST(Rulings, GeneratingPolynomialExponents) {
  // z^(s - c + 1): one left cusp, no switches -> z^0.
  EXPECT_EQ(generating_polynomial({Ruling{}}, 1), P1("1"));
  EXPECT_EQ(generating_polynomial({Ruling{{0, 1, 2}}, Ruling{{0}}}, 2), P1("z^2 + 1"));
  EXPECT_TRUE(generating_polynomial({}, 3).is_zero());
}
