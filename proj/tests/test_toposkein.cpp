#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace frontkit;
using frontkit::testing::P1;
using frontkit::testing::P2;
using frontkit::testing::random_front;
using frontkit::testing::crossings_before;
using frontkit::testing::Framed;
using frontkit::testing::random_framed;
using frontkit::testing::random_small_front;

namespace {

const FrontWord kTrefoil = parse_front("l1 l3 x2 x2 x2 r1 r1");

PlanarDiagram unknot_diagram(int loops = 1) {
  PlanarDiagram d;
  d.free_loops = loops;
  return d;
}

LaurentPoly2 F_of(const PlanarDiagram& d) { return monomial2(0, -d.writhe()) * kauffman_D(d); }

}  // namespace

TEST(Dubrovnik, Normalization) {
  EXPECT_EQ(kauffman_D(unknot_diagram()), P2("1"));
  PlanarDiagram kink = to_planar_diagram(orient(parse_front("l1 x1 r1")));
  ASSERT_EQ(kink.writhe(), -1);
  EXPECT_EQ(kauffman_D(kink), P2("a^-1"));
  kink.switch_crossing(0);
  EXPECT_EQ(kink.writhe(), 1);
  EXPECT_EQ(kauffman_D(kink), P2("a"));
  EXPECT_EQ(kauffman_D(unknot_diagram(2)), split_factor(SkeinKind::Dubrovnik));
}

TEST(Dubrovnik, Trefoil) {
  const PlanarDiagram d = to_planar_diagram(orient(kTrefoil));
  EXPECT_EQ(d.crossings(), 3);
  EXPECT_EQ(d.writhe(), 3);
  EXPECT_EQ(coeff_a(kauffman_D(d), 1), P1("2 + z^2"));
  EXPECT_EQ(deg_a(kauffman_D(d)), ADegree::of(1));
}

TEST(Homfly, Normalization) {
  EXPECT_EQ(homfly_H(unknot_diagram()), P2("1"));
  EXPECT_EQ(homfly_H(unknot_diagram(2)), P2("z^-1*a - z^-1*a^-1"));
  EXPECT_EQ(coeff_a(homfly_H(unknot_diagram(2)), 1), zpow(-1));
  EXPECT_EQ(coeff_a(homfly_H(to_planar_diagram(orient(kTrefoil))), 1), P1("2 + z^2"));
}

TEST(Normalized, FandP) {
  const OrientedFront u = orient(parse_front("l1 r1"));
  EXPECT_EQ(kauffman_F(u), P2("1"));
  EXPECT_EQ(homfly_P(u), P2("1"));
  const OrientedFront s = orient(parse_front("l1 x1 r1"));
  EXPECT_EQ(kauffman_F(s), monomial2(0, 1) * kauffman_D(to_planar_diagram(s)));
  EXPECT_EQ(kauffman_F(s), P2("1"));
  EXPECT_EQ(homfly_P(s), P2("1"));
}

TEST(Coefficients, BandQ) {
  EXPECT_EQ(B_of(parse_front("l1 r1")), P1("1"));
  EXPECT_EQ(Q_of(orient(parse_front("l1 r1"))), P1("1"));
  EXPECT_EQ(B_of(parse_front("l1 r1 l1 r1")), zpow(-1));
  EXPECT_EQ(B_of(kTrefoil), P1("2 + z^2"));
  EXPECT_EQ(Q_of(orient(kTrefoil)), P1("2 + z^2"));
}

TEST(Coefficients, MatchTheRulingPolynomials) {
  std::mt19937_64 g(83);
  for (int trial = 0; trial < 150; ++trial) {
    const FrontWord w = random_small_front(g, 8);
    EXPECT_EQ(B_of(w), ruling_polynomial(w)) << w;
    for (const auto& ch : all_orientations(components(w).count)) {
      const OrientedFront of = orient(w, ch);
      EXPECT_EQ(Q_of(of), oriented_ruling_polynomial(of)) << w;
    }
  }
}

TEST(Sharpness, UnknotAndStabilizedUnknot) {
  const auto u = sharpness(orient(parse_front("l1 r1")));
  EXPECT_TRUE(u.kauffman_sharp);
  EXPECT_TRUE(u.homfly_sharp);
  EXPECT_EQ(u.B, P1("1"));
  const auto s = sharpness(orient(parse_front("l1 l2 r1 r1")));
  EXPECT_FALSE(s.kauffman_sharp);
  EXPECT_FALSE(s.homfly_sharp);
  EXPECT_TRUE(s.B.is_zero());
  EXPECT_EQ(s.beta, -2);
}

TEST(SkeinRelations, ExpansionPreservesValue) {
  std::mt19937_64 g(89);
  for (int trial = 0; trial < 120; ++trial) {
    const PlanarDiagram d = random_framed(g, 6).diagram();
    if (d.crossings() == 0) continue;
    const int c = static_cast<int>(g() % static_cast<unsigned>(d.crossings()));
    for (auto kind : {SkeinKind::Dubrovnik, SkeinKind::Homfly}) {
      auto value = kind == SkeinKind::Dubrovnik ? kauffman_D : homfly_H;
      LaurentPoly2 sum;
      for (const auto& t : skein_expand(d, c, kind)) sum += t.coefficient * value(t.diagram, {});
      EXPECT_EQ(sum, value(d, {})) << to_pd(d) << " at " << c;
    }
  }
}

TEST(SkeinRelations, HomflyCrossingChange) {
  // H(L+) - H(L-) = z H(L0) read off the expansion at a positive crossing.
  std::mt19937_64 g(97);
  for (int trial = 0; trial < 80; ++trial) {
    const PlanarDiagram d = random_framed(g, 6).diagram();
    for (int c = 0; c < d.crossings(); ++c) {
      auto terms = skein_expand(d, c, SkeinKind::Homfly);
      ASSERT_EQ(terms.size(), 2u);
      EXPECT_EQ(terms[0].diagram.sign(c), -d.sign(c));
      EXPECT_EQ(terms[1].diagram.crossings(), d.crossings() - 1);
      EXPECT_EQ(terms[1].diagram.writhe(), d.writhe() - d.sign(c));
    }
  }
}

TEST(Reidemeister, TwoAndThreeLeaveDandHUnchanged) {
  std::mt19937_64 g(101);
  int moves = 0;
  for (int trial = 0; moves < 150 && trial < 5000; ++trial) {
    Framed f = random_framed(g, 7);
    std::vector<Move> options = applicable_moves(f.of.word, MoveKind::Type3);
    for (const Move& m : applicable_moves(f.of.word, MoveKind::Type2Remove)) options.push_back(m);
    if (options.empty()) continue;
    const Move m = options[g() % options.size()];
    const auto [before, after] = frontkit::testing::reidemeister(g, f, m);
    const PlanarDiagram x = before.diagram(), y = after.diagram();
    EXPECT_EQ(kauffman_D(x), kauffman_D(y)) << f.of.word << " / " << m.str();
    EXPECT_EQ(homfly_H(x), homfly_H(y)) << f.of.word << " / " << m.str();
    ++moves;
  }
  EXPECT_GE(moves, 100);
}

TEST(Reidemeister, OneChangesDByACurlFactorOnly) {
  std::mt19937_64 g(103);
  int kinks = 0;
  for (int trial = 0; kinks < 100 && trial < 5000; ++trial) {
    Framed f = random_framed(g, 6);
    auto options = applicable_moves(f.of.word, MoveKind::Type1Remove);
    if (options.empty()) continue;
    const Move m = options[g() % options.size()];
    const int at = crossings_before(f.of.word, m.site);
    Framed after{transport_orientation(f.of, m, apply_move(f.of.word, m)), f.rots};
    after.rots.erase(after.rots.begin() + at);
    EXPECT_EQ(F_of(f.diagram()), F_of(after.diagram())) << f.of.word << " / " << m.str();
    EXPECT_EQ(monomial2(0, -f.diagram().writhe()) * homfly_H(f.diagram()),
              monomial2(0, -after.diagram().writhe()) * homfly_H(after.diagram()));
    ++kinks;
  }
  EXPECT_GE(kinks, 100);
}

TEST(Determinism, MemoAndHeuristicsAgree) {
  std::mt19937_64 g(107);
  for (int trial = 0; trial < 100; ++trial) {
    const PlanarDiagram d = random_framed(g, 7).diagram();
    const auto D = kauffman_D(d), H = homfly_H(d);
    for (bool memo : {true, false})
      for (auto h : {CrossingHeuristic::Forward, CrossingHeuristic::Backward}) {
        SkeinOptions o{memo, h, nullptr};
        EXPECT_EQ(kauffman_D(d, o), D);
        EXPECT_EQ(homfly_H(d, o), H);
      }
  }
}

TEST(Planar, TopOfFronts) {
  EXPECT_EQ(to_planar_diagram(orient(parse_front("l1 r1"))).free_loops, 1);
  EXPECT_EQ(to_planar_diagram(orient(parse_front("l1 r1"))).crossings(), 0);
  EXPECT_EQ(to_planar_diagram(orient(parse_front("l1 x1 r1"))).writhe(), -1);
  std::mt19937_64 g(109);
  for (int trial = 0; trial < 200; ++trial) {
    const FrontWord w = random_front(g, 12, 8);
    for (const auto& ch : all_orientations(components(w).count)) {
      const OrientedFront of = orient(w, ch);
      const PlanarDiagram d = to_planar_diagram(of);
      EXPECT_TRUE(d.valid());
      EXPECT_EQ(d.writhe(), invariants(of).w) << w;
      EXPECT_EQ(d.link_components(), of.parts.count) << w;
    }
  }
}

TEST(Planar, PdRoundTrip) {
  std::mt19937_64 g(113);
  for (int trial = 0; trial < 200; ++trial) {
    const PlanarDiagram d = random_framed(g, 8).diagram();
    const PlanarDiagram e = parse_pd(to_pd(d));
    EXPECT_TRUE(e.valid());
    EXPECT_EQ(canonical_code(e, true), canonical_code(d, true)) << to_pd(d);
  }
  EXPECT_EQ(to_pd(unknot_diagram(2)), "O[1] O[2]");
  EXPECT_EQ(parse_pd("X<1,4,2,5> X<3,6,4,1> X<5,2,6,3>").crossings(), 3);
  EXPECT_THROW(parse_pd("X[1,2,3]"), PdError);
  EXPECT_THROW(parse_pd("X[1,2,3,4] junk"), PdError);
}

TEST(Planar, CanonicalCodeIgnoresLabels) {
  // Relabelling the crossings of a PD code does not change the code.
  const PlanarDiagram a = parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]");
  const PlanarDiagram b = parse_pd("X[5,2,6,3] X[1,4,2,5] X[3,6,4,1]");
  EXPECT_EQ(canonical_code(a, true), canonical_code(b, true));
  EXPECT_EQ(kauffman_D(a), kauffman_D(b));
}
