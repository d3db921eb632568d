#include <gtest/gtest.h>

#include <random>

#include "lemma_case.hpp"
#include "random_maps.hpp"
#include "railstick/catalog.hpp"
#include "railstick/winding.hpp"

using namespace railstick;

TEST(WindingAt, UnitSquare) {
  ClosedPolygonalCurve sq{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
  EXPECT_EQ(winding_at(sq, Point2{Rational(1, 2), Rational(1, 2)}).twice, 2);
  EXPECT_EQ(winding_at(sq, Point2{2, 2}).twice, 0);
  std::reverse(sq.points.begin(), sq.points.end());
  EXPECT_EQ(winding_at(sq, Point2{Rational(1, 2), Rational(1, 2)}).twice, -2);
  // at a corner the far sides subtend a quarter turn, not a half-integer
  sq.basepoint = 0;
  EXPECT_THROW(winding_at(sq), ConstructionError);
  EXPECT_THROW(winding_at(sq, Point2{1, Rational(1, 2)}), InputError);
}

TEST(WindingAt, SignedFloor) {
  EXPECT_EQ(signed_floor({5}), 2);
  EXPECT_EQ(signed_floor({-5}), -2);
  EXPECT_EQ(signed_floor({1}), 0);
  EXPECT_EQ(signed_floor({-4}), -2);
}

TEST(Winding, HeadMinusTailIsAlgebraicIntersection) {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    const fixtures::LemmaCase c = fixtures::lemma_case(mix_seed(31, s));
    EXPECT_EQ(c.at_head.twice - c.at_tail.twice, 2 * c.intersection) << "seed " << s;
  }
}

TEST(Winding, EmbeddedClosureGivesEqualValues) {
  int embedded = 0;
  for (std::uint64_t s = 0; embedded < 100 && s < 20000; ++s) {
    const fixtures::LemmaCase c = fixtures::lemma_case(mix_seed(37, s));
    bool touches = false;
    for (std::size_t i = 0; i + 1 < c.alpha.size() && !touches; ++i)
      for (std::size_t j = 0; j + 1 < c.kappa.size() && !touches; ++j)
        touches = intersect_segments(c.alpha[i], c.alpha[i + 1], c.kappa[j], c.kappa[j + 1]).kind == SegmentHit::Kind::proper;
    if (touches) continue;
    ++embedded;
    EXPECT_EQ(c.at_head, c.at_tail) << "seed " << s;
  }
  EXPECT_EQ(embedded, 100);
}

TEST(RailWinding, FamilyArcs) {
  for (int n = -5; n <= 5; ++n) {
    if (n == 0) continue;
    const StickRailArc a = winding_family_arc(n);
    EXPECT_EQ(stick_count(a), 4 + 2 * (std::abs(n) - 1)) << n;
    EXPECT_EQ(rail_winding(project(a)), n);
    EXPECT_EQ(rail_winding(to_combinatorial(project(a))), n);
  }
}

TEST(RailWinding, FlipsUnderSymAndRev) {
  int checked = 0, nonzero = 0;
  for (int i = 0; i < 400 && checked < 100; ++i) {
    const KnotoidMap m = fixtures::random_knotoid(mix_seed(41, i), 4 + i % 4);
    const auto w = rail_winding(m);
    if (!w) continue;
    ++checked;
    if (*w != 0) ++nonzero;
    EXPECT_EQ(rail_winding(involution(m, Involution::sym)), -*w) << to_text(m);
    EXPECT_EQ(rail_winding(involution(m, Involution::rev)), -*w) << to_text(m);
    EXPECT_EQ(rail_winding(involution(m, Involution::mir)), *w) << to_text(m);
  }
  EXPECT_EQ(checked, 100);
  EXPECT_GT(nonzero, 5);
}

TEST(RailWinding, InvariantUnderMoves) {
  std::mt19937_64 rng(43);
  int defined = 0;
  for (int n = -4; n <= 4; ++n) {
    if (n == 0) continue;
    KnotoidMap m = to_combinatorial(project(winding_family_arc(n)));
    for (int step = 0; step < 30; ++step) {
      auto moves = available_moves(m, m.crossing_count() < 10 ? 1 << 20 : 0);
      if (moves.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      m = apply_move(m, moves[pick(rng)]);
      // undefined once head and tail are separated by a strand
      if (auto w = rail_winding(m)) {
        ++defined;
        ASSERT_EQ(*w, n) << "step " << step;
      }
    }
  }
  EXPECT_GT(defined, 100);
}

TEST(RailWinding, GeometricAgreesWithCombinatorial) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const StickRailArc a = random_arc(3 + static_cast<int>(s % 5), mix_seed(47, s));
    const GeometricDiagram g = project(a, s);
    EXPECT_EQ(rail_winding(g), rail_winding(to_combinatorial(g))) << "seed " << s;
  }
}
