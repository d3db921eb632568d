#include <gtest/gtest.h>

#include "railstick/catalog.hpp"
#include "railstick/geometry.hpp"
#include "railstick/identify.hpp"
#include "railstick/search.hpp"

using namespace railstick;

namespace {

StickRailArc catalog_arc(const std::string& name) { return std::get<StickRailArc>(Catalog::shipped().get(name).conformation); }

Point2 along(const PlanarComponent& c, int seg, const Rational& t) { return c.a(seg) + t * (c.b(seg) - c.a(seg)); }

}  // namespace

TEST(Validate, SingleStickSpansRails) {
  const StickRailArc a{{{0, 0, 0}, {1, 0, 0}}};
  EXPECT_TRUE(validate_rail_arc(a).ok());
  EXPECT_EQ(stick_count(a), 1);
}

TEST(Validate, RejectsBadArcs) {
  // tail off the rail
  EXPECT_FALSE(validate_rail_arc(StickRailArc{{{0, 1, 0}, {1, 0, 0}}}).ok());
  // interior vertex on the head rail
  EXPECT_FALSE(validate_rail_arc(StickRailArc{{{0, 0, 0}, {1, 0, 5}, {1, 0, 0}}}).ok());
  // two sticks meeting away from their shared vertex
  EXPECT_FALSE(validate_rail_arc(StickRailArc{{{0, 0, 0}, {2, 1, 0}, {2, -1, 0}, {1, 1, 0}, {1, 0, 0}}}).ok());
  // collinear sticks merge
  EXPECT_EQ(stick_count(make_arc({{0, 0, 0}, {Rational(1, 2), 0, 0}, {1, 0, 0}})), 1);
}

TEST(Validate, CatalogRailArcsAreValid) {
  for (const auto& name : Catalog::shipped().names()) {
    const auto& e = Catalog::shipped().get(name);
    if (const auto* a = std::get_if<StickRailArc>(&e.conformation)) {
      EXPECT_TRUE(validate_rail_arc(*a).ok()) << name;
      EXPECT_EQ(stick_count(*a), e.sticks) << name;
    }
  }
}

TEST(Project, CrossingHeightsMatchOverInformation) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const StickRailArc a = random_arc(3 + static_cast<int>(s % 6), mix_seed(5, s));
    StickRailArc used;
    const GeometricDiagram g = project(a, s, &used);
    ASSERT_EQ(stick_count(used), stick_count(a));
    for (const auto& x : g.crossings) {
      const auto& ca = g.components[x.comp_a];
      const auto& cb = g.components[x.comp_b];
      EXPECT_EQ(along(ca, x.seg_a, x.t_a), x.at);
      EXPECT_EQ(along(cb, x.seg_b, x.t_b), x.at);
      const Rational za = ca.z_at(x.seg_a, x.t_a), zb = cb.z_at(x.seg_b, x.t_b);
      EXPECT_NE(za, zb);
      EXPECT_EQ(x.a_over, za > zb) << "seed " << s;
    }
    EXPECT_EQ(g.tail(), (Point2{0, 0}));
    EXPECT_EQ(g.head(), (Point2{1, 0}));
  }
}

TEST(Project, SameSeedSameDiagram) {
  const StickRailArc a = random_arc(6, std::uint64_t{99});
  EXPECT_EQ(to_text(to_combinatorial(project(a, 3))), to_text(to_combinatorial(project(a, 3))));
}

TEST(TwoStickPass, SpanningStickGivesTriangle) {
  const StickRailArc a{{{0, 0, 0}, {1, 0, 0}}};
  for (auto side : {PassSide::under, PassSide::over}) {
    const StickKnot k = two_stick_pass(a, side);
    EXPECT_EQ(stick_count(k), 3);
    EXPECT_EQ(identify(StickLink{{k}}).label(), "0_1");
  }
}

TEST(TwoStickPass, AddsTwoSticksAndMatchesCompanion) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    const StickRailArc a = random_arc(2 + static_cast<int>(s % 7), mix_seed(21, s));
    const KnotoidMap m = to_combinatorial(project(a, s));
    for (auto side : {PassSide::under, PassSide::over}) {
      const StickKnot k = two_stick_pass(a, side, s);
      EXPECT_TRUE(validate_knot(k).ok());
      EXPECT_EQ(stick_count(k), stick_count(a) + 2);
      EXPECT_EQ(identify(StickLink{{k}}).tuple, identify_companion(m, side).tuple) << "seed " << s << " " << side_name(side);
    }
  }
}

TEST(TwoStickPass, CatalogTwoOneUnderIsTrefoil) {
  const StickKnot k = two_stick_pass(catalog_arc("2_1"), PassSide::under);
  EXPECT_EQ(stick_count(k), 6);
  EXPECT_EQ(identify(StickLink{{k}}).label(), "3_1");
}

TEST(DropStick, TrefoilLosesOneStick) {
  const StickKnot trefoil = two_stick_pass(catalog_arc("2_1"), PassSide::under);
  int dropped = 0;
  for (int i = 0; i < stick_count(trefoil); ++i) {
    StickRailArc a;
    try {
      a = drop_stick(trefoil, i);
    } catch (const ConstructionError&) {
      continue;
    }
    ++dropped;
    EXPECT_TRUE(validate_rail_arc(a).ok());
    EXPECT_EQ(stick_count(a), 5);
    const KnotoidMap m = to_combinatorial(project(a));
    EXPECT_EQ(identify_companion(m, PassSide::under).label(), "3_1") << "stick " << i;
    EXPECT_EQ(identify_companion(m, PassSide::over).label(), "3_1") << "stick " << i;
  }
  EXPECT_GT(dropped, 0);
}

TEST(DropStick, RejectsSmallKnots) {
  const StickKnot triangle{{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}};
  EXPECT_THROW(drop_stick(triangle, 0), InputError);
}
