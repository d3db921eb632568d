#include <gtest/gtest.h>

#include "railstick/catalog.hpp"
#include "railstick/lattice.hpp"

using namespace railstick;

namespace {

std::string knot_label(const LatticeKnot& k) { return identify(to_stick(LatticeLink{{k}})).label(); }

LatticeRailArc catalog_lattice(const std::string& name) {
  return std::get<LatticeRailArc>(Catalog::shipped().get(name).conformation);
}

}  // namespace

TEST(LatticeValidate, Basics) {
  const LatticeRailArc stick{{{0, 0, 0}, {1, 0, 0}}};
  EXPECT_TRUE(validate_lattice(stick).ok());
  EXPECT_EQ(lattice_stick_count(stick), 1);
  EXPECT_FALSE(validate_lattice(LatticeRailArc{{{0, 0, 0}, {1, 1, 0}}, {1, 1}}).ok());
  EXPECT_FALSE(validate_lattice(LatticeRailArc{{{0, 0, 0}, {2, 0, 0}}, {1, 0}}).ok());
  // runs along one axis count once
  EXPECT_EQ(lattice_stick_count(LatticeRailArc{{{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}, {2, 0}}), 1);
}

TEST(FourStickPass, SpanningStickGivesRectangle) {
  const LatticeRailArc stick{{{0, 0, 0}, {1, 0, 0}}};
  for (auto side : {PassSide::under, PassSide::over}) {
    const LatticeKnot k = four_stick_pass(stick, side);
    EXPECT_EQ(lattice_stick_count(k), 4);
    EXPECT_EQ(knot_label(k), "0_1");
  }
}

TEST(FourStickPass, OvershootDoesNotMatter) {
  for (const char* name : {"lattice 2_1", "lattice 3_2"}) {
    const LatticeRailArc a = catalog_lattice(name);
    for (auto side : {PassSide::under, PassSide::over}) {
      const LatticeKnot k1 = four_stick_pass(a, side, 1), k3 = four_stick_pass(a, side, 3);
      EXPECT_EQ(lattice_stick_count(k1), lattice_stick_count(k3));
      EXPECT_EQ(knot_label(k1), knot_label(k3)) << name;
      EXPECT_LE(lattice_stick_count(k1), lattice_stick_count(a) + 4);
    }
  }
  EXPECT_THROW(four_stick_pass(catalog_lattice("lattice 2_1"), PassSide::under, 0), InputError);
}

TEST(FourStickPass, TrefoilAndFigureEight) {
  const LatticeKnot trefoil = four_stick_pass(catalog_lattice("lattice 2_1"), PassSide::under);
  EXPECT_EQ(lattice_stick_count(trefoil), 12);
  EXPECT_EQ(knot_label(trefoil), "3_1");
  const LatticeKnot fig8 = four_stick_pass(catalog_lattice("lattice 3_2"), PassSide::over);
  EXPECT_EQ(lattice_stick_count(fig8), 14);
  EXPECT_EQ(knot_label(fig8), "4_1");
}

TEST(Torus, KnotAndRailArc) {
  const char* expected[] = {"3_1", "8_19", "T(4,5)"};
  for (int p = 2; p <= 4; ++p) {
    const LatticeKnot k = torus_lattice_knot(p);
    EXPECT_TRUE(validate_lattice(k).ok());
    EXPECT_EQ(lattice_stick_count(k), 6 * p);
    EXPECT_EQ(knot_label(k), expected[p - 2]);
    const LatticeRailArc a = torus_rail_arc(p);
    EXPECT_TRUE(validate_lattice(a).ok());
    EXPECT_EQ(lattice_stick_count(a), 6 * p - 4);
    EXPECT_EQ(knot_label(four_stick_pass(a, PassSide::under)), expected[p - 2]);
  }
  EXPECT_THROW(torus_rail_arc(1), InputError);
}

TEST(Torus, SmallestArcIsTwoOne) {
  EXPECT_EQ(classify(to_combinatorial(lattice_project(torus_rail_arc(2)))).label, "2_1");
}

TEST(MultiFamily, Counts) {
  for (int n = 0; n <= 5; ++n) {
    const LatticeMultiArc m = lattice_multi_family(n);
    EXPECT_TRUE(validate_lattice(m).ok()) << n;
    EXPECT_EQ(lattice_stick_count(m), 4 * n + 1);
    const LatticeLink l = four_stick_pass(m, PassSide::under);
    EXPECT_EQ(identify(to_stick(l)).label(), unlink_name(n + 1)) << n;
  }
  EXPECT_THROW(lattice_multi_family(-1), InputError);
}

TEST(LatticeProject, MatchesStickConversion) {
  const LatticeRailArc a = catalog_lattice("lattice 2_1");
  const StickRailArc s = to_stick(a);
  EXPECT_TRUE(validate_rail_arc(s).ok());
  EXPECT_EQ(stick_count(s), 8);
  EXPECT_EQ(classify(to_combinatorial(lattice_project(a))).label, classify(to_combinatorial(project(s))).label);
}
