#include <gtest/gtest.h>

#include "railstick/search.hpp"

using namespace railstick;

TEST(Census, ThreeStickArcsAreTrivial) {
  const Census c = sample_census(3, 500, 71);
  EXPECT_EQ(c.samples, 500);
  EXPECT_EQ(c.histogram.at("trivial"), 500);
  EXPECT_TRUE(c.unclassified.empty());
}

TEST(Census, FourStickLabels) {
  const Census c = sample_census(4, 2000, 73);
  for (const auto& [label, n] : c.histogram)
    EXPECT_TRUE(label == "trivial" || label == "1_1" || label == "2_1") << label << " x" << n;
}

TEST(Census, IndependentOfWorkerCount) {
  const Census one = sample_census(5, 300, 79, 1);
  const Census four = sample_census(5, 300, 79, 4);
  EXPECT_EQ(one.histogram, four.histogram);
}

TEST(Sampling, ArcsAreValidAndReproducible) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const StickRailArc a = random_arc(6, s);
    EXPECT_TRUE(validate_rail_arc(a).ok());
    EXPECT_EQ(a.vertices, random_arc(6, s).vertices);
  }
  EXPECT_NE(mix_seed(1, 0), mix_seed(1, 1));
}

TEST(Goal, Parse) {
  EXPECT_EQ(Goal::parse("2_6").to_string(), "2_6");
  EXPECT_EQ(Goal::parse("W_4").name, "W_4");
  const Goal g = Goal::parse("over:4_1");
  EXPECT_TRUE(g.companion);
  EXPECT_EQ(g.side, PassSide::over);
  EXPECT_THROW(Goal::parse("9_99"), InputError);
  EXPECT_THROW(Goal::parse("sideways:3_1"), InputError);
  EXPECT_THROW(Goal::parse("under:not-a-knot"), InputError);
}

TEST(Anneal, FindsTrefoilCompanionWithFourSticks) {
  Schedule sch;
  sch.steps = 3000;
  sch.chains = 16;
  const AnnealResult r = anneal(Goal::parse("under:3_1"), 4, sch, 83);
  ASSERT_TRUE(r.success);
  EXPECT_LE(stick_count(r.arc), 4);
  EXPECT_EQ(r.label, "3_1");
}

TEST(Anneal, DeterministicForSeed) {
  Schedule sch;
  sch.steps = 500;
  sch.chains = 2;
  const AnnealResult a = anneal(Goal::parse("2_2"), 5, sch, 89);
  const AnnealResult b = anneal(Goal::parse("2_2"), 5, sch, 89);
  EXPECT_EQ(a.arc.vertices, b.arc.vertices);
  EXPECT_EQ(a.energy, b.energy);
}

TEST(Bounds, StickInterval) {
  const Bounds b = rs_bounds("3_1");
  EXPECT_EQ(b.lower, 4);
  EXPECT_EQ(b.upper, 5);
  EXPECT_TRUE(rs_bounds("5_1", true).exact());
  EXPECT_EQ(rs_bounds("5_1", true).upper, 6);
  EXPECT_THROW(rs_bounds("no_such_knot"), InputError);
}

TEST(Bounds, WindingAndLattice) {
  EXPECT_EQ(winding_lower_bound(0), 4);
  EXPECT_EQ(winding_lower_bound(-3), 8);
  EXPECT_EQ(winding_lower_bound(5), 12);
  EXPECT_EQ(lattice_rs_lower("3_1"), 8);
  EXPECT_EQ(lattice_rs_lower("4_1"), 10);
  EXPECT_EQ(multi_lower_bound(1, {"0_1", "0_1"}), 7);
}
