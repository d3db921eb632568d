#include <gtest/gtest.h>

#include <map>
#include <random>

#include "random_maps.hpp"
#include "railstick/classify.hpp"
#include "railstick/identify.hpp"

using namespace railstick;

namespace {

constexpr Involution kAll[] = {Involution::mir, Involution::sym, Involution::rot, Involution::rev};

KnotoidMap reference(const std::string& name) {
  for (const auto& r : knotoid_references())
    if (r.name == name) return parse_text(r.code);
  throw std::out_of_range(name);
}

}  // namespace

TEST(Classify, ReferencesClassifyAsThemselves) {
  for (const auto& r : knotoid_references()) {
    const Classification c = classify(parse_text(r.code));
    EXPECT_EQ(c.label, r.name);
    EXPECT_EQ(c.crossings, r.name[0] - '0') << r.name;
  }
  EXPECT_EQ(classify(KnotoidMap{}).label, "trivial");
}

TEST(Classify, WindingFamily) {
  for (int n = 3; n <= 6; ++n) {
    const Classification c = classify(winding_family_diagram(n));
    EXPECT_EQ(c.label, "W_" + std::to_string(n));
    EXPECT_EQ(c.winding, n);
  }
  // the first two members are catalogued under their own names
  EXPECT_EQ(classify(winding_family_diagram(1)).label, "1_1");
  EXPECT_EQ(classify(winding_family_diagram(2)).label, "2_3");
}

TEST(Classify, SurvivesRandomMoves) {
  std::mt19937_64 rng(53);
  for (const auto& r : knotoid_references()) {
    KnotoidMap m = parse_text(r.code);
    for (int step = 0; step < 8; ++step) {
      auto moves = available_moves(m, m.crossing_count() < 6 ? 1 << 20 : 0);
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      m = apply_move(m, moves[pick(rng)]);
    }
    EXPECT_EQ(classify(m).label, r.name) << to_text(m);
  }
}

TEST(Classify, OrbitInvariance) {
  std::map<std::string, int> seen;
  for (int i = 0; i < 120; ++i) {
    const KnotoidMap m = fixtures::random_knotoid(mix_seed(59, i), 4 + i % 4);
    const std::string label = classify(m).label;
    ++seen[label];
    for (auto inv : kAll) EXPECT_EQ(classify(involution(m, inv)).label, label) << to_text(m);
  }
  EXPECT_GE(seen.size(), 3u);
}

TEST(Companion, ReferenceValues) {
  EXPECT_EQ(identify_companion(reference("2_1"), PassSide::under).label(), "3_1");
  EXPECT_EQ(identify_companion(reference("2_1"), PassSide::over).label(), "0_1");
  EXPECT_EQ(identify_companion(reference("1_1"), PassSide::under).label(), "0_1");
  EXPECT_EQ(identify_companion(reference("2_2"), PassSide::under).label(), "0_1");
  EXPECT_EQ(identify_companion(KnotoidMap{}, PassSide::over).label(), "0_1");
}

TEST(Companion, NoTwoCrossingClassClosesToFigureEight) {
  for (const auto& r : knotoid_references()) {
    if (r.name[0] > '2') continue;
    for (auto inv : kAll)
      for (auto side : {PassSide::under, PassSide::over})
        EXPECT_NE(identify_companion(involution(parse_text(r.code), inv), side).label(), "4_1") << r.name;
  }
}

TEST(Companion, RouteIndependence) {
  for (int i = 0; i < 120; ++i) {
    const KnotoidMap m = fixtures::random_knotoid(mix_seed(61, i), 4 + i % 4);
    for (auto side : {PassSide::under, PassSide::over}) {
      const InvariantTuple ref = identify(companion_map(m, side)).tuple;
      std::mt19937_64 route_rng(i);
      for (int k = 0; k < 3; ++k) EXPECT_EQ(identify(companion_map(m, side, &route_rng)).tuple, ref) << to_text(m);
    }
  }
}

TEST(Companion, MirrorSwapsSides) {
  for (int i = 0; i < 100; ++i) {
    const KnotoidMap m = fixtures::random_knotoid(mix_seed(67, i), 4 + i % 4);
    const KnotoidMap mir = involution(m, Involution::mir);
    const IntLaurent under = jones(companion_map(m, PassSide::under));
    EXPECT_EQ(jones(companion_map(mir, PassSide::over)), under.substitute_power(-1)) << to_text(m);
  }
}
