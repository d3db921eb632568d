#include <gtest/gtest.h>

#include <random>
#include <set>

#include "railstick/knot_table.hpp"
#include "railstick/moves.hpp"

using namespace railstick;

namespace {

const KnotTable& table() { return KnotTable::shipped(); }

}  // namespace

TEST(Bracket, Unknots) {
  EXPECT_EQ(kauffman_bracket(parse_pd("loop")), IntLaurent(1));
  const IntLaurent two = kauffman_bracket(parse_pd("loop loop"));
  EXPECT_EQ(two, IntLaurent(-1, 2) + IntLaurent(-1, -2));
  // a single kink is still the unknot up to a unit
  EXPECT_EQ(jones(from_pd(parse_pd("X(1,1,2,2)"))), IntLaurent(1));
}

TEST(Jones, TrefoilMatchesReference) {
  const auto& e = table().get("3_1");
  EXPECT_EQ(jones_in_t(e.diagram()).to_string(), "t + t^3 - t^4");
}

TEST(Jones, MatchesTableForAllKnots) {
  for (const auto& e : table().entries()) {
    if (e.kind != "knot" || !e.jones) continue;
    const IntLaurent v = jones_in_t(e.diagram());
    EXPECT_TRUE(v == *e.jones || v.substitute_power(-1) == *e.jones) << e.name << ": " << v.to_string();
  }
}

TEST(Jones, MatchesTableForLinks) {
  for (const auto& e : table().entries()) {
    if (e.kind != "link" || !e.jones) continue;
    const IntLaurent v = jones(e.diagram());
    EXPECT_TRUE(v == *e.jones || v.substitute_power(-1) == *e.jones) << e.name << ": " << v.to_string("x");
  }
}

TEST(Alexander, MatchesTable) {
  EXPECT_EQ(alexander(from_pd(parse_pd("loop"))), IntLaurent(1));
  for (const auto& e : table().entries()) {
    if (!e.alexander) continue;
    EXPECT_EQ(alexander(e.diagram()), *e.alexander) << e.name;
  }
}

TEST(Determinant, GoeritzAgreesWithJonesAndTable) {
  EXPECT_EQ(determinant(table().get("3_1").diagram()), 3);
  EXPECT_EQ(determinant(table().get("4_1").diagram()), 5);
  for (const auto& e : table().entries()) {
    const KnotoidMap m = e.diagram();
    const long long d = determinant(m);
    EXPECT_EQ(d, determinant_from_jones(jones(m))) << e.name;
    if (e.det) EXPECT_EQ(d, *e.det) << e.name;
  }
}

TEST(KnotTable, TuplesPairwiseDistinct) {
  const auto& t = table().tuples();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      EXPECT_NE(t[i], t[j]) << table().entries()[i].name << " vs " << table().entries()[j].name;
}

TEST(KnotTable, EveryEntryIdentifiesAsItself) {
  for (const auto& e : table().entries()) {
    const auto names = table().identify(invariant_tuple(e.diagram()));
    ASSERT_EQ(names.size(), 1u) << e.name;
    EXPECT_EQ(names[0], e.name);
  }
  EXPECT_EQ(&table().get("8_42"), &table().get("9_42"));
}

TEST(Moves, PreserveInvariantsOfClosedDiagrams) {
  std::mt19937_64 rng(17);
  for (const char* name : {"3_1", "4_1", "5_2", "L2a1", "L6a4", "7_4"}) {
    const auto& e = table().get(name);
    KnotoidMap m = e.diagram();
    const InvariantTuple ref = invariant_tuple(m);
    for (int step = 0; step < 60; ++step) {
      auto moves = available_moves(m, m.crossing_count() < 12 ? 1 << 20 : 0);
      ASSERT_FALSE(moves.empty());
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      m = apply_move(m, moves[pick(rng)]);
      ASSERT_TRUE(m.euler_ok());
      ASSERT_EQ(invariant_tuple(m), ref) << name << " after step " << step;
    }
  }
}

TEST(Jones, MirrorInvertsVariable) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (const auto& e : table().entries()) {
    KnotoidMap m = e.diagram();
    for (int step = 0; step < 3 && m.crossing_count() < 14; ++step) {
      auto moves = available_moves(m, 1 << 20);
      if (moves.empty()) break;
      std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
      m = apply_move(m, moves[pick(rng)]);
    }
    const KnotoidMap mir = involution(m, Involution::mir);
    EXPECT_EQ(jones(mir), jones(m).substitute_power(-1)) << e.name;
    ++checked;
  }
  EXPECT_GE(checked, 100);
}
