#include <gtest/gtest.h>

#include <random>

#include "railstick/moves.hpp"
#include "random_maps.hpp"

using namespace railstick;

namespace {

int delta_for(MoveKind k) {
  switch (k) {
    case MoveKind::r1_minus: return -1;
    case MoveKind::r1_plus: return 1;
    case MoveKind::r2_minus: return -2;
    case MoveKind::r2_plus: return 2;
    case MoveKind::r3: return 0;
  }
  return 0;
}

}  // namespace

TEST(KnotoidMap, TrivialHasOneFace) {
  KnotoidMap m;
  EXPECT_EQ(m.crossing_count(), 0);
  EXPECT_EQ(m.face_count(), 1);
  EXPECT_TRUE(m.euler_ok());
  EXPECT_TRUE(is_normal(m));
  EXPECT_TRUE(available_moves(m, 0).empty());
  for (const auto& d : available_moves(m, 100)) EXPECT_EQ(d.kind, MoveKind::r1_plus);
}

TEST(KnotoidMap, KinkRoundTrip) {
  KnotoidMap m;
  for (const auto& d : available_moves(m, 100)) {
    KnotoidMap k = apply_move(m, d);
    ASSERT_TRUE(k.euler_ok());
    EXPECT_EQ(k.crossing_count(), 1);
    EXPECT_EQ(k.face_count(), 2);
    bool reduced = false;
    for (const auto& r : available_moves(k, 0)) {
      if (r.kind != MoveKind::r1_minus) continue;
      EXPECT_EQ(apply_move(k, r), m);
      reduced = true;
    }
    // a kink enclosing the marked face cannot be undone in the plane
    const int loop_face_outer = k.outer_face();
    bool monogon_marked = k.face(loop_face_outer).size() == 1;
    EXPECT_EQ(reduced, !monogon_marked);
  }
}

TEST(KnotoidMap, RandomMoveSequencesStayPlanar) {
  std::mt19937_64 rng(11);
  int applied = 0;
  for (int seq = 0; seq < 200; ++seq) {
    KnotoidMap m;
    for (int step = 0; step < 50; ++step) {
      auto moves = available_moves(m, m.crossing_count() < 6 ? 1 << 20 : 0);
      if (moves.empty()) break;
      std::uniform_int_distribution<std::size_t> dist(0, moves.size() - 1);
      const auto& d = moves[dist(rng)];
      KnotoidMap next = apply_move(m, d);
      ASSERT_TRUE(next.euler_ok()) << to_text(m) << " via " << move_name(d.kind);
      ASSERT_EQ(next.crossing_count() - m.crossing_count(), delta_for(d.kind));
      m = std::move(next);
      ++applied;
    }
  }
  EXPECT_GE(applied, 10000);
}

TEST(KnotoidMap, StaleDescriptorRejected) {
  KnotoidMap m;
  auto d = available_moves(m, 1).front();
  KnotoidMap k = apply_move(m, d);
  EXPECT_THROW(apply_move(k, d), InputError);
}

TEST(KnotoidMap, TextRoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 100; ++i) {
    KnotoidMap m = fixtures::random_map(rng, 5);
    EXPECT_EQ(rooted_code(parse_text(to_text(m))), rooted_code(m));
  }
  EXPECT_THROW(parse_text("O1+ U1- / outer=0:0L"), InputError);
  EXPECT_THROW(parse_text("O1+ U2+"), InputError);
}

TEST(Involutions, AreInvolutive) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    KnotoidMap m = fixtures::random_map(rng, 5);
    for (auto w : {Involution::mir, Involution::sym, Involution::rot, Involution::rev}) {
      KnotoidMap a = involution(m, w);
      ASSERT_TRUE(a.euler_ok());
      EXPECT_EQ(rooted_code(involution(a, w)), rooted_code(m));
    }
    EXPECT_EQ(rooted_code(involution(m, Involution::rot)),
              rooted_code(involution(involution(m, Involution::sym), Involution::mir)));
  }
}

TEST(CanonicalCode, OrbitInvariant) {
  std::mt19937_64 rng(9);
  KnotoidMap trivial;
  EXPECT_EQ(canonical_code_orbit(trivial), "- / outer=0:0L");
  for (int i = 0; i < 500; ++i) {
    KnotoidMap m = fixtures::random_map(rng, 4);
    const std::string c = canonical_code_orbit(m);
    for (auto w : {Involution::mir, Involution::sym, Involution::rot, Involution::rev})
      EXPECT_EQ(canonical_code_orbit(involution(m, w)), c);
    EXPECT_EQ(canonical_code(parse_text(rooted_code(m))), canonical_code(m));
  }
}

TEST(Product, AddsCrossings) {
  std::mt19937_64 rng(3);
  KnotoidMap trivial;
  int normal_seen = 0;
  for (int i = 0; i < 300; ++i) {
    KnotoidMap a = fixtures::random_map(rng, 3);
    KnotoidMap b = fixtures::random_map(rng, 3);
    EXPECT_EQ(rooted_code(product(a, trivial)), rooted_code(a));
    if (!is_normal(b)) {
      EXPECT_THROW(product(a, b), InputError);
      continue;
    }
    ++normal_seen;
    EXPECT_EQ(rooted_code(product(trivial, b)), rooted_code(b));
    KnotoidMap p = product(a, b);
    EXPECT_TRUE(p.euler_ok());
    EXPECT_EQ(p.crossing_count(), a.crossing_count() + b.crossing_count());
  }
  EXPECT_GT(normal_seen, 50);
}

TEST(Simplify, UndoesRandomGrowth) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    KnotoidMap m = fixtures::random_map(rng, 4, 12);
    KnotoidMap s = simplify(m);
    EXPECT_LE(s.crossing_count(), m.crossing_count());
    EXPECT_TRUE(s.euler_ok());
  }
}
