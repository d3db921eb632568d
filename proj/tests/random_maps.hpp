#pragma once

#include <random>

#include "railstick/moves.hpp"
#include "railstick/search.hpp"

namespace railstick::fixtures {

/// Random knotoid reached from the trivial one by `steps` random moves,
/// biased toward adding crossings until `target` crossings.
inline KnotoidMap random_map(std::mt19937_64& rng, int target, int steps = 40) {
  KnotoidMap m;
  for (int i = 0; i < steps; ++i) {
    const int plus = m.crossing_count() < target ? 1 << 20 : 0;
    auto moves = available_moves(m, plus);
    if (moves.empty()) break;
    std::vector<MoveDescriptor> pick;
    for (const auto& d : moves) {
      const bool grows = d.kind == MoveKind::r1_plus || d.kind == MoveKind::r2_plus;
      if (grows == (m.crossing_count() < target) || d.kind == MoveKind::r3) pick.push_back(d);
    }
    if (pick.empty()) pick = moves;
    std::uniform_int_distribution<std::size_t> dist(0, pick.size() - 1);
    m = apply_move(m, pick[dist(rng)]);
  }
  return m;
}

/// Projection of a random stick arc, so the class is usually nontrivial.
inline KnotoidMap random_knotoid(std::uint64_t seed, int sticks) {
  return to_combinatorial(project(random_arc(sticks, mix_seed(seed, 1)), seed));
}

}  // namespace railstick::fixtures
