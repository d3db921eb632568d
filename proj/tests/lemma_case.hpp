#pragma once

#include <random>
#include <vector>

#include "railstick/winding.hpp"

namespace railstick::fixtures {

inline Point2 random_point(std::mt19937_64& rng) { return {random_rational(rng, -2, 2, 6), random_rational(rng, -2, 2, 6)}; }

struct LemmaCase {
  std::vector<Point2> kappa, alpha;  // alpha runs head to tail
  int intersection = 0;
  WindingValue at_head, at_tail;
};

// Random open polyline kappa and closing polyline alpha, resampled until the
// pair is transverse and neither endpoint lies on the rest of the curve.
inline LemmaCase lemma_case(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    LemmaCase c;
    const int nk = 2 + static_cast<int>(rng() % 6), na = static_cast<int>(rng() % 4);
    for (int i = 0; i <= nk; ++i) c.kappa.push_back(random_point(rng));
    // alpha leaves the head and enters the tail straight on, so both are regular points
    const Point2 T = c.kappa.front(), H = c.kappa.back();
    const Rational eps(1, 1 + static_cast<long>(rng() % 8));
    c.alpha.push_back(H);
    c.alpha.push_back(H + eps * (H - c.kappa[c.kappa.size() - 2]));
    for (int i = 0; i < na; ++i) c.alpha.push_back(random_point(rng));
    c.alpha.push_back(T - eps * (c.kappa[1] - T));
    c.alpha.push_back(T);
    ClosedPolygonalCurve g;
    g.points = c.kappa;
    g.points.insert(g.points.end(), c.alpha.begin() + 1, c.alpha.end() - 1);
    try {
      c.intersection = algebraic_intersection(c.alpha, c.kappa);
      g.basepoint = static_cast<int>(c.kappa.size()) - 1;
      c.at_head = winding_at(g);
      g.basepoint = 0;
      c.at_tail = winding_at(g);
    } catch (const std::runtime_error&) {
      continue;
    }
    return c;
  }
}

}  // namespace railstick::fixtures
