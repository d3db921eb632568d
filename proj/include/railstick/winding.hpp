#pragma once

#include <cmath>
#include <deque>
#include <optional>
#include <vector>

#include "railstick/combinatorial.hpp"
#include "railstick/companion.hpp"
#include "railstick/geometry.hpp"
#include "railstick/knotoid_map.hpp"

namespace railstick {

/// A winding number in half-integer steps, stored doubled.
struct WindingValue {
  int twice = 0;
  double value() const { return twice / 2.0; }
  bool is_integer() const { return twice % 2 == 0; }
  friend bool operator==(const WindingValue&, const WindingValue&) = default;
};

/// sgn(w) * floor(|w|).
inline int signed_floor(WindingValue w) {
  const int a = std::abs(w.twice) / 2;
  return w.twice < 0 ? -a : a;
}

inline constexpr double kWindingGate = 1e-6;

/// Closed polygon; `basepoint` (if any) indexes a vertex treated as a regular
/// point of the curve.
struct ClosedPolygonalCurve {
  std::vector<Point2> points;
  int basepoint = -1;
};

/// Winding number of the curve at p, or at its basepoint when p is omitted.
/// Segments incident to the basepoint subtend no angle and are skipped.
inline WindingValue winding_at(const ClosedPolygonalCurve& g, std::optional<Point2> p = std::nullopt) {
  const int n = static_cast<int>(g.points.size());
  if (n < 2) throw InputError("curve needs at least two points");
  const bool at_base = !p.has_value();
  if (at_base && (g.basepoint < 0 || g.basepoint >= n)) throw InputError("curve has no basepoint");
  const Point2 q = at_base ? g.points[g.basepoint] : *p;
  double total = 0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (at_base && (i == g.basepoint || j == g.basepoint)) continue;
    const Point2& a = g.points[i];
    const Point2& b = g.points[j];
    if (on_segment(q, a, b)) throw InputError("point lies on the curve");
    const double ax = to_double(a.x) - to_double(q.x), ay = to_double(a.y) - to_double(q.y);
    const double bx = to_double(b.x) - to_double(q.x), by = to_double(b.y) - to_double(q.y);
    total += std::atan2(ax * by - ay * bx, ax * bx + ay * by);
  }
  const double w = total / (2 * M_PI);
  const double twice = std::round(2 * w);
  if (std::abs(2 * w - twice) > 2 * kWindingGate) throw ConstructionError("winding sum is not a half-integer");
  return {static_cast<int>(twice)};
}

/// Signed count of crossings of alpha (oriented from head to tail) with the
/// open strand kappa: +1 each time alpha, walked from tail to head, crosses
/// kappa from its right to its left. Endpoints are excluded.
inline int algebraic_intersection(const std::vector<Point2>& alpha, const std::vector<Point2>& kappa) {
  int total = 0;
  const int na = static_cast<int>(alpha.size()), nk = static_cast<int>(kappa.size());
  for (int i = 0; i + 1 < na; ++i)
    for (int j = 0; j + 1 < nk; ++j) {
      const SegmentHit h = intersect_segments(alpha[i], alpha[i + 1], kappa[j], kappa[j + 1]);
      if (h.kind == SegmentHit::Kind::none) continue;
      if (h.kind == SegmentHit::Kind::proper) {
        total += cross(kappa[j + 1] - kappa[j], alpha[i + 1] - alpha[i]) < 0 ? 1 : -1;
        continue;
      }
      // shared endpoints (head and tail) are the only permitted contacts
      const bool ends = h.kind == SegmentHit::Kind::touch &&
                        ((i == 0 && h.s == 0 && j == nk - 2 && h.t == 1) || (i == na - 2 && h.s == 1 && j == 0 && h.t == 0));
      if (!ends) throw InputError("alpha does not meet kappa transversely");
    }
  return total;
}

/// Doubled winding number at the head of kappa closed by an arc through the
/// face shared by head and tail, from face potentials of the plane map. Only
/// the knotoid strand is used. Nullopt when head and tail lie in different faces.
inline std::optional<WindingValue> head_winding(const KnotoidMap& input) {
  if (!input.is_knotoid()) throw InputError("winding needs a knotoid diagram");
  const KnotoidMap m = input.strands().size() == 1 ? input : detail::submap(input, {0});
  const int F = m.head_face();
  if (m.tail_face() != F) return std::nullopt;
  const int L = m.passage_count(0);
  const int tail_left = m.dart_id(Dart{0, 0, Side::left});
  const int head_left = m.dart_id(Dart{0, L, Side::left});
  // split F along the closing arc: darts from the tail around to the head lie on its left
  const int D = m.dart_total();
  std::vector<int> region(D);
  for (int d = 0; d < D; ++d) region[d] = m.face_of(d);
  const int left_half = m.face_count();  // new id for the left part of F; the right part keeps F
  for (int d = tail_left;; d = m.next_dart(d)) {
    region[d] = left_half;
    if (d == head_left) break;
  }
  const int R = m.face_count() + 1;
  // potentials: region left of an edge = region right of it + 1
  std::vector<std::vector<std::pair<int, int>>> adj(R);
  auto relate = [&](int left, int right) {
    adj[right].push_back({left, 1});
    adj[left].push_back({right, -1});
  };
  for (int e = 0; e < m.total_edges(); ++e) relate(region[2 * e], region[2 * e + 1]);
  relate(left_half, F);
  const int base = region[m.dart_id(m.outer())];
  std::vector<std::optional<int>> pot(R);
  pot[base] = 0;
  std::deque<int> q{base};
  while (!q.empty()) {
    const int r = q.front();
    q.pop_front();
    for (auto [s, delta] : adj[r]) {
      const int v = *pot[r] + delta;
      if (!pot[s]) {
        pot[s] = v;
        q.push_back(s);
      } else if (*pot[s] != v) {
        throw ConstructionError("inconsistent winding potentials");
      }
    }
  }
  return WindingValue{*pot[left_half] + *pot[F]};
}

/// Winding number w[r] of the class, or nullopt when head and tail do not share a face.
inline std::optional<int> rail_winding(const KnotoidMap& m) {
  const auto w = head_winding(m);
  if (!w) return std::nullopt;
  return signed_floor(*w);
}

/// Closed curve kappa + alpha where alpha leaves the head straight on, runs to
/// a point just behind the tail, and enters the tail straight on; nullopt when
/// no such short-cut misses kappa. Basepoint is the head.
inline std::optional<ClosedPolygonalCurve> straight_closure(const std::vector<Point2>& kappa) {
  const int n = static_cast<int>(kappa.size());
  if (n < 2) return std::nullopt;
  const Point2 T = kappa.front(), H = kappa.back();
  const Point2 dh = H - kappa[n - 2], dt = kappa[1] - T;
  Rational eps = 1;
  for (int k = 0; k < 40; ++k, eps /= 2) {
    std::vector<Point2> alpha{H, H + eps * dh, T - eps * dt, T};
    if (alpha[1] == alpha[2]) continue;
    try {
      if (algebraic_intersection(alpha, kappa) != 0) continue;
    } catch (const InputError&) {
      continue;
    }
    // also no contact at all (algebraic zero could hide cancelling crossings)
    bool clean = true;
    for (int i = 0; i + 1 < 4 && clean; ++i)
      for (int j = 0; j + 1 < n && clean; ++j) {
        const SegmentHit h = intersect_segments(alpha[i], alpha[i + 1], kappa[j], kappa[j + 1]);
        if (h.kind == SegmentHit::Kind::proper) clean = false;
      }
    if (!clean) continue;
    ClosedPolygonalCurve g;
    g.points = kappa;
    g.points.push_back(alpha[1]);
    g.points.push_back(alpha[2]);
    g.basepoint = n - 1;
    return g;
  }
  return std::nullopt;
}

/// w[r] from a geometric diagram: the angle sum along a straight closing arc
/// when one exists, otherwise the face potentials of the plane map.
inline std::optional<int> rail_winding(const GeometricDiagram& g) {
  if (!g.is_knotoid()) throw InputError("winding needs a knotoid diagram");
  if (auto curve = straight_closure(g.components[0].points)) return signed_floor(winding_at(*curve));
  GeometricDiagram arc_only;
  arc_only.components = {g.components[0]};
  for (const auto& x : g.crossings)
    if (x.comp_a == 0 && x.comp_b == 0) arc_only.crossings.push_back(x);
  return rail_winding(to_combinatorial(arc_only));
}

}  // namespace railstick
