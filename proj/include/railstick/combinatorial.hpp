#pragma once

#include <algorithm>
#include <vector>

#include "railstick/geometry.hpp"
#include "railstick/knotoid_map.hpp"

namespace railstick {

/// Plane map of a generic geometric diagram. Closed components without
/// crossings become free loops; the unbounded face is found from the
/// lexicographically smallest vertex, which sees the direction (-1, 0).
inline KnotoidMap to_combinatorial(const GeometricDiagram& g) {
  const int C = static_cast<int>(g.components.size());
  if (C == 0) throw InputError("empty diagram");
  // passages along each component in order
  struct Event {
    int seg;
    Rational t;
    int crossing;
    bool over;
  };
  std::vector<std::vector<Event>> events(C);
  for (int x = 0; x < static_cast<int>(g.crossings.size()); ++x) {
    const auto& c = g.crossings[x];
    events[c.comp_a].push_back({c.seg_a, c.t_a, x, c.a_over});
    events[c.comp_b].push_back({c.seg_b, c.t_b, x, !c.a_over});
  }
  std::vector<int> strand_of(C, -1);
  std::vector<Strand> strands;
  int free_loops = 0;
  for (int c = 0; c < C; ++c) {
    auto& ev = events[c];
    std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) {
      if (a.seg != b.seg) return a.seg < b.seg;
      return a.t < b.t;
    });
    const bool closed = g.components[c].closed;
    if (closed && ev.empty()) {
      ++free_loops;
      continue;
    }
    Strand s;
    s.closed = closed;
    for (const auto& e : ev) s.passages.push_back({e.crossing, e.over});
    strand_of[c] = static_cast<int>(strands.size());
    strands.push_back(std::move(s));
  }
  std::vector<int> signs;
  for (const auto& c : g.crossings) signs.push_back(c.sign);
  if (!g.is_knotoid()) return KnotoidMap::link(std::move(strands), std::move(signs), free_loops);

  // outer dart at the smallest vertex among components that are strands
  int bc = -1, bi = -1;
  for (int c = 0; c < C; ++c) {
    if (strand_of[c] < 0) continue;
    const auto& pts = g.components[c].points;
    for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
      if (bc < 0) {
        bc = c;
        bi = i;
        continue;
      }
      const Point2& p = pts[i];
      const Point2& q = g.components[bc].points[bi];
      if (p.x < q.x || (p.x == q.x && p.y < q.y)) {
        bc = c;
        bi = i;
      }
    }
  }
  const auto& comp = g.components[bc];
  const int n = static_cast<int>(comp.points.size());
  const Point2& v = comp.points[bi];
  Side side = Side::left;
  const bool endpoint = !comp.closed && (bi == 0 || bi == n - 1);
  if (!endpoint) {
    const Point2 a = comp.points[(bi + n - 1) % n] - v;
    const Point2 b = comp.points[(bi + 1) % n] - v;
    side = ccw_strictly_between(b, Point2{-1, 0}, a) ? Side::left : Side::right;
  }
  // edge through vertex bi: count passages on earlier segments
  int before = 0;
  for (const auto& e : events[bc])
    if (e.seg < bi) ++before;
  const int s = strand_of[bc];
  const int L = static_cast<int>(strands[s].passages.size());
  int edge = before;
  if (comp.closed && before == L) edge = 0;
  return KnotoidMap(std::move(strands), std::move(signs), Dart{s, edge, side}, free_loops);
}

}  // namespace railstick
