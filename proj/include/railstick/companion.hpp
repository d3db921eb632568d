#pragma once

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <vector>

#include "railstick/geometry.hpp"
#include "railstick/knotoid_map.hpp"
#include "railstick/pd.hpp"

namespace railstick {

namespace detail {

/// Graph component of every strand (strands sharing a crossing are joined).
inline std::vector<int> strand_groups(const KnotoidMap& m) {
  const int S = static_cast<int>(m.strands().size());
  std::vector<int> parent(S);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int c = 0; c < m.crossing_count(); ++c) parent[find(m.under_passage(c).first)] = find(m.over_passage(c).first);
  std::vector<int> out(S);
  for (int s = 0; s < S; ++s) out[s] = find(s);
  return out;
}

/// The strands of one graph component (strand 0 first) with crossings relabelled.
inline KnotoidMap submap(const KnotoidMap& m, const std::vector<int>& keep) {
  std::vector<int> relabel(m.crossing_count(), -1);
  std::vector<int> signs;
  std::vector<Strand> strands;
  std::vector<int> new_index(m.strands().size(), -1);
  for (int s : keep) {
    new_index[s] = static_cast<int>(strands.size());
    Strand st = m.strands()[s];
    for (auto& p : st.passages) {
      if (relabel[p.crossing] < 0) {
        relabel[p.crossing] = static_cast<int>(signs.size());
        signs.push_back(m.signs()[p.crossing]);
      }
      p.crossing = relabel[p.crossing];
    }
    strands.push_back(std::move(st));
  }
  if (!m.is_knotoid()) return KnotoidMap::link(std::move(strands), std::move(signs));
  Dart outer{0, 0, Side::left};
  if (new_index[m.outer().strand] >= 0) outer = {new_index[m.outer().strand], m.outer().edge, m.outer().side};
  return KnotoidMap(std::move(strands), std::move(signs), outer);
}

}  // namespace detail

/// A closure route: darts crossed in order from the head's face to the tail's
/// face. Dart d means the route enters the edge from the face of d.
using ClosureRoute = std::vector<int>;

/// Simple dual-graph path from the head face to the tail face. Without an rng
/// the path is a shortest one; with an rng it is a random simple path.
inline ClosureRoute closure_route(const KnotoidMap& m, std::mt19937_64* rng = nullptr) {
  const int from = m.head_face(), to = m.tail_face();
  const int F = m.face_count();
  if (!rng) {
    std::vector<int> via(F, -2);
    via[from] = -1;
    std::deque<int> q{from};
    while (!q.empty()) {
      const int f = q.front();
      q.pop_front();
      for (int d : m.face(f)) {
        const int g = m.face_of(d ^ 1);
        if (via[g] != -2) continue;
        via[g] = d;
        q.push_back(g);
      }
    }
    ClosureRoute route;
    for (int f = to; f != from; f = m.face_of(via[f])) route.push_back(via[f]);
    std::reverse(route.begin(), route.end());
    return route;
  }
  // randomized depth-first search; always succeeds since the dual graph is connected
  std::vector<bool> seen(F, false);
  ClosureRoute route;
  std::vector<int> stack_faces{from};
  seen[from] = true;
  std::vector<std::vector<int>> options(F);
  auto fill = [&](int f) {
    options[f] = m.face(f);
    std::shuffle(options[f].begin(), options[f].end(), *rng);
  };
  fill(from);
  while (stack_faces.back() != to) {
    const int f = stack_faces.back();
    if (options[f].empty()) {
      stack_faces.pop_back();
      route.pop_back();
      continue;
    }
    const int d = options[f].back();
    options[f].pop_back();
    const int g = m.face_of(d ^ 1);
    if (seen[g]) continue;
    seen[g] = true;
    route.push_back(d);
    stack_faces.push_back(g);
    fill(g);
  }
  return route;
}

/// Closed diagram obtained by joining head to tail along `route`, with the
/// closing arc on `side` at every new crossing. Graph components not
/// containing the knotoid strand are kept as they are.
inline KnotoidMap close_along(const KnotoidMap& m, PassSide side, const ClosureRoute& route) {
  if (!m.is_knotoid()) throw InputError("closure needs a knotoid diagram");
  std::vector<Strand> strands = m.strands();
  std::vector<int> signs = m.signs();
  // insertions per strand: (edge, crossing id)
  std::vector<std::vector<std::pair<int, int>>> ins(strands.size());
  Strand closing;
  for (int d : route) {
    const Dart dart = m.dart_at(d);
    const int c = static_cast<int>(signs.size());
    // entering from the right of the strand edge means crossing it right to left
    const bool right_to_left = dart.side == Side::right;
    const int s = side == PassSide::under ? 1 : -1;
    signs.push_back(right_to_left ? s : -s);
    ins[dart.strand].push_back({dart.edge, c});
    closing.passages.push_back({c, side == PassSide::over});
  }
  for (std::size_t s = 0; s < strands.size(); ++s) {
    auto& v = ins[s];
    std::sort(v.begin(), v.end(), [](auto a, auto b) { return a.first > b.first; });
    for (const auto& [edge, c] : v)
      strands[s].passages.insert(strands[s].passages.begin() + edge, Passage{c, side == PassSide::under});
  }
  strands[0].passages.insert(strands[0].passages.end(), closing.passages.begin(), closing.passages.end());
  strands[0].closed = true;
  int free_loops = m.free_loops();
  if (strands[0].passages.empty()) {
    strands.erase(strands.begin());
    ++free_loops;
  }
  KnotoidMap out = KnotoidMap::link(std::move(strands), std::move(signs), free_loops);
  if (!out.euler_ok()) throw ConstructionError("closure produced a non-planar diagram");
  return out;
}

/// Companion link diagram: closes the knotoid strand under or over everything.
/// The route is found in the graph component of the knotoid strand; other
/// components are split from it in the result.
inline KnotoidMap companion_map(const KnotoidMap& m, PassSide side, std::mt19937_64* rng = nullptr) {
  if (!m.is_knotoid()) throw InputError("companion needs a knotoid diagram");
  const std::vector<int> group = detail::strand_groups(m);
  std::vector<int> keep;
  for (int s = 0; s < static_cast<int>(group.size()); ++s)
    if (group[s] == group[0]) keep.push_back(s);
  if (keep.size() == m.strands().size()) return close_along(m, side, closure_route(m, rng));
  const KnotoidMap sub = detail::submap(m, keep);
  const ClosureRoute sub_route = closure_route(sub, rng);
  // translate sub-map darts back to darts of m
  ClosureRoute route;
  for (int d : sub_route) {
    Dart x = sub.dart_at(d);
    x.strand = keep[x.strand];
    route.push_back(m.dart_id(x));
  }
  return close_along(m, side, route);
}

inline PDCode companion(const KnotoidMap& m, PassSide side) { return to_pd(companion_map(m, side)); }

}  // namespace railstick
