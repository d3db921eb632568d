#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "railstick/geometry.hpp"

namespace railstick {

using LatticePoint = std::array<long, 3>;

/// Lattice rail arc. The tail rail is the z-line through (0,0); the head rail
/// is the z-line through `head_rail`, a lattice column other than (0,0).
struct LatticeRailArc {
  std::vector<LatticePoint> vertices;
  std::array<long, 2> head_rail{1, 0};
};

struct LatticeKnot {
  std::vector<LatticePoint> vertices;  // cyclic
};

struct LatticeLink {
  std::vector<LatticeKnot> components;
};

struct LatticeMultiArc {
  LatticeRailArc arc;
  std::vector<LatticeKnot> knots;
};

namespace detail {

inline Point3 to_point(const LatticePoint& p) { return {p[0], p[1], p[2]}; }

inline std::vector<Point3> to_points(const std::vector<LatticePoint>& v) {
  std::vector<Point3> out;
  for (const auto& p : v) out.push_back(to_point(p));
  return out;
}

inline int axis_of(const LatticePoint& a, const LatticePoint& b) {
  int axis = -1;
  for (int k = 0; k < 3; ++k)
    if (a[k] != b[k]) {
      if (axis >= 0) return -2;
      axis = k;
    }
  return axis;
}

inline void check_axis_parallel(const std::vector<LatticePoint>& v, bool closed, const std::string& what,
                                ValidationReport& rep) {
  const std::size_t n = v.size();
  const std::size_t segs = closed ? n : n - 1;
  for (std::size_t i = 0; i < segs && n >= 2; ++i) {
    const int axis = axis_of(v[i], v[(i + 1) % n]);
    if (axis == -1) rep.violations.push_back(what + " stick " + std::to_string(i) + " has zero length");
    if (axis == -2) rep.violations.push_back(what + " stick " + std::to_string(i) + " is not axis-parallel");
  }
}

inline Rails lattice_rails(const LatticeRailArc& a) {
  Rails r;
  r.a2 = {a.head_rail[0], a.head_rail[1], 0};
  return r;
}

}  // namespace detail

/// Maximal collinear runs.
inline int lattice_stick_count(const std::vector<LatticePoint>& v, bool closed) {
  if (v.size() < 2) return 0;
  const auto merged = merge_collinear(detail::to_points(v), closed);
  return closed ? static_cast<int>(merged.size()) : static_cast<int>(merged.size()) - 1;
}
inline int lattice_stick_count(const LatticeRailArc& a) { return lattice_stick_count(a.vertices, false); }
inline int lattice_stick_count(const LatticeKnot& k) { return lattice_stick_count(k.vertices, true); }
inline int lattice_stick_count(const LatticeLink& l) {
  int n = 0;
  for (const auto& k : l.components) n += lattice_stick_count(k);
  return n;
}
inline int lattice_stick_count(const LatticeMultiArc& m) {
  int n = lattice_stick_count(m.arc);
  for (const auto& k : m.knots) n += lattice_stick_count(k);
  return n;
}

/// Rational stick rail arc with canonical rails (an orientation-preserving
/// linear map sends the head rail to x = 1, y = 0).
inline MultiStickRailArc to_stick(const LatticeMultiArc& m) {
  const Rails rails = detail::lattice_rails(m.arc);
  MultiStickRailArc out;
  out.arc.vertices = merge_collinear(normalize_rails(rails, detail::to_points(m.arc.vertices)), false);
  for (const auto& k : m.knots) out.knots.push_back({merge_collinear(normalize_rails(rails, detail::to_points(k.vertices)), true)});
  return out;
}
inline StickRailArc to_stick(const LatticeRailArc& a) { return to_stick(LatticeMultiArc{a, {}}).arc; }
inline StickLink to_stick(const LatticeLink& l) {
  StickLink out;
  for (const auto& k : l.components) out.components.push_back(make_knot(detail::to_points(k.vertices)));
  return out;
}

inline ValidationReport validate_lattice(const LatticeMultiArc& m) {
  ValidationReport rep;
  const auto& v = m.arc.vertices;
  if (v.size() < 2) {
    rep.violations.push_back("arc needs at least 2 vertices");
    return rep;
  }
  if (m.arc.head_rail[0] == 0 && m.arc.head_rail[1] == 0) rep.violations.push_back("rails coincide");
  if (!(v.front()[0] == 0 && v.front()[1] == 0)) rep.violations.push_back("tail is not on rail 1");
  if (!(v.back()[0] == m.arc.head_rail[0] && v.back()[1] == m.arc.head_rail[1])) rep.violations.push_back("head is not on rail 2");
  detail::check_axis_parallel(v, false, "arc", rep);
  for (std::size_t c = 0; c < m.knots.size(); ++c) {
    if (m.knots[c].vertices.size() < 4) rep.violations.push_back("component " + std::to_string(c + 1) + " has fewer than 4 vertices");
    else detail::check_axis_parallel(m.knots[c].vertices, true, "component " + std::to_string(c + 1), rep);
  }
  if (!rep.ok()) return rep;
  const ValidationReport geo = validate_multi(to_stick(m));
  rep.violations.insert(rep.violations.end(), geo.violations.begin(), geo.violations.end());
  return rep;
}
inline ValidationReport validate_lattice(const LatticeRailArc& a) { return validate_lattice(LatticeMultiArc{a, {}}); }

inline ValidationReport validate_lattice(const LatticeLink& l) {
  ValidationReport rep;
  for (std::size_t c = 0; c < l.components.size(); ++c) {
    if (l.components[c].vertices.size() < 4) rep.violations.push_back("component " + std::to_string(c) + " has fewer than 4 vertices");
    else detail::check_axis_parallel(l.components[c].vertices, true, "component " + std::to_string(c), rep);
  }
  if (!rep.ok()) return rep;
  const ValidationReport geo = validate_link(to_stick(l));
  rep.violations.insert(rep.violations.end(), geo.violations.begin(), geo.violations.end());
  return rep;
}
inline ValidationReport validate_lattice(const LatticeKnot& k) { return validate_lattice(LatticeLink{{k}}); }

/// Closes the arc down (under) or up (over) the rails: vertical sticks to
/// `overshoot` beyond the z-extent of everything, joined by an x- and a
/// y-stick in that plane. Closed components are carried along.
inline LatticeLink four_stick_pass(const LatticeMultiArc& m, PassSide side, long overshoot = 1) {
  if (overshoot < 1) throw InputError("overshoot must be positive");
  if (!validate_lattice(m).ok()) throw InputError("invalid lattice arc: " + validate_lattice(m).to_string());
  long lo = m.arc.vertices.front()[2], hi = lo;
  auto extend = [&](const std::vector<LatticePoint>& v) {
    for (const auto& p : v) {
      lo = std::min(lo, p[2]);
      hi = std::max(hi, p[2]);
    }
  };
  extend(m.arc.vertices);
  for (const auto& k : m.knots) extend(k.vertices);
  const long level = side == PassSide::under ? lo - overshoot : hi + overshoot;
  const long hx = m.arc.head_rail[0], hy = m.arc.head_rail[1];
  std::vector<LatticePoint> v = m.arc.vertices;
  v.push_back({hx, hy, level});
  v.push_back({0, hy, level});
  v.push_back({0, 0, level});
  std::vector<LatticePoint> cleaned;
  for (const auto& p : v)
    if (cleaned.empty() || cleaned.back() != p) cleaned.push_back(p);
  LatticeLink out{{LatticeKnot{cleaned}}};
  for (const auto& k : m.knots) out.components.push_back(k);
  return out;
}
inline LatticeKnot four_stick_pass(const LatticeRailArc& a, PassSide side, long overshoot = 1) {
  return four_stick_pass(LatticeMultiArc{a, {}}, side, overshoot).components[0];
}

/// Generic projection: the exact rational perturbation of the geometry module
/// applied after normalizing the rails (a shear would tilt the rails).
inline GeometricDiagram lattice_project(const LatticeMultiArc& m, std::uint64_t seed = 0) {
  if (!validate_lattice(m).ok()) throw InputError("invalid lattice arc: " + validate_lattice(m).to_string());
  return project(to_stick(m), seed);
}
inline GeometricDiagram lattice_project(const LatticeRailArc& a, std::uint64_t seed = 0) {
  return lattice_project(LatticeMultiArc{a, {}}, seed);
}
inline GeometricDiagram lattice_project(const LatticeLink& l, std::uint64_t seed = 0) {
  if (!validate_lattice(l).ok()) throw InputError("invalid lattice link: " + validate_lattice(l).to_string());
  return project(to_stick(l), seed);
}

/// 6p-stick lattice (p, p+1)-torus knot: p axis-parallel rectangles, nested in
/// x and staggered in y, joined into a spiral. The high levels rise p, p+1, ...
/// and the low levels fall p-1, ..., 0, so every pair of loops links once.
inline LatticeKnot torus_lattice_knot(int p) {
  if (p < 2) throw InputError("torus family needs p >= 2");
  const long w = 2 * p + 1, h = 2 * p - 1;
  auto high = [&](int i) { return static_cast<long>(p + i % p); };
  auto low = [&](int i) { return static_cast<long>(p - 1 - i); };
  LatticeKnot k;
  for (int i = 0; i < p; ++i) {
    const long left = i, right = w - i, bottom = i, top = i + h, next_bottom = (i + 1) % p;
    k.vertices.push_back({right, bottom, high(i)});
    k.vertices.push_back({right, bottom, low(i)});
    k.vertices.push_back({right, top, low(i)});
    k.vertices.push_back({left, top, low(i)});
    k.vertices.push_back({left, top, high(i + 1)});
    k.vertices.push_back({left, next_bottom, high(i + 1)});
  }
  return k;
}

/// The torus knot minus the four sticks of its lowest loop (two verticals and
/// their joining pair at level 0): a (6p-4)-stick arc whose under companion is
/// the (p, p+1)-torus knot.
inline LatticeRailArc torus_rail_arc(int p) {
  const auto v = torus_lattice_knot(p).vertices;
  const int n = static_cast<int>(v.size());
  const LatticePoint tail = v[n - 2];
  LatticeRailArc arc;
  for (int k = 0; k <= n - 4; ++k) {
    const LatticePoint& q = v[(n - 2 + k) % n];
    arc.vertices.push_back({q[0] - tail[0], q[1] - tail[1], q[2]});
  }
  arc.head_rail = {arc.vertices.back()[0], arc.vertices.back()[1]};
  return arc;
}

/// A spanning stick and n unit squares stacked above it, away from the rails.
inline LatticeMultiArc lattice_multi_family(int n) {
  if (n < 0) throw InputError("family parameter must be non-negative");
  LatticeMultiArc m;
  m.arc.vertices = {{0, 0, 0}, {1, 0, 0}};
  for (int i = 0; i < n; ++i) {
    const long z = 2 * i;
    m.knots.push_back({{{0, 2, z}, {1, 2, z}, {1, 3, z}, {0, 3, z}}});
  }
  return m;
}

}  // namespace railstick
