#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "railstick/error.hpp"
#include "railstick/rational.hpp"

namespace railstick {

/// Two parallel lines a1 + t*dir and a2 + t*dir. The canonical rails are the
/// z-parallel lines through (0,0,0) and (1,0,0).
struct Rails {
  Point3 a1{0, 0, 0};
  Point3 a2{1, 0, 0};
  Point3 dir{0, 0, 1};

  static Rails canonical() { return {}; }
  bool is_canonical() const {
    return a1.x == 0 && a1.y == 0 && a2.x == 1 && a2.y == 0 && dir.x == 0 && dir.y == 0 && dir.z != 0;
  }
};

struct StickRailArc {
  std::vector<Point3> vertices;  // tail first, head last
};

struct StickKnot {
  std::vector<Point3> vertices;  // cyclic
};

struct StickLink {
  std::vector<StickKnot> components;
};

struct MultiStickRailArc {
  StickRailArc arc;
  std::vector<StickKnot> knots;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const {
    if (ok()) return "ok";
    std::string out;
    for (const auto& v : violations) out += (out.empty() ? "" : "; ") + v;
    return out;
  }
};

inline bool collinear(const Point3& a, const Point3& b, const Point3& c) { return is_zero(cross(b - a, c - a)); }

/// Orientation-preserving affine map sending the given rails to the canonical ones.
inline std::vector<Point3> normalize_rails(const Rails& rails, const std::vector<Point3>& pts) {
  if (is_zero(rails.dir)) throw InputError("rail direction is zero");
  const Point3 u = rails.a2 - rails.a1;
  const Point3 e = cross(rails.dir, u);
  if (is_zero(e)) throw InputError("rails are not distinct parallel lines");
  // Solve p - a1 = x*u + y*e + z*dir by Cramer's rule.
  const Rational det = dot(u, cross(e, rails.dir));
  std::vector<Point3> out;
  out.reserve(pts.size());
  for (const auto& p : pts) {
    const Point3 w = p - rails.a1;
    Rational x = dot(w, cross(e, rails.dir)) / det;
    Rational y = dot(u, cross(w, rails.dir)) / det;
    Rational z = dot(u, cross(e, w)) / det;
    out.push_back({x, y, z});
  }
  return out;
}

/// Drops repeated vertices and interior vertices of straight runs.
inline std::vector<Point3> merge_collinear(std::vector<Point3> v, bool closed) {
  std::vector<Point3> out;
  for (auto& p : v)
    if (out.empty() || !(out.back() == p)) out.push_back(std::move(p));
  if (closed && out.size() > 1 && out.front() == out.back()) out.pop_back();
  bool changed = true;
  while (changed && out.size() >= 3) {
    changed = false;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (!closed && (i == 0 || i + 1 == n)) continue;
      const Point3& a = out[(i + n - 1) % n];
      const Point3& c = out[(i + 1) % n];
      // only merge straight-through vertices; a fold-back is an embedding error
      if (collinear(a, out[i], c) && dot(out[i] - a, c - out[i]) > 0) {
        out.erase(out.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  return out;
}

inline StickRailArc make_arc(std::vector<Point3> v) { return {merge_collinear(std::move(v), false)}; }
inline StickKnot make_knot(std::vector<Point3> v) { return {merge_collinear(std::move(v), true)}; }

inline int stick_count(const StickRailArc& a) { return a.vertices.empty() ? 0 : static_cast<int>(a.vertices.size()) - 1; }
inline int stick_count(const StickKnot& k) { return static_cast<int>(k.vertices.size()); }
inline int stick_count(const StickLink& l) {
  int n = 0;
  for (const auto& k : l.components) n += stick_count(k);
  return n;
}
inline int stick_count(const MultiStickRailArc& m) {
  int n = stick_count(m.arc);
  for (const auto& k : m.knots) n += stick_count(k);
  return n;
}

namespace detail {

/// One polyline of a configuration: component 0 of a rail arc is open.
struct Polyline3 {
  const std::vector<Point3>* pts;
  bool closed;
  int segments() const {
    const int n = static_cast<int>(pts->size());
    return closed ? n : n - 1;
  }
  const Point3& a(int i) const { return (*pts)[i]; }
  const Point3& b(int i) const { return (*pts)[(i + 1) % pts->size()]; }
};

inline bool adjacent(const Polyline3& p, int i, int j) {
  const int n = p.segments();
  if (std::abs(i - j) == 1) return true;
  return p.closed && std::abs(i - j) == n - 1;
}

inline std::string seg_name(int comp, int i) {
  return comp == 0 ? "stick " + std::to_string(i) : "component " + std::to_string(comp) + " stick " + std::to_string(i);
}

/// Points of segment a-b on the vertical line through r (x,y): none, one, or the whole segment.
enum class RailHit { none, point, whole };
inline RailHit rail_hit(const Point3& a, const Point3& b, const Point2& r, Rational* t) {
  const Point2 a2 = a.xy(), b2 = b.xy();
  if (a2 == b2) return a2 == r ? RailHit::whole : RailHit::none;
  if (!on_segment(r, a2, b2)) return RailHit::none;
  const Point2 d = b2 - a2;
  *t = dot(r - a2, d) / dot(d, d);
  return RailHit::point;
}

inline void check_polylines(const std::vector<Polyline3>& comps, bool with_rails, ValidationReport& rep) {
  const Point2 r1{0, 0}, r2{1, 0};
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Polyline3& p = comps[c];
    const int n = static_cast<int>(p.pts->size());
    if (p.closed && n < 3) rep.violations.push_back("component " + std::to_string(c) + " has fewer than 3 vertices");
    if (!p.closed && n < 2) rep.violations.push_back("arc needs at least 2 vertices");
    if ((p.closed && n < 3) || n < 2) return;
    for (int i = 0; i < p.segments(); ++i)
      if (p.a(i) == p.b(i)) rep.violations.push_back(seg_name(static_cast<int>(c), i) + " has zero length");
    for (int i = 0; i < n; ++i) {
      if (!p.closed && (i == 0 || i == n - 1)) continue;
      const Point3& a = (*p.pts)[(i + n - 1) % n];
      const Point3& c3 = (*p.pts)[(i + 1) % n];
      if (collinear(a, (*p.pts)[i], c3))
        rep.violations.push_back("three collinear vertices at " + seg_name(static_cast<int>(c), i));
    }
  }
  if (!rep.ok()) return;
  // pairwise disjointness
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t d = c; d < comps.size(); ++d)
      for (int i = 0; i < comps[c].segments(); ++i)
        for (int j = (c == d ? i + 1 : 0); j < comps[d].segments(); ++j) {
          if (c == d && adjacent(comps[c], i, j)) continue;
          if (segments_intersect_3d(comps[c].a(i), comps[c].b(i), comps[d].a(j), comps[d].b(j)))
            rep.violations.push_back(seg_name(static_cast<int>(c), i) + " meets " + seg_name(static_cast<int>(d), j));
        }
  if (!with_rails) return;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Polyline3& p = comps[c];
    const int last = p.segments() - 1;
    for (int i = 0; i <= last; ++i) {
      for (int rail = 0; rail < 2; ++rail) {
        Rational t;
        const RailHit h = rail_hit(p.a(i), p.b(i), rail == 0 ? r1 : r2, &t);
        if (h == RailHit::none) continue;
        const bool allowed = h == RailHit::point && c == 0 && !p.closed &&
                             ((rail == 0 && i == 0 && t == 0) || (rail == 1 && i == last && t == 1));
        if (!allowed)
          rep.violations.push_back("interior meets rail: " + seg_name(static_cast<int>(c), i) + " touches rail " +
                                   std::to_string(rail + 1));
      }
    }
  }
}

}  // namespace detail

inline ValidationReport validate_rail_arc(const StickRailArc& arc) {
  ValidationReport rep;
  const auto& v = arc.vertices;
  if (v.size() < 2) {
    rep.violations.push_back("arc needs at least 2 vertices");
    return rep;
  }
  if (!(v.front().x == 0 && v.front().y == 0)) rep.violations.push_back("tail is not on rail 1");
  if (!(v.back().x == 1 && v.back().y == 0)) rep.violations.push_back("head is not on rail 2");
  detail::check_polylines({{&v, false}}, true, rep);
  return rep;
}

inline ValidationReport validate_knot(const StickKnot& k) {
  ValidationReport rep;
  detail::check_polylines({{&k.vertices, true}}, false, rep);
  return rep;
}

inline ValidationReport validate_link(const StickLink& l) {
  ValidationReport rep;
  std::vector<detail::Polyline3> comps;
  for (const auto& k : l.components) comps.push_back({&k.vertices, true});
  detail::check_polylines(comps, false, rep);
  return rep;
}

inline ValidationReport validate_multi(const MultiStickRailArc& m) {
  ValidationReport rep;
  const auto& v = m.arc.vertices;
  if (v.size() < 2) {
    rep.violations.push_back("arc needs at least 2 vertices");
    return rep;
  }
  if (!(v.front().x == 0 && v.front().y == 0)) rep.violations.push_back("tail is not on rail 1");
  if (!(v.back().x == 1 && v.back().y == 0)) rep.violations.push_back("head is not on rail 2");
  std::vector<detail::Polyline3> comps{{&v, false}};
  for (const auto& k : m.knots) comps.push_back({&k.vertices, true});
  detail::check_polylines(comps, true, rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Planar diagrams.

/// A projected component; heights are the z-coordinates of its 3D vertices.
struct PlanarComponent {
  std::vector<Point2> points;
  std::vector<Rational> heights;
  bool closed = false;
  int segments() const {
    const int n = static_cast<int>(points.size());
    return closed ? n : n - 1;
  }
  const Point2& a(int i) const { return points[i]; }
  const Point2& b(int i) const { return points[(i + 1) % points.size()]; }
  Rational z_at(int i, const Rational& t) const {
    return lerp(heights[i], heights[(i + 1) % heights.size()], t);
  }
};

struct GeoCrossing {
  int comp_a = 0, seg_a = 0;
  Rational t_a;
  int comp_b = 0, seg_b = 0;
  Rational t_b;
  Point2 at;
  bool a_over = false;
  int sign = 0;  // +1 when the over strand crosses the under strand from its left to its right
};

/// Generic planar immersion with crossing data. When component 0 is open it is
/// the knotoid strand, with tail at its first point and head at its last.
struct GeometricDiagram {
  std::vector<PlanarComponent> components;
  std::vector<GeoCrossing> crossings;

  bool is_knotoid() const { return !components.empty() && !components[0].closed; }
  Point2 tail() const { return components.at(0).points.front(); }
  Point2 head() const { return components.at(0).points.back(); }
};

namespace detail {

inline bool adjacent2(const PlanarComponent& p, int i, int j) {
  if (std::abs(i - j) == 1) return true;
  return p.closed && std::abs(i - j) == p.segments() - 1;
}

inline int crossing_sign(const Point2& over_dir, const Point2& under_dir) { return sgn(cross(over_dir, under_dir)); }

}  // namespace detail

/// Crossings of a planar configuration, or nullopt when it is not generic.
/// Throws InputError when two strands meet in space.
inline std::optional<GeometricDiagram> planar_diagram(std::vector<PlanarComponent> comps) {
  GeometricDiagram g;
  for (const auto& p : comps) {
    for (int i = 0; i < p.segments(); ++i) {
      if (p.a(i) == p.b(i)) return std::nullopt;  // stick parallel to the projection direction
      const int j = i + 1;
      if (j < p.segments() || p.closed) {
        // consecutive segments may not fold back onto each other
        const Point2 u = p.b(i) - p.a(i), w = p.b(j % p.segments()) - p.a(j % p.segments());
        if (p.segments() > 1 && cross(u, w) == 0 && dot(u, w) < 0) return std::nullopt;
      }
    }
  }
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t d = c; d < comps.size(); ++d)
      for (int i = 0; i < comps[c].segments(); ++i)
        for (int j = (c == d ? i + 1 : 0); j < comps[d].segments(); ++j) {
          if (c == d && detail::adjacent2(comps[c], i, j)) continue;
          const auto& P = comps[c];
          const auto& Q = comps[d];
          const SegmentHit h = intersect_segments(P.a(i), P.b(i), Q.a(j), Q.b(j));
          if (h.kind == SegmentHit::Kind::none) continue;
          if (h.kind != SegmentHit::Kind::proper) return std::nullopt;
          GeoCrossing x;
          x.comp_a = static_cast<int>(c);
          x.seg_a = i;
          x.t_a = h.s;
          x.comp_b = static_cast<int>(d);
          x.seg_b = j;
          x.t_b = h.t;
          x.at = lerp(P.a(i), P.b(i), h.s);
          const Rational za = P.z_at(i, h.s), zb = Q.z_at(j, h.t);
          if (za == zb) throw InputError("strands meet in space at a projected crossing");
          x.a_over = za > zb;
          const Point2 da = P.b(i) - P.a(i), db = Q.b(j) - Q.a(j);
          x.sign = x.a_over ? detail::crossing_sign(da, db) : detail::crossing_sign(db, da);
          g.crossings.push_back(std::move(x));
        }
  // no triple points
  std::vector<std::pair<Rational, Rational>> pts;
  for (const auto& x : g.crossings) pts.push_back({x.at.x, x.at.y});
  std::sort(pts.begin(), pts.end());
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i] == pts[i - 1]) return std::nullopt;
  g.components = std::move(comps);
  return g;
}

namespace detail {

inline PlanarComponent flatten(const std::vector<Point3>& v, bool closed) {
  PlanarComponent p;
  p.closed = closed;
  for (const auto& q : v) {
    p.points.push_back(q.xy());
    p.heights.push_back(q.z);
  }
  return p;
}

// Floating distances only size perturbations; every result is re-validated exactly.
struct V3 {
  double x, y, z;
};
inline V3 vd(const Point3& p) { return {to_double(p.x), to_double(p.y), to_double(p.z)}; }
inline V3 sub(V3 a, V3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline double dotd(V3 a, V3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double segment_distance(V3 p1, V3 q1, V3 p2, V3 q2) {
  const V3 d1 = sub(q1, p1), d2 = sub(q2, p2), r = sub(p1, p2);
  const double a = dotd(d1, d1), e = dotd(d2, d2), f = dotd(d2, r);
  double s = 0, t = 0;
  const double c = dotd(d1, r), b = dotd(d1, d2), den = a * e - b * b;
  if (a <= 1e-300 && e <= 1e-300) return std::sqrt(dotd(r, r));
  if (a <= 1e-300) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else if (e <= 1e-300) {
    s = std::clamp(-c / a, 0.0, 1.0);
  } else {
    s = den > 1e-300 ? std::clamp((b * f - c * e) / den, 0.0, 1.0) : 0.0;
    t = (b * s + f) / e;
    if (t < 0) {
      t = 0;
      s = std::clamp(-c / a, 0.0, 1.0);
    } else if (t > 1) {
      t = 1;
      s = std::clamp((b - c) / a, 0.0, 1.0);
    }
  }
  const V3 c1{p1.x + d1.x * s, p1.y + d1.y * s, p1.z + d1.z * s};
  const V3 c2{p2.x + d2.x * t, p2.y + d2.y * t, p2.z + d2.z * t};
  const V3 w = sub(c1, c2);
  return std::sqrt(dotd(w, w));
}

/// Distance in the xy-plane from segment a-b to the rail point r.
inline double rail_distance(V3 a, V3 b, double rx) {
  return segment_distance({a.x, a.y, 0}, {b.x, b.y, 0}, {rx, 0, 0}, {rx, 0, 0});
}

/// Smallest separation between non-incident features, including the rails.
inline double feature_separation(const std::vector<Polyline3>& comps, bool with_rails) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t d = c; d < comps.size(); ++d)
      for (int i = 0; i < comps[c].segments(); ++i)
        for (int j = (c == d ? i + 1 : 0); j < comps[d].segments(); ++j) {
          if (c == d && adjacent(comps[c], i, j)) continue;
          best = std::min(best, segment_distance(vd(comps[c].a(i)), vd(comps[c].b(i)), vd(comps[d].a(j)),
                                                 vd(comps[d].b(j))));
        }
  for (const auto& p : comps)
    for (int i = 0; i < p.segments(); ++i)
      best = std::min(best, std::sqrt(dotd(sub(vd(p.a(i)), vd(p.b(i))), sub(vd(p.a(i)), vd(p.b(i))))));
  if (with_rails) {
    for (std::size_t c = 0; c < comps.size(); ++c) {
      const auto& p = comps[c];
      const int last = p.segments() - 1;
      for (int i = 0; i <= last; ++i) {
        if (!(c == 0 && i == 0)) best = std::min(best, rail_distance(vd(p.a(i)), vd(p.b(i)), 0.0));
        if (!(c == 0 && i == last)) best = std::min(best, rail_distance(vd(p.a(i)), vd(p.b(i)), 1.0));
      }
    }
    // vertices next to the endpoints keep away from their rail
    const auto& p = comps[0];
    if (p.pts->size() > 2) {
      const V3 v1 = vd(p.a(1)), vl = vd(p.a(p.segments() - 1));
      best = std::min(best, std::hypot(v1.x, v1.y));
      best = std::min(best, std::hypot(vl.x - 1.0, vl.y));
    }
  }
  return best;
}

/// Largest power-of-two fraction not above x, as a rational.
inline Rational dyadic_below(double x) {
  if (!(x > 0)) throw ConstructionError("degenerate configuration: zero feature separation");
  const int e = static_cast<int>(std::floor(std::log2(x)));
  Rational r = 1;
  if (e >= 0) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
    r = p;
  } else {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    r = Rational(1) / Rational(p);
  }
  return r;
}

template <class Rng>
Point3 jitter(Rng& rng, const Point3& p, const Rational& eps, bool xy, bool z) {
  Point3 q = p;
  if (xy) {
    q.x += random_rational(rng, -eps, eps);
    q.y += random_rational(rng, -eps, eps);
  }
  if (z) q.z += random_rational(rng, -eps, eps);
  return q;
}

}  // namespace detail

inline constexpr int kPerturbRetries = 24;

/// Seed-deterministic small perturbation of a multi-arc (rail endpoints slide
/// along their rails). Offsets stay below a quarter of the feature separation.
inline MultiStickRailArc perturb(const MultiStickRailArc& m, std::uint64_t seed, int attempt) {
  std::vector<detail::Polyline3> comps{{&m.arc.vertices, false}};
  for (const auto& k : m.knots) comps.push_back({&k.vertices, true});
  Rational eps = detail::dyadic_below(detail::feature_separation(comps, true) / 8);
  for (int i = 0; i < attempt; ++i) eps /= 2;
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
  MultiStickRailArc out = m;
  auto& v = out.arc.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const bool end = i == 0 || i + 1 == v.size();
    v[i] = detail::jitter(rng, v[i], eps, !end, true);
  }
  for (auto& k : out.knots)
    for (auto& p : k.vertices) p = detail::jitter(rng, p, eps, true, true);
  return out;
}

inline StickLink perturb(const StickLink& l, std::uint64_t seed, int attempt) {
  std::vector<detail::Polyline3> comps;
  for (const auto& k : l.components) comps.push_back({&k.vertices, true});
  Rational eps = detail::dyadic_below(detail::feature_separation(comps, false) / 8);
  for (int i = 0; i < attempt; ++i) eps /= 2;
  std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
  StickLink out = l;
  for (auto& k : out.components)
    for (auto& p : k.vertices) p = detail::jitter(rng, p, eps, true, true);
  return out;
}

/// Projection to z = 0 of a multi-arc; perturbs (seeded) when the projection
/// is not generic. The optional `used` receives the conformation projected.
inline GeometricDiagram project(const MultiStickRailArc& m, std::uint64_t seed = 0, MultiStickRailArc* used = nullptr) {
  const ValidationReport rep = validate_multi(m);
  if (!rep.ok()) throw InputError("invalid rail arc: " + rep.to_string());
  auto flat = [](const MultiStickRailArc& x) {
    std::vector<PlanarComponent> comps{detail::flatten(x.arc.vertices, false)};
    for (const auto& k : x.knots) comps.push_back(detail::flatten(k.vertices, true));
    return comps;
  };
  if (auto g = planar_diagram(flat(m))) {
    if (used) *used = m;
    return *g;
  }
  for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
    MultiStickRailArc p = perturb(m, seed, attempt);
    if (!validate_multi(p).ok() || stick_count(p) != stick_count(m)) continue;
    if (auto g = planar_diagram(flat(p))) {
      if (used) *used = p;
      return *g;
    }
  }
  throw ConstructionError("projection stayed degenerate after perturbation");
}

inline GeometricDiagram project(const StickRailArc& a, std::uint64_t seed = 0, StickRailArc* used = nullptr) {
  MultiStickRailArc m{a, {}};
  MultiStickRailArc u;
  GeometricDiagram g = project(m, seed, &u);
  if (used) *used = u.arc;
  return g;
}

inline GeometricDiagram project(const StickLink& l, std::uint64_t seed = 0, StickLink* used = nullptr) {
  const ValidationReport rep = validate_link(l);
  if (!rep.ok()) throw InputError("invalid stick link: " + rep.to_string());
  auto flat = [](const StickLink& x) {
    std::vector<PlanarComponent> comps;
    for (const auto& k : x.components) comps.push_back(detail::flatten(k.vertices, true));
    return comps;
  };
  if (auto g = planar_diagram(flat(l))) {
    if (used) *used = l;
    return *g;
  }
  for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
    StickLink p = perturb(l, seed, attempt);
    if (!validate_link(p).ok() || stick_count(p) != stick_count(l)) continue;
    if (auto g = planar_diagram(flat(p))) {
      if (used) *used = p;
      return *g;
    }
  }
  throw ConstructionError("projection stayed degenerate after perturbation");
}

inline GeometricDiagram project(const StickKnot& k, std::uint64_t seed = 0) { return project(StickLink{{k}}, seed); }

// ---------------------------------------------------------------------------
// Pass constructions.

enum class PassSide { under, over };

inline const char* side_name(PassSide s) { return s == PassSide::under ? "under" : "over"; }

/// Closes a multi-arc with two sticks through an apex far below (under) or
/// above (over) the arc, in the plane y = 0 when possible and otherwise
/// slightly off it (a spanning stick lies on the segment between the rails).
/// Returns the closed arc followed by the knot components. The configuration
/// is perturbed (seeded) if every apex position is degenerate.
inline StickLink two_stick_pass(const MultiStickRailArc& input, PassSide side, std::uint64_t seed = 0) {
  if (!validate_multi(input).ok()) throw InputError("invalid rail arc: " + validate_multi(input).to_string());
  const Point2 T{0, 0}, H{1, 0};
  const Rational offsets[] = {Rational(0), Rational(1, 4), Rational(-1, 4), Rational(1, 16), Rational(-1, 16)};
  for (int attempt = -1; attempt < kPerturbRetries; ++attempt) {
    const MultiStickRailArc m = attempt < 0 ? input : perturb(input, seed, attempt);
    if (attempt >= 0 && (!validate_multi(m).ok() || stick_count(m) != stick_count(input))) continue;
    std::vector<detail::Polyline3> comps{{&m.arc.vertices, false}};
    for (const auto& k : m.knots) comps.push_back({&k.vertices, true});
    const auto& v = m.arc.vertices;
    const Rational z0 = v.front().z, z1 = v.back().z;
    for (const Rational& e : offsets)
      for (int k = 2; k <= 9; ++k) {
        const Rational a = make_rational(k / 2, k);  // 1/2, 1/3, 2/4, ...
        const Point2 A{a, e};
        // where the configuration crosses the shadow of the closing sticks, and
        // how high: (leg, parameter along leg, z)
        struct Hit {
          int leg;
          Rational s, z;
        };
        std::vector<Hit> hits;
        bool degenerate = false;
        for (std::size_t c = 0; c < comps.size() && !degenerate; ++c) {
          const auto& p = comps[c];
          const int last = p.segments() - 1;
          for (int i = 0; i <= last && !degenerate; ++i)
            for (int leg = 0; leg < 2 && !degenerate; ++leg) {
              const Point2 from = leg == 0 ? T : A, to = leg == 0 ? A : H;
              const SegmentHit h = intersect_segments(p.a(i).xy(), p.b(i).xy(), from, to);
              if (h.kind == SegmentHit::Kind::none) continue;
              if (h.kind == SegmentHit::Kind::proper) {
                hits.push_back({leg, h.t, lerp(p.a(i).z, p.b(i).z, h.s)});
                continue;
              }
              const bool own_end = c == 0 && h.kind == SegmentHit::Kind::touch &&
                                   ((leg == 0 && i == 0 && h.s == 0 && h.t == 0) ||
                                    (leg == 1 && i == last && h.s == 1 && h.t == 1));
              if (!own_end) degenerate = true;
            }
        }
        if (degenerate) continue;
        Rational zmax = abs(z0) + abs(z1) + 1;
        for (const auto& h : hits) zmax = std::max(zmax, Rational(abs(h.z) + 1));
        for (Rational K = zmax; K < zmax * (1 << 30); K *= 2) {
          const Rational za = side == PassSide::under ? Rational(-K) : K;
          bool good = true;
          for (const auto& h : hits) {
            const Rational zc = h.leg == 0 ? Rational(z0 + h.s * (za - z0)) : Rational(za + h.s * (z1 - za));
            if (side == PassSide::under ? !(zc < h.z) : !(zc > h.z)) good = false;
          }
          if (!good) continue;
          StickKnot closed;
          closed.vertices = v;
          closed.vertices.push_back({a, e, za});
          StickLink out{{closed}};
          for (const auto& kn : m.knots) out.components.push_back(kn);
          if (validate_link(out).ok() && stick_count(out) == stick_count(m) + 2) return out;
          break;
        }
      }
  }
  throw ConstructionError("two-stick pass search exhausted");
}

inline StickKnot two_stick_pass(const StickRailArc& arc, PassSide side, std::uint64_t seed = 0) {
  return two_stick_pass(MultiStickRailArc{arc, {}}, side, seed).components.at(0);
}

namespace detail {

/// Linear map sending b1, b2, b3 to the coordinate axes (rows of the inverse).
inline std::vector<Point3> to_basis(const std::vector<Point3>& pts, const Point3& b1, const Point3& b2, const Point3& b3) {
  const Rational det = dot(b1, cross(b2, b3));
  if (det == 0) throw ConstructionError("degenerate basis");
  const Point3 r1 = cross(b2, b3), r2 = cross(b3, b1), r3 = cross(b1, b2);
  std::vector<Point3> out;
  for (const auto& p : pts) {
    Rational x = dot(r1, p) / det, y = dot(r2, p) / det, z = dot(r3, p) / det;
    out.push_back({x, y, z});
  }
  return out;
}

}  // namespace detail

/// Removes stick `index` of a knot: a linear change of coordinates makes the
/// stick parallel to the rails, the head end is nudged onto a second rail next
/// to the first, and the result is normalized to the canonical rails.
inline StickRailArc drop_stick(const StickKnot& knot, int index, std::uint64_t seed = 0) {
  const int n = static_cast<int>(knot.vertices.size());
  if (n < 4) throw InputError("drop_stick needs a knot with at least 4 sticks");
  if (!validate_knot(knot).ok()) throw InputError("invalid knot: " + validate_knot(knot).to_string());
  if (index < 0 || index >= n) throw InputError("stick index out of range");
  const Point3 d = knot.vertices[(index + 1) % n] - knot.vertices[index];
  std::mt19937_64 rng(seed * 7919ULL + static_cast<std::uint64_t>(index));
  for (int attempt = 0; attempt < kPerturbRetries; ++attempt) {
    Point3 b1{random_rational(rng, -1, 1, 8), random_rational(rng, -1, 1, 8), random_rational(rng, -1, 1, 8)};
    if (is_zero(cross(b1, d))) continue;
    Point3 b2 = cross(d, b1);
    if (dot(b1, cross(b2, d)) < 0) b2 = Rational(-1) * b2;
    std::vector<Point3> p = detail::to_basis(knot.vertices, b1, b2, d);
    // arc from the vertex after the stick around to the vertex before it
    std::vector<Point3> arc;
    for (int k = 0; k < n; ++k) arc.push_back(p[(index + 1 + k) % n]);
    const Point3 tail = arc.front();
    Point3 head = arc.back();
    // nothing else may project onto the stick's point
    std::vector<PlanarComponent> flat{detail::flatten(arc, false)};
    bool clear = true;
    for (int i = 1; i + 2 < n; ++i)
      if (on_segment(tail.xy(), flat[0].a(i), flat[0].b(i))) clear = false;
    if (!clear) continue;
    const Point3 rest_dir = arc[arc.size() - 2] - head;
    Point2 off{random_rational(rng, -1, 1, 8), random_rational(rng, -1, 1, 8)};
    if (is_zero(off)) continue;
    double sep = std::numeric_limits<double>::infinity();
    for (int i = 0; i + 1 < n; ++i) {
      const detail::V3 a = detail::vd(arc[i]), b = detail::vd(arc[i + 1]);
      if (i > 0 && i + 2 < n) sep = std::min(sep, detail::rail_distance({a.x - to_double(tail.x), a.y - to_double(tail.y), 0},
                                                                        {b.x - to_double(tail.x), b.y - to_double(tail.y), 0}, 0.0));
    }
    sep = std::min(sep, std::hypot(to_double(rest_dir.x), to_double(rest_dir.y)));
    sep = std::min(sep, detail::feature_separation({{&arc, false}}, false));
    Rational scale = detail::dyadic_below(sep / 8) / (abs(off.x) + abs(off.y));
    for (int shrink = 0; shrink < 30; ++shrink, scale /= 2) {
      std::vector<Point3> cand = arc;
      cand.back() = {head.x + scale * off.x, head.y + scale * off.y, head.z};
      Rails rails;
      rails.a1 = tail;
      rails.a2 = cand.back();
      rails.dir = {0, 0, 1};
      StickRailArc out{normalize_rails(rails, cand)};
      if (validate_rail_arc(out).ok() && stick_count(out) == n - 1) return out;
    }
  }
  throw ConstructionError("could not clear the dropped stick's projection");
}

}  // namespace railstick
