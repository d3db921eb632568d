#pragma once

#include <gmpxx.h>

#include <cmath>
#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace railstick {

using Rational = mpq_class;

inline int sgn(const Rational& r) { return ::sgn(r); }

inline double to_double(const Rational& r) { return r.get_d(); }

/// Exact rational equal to the binary value of a finite double.
inline Rational from_double(double d) {
  Rational r(d);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Uniform rational in [lo, hi] with denominator 2^bits.
template <class Rng>
Rational random_rational(Rng& rng, const Rational& lo, const Rational& hi, int bits = 20) {
  std::uniform_int_distribution<long> dist(0, (1L << bits));
  Rational u(dist(rng), 1L << bits);
  u.canonicalize();
  Rational out = lo + (hi - lo) * u;
  return out;
}

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

struct Point3 {
  Rational x, y, z;
  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  Point2 xy() const { return {x, y}; }
};

inline Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator*(const Rational& s, const Point2& a) { return {s * a.x, s * a.y}; }
inline Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Point3 operator*(const Rational& s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }

inline Rational cross(const Point2& a, const Point2& b) { return Rational(a.x * b.y - a.y * b.x); }
inline Rational dot(const Point2& a, const Point2& b) { return Rational(a.x * b.x + a.y * b.y); }
inline Rational dot(const Point3& a, const Point3& b) {
  return Rational(a.x * b.x + a.y * b.y + a.z * b.z);
}
inline Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline bool is_zero(const Point3& a) { return a.x == 0 && a.y == 0 && a.z == 0; }
inline bool is_zero(const Point2& a) { return a.x == 0 && a.y == 0; }

/// Point on segment a->b at parameter t.
inline Point2 lerp(const Point2& a, const Point2& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}
inline Point3 lerp(const Point3& a, const Point3& b, const Rational& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y), a.z + t * (b.z - a.z)};
}
inline Rational lerp(const Rational& a, const Rational& b, const Rational& t) {
  return Rational(a + t * (b - a));
}

/// Exact planar segment intersection classification.
struct SegmentHit {
  enum class Kind { none, proper, touch, overlap };
  Kind kind = Kind::none;
  Rational s, t;  // parameters on the first and second segment (proper/touch only)
};

inline SegmentHit intersect_segments(const Point2& a0, const Point2& a1, const Point2& b0,
                                     const Point2& b1) {
  SegmentHit hit;
  const Point2 r = a1 - a0;
  const Point2 q = b1 - b0;
  const Point2 w = b0 - a0;
  const Rational den = cross(r, q);
  if (den != 0) {
    Rational s = cross(w, q) / den;
    Rational t = cross(w, r) / den;
    if (s < 0 || s > 1 || t < 0 || t > 1) return hit;
    const bool interior = s > 0 && s < 1 && t > 0 && t < 1;
    hit.kind = interior ? SegmentHit::Kind::proper : SegmentHit::Kind::touch;
    hit.s = s;
    hit.t = t;
    return hit;
  }
  if (cross(w, r) != 0) return hit;
  // Collinear (or a degenerate segment on the other's line).
  const Rational rr = dot(r, r);
  if (rr == 0) {
    const Rational qq = dot(q, q);
    if (qq == 0) {
      if (a0 == b0) {
        hit.kind = SegmentHit::Kind::touch;
        hit.s = 0;
        hit.t = 0;
      }
      return hit;
    }
    Rational t = dot(a0 - b0, q) / qq;
    if (t < 0 || t > 1) return hit;
    hit.kind = SegmentHit::Kind::touch;
    hit.s = 0;
    hit.t = t;
    return hit;
  }
  Rational t0 = dot(w, r) / rr;
  Rational t1 = dot(b1 - a0, r) / rr;
  if (t0 > t1) std::swap(t0, t1);
  const Rational lo = t0 > 0 ? t0 : Rational(0);
  const Rational hi = t1 < 1 ? t1 : Rational(1);
  if (lo > hi) return hit;
  if (lo == hi) {
    hit.kind = SegmentHit::Kind::touch;
    hit.s = lo;
    const Rational qq = dot(q, q);
    hit.t = qq == 0 ? Rational(0) : Rational(dot(lerp(a0, a1, lo) - b0, q) / qq);
    return hit;
  }
  hit.kind = SegmentHit::Kind::overlap;
  return hit;
}

/// True when p lies on the closed segment a-b.
inline bool on_segment(const Point2& p, const Point2& a, const Point2& b) {
  if (cross(b - a, p - a) != 0) return false;
  const Rational d1 = dot(p - a, b - a);
  return d1 >= 0 && d1 <= dot(b - a, b - a);
}

/// Exact 3D segment intersection test (closed segments).
inline bool segments_intersect_3d(const Point3& p0, const Point3& p1, const Point3& q0,
                                  const Point3& q1) {
  const Point3 u = p1 - p0;
  const Point3 v = q1 - q0;
  const Point3 w = q0 - p0;
  if (dot(cross(u, v), w) != 0) return false;  // skew
  // Coplanar: drop the coordinate where the plane normal is largest.
  Point3 n = cross(u, v);
  if (is_zero(n)) n = cross(u, w);
  if (is_zero(n)) {
    // All four points collinear (or degenerate): compare along a nonzero direction.
    Point3 d = is_zero(u) ? v : u;
    if (is_zero(d)) return p0 == q0;
    auto param = [&](const Point3& p) { return Rational(dot(p - p0, d)); };
    Rational a0 = 0, a1 = param(p1), b0 = param(q0), b1 = param(q1);
    if (a0 > a1) std::swap(a0, a1);
    if (b0 > b1) std::swap(b0, b1);
    return !(a1 < b0 || b1 < a0);
  }
  auto ax = abs(n.x), ay = abs(n.y), az = abs(n.z);
  auto drop = [&](const Point3& p) -> Point2 {
    if (az >= ax && az >= ay) return {p.x, p.y};
    if (ay >= ax) return {p.x, p.z};
    return {p.y, p.z};
  };
  return intersect_segments(drop(p0), drop(p1), drop(q0), drop(q1)).kind != SegmentHit::Kind::none;
}

/// Total order on nonzero directions by polar angle in [0, 2pi).
inline bool angle_less(const Point2& u, const Point2& v) {
  auto half = [](const Point2& p) { return (p.y < 0 || (p.y == 0 && p.x < 0)) ? 1 : 0; };
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return cross(u, v) > 0;
}

/// True when w lies strictly inside the counterclockwise sweep from b to c.
inline bool ccw_strictly_between(const Point2& b, const Point2& w, const Point2& c) {
  const bool bw = angle_less(b, w), wc = angle_less(w, c);
  if (angle_less(b, c)) return bw && wc;
  if (angle_less(c, b)) return bw || wc;
  // b and c point the same way: the sweep is a full turn
  return bw || angle_less(w, b);
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace railstick
