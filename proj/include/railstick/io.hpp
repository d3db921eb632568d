#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "railstick/codes.hpp"
#include "railstick/geometry.hpp"
#include "railstick/lattice.hpp"
#include "railstick/pd.hpp"

namespace railstick {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Numbers and points. Rationals are written as strings "p/q" (or "p"); input
// also accepts JSON integers.

inline Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InputError("coordinate must be an integer or a \"p/q\" string");
  Rational r;
  if (r.set_str(j.get<std::string>(), 10) != 0 || r.get_den() == 0) throw InputError("bad rational: " + j.get<std::string>());
  r.canonicalize();
  return r;
}

inline Json rational_json(const Rational& r) {
  if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

inline std::vector<Point3> parse_points(const Json& j) {
  if (!j.is_array()) throw InputError("vertices must be an array");
  std::vector<Point3> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 3) throw InputError("a vertex needs three coordinates");
    out.push_back({parse_rational(p[0]), parse_rational(p[1]), parse_rational(p[2])});
  }
  return out;
}

inline Json points_json(const std::vector<Point3>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back({rational_json(p.x), rational_json(p.y), rational_json(p.z)});
  return out;
}

inline std::vector<LatticePoint> parse_lattice_points(const Json& j) {
  if (!j.is_array()) throw InputError("vertices must be an array");
  std::vector<LatticePoint> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 3) throw InputError("a vertex needs three coordinates");
    for (const auto& c : p)
      if (!c.is_number_integer()) throw InputError("lattice coordinates must be integers");
    out.push_back({p[0].get<long>(), p[1].get<long>(), p[2].get<long>()});
  }
  return out;
}

inline Json lattice_points_json(const std::vector<LatticePoint>& v) {
  Json out = Json::array();
  for (const auto& p : v) out.push_back({p[0], p[1], p[2]});
  return out;
}

// ---------------------------------------------------------------------------
// Objects. Every document carries a "type":
//   rail-arc {vertices}, multi-rail-arc {arc, knots}, knot {vertices},
//   link {components}, lattice-rail-arc {vertices, head_rail},
//   lattice-multi-arc {arc, head_rail, knots}, lattice-knot {vertices},
//   knotoid {code}, pd {pd}.

using Object = std::variant<StickRailArc, MultiStickRailArc, StickKnot, StickLink, LatticeRailArc, LatticeMultiArc,
                            LatticeKnot, KnotoidMap, PDCode>;

inline Object parse_object(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw InputError("document needs a \"type\" field");
  const std::string type = j["type"].get<std::string>();
  auto need = [&](const char* key) -> const Json& {
    if (!j.contains(key)) throw InputError(type + " needs \"" + key + "\"");
    return j[key];
  };
  auto head_rail = [&]() -> std::array<long, 2> {
    if (!j.contains("head_rail")) return {1, 0};
    const Json& h = j["head_rail"];
    if (!h.is_array() || h.size() != 2) throw InputError("head_rail must be [x, y]");
    return {h[0].get<long>(), h[1].get<long>()};
  };
  if (type == "rail-arc") return StickRailArc{parse_points(need("vertices"))};
  if (type == "knot") return StickKnot{parse_points(need("vertices"))};
  if (type == "link") {
    StickLink l;
    for (const auto& c : need("components")) l.components.push_back({parse_points(c)});
    return l;
  }
  if (type == "multi-rail-arc") {
    MultiStickRailArc m;
    m.arc.vertices = parse_points(need("arc"));
    if (j.contains("knots"))
      for (const auto& c : j["knots"]) m.knots.push_back({parse_points(c)});
    return m;
  }
  if (type == "lattice-rail-arc") return LatticeRailArc{parse_lattice_points(need("vertices")), head_rail()};
  if (type == "lattice-multi-arc") {
    LatticeMultiArc m;
    m.arc = {parse_lattice_points(need("arc")), head_rail()};
    if (j.contains("knots"))
      for (const auto& c : j["knots"]) m.knots.push_back({parse_lattice_points(c)});
    return m;
  }
  if (type == "lattice-knot") return LatticeKnot{parse_lattice_points(need("vertices"))};
  if (type == "knotoid") return parse_text(need("code").get<std::string>());
  if (type == "pd") return parse_pd(need("pd").get<std::string>());
  throw InputError("unknown document type: " + type);
}

inline Json to_json(const StickRailArc& a) { return {{"type", "rail-arc"}, {"vertices", points_json(a.vertices)}}; }
inline Json to_json(const StickKnot& k) { return {{"type", "knot"}, {"vertices", points_json(k.vertices)}}; }
inline Json to_json(const StickLink& l) {
  Json c = Json::array();
  for (const auto& k : l.components) c.push_back(points_json(k.vertices));
  return {{"type", "link"}, {"components", c}};
}
inline Json to_json(const MultiStickRailArc& m) {
  Json k = Json::array();
  for (const auto& x : m.knots) k.push_back(points_json(x.vertices));
  return {{"type", "multi-rail-arc"}, {"arc", points_json(m.arc.vertices)}, {"knots", k}};
}
inline Json to_json(const LatticeRailArc& a) {
  return {{"type", "lattice-rail-arc"}, {"vertices", lattice_points_json(a.vertices)}, {"head_rail", a.head_rail}};
}
inline Json to_json(const LatticeMultiArc& m) {
  Json k = Json::array();
  for (const auto& x : m.knots) k.push_back(lattice_points_json(x.vertices));
  return {{"type", "lattice-multi-arc"}, {"arc", lattice_points_json(m.arc.vertices)}, {"head_rail", m.arc.head_rail}, {"knots", k}};
}
inline Json to_json(const LatticeKnot& k) { return {{"type", "lattice-knot"}, {"vertices", lattice_points_json(k.vertices)}}; }
inline Json to_json(const KnotoidMap& m) { return {{"type", "knotoid"}, {"code", to_text(m)}}; }
inline Json to_json(const PDCode& pd) { return {{"type", "pd"}, {"pd", pd.to_string()}}; }
inline Json to_json(const Object& o) {
  return std::visit([](const auto& x) { return to_json(x); }, o);
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Object read_object(const std::string& path) { return parse_object(read_json_file(path)); }

// ---------------------------------------------------------------------------
// Rendering.

/// SVG of a generic diagram: under-strands are cut near each crossing, the
/// tail is a filled dot and the head an open one.
inline std::string render_svg(const GeometricDiagram& g, double size = 480) {
  double lo_x = 1e300, lo_y = 1e300, hi_x = -1e300, hi_y = -1e300;
  for (const auto& c : g.components)
    for (const auto& p : c.points) {
      lo_x = std::min(lo_x, to_double(p.x));
      hi_x = std::max(hi_x, to_double(p.x));
      lo_y = std::min(lo_y, to_double(p.y));
      hi_y = std::max(hi_y, to_double(p.y));
    }
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
  const double margin = 20, scale = (size - 2 * margin) / span;
  auto X = [&](double x) { return margin + (x - lo_x) * scale; };
  auto Y = [&](double y) { return size - margin - (y - lo_y) * scale; };
  const double gap = 6 / scale;  // half-gap in diagram units
  std::ostringstream out;
  out.precision(6);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
      << size << " " << size << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t c = 0; c < g.components.size(); ++c) {
    const auto& comp = g.components[c];
    for (int s = 0; s < comp.segments(); ++s) {
      const double ax = to_double(comp.a(s).x), ay = to_double(comp.a(s).y);
      const double bx = to_double(comp.b(s).x), by = to_double(comp.b(s).y);
      const double len = std::hypot(bx - ax, by - ay);
      // parameters where this segment passes under something
      std::vector<double> cuts;
      for (const auto& x : g.crossings) {
        if (static_cast<std::size_t>(x.comp_a) == c && x.seg_a == s && !x.a_over) cuts.push_back(to_double(x.t_a));
        if (static_cast<std::size_t>(x.comp_b) == c && x.seg_b == s && x.a_over) cuts.push_back(to_double(x.t_b));
      }
      std::sort(cuts.begin(), cuts.end());
      double from = 0;
      auto piece = [&](double t0, double t1) {
        if (t1 <= t0) return;
        out << "<line x1=\"" << X(ax + t0 * (bx - ax)) << "\" y1=\"" << Y(ay + t0 * (by - ay)) << "\" x2=\""
            << X(ax + t1 * (bx - ax)) << "\" y2=\"" << Y(ay + t1 * (by - ay))
            << "\" stroke=\"black\" stroke-width=\"2\" stroke-linecap=\"round\"/>\n";
      };
      for (double t : cuts) {
        const double d = len > 0 ? gap / len : 0;
        piece(from, t - d);
        from = t + d;
      }
      piece(from, 1);
    }
  }
  if (g.is_knotoid()) {
    const auto& k = g.components[0].points;
    out << "<circle cx=\"" << X(to_double(k.front().x)) << "\" cy=\"" << Y(to_double(k.front().y))
        << "\" r=\"5\" fill=\"black\"/>\n";
    out << "<circle cx=\"" << X(to_double(k.back().x)) << "\" cy=\"" << Y(to_double(k.back().y))
        << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

/// Wavefront OBJ with one polyline per component; rails are added as two
/// long vertical lines when `rails` is set.
inline std::string render_obj(const std::vector<std::pair<std::vector<Point3>, bool>>& polylines, bool rails) {
  std::ostringstream out;
  out.precision(10);
  int next = 1;
  double lo = 0, hi = 0;
  for (const auto& [pts, closed] : polylines)
    for (const auto& p : pts) {
      lo = std::min(lo, to_double(p.z));
      hi = std::max(hi, to_double(p.z));
    }
  auto emit = [&](const std::vector<Point3>& pts, bool closed, const char* name) {
    out << "o " << name << "\n";
    for (const auto& p : pts) out << "v " << to_double(p.x) << " " << to_double(p.y) << " " << to_double(p.z) << "\n";
    out << "l";
    for (std::size_t i = 0; i < pts.size(); ++i) out << " " << next + static_cast<int>(i);
    if (closed) out << " " << next;
    out << "\n";
    next += static_cast<int>(pts.size());
  };
  for (std::size_t i = 0; i < polylines.size(); ++i)
    emit(polylines[i].first, polylines[i].second, ("component" + std::to_string(i)).c_str());
  if (rails) {
    emit({{0, 0, Rational(lo - 1)}, {0, 0, Rational(hi + 1)}}, false, "rail1");
    emit({{1, 0, Rational(lo - 1)}, {1, 0, Rational(hi + 1)}}, false, "rail2");
  }
  return out.str();
}

}  // namespace railstick
