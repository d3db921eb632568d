#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "railstick/classify.hpp"
#include "railstick/combinatorial.hpp"
#include "railstick/identify.hpp"
#include "railstick/io.hpp"
#include "railstick/lattice.hpp"
#include "railstick/search.hpp"
#include "railstick/winding.hpp"

namespace railstick {

/// A stored conformation together with everything claimed about it. Optional
/// claims that are absent are simply not checked.
struct CatalogEntry {
  std::string name;
  std::string kind;  // rail-arc, multi-rail-arc, lattice-rail-arc, lattice-multi-arc, knot, link
  Object conformation;
  int sticks = 0;
  std::optional<std::string> classification;
  std::optional<int> winding;
  std::optional<std::string> under, over;     // companion names
  std::vector<std::string> components;        // claimed classes of the closed components
  bool minimal_sum = false;                   // stick count equals the component-sum lower bound
  std::string note;
};

// ---------------------------------------------------------------------------
// Families.

/// Spiral arc realizing winding n with 2|n| + 2 sticks. Lines through the tail,
/// then alternately through (3/2, 0) and (-1/2, 0), then through the head, each
/// turned by a fixed small Pythagorean rotation; vertices are consecutive line
/// intersections with strictly decreasing heights.
inline StickRailArc winding_family_arc(int n) {
  if (n == 0 || std::abs(n) > 10) throw InputError("winding family needs 1 <= |n| <= 10");
  const int k = std::abs(n), dir = n < 0 ? 1 : -1;
  const Rational t(1, 16), off(1, 2);
  const Rational c = (1 - t * t) / (1 + t * t), s = dir * 2 * t / (1 + t * t);
  const int lines = 2 * k + 2;
  std::vector<Point2> base, dirs;
  Point2 d{0, 1};
  for (int i = 0; i < lines; ++i) {
    if (i == 0) base.push_back({0, 0});
    else if (i == lines - 1) base.push_back({1, 0});
    else base.push_back(i % 2 ? Point2{1 + off, 0} : Point2{-off, 0});
    dirs.push_back(d);
    d = Point2{c * d.x - s * d.y, s * d.x + c * d.y};
  }
  std::vector<Point3> v;
  long z = 0;
  v.push_back({0, 0, z--});
  for (int i = 0; i + 1 < lines; ++i) {
    const Rational u = cross(base[i + 1] - base[i], dirs[i + 1]) / cross(dirs[i], dirs[i + 1]);
    const Point2 q = base[i] + u * dirs[i];
    v.push_back({q.x, q.y, z--});
  }
  v.push_back({1, 0, z});
  StickRailArc arc{v};
  if (!validate_rail_arc(arc).ok()) throw ConstructionError("winding family arc is not embedded for n = " + std::to_string(n));
  return arc;
}

/// The spanning stick plus n triangles, each unlinked from everything.
inline MultiStickRailArc multi_family(int n) {
  if (n < 0) throw InputError("family parameter must be non-negative");
  MultiStickRailArc m;
  m.arc.vertices = {{0, 0, 0}, {1, 0, 0}};
  for (int i = 0; i < n; ++i) {
    const long z = 2 * i + 1;
    m.knots.push_back({{{0, 2, z}, {1, 2, z}, {0, 3, z}}});
  }
  return m;
}

inline std::string unlink_name(int components) {
  return components == 1 ? "0_1" : "U" + std::to_string(components);
}

/// family("W", n), family("multi", n), family("lattice-multi", n), family("torus", p).
inline CatalogEntry family(const std::string& name, int n) {
  CatalogEntry e;
  e.name = name + "(" + std::to_string(n) + ")";
  if (name == "W") {
    const StickRailArc arc = winding_family_arc(n);
    e.kind = "rail-arc";
    e.conformation = arc;
    e.sticks = 4 + 2 * (std::abs(n) - 1);
    e.winding = n;
    e.classification = std::abs(n) == 1 ? "1_1" : std::abs(n) == 2 ? "2_3" : "W_" + std::to_string(std::abs(n));
    e.note = "spiral of rotating lines, heights decreasing along the arc";
    return e;
  }
  if (name == "multi") {
    if (n < 0 || n > 5) throw InputError("multi family needs 0 <= n <= 5");
    e.kind = "multi-rail-arc";
    e.conformation = multi_family(n);
    e.sticks = 3 * n + 1;
    e.under = unlink_name(n + 1);
    e.components.assign(n, "0_1");
    e.minimal_sum = true;
    e.note = "spanning stick with separated triangles";
    return e;
  }
  if (name == "lattice-multi") {
    if (n < 0 || n > 5) throw InputError("lattice-multi family needs 0 <= n <= 5");
    e.kind = "lattice-multi-arc";
    e.conformation = lattice_multi_family(n);
    e.sticks = 4 * n + 1;
    e.under = unlink_name(n + 1);
    e.components.assign(n, "0_1");
    e.minimal_sum = true;
    e.note = "spanning lattice stick with separated unit squares";
    return e;
  }
  if (name == "torus") {
    if (n < 2 || n > 4) throw InputError("torus family needs 2 <= p <= 4");
    e.kind = "lattice-rail-arc";
    e.conformation = torus_rail_arc(n);
    e.sticks = 6 * n - 4;
    e.under = n == 2 ? "3_1" : n == 3 ? "8_19" : "T(4,5)";
    e.note = "lattice torus knot spiral minus its lowest loop";
    return e;
  }
  throw InputError("unknown family: " + name);
}

// ---------------------------------------------------------------------------
// Shipped entries.

inline CatalogEntry parse_entry(const Json& j) {
  CatalogEntry e;
  e.name = j.at("name").get<std::string>();
  e.kind = j.at("kind").get<std::string>();
  e.conformation = parse_object(j.at("conformation"));
  e.sticks = j.at("sticks").get<int>();
  if (j.contains("class")) e.classification = j["class"].get<std::string>();
  if (j.contains("winding")) e.winding = j["winding"].get<int>();
  if (j.contains("under")) e.under = j["under"].get<std::string>();
  if (j.contains("over")) e.over = j["over"].get<std::string>();
  if (j.contains("components")) e.components = j["components"].get<std::vector<std::string>>();
  e.minimal_sum = j.value("minimal_sum", false);
  e.note = j.value("note", "");
  return e;
}

inline Json entry_json(const CatalogEntry& e) {
  Json j;
  j["name"] = e.name;
  j["kind"] = e.kind;
  j["sticks"] = e.sticks;
  if (e.classification) j["class"] = *e.classification;
  if (e.winding) j["winding"] = *e.winding;
  if (e.under) j["under"] = *e.under;
  if (e.over) j["over"] = *e.over;
  if (!e.components.empty()) j["components"] = e.components;
  if (e.minimal_sum) j["minimal_sum"] = true;
  if (!e.note.empty()) j["note"] = e.note;
  j["conformation"] = to_json(e.conformation);
  return j;
}

class Catalog {
 public:
  static Catalog load(const std::string& path) {
    const Json doc = read_json_file(path);
    Catalog c;
    c.version_ = doc.value("version", 0);
    for (const auto& j : doc.at("entries")) {
      CatalogEntry e = parse_entry(j);
      const std::string name = e.name;
      if (!c.entries_.emplace(name, std::move(e)).second) throw InputError("duplicate catalog entry " + name);
      c.order_.push_back(name);
    }
    return c;
  }

  static const Catalog& shipped() {
    static const Catalog c = load(data_dir() + "/catalog.json");
    return c;
  }

  const CatalogEntry& get(const std::string& name) const {
    auto it = entries_.find(name);
    if (it == entries_.end()) throw InputError("no catalog entry named " + name);
    return it->second;
  }
  bool contains(const std::string& name) const { return entries_.count(name) != 0; }
  const std::vector<std::string>& names() const { return order_; }
  int version() const { return version_; }

 private:
  std::map<std::string, CatalogEntry> entries_;
  std::vector<std::string> order_;
  int version_ = 0;
};

// ---------------------------------------------------------------------------
// Verification.

struct Claim {
  std::string entry;
  std::string what;
  bool pass = false;
  std::string found;  // what was actually computed when different
};

struct Report {
  std::vector<Claim> claims;
  bool ok() const {
    for (const auto& c : claims)
      if (!c.pass) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& c : claims) n += !c.pass;
    return n;
  }
  void append(const Report& r) { claims.insert(claims.end(), r.claims.begin(), r.claims.end()); }
};

namespace detail {

inline bool names_match(const Identification& id, const std::string& want) {
  return std::find(id.names.begin(), id.names.end(), want) != id.names.end();
}

/// s[r] + sum s[K_i] with s[r] = 1 for a trivial arc.
inline int component_sum(const std::vector<std::string>& comps, bool lattice) {
  int total = 1;
  for (const auto& c : comps) {
    const KnotEntry& k = KnotTable::shipped().get(c);
    const std::optional<int> s = lattice ? k.lattice_stick : k.stick;
    if (!s) throw InputError("no stick number shipped for " + c);
    total += *s;
  }
  return total;
}

class Checker {
 public:
  explicit Checker(const CatalogEntry& e) : e_(e) {}
  Report report;

  template <class F>
  void claim(const std::string& what, F&& f) {
    Claim c{e_.name, what, false, ""};
    try {
      c.found = f();
      c.pass = c.found.empty();
    } catch (const std::runtime_error& ex) {
      c.found = std::string("error: ") + ex.what();
    }
    report.claims.push_back(c);
  }

 private:
  const CatalogEntry& e_;
};

inline std::string expect(const std::string& got, const std::string& want) { return got == want ? "" : got; }
inline std::string expect_id(const Identification& id, const std::string& want) {
  return names_match(id, want) ? "" : id.label();
}

}  // namespace detail

/// Runs every claim of one entry.
inline Report verify(const CatalogEntry& e) {
  detail::Checker ck(e);
  using detail::expect;
  using detail::expect_id;
  const std::string count = "stick count " + std::to_string(e.sticks);
  auto ident_sides = [&](auto&& identify_side) {
    if (e.under) ck.claim("under companion " + *e.under, [&] { return expect_id(identify_side(PassSide::under), *e.under); });
    if (e.over) ck.claim("over companion " + *e.over, [&] { return expect_id(identify_side(PassSide::over), *e.over); });
  };

  if (const auto* arc = std::get_if<StickRailArc>(&e.conformation)) {
    ck.claim("valid rail arc", [&] { return validate_rail_arc(*arc).to_string() == "ok" ? "" : validate_rail_arc(*arc).to_string(); });
    ck.claim(count, [&] { return expect(std::to_string(stick_count(*arc)), std::to_string(e.sticks)); });
    const GeometricDiagram g = project(*arc);
    const KnotoidMap m = to_combinatorial(g);
    if (e.classification) ck.claim("classifies as " + *e.classification, [&] { return expect(classify(m).label, *e.classification); });
    if (e.winding) {
      ck.claim("winding " + std::to_string(*e.winding), [&] {
        const auto w = rail_winding(g);
        return expect(w ? std::to_string(*w) : "undefined", std::to_string(*e.winding));
      });
    }
    ident_sides([&](PassSide s) { return identify_companion(m, s); });
    ident_sides([&](PassSide s) { return identify(StickLink{{two_stick_pass(*arc, s)}}); });
  } else if (const auto* multi = std::get_if<MultiStickRailArc>(&e.conformation)) {
    ck.claim("valid multi-component rail arc", [&] { return validate_multi(*multi).ok() ? "" : validate_multi(*multi).to_string(); });
    ck.claim(count, [&] { return expect(std::to_string(stick_count(*multi)), std::to_string(e.sticks)); });
    ident_sides([&](PassSide s) { return identify(two_stick_pass(*multi, s)); });
    ident_sides([&](PassSide s) { return identify_companion(to_combinatorial(project(*multi)), s); });
    for (std::size_t i = 0; i < e.components.size() && i < multi->knots.size(); ++i)
      ck.claim("component " + std::to_string(i + 1) + " is " + e.components[i],
               [&] { return expect_id(identify(StickLink{{multi->knots[i]}}), e.components[i]); });
    if (e.minimal_sum)
      ck.claim("stick count equals the component-sum lower bound",
               [&] { return expect(std::to_string(detail::component_sum(e.components, false)), std::to_string(e.sticks)); });
  } else if (const auto* larc = std::get_if<LatticeRailArc>(&e.conformation)) {
    ck.claim("valid lattice rail arc", [&] { return validate_lattice(*larc).ok() ? "" : validate_lattice(*larc).to_string(); });
    ck.claim(count, [&] { return expect(std::to_string(lattice_stick_count(*larc)), std::to_string(e.sticks)); });
    if (e.classification)
      ck.claim("classifies as " + *e.classification,
               [&] { return expect(classify(to_combinatorial(lattice_project(*larc))).label, *e.classification); });
    auto pass = [&](PassSide s) {
      const LatticeKnot k = four_stick_pass(*larc, s);
      if (lattice_stick_count(k) > e.sticks + 4) throw ConstructionError("pass added more than 4 sticks");
      return identify(StickLink{{to_stick(LatticeLink{{k}}).components[0]}});
    };
    ident_sides(pass);
    for (const auto& side : {e.under, e.over})
      if (side)
        ck.claim("stick count at least the lattice bound for " + *side,
                 [&] { return e.sticks >= lattice_rs_lower(*side) ? "" : std::to_string(lattice_rs_lower(*side)); });
  } else if (const auto* lmulti = std::get_if<LatticeMultiArc>(&e.conformation)) {
    ck.claim("valid lattice multi-arc", [&] { return validate_lattice(*lmulti).ok() ? "" : validate_lattice(*lmulti).to_string(); });
    ck.claim(count, [&] { return expect(std::to_string(lattice_stick_count(*lmulti)), std::to_string(e.sticks)); });
    ident_sides([&](PassSide s) { return identify(to_combinatorial(lattice_project(four_stick_pass(*lmulti, s)))); });
    for (std::size_t i = 0; i < e.components.size() && i < lmulti->knots.size(); ++i)
      ck.claim("component " + std::to_string(i + 1) + " is " + e.components[i], [&] {
        return expect_id(identify(to_combinatorial(lattice_project(LatticeLink{{lmulti->knots[i]}}))), e.components[i]);
      });
    if (e.minimal_sum)
      ck.claim("stick count equals the lattice component-sum lower bound",
               [&] { return expect(std::to_string(detail::component_sum(e.components, true)), std::to_string(e.sticks)); });
  } else if (const auto* knot = std::get_if<StickKnot>(&e.conformation)) {
    ck.claim("valid stick knot", [&] { return validate_knot(*knot).ok() ? "" : validate_knot(*knot).to_string(); });
    ck.claim(count, [&] { return expect(std::to_string(stick_count(*knot)), std::to_string(e.sticks)); });
    if (e.classification) ck.claim("identifies as " + *e.classification, [&] { return expect_id(identify(StickLink{{*knot}}), *e.classification); });
  } else if (const auto* link = std::get_if<StickLink>(&e.conformation)) {
    ck.claim("valid stick link", [&] { return validate_link(*link).ok() ? "" : validate_link(*link).to_string(); });
    ck.claim(count, [&] { return expect(std::to_string(stick_count(*link)), std::to_string(e.sticks)); });
    if (e.classification) ck.claim("identifies as " + *e.classification, [&] { return expect_id(identify(*link), *e.classification); });
  } else {
    ck.claim("supported conformation", [] { return std::string("unsupported conformation type"); });
  }
  return ck.report;
}

/// Every shipped entry plus the generated families at their checked parameters.
inline std::vector<CatalogEntry> all_entries(const Catalog& c = Catalog::shipped()) {
  std::vector<CatalogEntry> out;
  for (const auto& n : c.names()) out.push_back(c.get(n));
  for (int n = -5; n <= 5; ++n)
    if (n != 0) out.push_back(family("W", n));
  for (int n = 0; n <= 5; ++n) out.push_back(family("multi", n));
  for (int n = 0; n <= 5; ++n) out.push_back(family("lattice-multi", n));
  for (int p = 2; p <= 4; ++p) out.push_back(family("torus", p));
  return out;
}

inline Report verify_all(const Catalog& c = Catalog::shipped()) {
  Report r;
  for (const auto& e : all_entries(c)) r.append(verify(e));
  return r;
}

}  // namespace railstick
