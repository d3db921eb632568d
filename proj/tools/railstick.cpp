// railstick command-line front end.
//
// Inputs (--in): a JSON document (see io.hpp), a text file holding a knotoid
// code or PD code, "catalog:NAME" or "family:NAME:N".
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "railstick/catalog.hpp"
#include "railstick/companion.hpp"
#include "railstick/io.hpp"
#include "railstick/search.hpp"

using namespace railstick;

namespace {

struct Options {
  std::string in;
  std::string text;
  std::uint64_t seed = 0;
  int budget = SimplifyOptions{}.node_budget;
  int workers = 1;
  std::string format = "text";
  std::string side = "under";
};

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  const auto b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

Object parse_text_object(const std::string& raw) {
  const std::string t = trim(raw);
  if (t.empty()) throw InputError("empty input");
  if (t.front() == '{') return parse_object(Json::parse(t));
  if (t.find("X(") != std::string::npos || t.find("X[") != std::string::npos || t.rfind("loop", 0) == 0) return parse_pd(t);
  return parse_text(t);
}

Object load(const Options& o) {
  if (!o.text.empty()) return parse_text_object(o.text);
  if (o.in.empty()) throw InputError("no input: use --in or --text");
  if (o.in.rfind("catalog:", 0) == 0) return Catalog::shipped().get(o.in.substr(8)).conformation;
  if (o.in.rfind("family:", 0) == 0) {
    const std::string rest = o.in.substr(7);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw InputError("family input needs family:NAME:N");
    int n = 0;
    try {
      n = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("bad family parameter in " + o.in);
    }
    return family(rest.substr(0, colon), n).conformation;
  }
  std::ifstream f(o.in);
  if (!f) throw InputError("cannot open " + o.in);
  std::stringstream buf;
  buf << f.rdbuf();
  try {
    return parse_text_object(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw InputError(o.in + ": " + e.what());
  }
}

PassSide parse_side(const std::string& s) {
  if (s == "under") return PassSide::under;
  if (s == "over") return PassSide::over;
  throw InputError("side must be under or over");
}

bool is_geometric(const Object& obj) {
  return !std::holds_alternative<KnotoidMap>(obj) && !std::holds_alternative<PDCode>(obj);
}

GeometricDiagram geometry_of(const Object& obj, std::uint64_t seed) {
  struct V {
    std::uint64_t seed;
    GeometricDiagram operator()(const StickRailArc& a) const { return project(a, seed); }
    GeometricDiagram operator()(const MultiStickRailArc& m) const { return project(m, seed); }
    GeometricDiagram operator()(const StickKnot& k) const { return project(k, seed); }
    GeometricDiagram operator()(const StickLink& l) const { return project(l, seed); }
    GeometricDiagram operator()(const LatticeRailArc& a) const { return lattice_project(a, seed); }
    GeometricDiagram operator()(const LatticeMultiArc& m) const { return lattice_project(m, seed); }
    GeometricDiagram operator()(const LatticeKnot& k) const { return lattice_project(LatticeLink{{k}}, seed); }
    GeometricDiagram operator()(const KnotoidMap&) const { throw InputError("input has no geometry"); }
    GeometricDiagram operator()(const PDCode&) const { throw InputError("input has no geometry"); }
  };
  return std::visit(V{seed}, obj);
}

KnotoidMap diagram_of(const Object& obj, std::uint64_t seed) {
  if (const auto* m = std::get_if<KnotoidMap>(&obj)) return *m;
  if (const auto* pd = std::get_if<PDCode>(&obj)) return from_pd(*pd);
  return to_combinatorial(geometry_of(obj, seed));
}

ValidationReport validate_object(const Object& obj) {
  struct V {
    ValidationReport operator()(const StickRailArc& a) const { return validate_rail_arc(a); }
    ValidationReport operator()(const MultiStickRailArc& m) const { return validate_multi(m); }
    ValidationReport operator()(const StickKnot& k) const { return validate_knot(k); }
    ValidationReport operator()(const StickLink& l) const { return validate_link(l); }
    ValidationReport operator()(const LatticeRailArc& a) const { return validate_lattice(a); }
    ValidationReport operator()(const LatticeMultiArc& m) const { return validate_lattice(m); }
    ValidationReport operator()(const LatticeKnot& k) const { return validate_lattice(k); }
    ValidationReport operator()(const KnotoidMap&) const { return {}; }
    ValidationReport operator()(const PDCode& pd) const {
      from_pd(pd);  // throws on malformed codes
      return {};
    }
  };
  return std::visit(V{}, obj);
}

int stick_count_of(const Object& obj) {
  struct V {
    int operator()(const StickRailArc& a) const { return stick_count(a); }
    int operator()(const MultiStickRailArc& m) const { return stick_count(m); }
    int operator()(const StickKnot& k) const { return stick_count(k); }
    int operator()(const StickLink& l) const { return stick_count(l); }
    int operator()(const LatticeRailArc& a) const { return lattice_stick_count(a); }
    int operator()(const LatticeMultiArc& m) const { return lattice_stick_count(m); }
    int operator()(const LatticeKnot& k) const { return lattice_stick_count(k); }
    int operator()(const KnotoidMap&) const { return -1; }
    int operator()(const PDCode&) const { return -1; }
  };
  return std::visit(V{}, obj);
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

Json identification_json(const Identification& id) {
  return {{"names", id.names}, {"label", id.label()}, {"crossings", id.crossings}, {"determinant", id.tuple.determinant}};
}

SimplifyOptions budget_of(const Options& o) {
  SimplifyOptions b;
  b.node_budget = o.budget;
  return b;
}

// ---------------------------------------------------------------------------

int cmd_validate(const Options& o) {
  const Object obj = load(o);
  const ValidationReport r = validate_object(obj);
  Json j{{"valid", r.ok()}, {"violations", r.violations}};
  const int sticks = r.ok() ? stick_count_of(obj) : -1;
  if (sticks >= 0) j["sticks"] = sticks;
  std::string text = r.ok() ? "valid" : "invalid";
  if (sticks >= 0) text += " sticks=" + std::to_string(sticks);
  text += "\n";
  for (const auto& v : r.violations) text += "  " + v + "\n";
  emit(o, j, text);
  return r.ok() ? 0 : 1;
}

int cmd_project(const Options& o) {
  const KnotoidMap m = diagram_of(load(o), o.seed);
  const std::string code = to_text(m);
  emit(o, {{"code", code}, {"crossings", m.crossing_count()}}, code + "\n");
  return 0;
}

int cmd_simplify(const Options& o) {
  const KnotoidMap m = diagram_of(load(o), o.seed);
  const KnotoidMap s = simplify(m, budget_of(o));
  const std::string code = to_text(s);
  emit(o, {{"code", code}, {"crossings_before", m.crossing_count()}, {"crossings", s.crossing_count()}},
       code + "\n" + std::to_string(m.crossing_count()) + " -> " + std::to_string(s.crossing_count()) + " crossings\n");
  return 0;
}

int cmd_classify(const Options& o) {
  const Classification c = classify(diagram_of(load(o), o.seed), budget_of(o));
  Json j{{"label", c.label}, {"crossings", c.crossings}, {"code", c.code}};
  j["winding"] = c.winding ? Json(*c.winding) : Json(nullptr);
  emit(o, j, c.label + "\n");
  return 0;
}

int cmd_winding(const Options& o) {
  const Object obj = load(o);
  const std::optional<int> w =
      is_geometric(obj) ? rail_winding(geometry_of(obj, o.seed)) : rail_winding(diagram_of(obj, o.seed));
  emit(o, {{"winding", w ? Json(*w) : Json(nullptr)}}, (w ? std::to_string(*w) : std::string("undefined")) + "\n");
  return w ? 0 : 1;
}

int cmd_companion(const Options& o) {
  const Object obj = load(o);
  const PassSide side = parse_side(o.side);
  const KnotoidMap m = diagram_of(obj, o.seed);
  const PDCode pd = companion(m, side);
  const Identification id = identify(pd);
  Json j{{"side", side_name(side)}, {"pd", pd.to_string()}, {"identification", identification_json(id)}};
  std::string text = id.label() + "\n" + pd.to_string() + "\n";
  // geometric rail arcs also get the explicit two-stick pass
  if (const auto* arc = std::get_if<StickRailArc>(&obj)) {
    const StickKnot k = two_stick_pass(*arc, side, o.seed);
    const Identification kid = identify(StickLink{{k}});
    j["pass"] = {{"knot", to_json(k)}, {"sticks", stick_count(k)}, {"identification", identification_json(kid)}};
    text += "two-stick pass: " + std::to_string(stick_count(k)) + " sticks, " + kid.label() + "\n";
  } else if (const auto* multi = std::get_if<MultiStickRailArc>(&obj)) {
    const StickLink l = two_stick_pass(*multi, side, o.seed);
    const Identification kid = identify(l);
    j["pass"] = {{"link", to_json(l)}, {"sticks", stick_count(l)}, {"identification", identification_json(kid)}};
    text += "two-stick pass: " + std::to_string(stick_count(l)) + " sticks, " + kid.label() + "\n";
  } else if (const auto* larc = std::get_if<LatticeRailArc>(&obj)) {
    const LatticeKnot k = four_stick_pass(*larc, side);
    const Identification kid = identify(StickLink{{to_stick(LatticeLink{{k}}).components[0]}});
    j["pass"] = {{"knot", to_json(k)}, {"sticks", lattice_stick_count(k)}, {"identification", identification_json(kid)}};
    text += "four-stick pass: " + std::to_string(lattice_stick_count(k)) + " sticks, " + kid.label() + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_identify(const Options& o) {
  const Object obj = load(o);
  const KnotoidMap m = diagram_of(obj, o.seed);
  if (m.is_knotoid()) throw InputError("identify needs a closed knot or link; use companion for arcs");
  const Identification id = identify(m);
  emit(o, identification_json(id), id.label() + "\n");
  return id.names.empty() ? 1 : 0;
}

int cmd_census(const Options& o, int sticks, int samples) {
  const Census c = sample_census(sticks, samples, o.seed, o.workers, budget_of(o));
  Json hist = Json::object();
  std::ostringstream text;
  text << "sticks=" << sticks << " samples=" << samples << " seed=" << o.seed << "\n";
  for (const auto& [label, n] : c.histogram) {
    hist[label] = n;
    text << std::left << std::setw(14) << label << std::right << std::setw(9) << n << "  " << std::fixed
         << std::setprecision(4) << c.fraction(label) << "\n";
  }
  Json unclassified = Json::array();
  for (const auto& [i, arc] : c.unclassified) unclassified.push_back({{"index", i}, {"arc", to_json(arc)}});
  emit(o, {{"sticks", sticks}, {"samples", samples}, {"seed", o.seed}, {"histogram", hist}, {"unclassified", unclassified}},
       text.str());
  return 0;
}

int cmd_anneal(const Options& o, const std::string& goal_text, int max_sticks, const Schedule& sch) {
  const Goal goal = Goal::parse(goal_text);
  const AnnealResult r = anneal(goal, max_sticks, sch, o.seed, o.workers);
  Json j{{"goal", goal.to_string()}, {"success", r.success}, {"sticks", stick_count(r.arc)}, {"label", r.label},
         {"chain", r.chain}, {"evaluations", r.evaluations}, {"arc", to_json(r.arc)}};
  std::string text = std::string(r.success ? "found " : "not found ") + goal.to_string() + " sticks=" +
                     std::to_string(stick_count(r.arc)) + " label=" + r.label + "\n" + to_json(r.arc).dump() + "\n";
  emit(o, j, text);
  return r.success ? 0 : 1;
}

int cmd_sample(const Options& o, const std::vector<std::string>& knots, int sticks, long limit) {
  const PassSide side = parse_side(o.side);
  const auto found = sample_companions(knots, side, sticks, o.seed, limit, o.workers);
  Json hits = Json::array();
  std::string text;
  for (const auto& k : knots) {
    auto it = found.find(k);
    if (it == found.end()) {
      hits.push_back({{"knot", k}, {"found", false}});
      text += k + ": not found in " + std::to_string(limit) + " samples\n";
      continue;
    }
    hits.push_back({{"knot", k}, {"found", true}, {"index", it->second.index}, {"arc", to_json(it->second.arc)}});
    text += k + ": sample " + std::to_string(it->second.index) + "\n" + to_json(it->second.arc).dump() + "\n";
  }
  emit(o, {{"side", side_name(side)}, {"sticks", sticks}, {"seed", o.seed}, {"hits", hits}}, text);
  return found.size() == knots.size() ? 0 : 1;
}

int cmd_bounds(const Options& o, const std::string& knot, bool lattice, bool certified) {
  Json j{{"knot", knot}};
  std::string text;
  if (lattice) {
    const int lo = lattice_rs_lower(knot);
    j["lattice_lower"] = lo;
    text = "rs_CL[" + knot + "] >= " + std::to_string(lo) + "\n";
  } else {
    const Bounds b = rs_bounds(knot, certified || Catalog::shipped().contains("rs " + knot));
    j["lower"] = b.lower;
    j["upper"] = b.upper;
    text = std::to_string(b.lower) + " <= rs[" + knot + "] <= " + std::to_string(b.upper) + "\n";
  }
  emit(o, j, text);
  return 0;
}

int cmd_catalog_verify(const Options& o, const std::string& only) {
  Report r;
  if (only.empty()) r = verify_all();
  else r = verify(Catalog::shipped().get(only));
  Json claims = Json::array();
  std::ostringstream text;
  for (const auto& c : r.claims) {
    Json cj{{"entry", c.entry}, {"claim", c.what}, {"pass", c.pass}};
    if (!c.pass) cj["found"] = c.found;
    claims.push_back(cj);
    text << (c.pass ? "pass  " : "FAIL  ") << c.entry << ": " << c.what;
    if (!c.pass) text << " (found " << c.found << ")";
    text << "\n";
  }
  text << r.claims.size() - r.failures() << "/" << r.claims.size() << " claims pass\n";
  emit(o, {{"claims", claims}, {"failures", r.failures()}}, text.str());
  return r.ok() ? 0 : 1;
}

int cmd_catalog_list(const Options& o) {
  Json names = Json::array();
  std::string text;
  for (const auto& n : Catalog::shipped().names()) {
    const CatalogEntry& e = Catalog::shipped().get(n);
    names.push_back({{"name", n}, {"kind", e.kind}, {"sticks", e.sticks}});
    text += n + "  " + e.kind + "  " + std::to_string(e.sticks) + " sticks  " + e.note + "\n";
  }
  emit(o, names, text);
  return 0;
}

int cmd_catalog_get(const std::string& name, int param, bool is_family) {
  const CatalogEntry e = is_family ? family(name, param) : Catalog::shipped().get(name);
  std::cout << entry_json(e).dump(2) << "\n";
  return 0;
}

int cmd_render(const Options& o, const std::string& as) {
  const Object obj = load(o);
  if (as == "svg") {
    std::cout << render_svg(geometry_of(obj, o.seed));
    return 0;
  }
  if (as != "obj") throw InputError("render format must be svg or obj");
  std::vector<std::pair<std::vector<Point3>, bool>> lines;
  bool rails = false;
  if (const auto* a = std::get_if<StickRailArc>(&obj)) {
    lines.push_back({a->vertices, false});
    rails = true;
  } else if (const auto* m = std::get_if<MultiStickRailArc>(&obj)) {
    lines.push_back({m->arc.vertices, false});
    for (const auto& k : m->knots) lines.push_back({k.vertices, true});
    rails = true;
  } else if (const auto* k = std::get_if<StickKnot>(&obj)) {
    lines.push_back({k->vertices, true});
  } else if (const auto* l = std::get_if<StickLink>(&obj)) {
    for (const auto& c : l->components) lines.push_back({c.vertices, true});
  } else if (const auto* la = std::get_if<LatticeRailArc>(&obj)) {
    lines.push_back({to_stick(*la).vertices, false});
    rails = true;
  } else if (const auto* lm = std::get_if<LatticeMultiArc>(&obj)) {
    const MultiStickRailArc s = to_stick(*lm);
    lines.push_back({s.arc.vertices, false});
    for (const auto& c : s.knots) lines.push_back({c.vertices, true});
    rails = true;
  } else if (const auto* lk = std::get_if<LatticeKnot>(&obj)) {
    lines.push_back({to_stick(LatticeLink{{*lk}}).components[0].vertices, true});
  } else {
    throw InputError("OBJ output needs a 3D conformation");
  }
  std::cout << render_obj(lines, rails);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"railstick: stick rail arcs, knotoids and their companions"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c, bool input = true) {
    if (input) {
      c->add_option("--in", o.in, "input file, catalog:NAME or family:NAME:N");
      c->add_option("--text", o.text, "inline knotoid code, PD code or JSON");
    }
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--budget", o.budget, "simplification node budget");
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* validate = app.add_subcommand("validate", "check a conformation or code");
  common(validate);
  auto* projectc = app.add_subcommand("project", "generic projection to a knotoid diagram");
  common(projectc);
  auto* simplifyc = app.add_subcommand("simplify", "reduce a diagram with Reidemeister moves");
  common(simplifyc);
  auto* classifyc = app.add_subcommand("classify", "name the knotoid class");
  common(classifyc);
  auto* windingc = app.add_subcommand("winding", "winding number of a rail arc or knotoid");
  common(windingc);
  auto* companionc = app.add_subcommand("companion", "under or over companion and its identification");
  common(companionc);
  companionc->add_option("--side", o.side, "under or over")->check(CLI::IsMember({"under", "over"}));
  auto* identifyc = app.add_subcommand("identify", "identify a knot or link");
  common(identifyc);

  int sticks = 4, samples = 1000;
  auto* census = app.add_subcommand("census", "classify random stick rail arcs");
  common(census, false);
  census->add_option("--sticks", sticks)->required();
  census->add_option("--samples", samples);
  census->add_option("--workers", o.workers);

  std::string goal;
  int max_sticks = 6;
  Schedule sch;
  auto* annealc = app.add_subcommand("anneal", "search for an arc in a class or with a companion");
  common(annealc, false);
  annealc->add_option("--goal", goal, "knotoid label, under:KNOT or over:KNOT")->required();
  annealc->add_option("--sticks", max_sticks, "maximum stick count");
  annealc->add_option("--steps", sch.steps, "steps per chain");
  annealc->add_option("--chains", sch.chains, "number of chains");
  annealc->add_option("--workers", o.workers);

  std::vector<std::string> sample_knots;
  long sample_limit = 100000;
  int sample_sticks = 6;
  auto* samplec = app.add_subcommand("sample", "uniform sampling for arcs with given companions");
  common(samplec, false);
  samplec->add_option("--knots", sample_knots, "knot names")->required();
  samplec->add_option("--side", o.side, "under or over")->check(CLI::IsMember({"under", "over"}));
  samplec->add_option("--sticks", sample_sticks);
  samplec->add_option("--samples", sample_limit, "sample indices to try");
  samplec->add_option("--workers", o.workers);

  std::string knot;
  bool lattice = false, certified = false;
  auto* bounds = app.add_subcommand("bounds", "rail stick number bounds from the knot table");
  common(bounds, false);
  bounds->add_option("--knot", knot)->required();
  bounds->add_flag("--lattice", lattice, "lattice lower bound");
  bounds->add_flag("--certified", certified, "an (s-2)-stick certificate is known");

  std::string only, name;
  int param = 0;
  auto* catalog = app.add_subcommand("catalog", "shipped constructions");
  catalog->require_subcommand(1);
  auto* verifyc = catalog->add_subcommand("verify", "check every claim");
  common(verifyc, false);
  verifyc->add_option("--entry", only, "only this entry");
  auto* listc = catalog->add_subcommand("list", "list entries");
  common(listc, false);
  auto* getc = catalog->add_subcommand("get", "print an entry as JSON");
  getc->add_option("name", name)->required();
  auto* familyc = catalog->add_subcommand("family", "print a family member as JSON");
  familyc->add_option("name", name)->required();
  familyc->add_option("n", param)->required();

  std::string as = "svg";
  auto* render = app.add_subcommand("render", "SVG of the projection or OBJ of the conformation");
  common(render);
  render->add_option("--as", as)->check(CLI::IsMember({"svg", "obj"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(o);
    if (*projectc) return cmd_project(o);
    if (*simplifyc) return cmd_simplify(o);
    if (*classifyc) return cmd_classify(o);
    if (*windingc) return cmd_winding(o);
    if (*companionc) return cmd_companion(o);
    if (*identifyc) return cmd_identify(o);
    if (*census) return cmd_census(o, sticks, samples);
    if (*annealc) return cmd_anneal(o, goal, max_sticks, sch);
    if (*samplec) return cmd_sample(o, sample_knots, sample_sticks, sample_limit);
    if (*bounds) return cmd_bounds(o, knot, lattice, certified);
    if (*verifyc) return cmd_catalog_verify(o, only);
    if (*listc) return cmd_catalog_list(o);
    if (*getc) return cmd_catalog_get(name, 0, false);
    if (*familyc) return cmd_catalog_get(name, param, true);
    if (*render) return cmd_render(o, as);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
