#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "railstick/codes.hpp"
#include "railstick/moves.hpp"
#include "railstick/winding.hpp"

namespace railstick {

/// A named knotoid class given by one minimal diagram.
struct KnotoidReference {
  std::string name;
  std::string code;
  bool provisional = false;
};

/// Classes with at most two crossings, plus 3_2. Names follow the rule in the README.
inline const std::vector<KnotoidReference>& knotoid_references() {
  static const std::vector<KnotoidReference> refs = {
      {"1_1", "O1+ U1+ / outer=0:1R"},
      {"2_1", "O1+ U2+ U1+ O2+ / outer=0:0L"},
      {"2_2", "O1+ O2- U1+ U2- / outer=0:1L"},
      {"2_3", "O1+ O2+ U2+ U1+ / outer=0:2R"},
      {"2_4", "O1+ U2+ U1+ O2+ / outer=0:1L"},
      {"2_5", "O1+ U2+ O2+ U1+ / outer=0:2L"},
      {"2_6", "O1+ U2- O2- U1+ / outer=0:2R"},
      {"3_2", "O1+ U2+ U3- O2+ U1+ O3- / outer=0:0L", true},
  };
  return refs;
}

/// Minimal diagram of the monotone winding family W_n (n > 0): the strand
/// passes over n crossings and then under them in reverse order.
inline KnotoidMap winding_family_diagram(int n) {
  if (n < 1) throw InputError("winding family needs n >= 1");
  std::string text;
  for (int i = 1; i <= n; ++i) text += "O" + std::to_string(i) + "+ ";
  for (int i = n; i >= 1; --i) text += "U" + std::to_string(i) + "+ ";
  text += "/ outer=0:" + std::to_string(n) + "R";
  return parse_text(text);
}

namespace detail {

/// Orbit codes of every minimal diagram of each reference class.
inline const std::map<std::string, std::string>& reference_index() {
  static const std::map<std::string, std::string> index = [] {
    std::map<std::string, std::string> out;
    for (const auto& r : knotoid_references())
      for (const auto& f : minimal_forms(parse_text(r.code))) {
        auto [it, fresh] = out.emplace(canonical_code_orbit(f), r.name);
        if (!fresh && it->second != r.name) throw ConstructionError("catalog classes " + r.name + " and " + it->second + " collide");
      }
    return out;
  }();
  return index;
}

}  // namespace detail

struct Classification {
  std::string label = "unclassified";
  int crossings = 0;         // of the minimal diagram found
  std::string code;          // its orbit code
  std::optional<int> winding;
};

/// Orbit label of a knotoid: trivial, a catalog name, W_k (k = |winding| >= 3)
/// or unclassified. Labels are invariant under mir, sym, rot and rev.
inline Classification classify(const KnotoidMap& m, SimplifyOptions budget = {}) {
  if (!m.is_knotoid()) throw InputError("classify needs a knotoid diagram");
  Classification out;
  if (m.strands().size() != 1 || m.free_loops() != 0) return out;  // multi-knotoids are not catalogued
  const KnotoidMap best = simplify(m, budget);
  out.crossings = best.crossing_count();
  out.code = canonical_code_orbit(best);
  out.winding = rail_winding(best);
  if (out.crossings == 0) {
    out.label = "trivial";
    return out;
  }
  const auto& index = detail::reference_index();
  auto lookup = [&](const std::string& code) -> bool {
    if (auto it = index.find(code); it != index.end()) {
      out.label = it->second;
      return true;
    }
    if (out.winding && std::abs(*out.winding) == out.crossings && out.crossings >= 3 &&
        code == canonical_code_orbit(winding_family_diagram(out.crossings))) {
      out.label = "W_" + std::to_string(out.crossings);
      return true;
    }
    return false;
  };
  if (lookup(out.code)) return out;
  for (const auto& f : minimal_forms(best, budget))
    if (lookup(canonical_code_orbit(f))) return out;
  return out;
}

}  // namespace railstick
