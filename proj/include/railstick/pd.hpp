#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "railstick/error.hpp"
#include "railstick/knotoid_map.hpp"

namespace railstick {

/// Planar diagram code. Each crossing lists its four edge labels
/// counterclockwise starting from the incoming under edge.
struct PDCode {
  std::vector<std::array<int, 4>> crossings;
  int free_loops = 0;

  std::string to_string() const {
    std::string out;
    for (const auto& x : crossings) {
      if (!out.empty()) out += ' ';
      out += "X(" + std::to_string(x[0]) + "," + std::to_string(x[1]) + "," + std::to_string(x[2]) + "," +
             std::to_string(x[3]) + ")";
    }
    for (int i = 0; i < free_loops; ++i) out += out.empty() ? "loop" : " loop";
    return out;
  }
};

/// Accepts "X(1,5,2,4) X(3,1,4,6) ...", square brackets, and "loop" tokens.
inline PDCode parse_pd(const std::string& text) {
  PDCode pd;
  std::string norm;
  for (char c : text) norm += (c == '[' || c == ']' || c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream is(norm);
  std::string tok;
  while (is >> tok) {
    if (tok == "loop") {
      ++pd.free_loops;
      continue;
    }
    if (tok != "X") throw InputError("bad PD token: " + tok);
    std::array<int, 4> x{};
    for (int& v : x)
      if (!(is >> v)) throw InputError("PD crossing needs four labels");
    pd.crossings.push_back(x);
  }
  return pd;
}

/// PD code of a closed diagram; labels are edge ids + 1.
inline PDCode to_pd(const KnotoidMap& m) {
  if (m.is_knotoid()) throw InputError("PD codes describe closed diagrams");
  PDCode pd;
  pd.free_loops = m.free_loops();
  for (int c = 0; c < m.crossing_count(); ++c) {
    std::array<int, 4> x{};
    for (int pos = 0; pos < 4; ++pos) {
      const auto slot = m.slot_at(c, pos);
      const bool under = slot == KnotoidMap::ui || slot == KnotoidMap::uo;
      const auto [s, p] = under ? m.under_passage(c) : m.over_passage(c);
      const bool out = slot == KnotoidMap::uo || slot == KnotoidMap::oo;
      x[pos] = m.edge_id(s, out ? m.out_edge(s, p) : m.in_edge(s, p)) + 1;
    }
    pd.crossings.push_back(x);
  }
  return pd;
}

/// Oriented closed diagram from a PD code. Components that only pass over are
/// oriented so that labels increase, when the labels allow it.
inline KnotoidMap from_pd(const PDCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  std::map<int, std::vector<std::pair<int, int>>> ends;  // label -> (crossing, position)
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) ends[pd.crossings[c][p]].push_back({c, p});
  for (const auto& [label, v] : ends)
    if (v.size() != 2) throw InputError("PD label " + std::to_string(label) + " must appear exactly twice");

  auto other_end = [&](int label, std::pair<int, int> here) {
    const auto& v = ends[label];
    return v[0] == here ? v[1] : v[0];
  };

  std::map<int, bool> used;
  std::vector<Strand> strands;
  std::vector<int> over_in_pos(n, -1);
  std::vector<int> seen_under(n, 0), seen_over(n, 0);

  auto walk = [&](int label, std::pair<int, int> entry) {
    Strand st;
    st.closed = true;
    int cur = label;
    auto at = entry;
    while (!used[cur]) {
      used[cur] = true;
      const auto [c, p] = at;
      const bool over = p % 2 == 1;
      if (!over && p != 0) throw InputError("PD orientation is inconsistent at crossing " + std::to_string(c));
      if (over) {
        over_in_pos[c] = p;
        ++seen_over[c];
      } else {
        ++seen_under[c];
      }
      st.passages.push_back({c, over});
      const int exit_pos = (p + 2) % 4;
      const int next = pd.crossings[c][exit_pos];
      at = other_end(next, {c, exit_pos});
      cur = next;
    }
    if (cur != label) throw InputError("PD strand does not close up");
    strands.push_back(std::move(st));
  };

  // components containing an under passage: start from an edge entering position 0
  for (int c = 0; c < n; ++c) {
    const int label = pd.crossings[c][0];
    if (!used[label]) walk(label, {c, 0});
  }
  // all-over components
  for (auto& [label, v] : ends) {
    if (used[label]) continue;
    auto entry = v[0];
    for (const auto& cand : v) {
      const int exit_label = pd.crossings[cand.first][(cand.second + 2) % 4];
      if (exit_label == label + 1) entry = cand;
    }
    walk(label, entry);
  }
  std::vector<int> signs(n);
  for (int c = 0; c < n; ++c) {
    if (seen_under[c] != 1 || seen_over[c] != 1) throw InputError("PD crossing visited inconsistently");
    signs[c] = over_in_pos[c] == 3 ? 1 : -1;
  }
  return KnotoidMap::link(std::move(strands), std::move(signs), pd.free_loops);
}

}  // namespace railstick
