#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "railstick/knotoid_map.hpp"

namespace railstick {

enum class Involution { mir, sym, rot, rev };

inline KnotoidMap involution(const KnotoidMap& m, Involution which) {
  std::vector<Strand> strands = m.strands();
  std::vector<int> signs = m.signs();
  Dart outer = m.outer();
  switch (which) {
    case Involution::mir:
      for (auto& s : strands)
        for (auto& p : s.passages) p.over = !p.over;
      for (auto& v : signs) v = -v;
      break;
    case Involution::sym:
      for (auto& v : signs) v = -v;
      outer.side = flip(outer.side);
      break;
    case Involution::rot:
      for (auto& s : strands)
        for (auto& p : s.passages) p.over = !p.over;
      outer.side = flip(outer.side);
      break;
    case Involution::rev: {
      for (auto& s : strands) std::reverse(s.passages.begin(), s.passages.end());
      const int L = m.passage_count(outer.strand);
      if (m.strands()[outer.strand].closed)
        outer.edge = (L - outer.edge) % L;
      else
        outer.edge = L - outer.edge;
      outer.side = flip(outer.side);
      break;
    }
  }
  return KnotoidMap(std::move(strands), std::move(signs), outer, m.free_loops());
}

inline bool is_normal(const KnotoidMap& m) {
  if (!m.is_knotoid()) return false;
  return m.tail_face() == m.outer_face();
}

/// Concatenate k1 at its head with k2 at its tail; k2 must be normal.
inline KnotoidMap product(const KnotoidMap& k1, const KnotoidMap& k2) {
  if (!k1.is_knotoid() || !k2.is_knotoid()) throw InputError("product needs two knotoids");
  if (!is_normal(k2)) throw InputError("right factor of a product must be normal");
  const int off = k1.crossing_count();
  std::vector<Strand> strands = k1.strands();
  auto shifted = [off](Strand s) {
    for (auto& p : s.passages) p.crossing += off;
    return s;
  };
  for (const auto& p : k2.strands()[0].passages) strands[0].passages.push_back({p.crossing + off, p.over});
  for (std::size_t s = 1; s < k2.strands().size(); ++s) strands.push_back(shifted(k2.strands()[s]));
  std::vector<int> signs = k1.signs();
  signs.insert(signs.end(), k2.signs().begin(), k2.signs().end());
  return KnotoidMap(std::move(strands), std::move(signs), k1.outer(), k1.free_loops() + k2.free_loops());
}

// ---------------------------------------------------------------------------
// Text form: strands separated by ';', closed strands prefixed by '@', an empty
// open strand written '-'. Tokens are O|U, a positive label and a sign, e.g.
// "O1+ U2- U1+ O2- / outer=0:3L". Optional trailing "/ loops=N".

inline std::string to_text(const KnotoidMap& m) {
  std::string out;
  for (std::size_t s = 0; s < m.strands().size(); ++s) {
    if (s) out += " ; ";
    const Strand& st = m.strands()[s];
    if (st.closed) out += "@ ";
    if (st.passages.empty()) out += "-";
    for (std::size_t i = 0; i < st.passages.size(); ++i) {
      const Passage& p = st.passages[i];
      if (i) out += ' ';
      out += p.over ? 'O' : 'U';
      out += std::to_string(p.crossing + 1);
      out += m.signs()[p.crossing] > 0 ? '+' : '-';
    }
  }
  if (m.is_knotoid()) {
    const Dart d = m.outer();
    out += " / outer=" + std::to_string(d.strand) + ":" + std::to_string(d.edge) +
           (d.side == Side::left ? "L" : "R");
  }
  if (m.free_loops()) out += " / loops=" + std::to_string(m.free_loops());
  return out;
}

inline KnotoidMap parse_text(const std::string& text) {
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char c : text) {
      if (c == '/') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
  }
  Dart outer{};
  bool have_outer = false;
  int loops = 0;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::istringstream is(parts[i]);
    std::string kv;
    is >> kv;
    if (kv.rfind("outer=", 0) == 0) {
      const std::string v = kv.substr(6);
      const auto colon = v.find(':');
      if (colon == std::string::npos || v.size() < colon + 3) throw InputError("bad outer field: " + kv);
      const char side = v.back();
      if (side != 'L' && side != 'R') throw InputError("bad outer side: " + kv);
      outer.strand = std::stoi(v.substr(0, colon));
      outer.edge = std::stoi(v.substr(colon + 1, v.size() - colon - 2));
      outer.side = side == 'L' ? Side::left : Side::right;
      have_outer = true;
    } else if (kv.rfind("loops=", 0) == 0) {
      loops = std::stoi(kv.substr(6));
    } else if (!kv.empty()) {
      throw InputError("unknown field: " + kv);
    }
  }

  std::vector<Strand> strands;
  std::map<int, int> label;
  std::map<int, int> sign_of;
  std::stringstream body(parts[0]);
  std::string chunk;
  const bool blank = parts[0].find_first_not_of(" \t\n") == std::string::npos;
  while (!blank && std::getline(body, chunk, ';')) {
    std::istringstream is(chunk);
    std::string tok;
    Strand st;
    bool any = false;
    while (is >> tok) {
      any = true;
      if (tok == "@") {
        st.closed = true;
        continue;
      }
      if (tok == "-") continue;
      if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U') || (tok.back() != '+' && tok.back() != '-'))
        throw InputError("bad passage token: " + tok);
      char* end = nullptr;
      const long raw = std::strtol(tok.c_str() + 1, &end, 10);
      if (end != tok.c_str() + tok.size() - 1) throw InputError("bad passage token: " + tok);
      const int sg = tok.back() == '+' ? 1 : -1;
      auto [it, fresh] = label.emplace(static_cast<int>(raw), static_cast<int>(label.size()));
      if (!fresh && sign_of[it->second] != sg) throw InputError("inconsistent sign for crossing " + tok);
      sign_of[it->second] = sg;
      st.passages.push_back({it->second, tok[0] == 'O'});
    }
    if (!any) throw InputError("empty strand in code");
    if (st.closed && st.passages.empty()) {
      ++loops;
      continue;
    }
    strands.push_back(std::move(st));
  }
  std::vector<int> signs(label.size());
  for (auto [c, s] : sign_of) signs[c] = s;
  if (!strands.empty() && !strands[0].closed) {
    if (!have_outer) throw InputError("knotoid code needs an outer=strand:edgeSide field");
    return KnotoidMap(std::move(strands), std::move(signs), outer, loops);
  }
  return KnotoidMap::link(std::move(strands), std::move(signs), loops);
}

// ---------------------------------------------------------------------------
// Canonical codes.

namespace detail {

/// Code for a fixed strand order and closed-strand starting passages.
inline std::string code_for(const KnotoidMap& m, const std::vector<int>& order, const std::vector<int>& start) {
  std::vector<int> relabel(m.crossing_count(), -1);
  int next = 0;
  std::vector<Strand> strands;
  std::vector<int> pos_of_strand(m.strands().size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int s = order[i];
    pos_of_strand[s] = static_cast<int>(i);
    const Strand& st = m.strands()[s];
    const int L = static_cast<int>(st.passages.size());
    Strand out;
    out.closed = st.closed;
    for (int j = 0; j < L; ++j) {
      Passage p = st.passages[(start[i] + j) % std::max(L, 1)];
      if (relabel[p.crossing] < 0) relabel[p.crossing] = next++;
      p.crossing = relabel[p.crossing];
      out.passages.push_back(p);
    }
    strands.push_back(std::move(out));
  }
  std::vector<int> signs(m.crossing_count());
  for (int c = 0; c < m.crossing_count(); ++c) signs[relabel[c]] = m.signs()[c];
  Dart outer{};
  if (m.is_knotoid() && m.total_edges() > 0) {
    bool first = true;
    for (int id : m.face(m.outer_face())) {
      Dart d = m.dart_at(id);
      const int i = pos_of_strand[d.strand];
      if (m.strands()[d.strand].closed) {
        const int L = m.passage_count(d.strand);
        d.edge = ((d.edge - start[i]) % L + L) % L;
      }
      d.strand = i;
      if (first || d < outer) outer = d;
      first = false;
    }
  }
  return to_text(KnotoidMap(std::move(strands), std::move(signs), outer, m.free_loops()));
}

}  // namespace detail

/// Minimal code over strand re-rootings (closed strand order and start points).
inline std::string rooted_code(const KnotoidMap& m) {
  const int S = static_cast<int>(m.strands().size());
  const int first_closed = m.is_knotoid() ? 1 : 0;
  std::vector<int> closed;
  for (int s = first_closed; s < S; ++s) closed.push_back(s);
  std::string best;
  bool have = false;
  std::vector<int> perm = closed;
  do {
    std::vector<int> order;
    if (m.is_knotoid()) order.push_back(0);
    order.insert(order.end(), perm.begin(), perm.end());
    std::vector<int> start(order.size(), 0);
    // odometer over starting passages of the closed strands
    while (true) {
      std::string code = detail::code_for(m, order, start);
      if (!have || code < best) {
        best = std::move(code);
        have = true;
      }
      int i = static_cast<int>(order.size()) - 1;
      for (; i >= first_closed; --i) {
        if (++start[i] < m.passage_count(order[i])) break;
        start[i] = 0;
      }
      if (i < first_closed) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

struct CodeQuotient {
  bool orientation = false;  // include rev
  bool involutions = false;  // include mir, sym, rot
};

inline std::string canonical_code(const KnotoidMap& m, CodeQuotient q = {}) {
  std::vector<KnotoidMap> orbit{m};
  if (q.involutions) {
    orbit.push_back(involution(m, Involution::mir));
    orbit.push_back(involution(m, Involution::sym));
    orbit.push_back(involution(m, Involution::rot));
  }
  if (q.orientation) {
    const std::size_t n = orbit.size();
    for (std::size_t i = 0; i < n; ++i) orbit.push_back(involution(orbit[i], Involution::rev));
  }
  std::string best = rooted_code(orbit[0]);
  for (std::size_t i = 1; i < orbit.size(); ++i) best = std::min(best, rooted_code(orbit[i]));
  return best;
}

inline std::string canonical_code_orbit(const KnotoidMap& m) {
  return canonical_code(m, {true, true});
}

inline void PrintTo(const KnotoidMap& m, std::ostream* os) { *os << to_text(m); }

}  // namespace railstick
