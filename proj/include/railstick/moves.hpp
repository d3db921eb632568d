#pragma once

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "railstick/codes.hpp"
#include "railstick/knotoid_map.hpp"

namespace railstick {

enum class MoveKind { r1_minus, r1_plus, r2_minus, r2_plus, r3 };

inline const char* move_name(MoveKind k) {
  switch (k) {
    case MoveKind::r1_minus: return "R1-";
    case MoveKind::r1_plus: return "R1+";
    case MoveKind::r2_minus: return "R2-";
    case MoveKind::r2_plus: return "R2+";
    case MoveKind::r3: return "R3";
  }
  return "?";
}

/// A move site. Which fields matter depends on the kind:
///   R1-: crossings[0]. R2-: crossings[0..1], first = a dart of the bigon.
///   R3: crossings[0..2], first = a dart of the triangle.
///   R1+: first = the edge to kink, over = first passage is over, sign.
///   R2+: first/second = darts of one face, over = first edge goes over,
///        marked_after = which half of a split marked face stays marked.
struct MoveDescriptor {
  MoveKind kind = MoveKind::r1_minus;
  std::array<int, 3> crossings{-1, -1, -1};
  Dart first{}, second{};
  bool over = false;
  int sign = 1;
  bool marked_after = false;
  std::string fingerprint;
};

namespace detail {

/// Rebuilds a map after deleting and inserting passages.
struct StrandEdit {
  struct Item {
    int old = -1;       // index of the surviving old passage, or -1 for a fresh one
    Passage fresh{};    // fresh passage; crossing ids >= old crossing count
  };
  std::vector<std::vector<Item>> strands;
};

struct EditResult {
  std::vector<Strand> strands;
  std::vector<int> signs;
  std::vector<int> strand_index;                  // old strand -> new strand, -1 when it became a free loop
  std::vector<std::vector<int>> new_pos;          // old strand, old passage -> new index or -1
  int free_loops = 0;
};

inline EditResult apply_edit(const KnotoidMap& m, const StrandEdit& ed, const std::vector<bool>& removed,
                             const std::vector<int>& fresh_signs) {
  const int n = m.crossing_count();
  std::vector<int> relabel(n + fresh_signs.size(), -1);
  EditResult r;
  for (int c = 0; c < n; ++c)
    if (!removed[c]) {
      relabel[c] = static_cast<int>(r.signs.size());
      r.signs.push_back(m.signs()[c]);
    }
  for (std::size_t i = 0; i < fresh_signs.size(); ++i) {
    relabel[n + i] = static_cast<int>(r.signs.size());
    r.signs.push_back(fresh_signs[i]);
  }
  r.free_loops = m.free_loops();
  for (std::size_t s = 0; s < ed.strands.size(); ++s) {
    const Strand& old = m.strands()[s];
    Strand st;
    st.closed = old.closed;
    std::vector<int> pos(old.passages.size(), -1);
    for (const auto& it : ed.strands[s]) {
      Passage p = it.old >= 0 ? old.passages[it.old] : it.fresh;
      if (it.old >= 0) pos[it.old] = static_cast<int>(st.passages.size());
      p.crossing = relabel[p.crossing];
      st.passages.push_back(p);
    }
    r.new_pos.push_back(std::move(pos));
    if (st.closed && st.passages.empty()) {
      r.strand_index.push_back(-1);
      ++r.free_loops;
      continue;
    }
    r.strand_index.push_back(static_cast<int>(r.strands.size()));
    r.strands.push_back(std::move(st));
  }
  return r;
}

/// New edge containing the start of old edge (s, k): the edge leaving the
/// nearest surviving passage at or before the old start.
inline std::optional<Dart> first_piece(const KnotoidMap& m, const EditResult& r, const Dart& d) {
  const int s = d.strand;
  const int ns = r.strand_index[s];
  if (ns < 0) return std::nullopt;
  const int L = m.passage_count(s);
  const int L2 = static_cast<int>(r.strands[ns].passages.size());
  const bool closed = m.strands()[s].closed;
  int p = m.edge_start(s, d.edge);  // -1 for the tail
  for (int step = 0; step < L + 1; ++step) {
    if (p < 0) return Dart{ns, 0, d.side};
    if (r.new_pos[s][p] >= 0) {
      const int e = closed ? (r.new_pos[s][p] + 1) % L2 : r.new_pos[s][p] + 1;
      return Dart{ns, e, d.side};
    }
    p = closed ? (p - 1 + L) % L : p - 1;
  }
  return std::nullopt;
}

/// New edge containing the end of old edge (s, k).
inline std::optional<Dart> last_piece(const KnotoidMap& m, const EditResult& r, const Dart& d) {
  const int s = d.strand;
  const int ns = r.strand_index[s];
  if (ns < 0) return std::nullopt;
  const int L = m.passage_count(s);
  const bool closed = m.strands()[s].closed;
  int p = d.edge;
  if (!closed && p >= L) return Dart{ns, static_cast<int>(r.strands[ns].passages.size()), d.side};
  if (r.new_pos[s][p] < 0) return std::nullopt;
  return Dart{ns, r.new_pos[s][p], d.side};
}

/// Transfers the marked dart, avoiding darts on excluded old edges.
inline Dart transfer_outer(const KnotoidMap& m, const EditResult& r, const std::vector<int>& excluded_edges) {
  if (!m.is_knotoid()) return Dart{};
  auto usable = [&](int id) {
    const int e = id / 2;
    return std::find(excluded_edges.begin(), excluded_edges.end(), e) == excluded_edges.end();
  };
  const int start = m.dart_id(m.outer());
  int id = start;
  do {
    if (usable(id)) {
      if (auto d = first_piece(m, r, m.dart_at(id))) return *d;
    }
    id = m.next_dart(id);
  } while (id != start);
  throw ConstructionError("marked face lost during move");
}

inline KnotoidMap finish(const KnotoidMap& m, EditResult r, Dart outer) {
  if (!m.is_knotoid()) return KnotoidMap::link(std::move(r.strands), std::move(r.signs), r.free_loops);
  return KnotoidMap(std::move(r.strands), std::move(r.signs), outer, r.free_loops);
}

inline StrandEdit identity_edit(const KnotoidMap& m) {
  StrandEdit ed;
  for (const auto& st : m.strands()) {
    std::vector<StrandEdit::Item> items;
    for (int i = 0; i < static_cast<int>(st.passages.size()); ++i) items.push_back({i, {}});
    ed.strands.push_back(std::move(items));
  }
  return ed;
}

inline bool allowed_face(const KnotoidMap& m, int f) { return m.spherical() || f != m.outer_face(); }

/// Edges whose both endpoints are passages; returns the two crossings.
inline std::optional<std::pair<int, int>> edge_crossings(const KnotoidMap& m, int s, int k) {
  if (!m.starts_at_passage(s, k) || !m.ends_at_passage(s, k)) return std::nullopt;
  const auto& ps = m.strands()[s].passages;
  return std::make_pair(ps[m.edge_start(s, k)].crossing, ps[m.edge_end(s, k)].crossing);
}

inline bool edge_over_both(const KnotoidMap& m, int s, int k) {
  const auto& ps = m.strands()[s].passages;
  return ps[m.edge_start(s, k)].over && ps[m.edge_end(s, k)].over;
}
inline bool edge_under_both(const KnotoidMap& m, int s, int k) {
  const auto& ps = m.strands()[s].passages;
  return !ps[m.edge_start(s, k)].over && !ps[m.edge_end(s, k)].over;
}

/// Loop edge of an R1- site at crossing c, if any.
inline std::optional<Dart> r1_site(const KnotoidMap& m, int c) {
  const auto [s1, p1] = m.under_passage(c);
  const auto [s2, p2] = m.over_passage(c);
  if (s1 != s2) return std::nullopt;
  std::vector<int> candidates;  // edge ending at the later passage of a consecutive pair
  const int L = m.passage_count(s1);
  const bool closed = m.strands()[s1].closed;
  auto consecutive = [&](int a, int b) {  // b directly follows a
    return closed ? (a + 1) % L == b : a + 1 == b;
  };
  if (consecutive(p1, p2)) candidates.push_back(p2);
  if (consecutive(p2, p1)) candidates.push_back(p1);
  for (int k : candidates) {
    for (Side side : {Side::left, Side::right}) {
      const Dart d{s1, k, side};
      const int f = m.face_of(d);
      if (m.face(f).size() == 1 && allowed_face(m, f)) return d;
    }
  }
  return std::nullopt;
}

/// Validates a bigon face: two distinct edges joining the same two distinct
/// crossings, one over at both ends and the other under at both ends.
inline bool r2_face(const KnotoidMap& m, int f, std::array<int, 3>& cr) {
  const auto& fc = m.face(f);
  if (fc.size() != 2 || !allowed_face(m, f)) return false;
  const Dart a = m.dart_at(fc[0]), b = m.dart_at(fc[1]);
  if (fc[0] / 2 == fc[1] / 2) return false;
  auto ea = edge_crossings(m, a.strand, a.edge);
  auto eb = edge_crossings(m, b.strand, b.edge);
  if (!ea || !eb || ea->first == ea->second) return false;
  const bool same = (ea->first == eb->first && ea->second == eb->second) ||
                    (ea->first == eb->second && ea->second == eb->first);
  if (!same) return false;
  const bool ok = (edge_over_both(m, a.strand, a.edge) && edge_under_both(m, b.strand, b.edge)) ||
                  (edge_under_both(m, a.strand, a.edge) && edge_over_both(m, b.strand, b.edge));
  if (!ok) return false;
  cr = {std::min(ea->first, ea->second), std::max(ea->first, ea->second), -1};
  return true;
}

/// Validates a non-alternating triangle face with three distinct crossings.
inline bool r3_face(const KnotoidMap& m, int f, std::array<int, 3>& cr) {
  const auto& fc = m.face(f);
  if (fc.size() != 3 || !allowed_face(m, f)) return false;
  std::set<int> edges, crossings;
  bool has_over = false;
  for (int id : fc) {
    const Dart d = m.dart_at(id);
    edges.insert(id / 2);
    auto ec = edge_crossings(m, d.strand, d.edge);
    if (!ec || ec->first == ec->second) return false;
    crossings.insert(ec->first);
    crossings.insert(ec->second);
    if (edge_over_both(m, d.strand, d.edge)) has_over = true;
  }
  if (edges.size() != 3 || crossings.size() != 3 || !has_over) return false;
  // each crossing of the triangle must be met by two different strands pieces
  int i = 0;
  for (int c : crossings) cr[i++] = c;
  return true;
}

inline bool connected_for_moves(const KnotoidMap& m) { return m.graph_components() <= 1; }

}  // namespace detail

/// All R1-/R2-/R3 sites plus up to `plus_limit` R1+/R2+ sites.
inline std::vector<MoveDescriptor> available_moves(const KnotoidMap& m, int plus_limit = 0) {
  std::vector<MoveDescriptor> out;
  const std::string fp = m.raw_key();
  if (!detail::connected_for_moves(m)) return out;
  for (int c = 0; c < m.crossing_count(); ++c) {
    if (auto d = detail::r1_site(m, c)) {
      MoveDescriptor md;
      md.kind = MoveKind::r1_minus;
      md.crossings = {c, -1, -1};
      md.first = *d;
      md.fingerprint = fp;
      out.push_back(md);
    }
  }
  for (int f = 0; f < m.face_count(); ++f) {
    std::array<int, 3> cr{};
    if (detail::r2_face(m, f, cr)) {
      MoveDescriptor md;
      md.kind = MoveKind::r2_minus;
      md.crossings = cr;
      md.first = m.dart_at(m.face(f)[0]);
      md.fingerprint = fp;
      out.push_back(md);
    }
  }
  for (int f = 0; f < m.face_count(); ++f) {
    std::array<int, 3> cr{};
    if (detail::r3_face(m, f, cr)) {
      MoveDescriptor md;
      md.kind = MoveKind::r3;
      md.crossings = cr;
      md.first = m.dart_at(m.face(f)[0]);
      md.fingerprint = fp;
      out.push_back(md);
    }
  }
  int budget = plus_limit;
  for (int e = 0; e < m.total_edges() && budget > 0; ++e) {
    for (int variant = 0; variant < 4 && budget > 0; ++variant, --budget) {
      MoveDescriptor md;
      md.kind = MoveKind::r1_plus;
      md.first = m.dart_at(2 * e);
      md.over = variant & 1;
      md.sign = (variant & 2) ? -1 : 1;
      md.fingerprint = fp;
      out.push_back(md);
    }
  }
  for (int f = 0; f < m.face_count() && budget > 0; ++f) {
    const auto& fc = m.face(f);
    const bool marked = m.is_knotoid() && f == m.outer_face();
    for (std::size_t i = 0; i < fc.size() && budget > 0; ++i) {
      for (std::size_t j = 0; j < fc.size() && budget > 0; ++j) {
        if (i == j || fc[i] / 2 == fc[j] / 2) continue;
        for (int variant = 0; variant < (marked ? 4 : 2) && budget > 0; ++variant, --budget) {
          MoveDescriptor md;
          md.kind = MoveKind::r2_plus;
          md.first = m.dart_at(fc[i]);
          md.second = m.dart_at(fc[j]);
          md.over = variant & 1;
          md.marked_after = variant & 2;
          md.fingerprint = fp;
          out.push_back(md);
        }
      }
    }
  }
  return out;
}

inline KnotoidMap apply_move(const KnotoidMap& m, const MoveDescriptor& d) {
  if (d.fingerprint != m.raw_key()) throw InputError("stale move descriptor");
  if (!detail::connected_for_moves(m)) throw InputError("moves need a connected diagram");
  const int n = m.crossing_count();
  switch (d.kind) {
    case MoveKind::r1_minus: {
      const int c = d.crossings[0];
      if (c < 0 || c >= n) throw InputError("bad R1 site");
      auto loop = detail::r1_site(m, c);
      if (!loop) throw InputError("bad R1 site");
      std::vector<bool> removed(n, false);
      removed[c] = true;
      detail::StrandEdit ed;
      for (const auto& st : m.strands()) {
        std::vector<detail::StrandEdit::Item> items;
        for (int i = 0; i < static_cast<int>(st.passages.size()); ++i)
          if (!removed[st.passages[i].crossing]) items.push_back({i, {}});
        ed.strands.push_back(std::move(items));
      }
      auto r = detail::apply_edit(m, ed, removed, {});
      const Dart outer = detail::transfer_outer(m, r, {m.edge_id(loop->strand, loop->edge)});
      return detail::finish(m, std::move(r), outer);
    }
    case MoveKind::r2_minus: {
      if (d.first.strand < 0 || d.first.strand >= static_cast<int>(m.strands().size()) || d.first.edge < 0 ||
          d.first.edge >= m.edge_count(d.first.strand))
        throw InputError("bad R2 site");
      const int f = m.face_of(d.first);
      std::array<int, 3> cr{};
      if (!detail::r2_face(m, f, cr) || cr[0] != d.crossings[0] || cr[1] != d.crossings[1])
        throw InputError("bad R2 site");
      std::vector<bool> removed(n, false);
      removed[cr[0]] = removed[cr[1]] = true;
      detail::StrandEdit ed;
      for (const auto& st : m.strands()) {
        std::vector<detail::StrandEdit::Item> items;
        for (int i = 0; i < static_cast<int>(st.passages.size()); ++i)
          if (!removed[st.passages[i].crossing]) items.push_back({i, {}});
        ed.strands.push_back(std::move(items));
      }
      auto r = detail::apply_edit(m, ed, removed, {});
      std::vector<int> excluded;
      for (int id : m.face(f)) excluded.push_back(id / 2);
      const Dart outer = detail::transfer_outer(m, r, excluded);
      return detail::finish(m, std::move(r), outer);
    }
    case MoveKind::r3: {
      if (d.first.strand < 0 || d.first.strand >= static_cast<int>(m.strands().size()) || d.first.edge < 0 ||
          d.first.edge >= m.edge_count(d.first.strand))
        throw InputError("bad R3 site");
      const int f = m.face_of(d.first);
      std::array<int, 3> cr{};
      if (!detail::r3_face(m, f, cr) || cr != d.crossings) throw InputError("bad R3 site");
      std::vector<Strand> strands = m.strands();
      std::vector<int> excluded;
      for (int id : m.face(f)) {
        const Dart e = m.dart_at(id);
        excluded.push_back(id / 2);
        const int a = m.edge_start(e.strand, e.edge), b = m.edge_end(e.strand, e.edge);
        std::swap(strands[e.strand].passages[a], strands[e.strand].passages[b]);
      }
      // Only passages move; every edge off the triangle keeps its index.
      Dart outer = m.outer();
      if (m.is_knotoid()) {
        const int start = m.dart_id(m.outer());
        int id = start;
        while (std::find(excluded.begin(), excluded.end(), id / 2) != excluded.end()) {
          id = m.next_dart(id);
          if (id == start) throw ConstructionError("marked face lost during move");
        }
        outer = m.dart_at(id);
        return KnotoidMap(std::move(strands), m.signs(), outer, m.free_loops());
      }
      return KnotoidMap::link(std::move(strands), m.signs(), m.free_loops());
    }
    case MoveKind::r1_plus: {
      const Dart e = d.first;
      if (e.strand < 0 || e.strand >= static_cast<int>(m.strands().size()) || e.edge < 0 ||
          e.edge >= m.edge_count(e.strand) || (d.sign != 1 && d.sign != -1))
        throw InputError("bad R1+ site");
      auto ed = detail::identity_edit(m);
      auto& items = ed.strands[e.strand];
      // edge k ends at passage k: insert just before it (at the end for the head edge)
      const int at = e.edge;
      items.insert(items.begin() + at, {{-1, {n, d.over}}, {-1, {n, !d.over}}});
      auto r = detail::apply_edit(m, ed, std::vector<bool>(n, false), {d.sign});
      Dart outer{};
      if (m.is_knotoid()) outer = *detail::first_piece(m, r, m.outer());
      return detail::finish(m, std::move(r), outer);
    }
    case MoveKind::r2_plus: {
      for (const Dart& x : {d.first, d.second})
        if (x.strand < 0 || x.strand >= static_cast<int>(m.strands().size()) || x.edge < 0 ||
            x.edge >= m.edge_count(x.strand))
          throw InputError("bad R2+ site");
      const int i1 = m.dart_id(d.first), i2 = m.dart_id(d.second);
      if (m.face_of(i1) != m.face_of(i2) || i1 / 2 == i2 / 2) throw InputError("bad R2+ site");
      const int f1 = d.first.side == Side::left ? 1 : -1;
      const int f2 = d.second.side == Side::left ? 1 : -1;
      const int x = n, y = n + 1;
      const int sx = d.over ? f1 * f2 : -f1 * f2;
      auto ed = detail::identity_edit(m);
      auto insert = [&](const Dart& at, std::vector<Passage> ps) {
        auto& items = ed.strands[at.strand];
        // just before old passage at.edge; the head edge appends
        std::size_t pos = items.size();
        for (std::size_t i = 0; i < items.size(); ++i)
          if (items[i].old == at.edge) {
            pos = i;
            break;
          }
        std::vector<detail::StrandEdit::Item> fresh;
        for (auto p : ps) fresh.push_back({-1, p});
        items.insert(items.begin() + static_cast<long>(pos), fresh.begin(), fresh.end());
      };
      std::vector<Passage> along1 = f1 > 0 ? std::vector<Passage>{{x, d.over}, {y, d.over}}
                                           : std::vector<Passage>{{y, d.over}, {x, d.over}};
      std::vector<Passage> along2 = f2 > 0 ? std::vector<Passage>{{y, !d.over}, {x, !d.over}}
                                           : std::vector<Passage>{{x, !d.over}, {y, !d.over}};
      insert(d.first, along1);
      insert(d.second, along2);
      auto r = detail::apply_edit(m, ed, std::vector<bool>(n, false), {sx, -sx});
      Dart outer{};
      if (m.is_knotoid()) {
        if (m.face_of(i1) == m.outer_face()) {
          // pieces of the first edge in strand order: start, middle, end
          const Dart p0 = *detail::first_piece(m, r, d.first);
          const Dart p2 = *detail::last_piece(m, r, d.first);
          const bool forward = f1 > 0;
          const Dart third = forward ? p2 : p0;
          const Dart first = forward ? p0 : p2;
          outer = d.marked_after ? third : first;
          outer.side = d.first.side;
        } else {
          outer = *detail::first_piece(m, r, m.outer());
        }
      }
      return detail::finish(m, std::move(r), outer);
    }
  }
  throw InputError("unknown move kind");
}

// ---------------------------------------------------------------------------
// Simplification.

/// Applies R1-/R2- moves until none remain.
inline KnotoidMap greedy_reduce(KnotoidMap m) {
  while (true) {
    bool moved = false;
    for (const auto& d : available_moves(m, 0)) {
      if (d.kind == MoveKind::r1_minus || d.kind == MoveKind::r2_minus) {
        m = apply_move(m, d);
        moved = true;
        break;
      }
    }
    if (!moved) return m;
  }
}

struct SimplifyOptions {
  int node_budget = 4000;
  int ceiling = 2;  // extra crossings allowed above the current best
};

/// Greedy reduction, then breadth-first search over move sequences with at most
/// `ceiling` extra crossings; restarts from every strictly smaller diagram found.
inline KnotoidMap simplify(const KnotoidMap& input, SimplifyOptions opt = {}) {
  KnotoidMap best = greedy_reduce(input);
  int nodes = 0;
  while (best.crossing_count() > 0 && nodes < opt.node_budget) {
    const int limit = best.crossing_count() + opt.ceiling;
    std::unordered_set<std::string> seen{rooted_code(best)};
    std::deque<KnotoidMap> queue{best};
    std::optional<KnotoidMap> found;
    while (!queue.empty() && !found && nodes < opt.node_budget) {
      KnotoidMap cur = std::move(queue.front());
      queue.pop_front();
      ++nodes;
      const int plus = cur.crossing_count() < limit ? 1 << 20 : 0;
      for (const auto& d : available_moves(cur, plus)) {
        if (d.kind == MoveKind::r2_plus && cur.crossing_count() + 2 > limit) continue;
        if (d.kind == MoveKind::r1_plus && cur.crossing_count() + 1 > limit) continue;
        KnotoidMap next = apply_move(cur, d);
        if (next.crossing_count() < best.crossing_count()) {
          found = greedy_reduce(next);
          break;
        }
        if (seen.insert(rooted_code(next)).second) queue.push_back(std::move(next));
      }
    }
    if (!found) break;
    best = *found;
  }
  return best;
}

/// Every diagram with the minimal crossing count that the bounded search can
/// reach from `input`, in rooted-code order. All of them represent the class.
inline std::vector<KnotoidMap> minimal_forms(const KnotoidMap& input, SimplifyOptions opt = {}) {
  const KnotoidMap best = simplify(input, opt);
  const int floor = best.crossing_count();
  const int limit = floor + opt.ceiling;
  std::map<std::string, KnotoidMap> minimal{{rooted_code(best), best}};
  std::unordered_set<std::string> seen{rooted_code(best)};
  std::deque<KnotoidMap> queue{best};
  int nodes = 0;
  while (!queue.empty() && nodes < opt.node_budget) {
    KnotoidMap cur = std::move(queue.front());
    queue.pop_front();
    ++nodes;
    const int plus = cur.crossing_count() < limit ? 1 << 20 : 0;
    for (const auto& d : available_moves(cur, plus)) {
      if (d.kind == MoveKind::r2_plus && cur.crossing_count() + 2 > limit) continue;
      if (d.kind == MoveKind::r1_plus && cur.crossing_count() + 1 > limit) continue;
      KnotoidMap next = apply_move(cur, d);
      std::string key = rooted_code(next);
      if (!seen.insert(key).second) continue;
      if (next.crossing_count() == floor) minimal.emplace(key, next);
      queue.push_back(std::move(next));
    }
  }
  std::vector<KnotoidMap> out;
  for (auto& [key, m] : minimal) out.push_back(std::move(m));
  return out;
}

}  // namespace railstick
