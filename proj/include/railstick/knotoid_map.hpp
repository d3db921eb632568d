#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "railstick/error.hpp"

namespace railstick {

enum class Side : std::uint8_t { left, right };

inline Side flip(Side s) { return s == Side::left ? Side::right : Side::left; }

struct Passage {
  int crossing = 0;
  bool over = false;
  friend bool operator==(const Passage&, const Passage&) = default;
};

struct Strand {
  std::vector<Passage> passages;
  bool closed = false;
  friend bool operator==(const Strand&, const Strand&) = default;
};

/// A side of a strand edge. Edge k of a strand ends at passage k.
struct Dart {
  int strand = 0;
  int edge = 0;
  Side side = Side::left;
  friend auto operator<=>(const Dart&, const Dart&) = default;
};

/// Combinatorial knotoid (or multi-knotoid, or link) diagram.
///
/// Strand 0 is the open tail-to-head strand when the map is a knotoid; every
/// other strand is closed. Crossing c has sign signs()[c]; its ccw rotation
/// starting from the incoming under half-edge is [ui, oo, uo, oi] when the
/// sign is positive and [ui, oi, uo, oo] otherwise. Faces are boundary cycles
/// of darts; dart (e, left) runs along the strand with the face on its left.
class KnotoidMap {
 public:
  enum Slot : int { ui = 0, uo = 1, oi = 2, oo = 3 };

  KnotoidMap() : KnotoidMap({Strand{}}, {}, Dart{}) {}

  KnotoidMap(std::vector<Strand> strands, std::vector<int> signs, Dart outer, int free_loops = 0)
      : strands_(std::move(strands)), signs_(std::move(signs)), outer_(outer), free_loops_(free_loops) {
    build();
  }

  /// Closed diagram on the sphere (knot or link); no face is distinguished.
  static KnotoidMap link(std::vector<Strand> strands, std::vector<int> signs, int free_loops = 0) {
    for (const auto& s : strands)
      if (!s.closed) throw InputError("link diagram strands must be closed");
    return KnotoidMap(std::move(strands), std::move(signs), Dart{}, free_loops);
  }

  const std::vector<Strand>& strands() const { return strands_; }
  const std::vector<int>& signs() const { return signs_; }
  Dart outer() const { return outer_; }
  int free_loops() const { return free_loops_; }
  int crossing_count() const { return static_cast<int>(signs_.size()); }
  bool is_knotoid() const { return knotoid_; }
  /// Link diagrams live on the sphere; the marked face is meaningless there.
  bool spherical() const { return !knotoid_; }
  int component_count() const { return static_cast<int>(strands_.size()) + free_loops_; }

  int passage_count(int s) const { return static_cast<int>(strands_[s].passages.size()); }
  int edge_count(int s) const {
    const int L = passage_count(s);
    return strands_[s].closed ? L : L + 1;
  }
  int total_edges() const { return static_cast<int>(edge_owner_.size()); }
  int edge_id(int s, int k) const { return edge_offset_[s] + k; }
  std::pair<int, int> edge_owner(int e) const { return edge_owner_[e]; }

  int dart_id(const Dart& d) const { return 2 * edge_id(d.strand, d.edge) + (d.side == Side::right); }
  Dart dart_at(int id) const {
    auto [s, k] = edge_owner_[id / 2];
    return {s, k, (id & 1) ? Side::right : Side::left};
  }
  int dart_total() const { return 2 * total_edges(); }

  /// Next dart along the face boundary.
  int next_dart(int id) const { return next_[id]; }
  int face_of(int dart) const { return face_of_[dart]; }
  int face_of(const Dart& d) const { return face_of_[dart_id(d)]; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  const std::vector<int>& face(int f) const { return faces_[f]; }
  int outer_face() const { return (knotoid_ && total_edges() > 0) ? face_of(outer_) : -1; }

  /// Darts bounding the tail and head (both sides of the end edges share a face).
  int tail_face() const { return knotoid_ ? face_of(Dart{0, 0, Side::left}) : -1; }
  int head_face() const {
    return knotoid_ ? face_of(Dart{0, edge_count(0) - 1, Side::left}) : -1;
  }

  /// Passage index in strand s where edge k starts (-1 for the tail).
  int edge_start(int s, int k) const {
    const int L = passage_count(s);
    if (strands_[s].closed) return (k - 1 + L) % L;
    return k - 1;
  }
  /// Passage index where edge k ends (L, i.e. one past the end, for the head).
  int edge_end(int s, int k) const { return k; }
  bool ends_at_passage(int s, int k) const { return strands_[s].closed || k < passage_count(s); }
  bool starts_at_passage(int s, int k) const { return strands_[s].closed || k > 0; }
  int in_edge(int s, int p) const { return p; }
  int out_edge(int s, int p) const {
    return strands_[s].closed ? (p + 1) % passage_count(s) : p + 1;
  }

  /// Location (strand, passage index) of the under/over passage of crossing c.
  std::pair<int, int> under_passage(int c) const { return under_[c]; }
  std::pair<int, int> over_passage(int c) const { return over_[c]; }
  /// Rotation position of a slot at crossing c.
  int slot_position(int c, Slot slot) const {
    static constexpr std::array<int, 4> pos_pos{0, 2, 3, 1};  // ui, uo, oi, oo when sign > 0
    static constexpr std::array<int, 4> pos_neg{0, 2, 1, 3};
    return signs_[c] > 0 ? pos_pos[slot] : pos_neg[slot];
  }
  Slot slot_at(int c, int pos) const {
    static constexpr std::array<Slot, 4> at_pos{ui, oo, uo, oi};
    static constexpr std::array<Slot, 4> at_neg{ui, oi, uo, oo};
    return signs_[c] > 0 ? at_pos[pos] : at_neg[pos];
  }

  /// Number of connected components of the underlying graph (free loops excluded).
  int graph_components() const { return graph_components_; }

  /// V - E + F over boundary cycles equals 2 per connected component.
  bool euler_ok() const {
    int V = crossing_count() + (knotoid_ ? 2 : 0);
    return V - total_edges() + face_count() == 2 * graph_components_;
  }

  /// Exact structural serialization (no relabelling); used to fingerprint descriptors.
  std::string raw_key() const {
    std::string out;
    for (const auto& s : strands_) {
      out += s.closed ? '@' : '-';
      for (const auto& p : s.passages) {
        out += std::to_string(p.crossing);
        out += p.over ? 'O' : 'U';
      }
      out += ';';
    }
    for (int v : signs_) out += v > 0 ? '+' : '-';
    if (knotoid_) {
      out += '/' + std::to_string(outer_.strand) + ':' + std::to_string(outer_.edge) +
             (outer_.side == Side::left ? 'L' : 'R');
    }
    out += '#' + std::to_string(free_loops_);
    return out;
  }

  friend bool operator==(const KnotoidMap& a, const KnotoidMap& b) {
    return a.strands_ == b.strands_ && a.signs_ == b.signs_ && a.free_loops_ == b.free_loops_ &&
           (!a.knotoid_ || a.outer_ == b.outer_);
  }

 private:
  void build() {
    knotoid_ = !strands_.empty() && !strands_[0].closed;
    for (std::size_t s = 1; s < strands_.size(); ++s)
      if (!strands_[s].closed) throw InputError("only the first strand may be open");
    for (const auto& s : strands_)
      if (s.closed && s.passages.empty())
        throw InputError("closed strand without crossings: count it as a free loop");
    if (free_loops_ < 0) throw InputError("negative free loop count");
    const int n = crossing_count();
    for (int v : signs_)
      if (v != 1 && v != -1) throw InputError("crossing sign must be +1 or -1");
    under_.assign(n, {-1, -1});
    over_.assign(n, {-1, -1});
    for (int s = 0; s < static_cast<int>(strands_.size()); ++s) {
      for (int p = 0; p < passage_count(s); ++p) {
        const Passage& q = strands_[s].passages[p];
        if (q.crossing < 0 || q.crossing >= n) throw InputError("crossing label out of range");
        auto& slot = q.over ? over_[q.crossing] : under_[q.crossing];
        if (slot.first != -1) throw InputError("crossing passed twice on the same level");
        slot = {s, p};
      }
    }
    for (int c = 0; c < n; ++c)
      if (under_[c].first < 0 || over_[c].first < 0) throw InputError("crossing missing a passage");

    edge_offset_.clear();
    edge_owner_.clear();
    for (int s = 0; s < static_cast<int>(strands_.size()); ++s) {
      edge_offset_.push_back(static_cast<int>(edge_owner_.size()));
      for (int k = 0; k < edge_count(s); ++k) edge_owner_.push_back({s, k});
    }
    if (knotoid_) {
      if (outer_.strand < 0 || outer_.strand >= static_cast<int>(strands_.size()) || outer_.edge < 0 ||
          outer_.edge >= edge_count(outer_.strand))
        throw InputError("marked dart out of range");
    } else {
      outer_ = Dart{};
    }

    const int D = dart_total();
    next_.assign(D, -1);
    for (int id = 0; id < D; ++id) next_[id] = compute_next(id);
    face_of_.assign(D, -1);
    faces_.clear();
    for (int id = 0; id < D; ++id) {
      if (face_of_[id] != -1) continue;
      std::vector<int> cyc;
      int cur = id;
      while (face_of_[cur] == -1) {
        face_of_[cur] = static_cast<int>(faces_.size());
        cyc.push_back(cur);
        cur = next_[cur];
      }
      if (cur != id) throw InputError("inconsistent rotation system");
      faces_.push_back(std::move(cyc));
    }

    // connected components via union-find over strands joined at crossings
    std::vector<int> parent(strands_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int c = 0; c < n; ++c) parent[find(under_[c].first)] = find(over_[c].first);
    graph_components_ = 0;
    for (int s = 0; s < static_cast<int>(strands_.size()); ++s)
      if (find(s) == s) ++graph_components_;
  }

  int leave(int c, int pos) const {
    const Slot k = slot_at(c, pos);
    const auto [s, p] = (k == ui || k == uo) ? under_[c] : over_[c];
    if (k == uo || k == oo) return 2 * edge_id(s, out_edge(s, p));
    return 2 * edge_id(s, in_edge(s, p)) + 1;
  }

  int compute_next(int id) const {
    const auto [s, k] = edge_owner_[id / 2];
    const bool right = id & 1;
    const Strand& st = strands_[s];
    if (!right) {
      if (!ends_at_passage(s, k)) return id + 1;  // head turnaround
      const Passage& q = st.passages[edge_end(s, k)];
      const int pos = slot_position(q.crossing, q.over ? oi : ui);
      return leave(q.crossing, (pos + 3) % 4);
    }
    if (!starts_at_passage(s, k)) return id - 1;  // tail turnaround
    const Passage& q = st.passages[edge_start(s, k)];
    const int pos = slot_position(q.crossing, q.over ? oo : uo);
    return leave(q.crossing, (pos + 3) % 4);
  }

  std::vector<Strand> strands_;
  std::vector<int> signs_;
  Dart outer_;
  int free_loops_ = 0;
  bool knotoid_ = true;
  std::vector<std::pair<int, int>> under_, over_;
  std::vector<int> edge_offset_;
  std::vector<std::pair<int, int>> edge_owner_;
  std::vector<int> next_;
  std::vector<int> face_of_;
  std::vector<std::vector<int>> faces_;
  int graph_components_ = 0;
};

}  // namespace railstick
