#pragma once

#include <string>
#include <vector>

#include "railstick/combinatorial.hpp"
#include "railstick/companion.hpp"
#include "railstick/invariants.hpp"
#include "railstick/knot_table.hpp"
#include "railstick/moves.hpp"

namespace railstick {

struct Identification {
  std::vector<std::string> names;  // empty when unidentified, several when ambiguous
  InvariantTuple tuple;
  int crossings = 0;  // after reduction

  bool unique() const { return names.size() == 1; }
  std::string label() const {
    if (names.empty()) return "unidentified";
    std::string out;
    for (const auto& n : names) out += (out.empty() ? "" : "|") + n;
    return out;
  }
};

/// Reduces a closed diagram with R1/R2 moves and looks its invariants up in the table.
inline Identification identify(const KnotoidMap& link, const KnotTable& table = KnotTable::shipped()) {
  if (link.is_knotoid()) throw InputError("identify needs a closed diagram");
  const KnotoidMap m = greedy_reduce(link);
  Identification id;
  id.crossings = m.crossing_count();
  id.tuple = invariant_tuple(m);
  id.names = table.identify(id.tuple);
  return id;
}

inline Identification identify(const PDCode& pd, const KnotTable& table = KnotTable::shipped()) {
  return identify(from_pd(pd), table);
}

inline Identification identify(const StickLink& l, std::uint64_t seed = 0, const KnotTable& table = KnotTable::shipped()) {
  return identify(to_combinatorial(project(l, seed)), table);
}

inline Identification identify_companion(const KnotoidMap& m, PassSide side,
                                         const KnotTable& table = KnotTable::shipped()) {
  return identify(companion_map(m, side), table);
}

}  // namespace railstick
