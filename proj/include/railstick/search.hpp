#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "railstick/classify.hpp"
#include "railstick/identify.hpp"

namespace railstick {

// ---------------------------------------------------------------------------
// Sampling.

/// Sampling box: interior vertices uniform in [-3/2,5/2] x [-2,2] x [-2,2]
/// (side 4, centred between the rails), endpoint heights uniform in [-2,2],
/// all coordinates on a grid of 2^-10 of the interval.
struct SampleBox {
  Rational x_lo{-3, 2}, x_hi{5, 2};
  Rational yz_lo{-2}, yz_hi{2};
  int bits = 10;
};

/// splitmix64 step; gives independent per-sample and per-chain seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Point3 random_vertex(std::mt19937_64& rng, const SampleBox& box = {}) {
  return {random_rational(rng, box.x_lo, box.x_hi, box.bits), random_rational(rng, box.yz_lo, box.yz_hi, box.bits),
          random_rational(rng, box.yz_lo, box.yz_hi, box.bits)};
}

/// A valid n-stick rail arc by rejection sampling.
inline StickRailArc random_arc(int sticks, std::mt19937_64& rng, const SampleBox& box = {}) {
  if (sticks < 1) throw InputError("need at least one stick");
  while (true) {
    std::vector<Point3> v;
    v.push_back({0, 0, random_rational(rng, box.yz_lo, box.yz_hi, box.bits)});
    for (int i = 1; i < sticks; ++i) v.push_back(random_vertex(rng, box));
    v.push_back({1, 0, random_rational(rng, box.yz_lo, box.yz_hi, box.bits)});
    StickRailArc a{std::move(v)};
    if (validate_rail_arc(a).ok()) return a;
  }
}

inline StickRailArc random_arc(int sticks, std::uint64_t seed, const SampleBox& box = {}) {
  std::mt19937_64 rng(seed);
  return random_arc(sticks, rng, box);
}

/// Runs f(i) for i in [0, n) on `workers` threads, strided.
inline void parallel_for(int n, int workers, const std::function<void(int)>& f) {
  workers = std::max(1, std::min(workers, n));
  if (workers == 1) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < n; i += workers) f(i);
    });
  for (auto& t : pool) t.join();
}

struct Census {
  int sticks = 0;
  int samples = 0;
  std::map<std::string, int> histogram;
  std::vector<std::pair<int, StickRailArc>> unclassified;  // sample index and arc

  double fraction(const std::string& label) const {
    auto it = histogram.find(label);
    return it == histogram.end() || samples == 0 ? 0.0 : static_cast<double>(it->second) / samples;
  }
};

/// Classifies `samples` random arcs. Sample i depends only on (seed, i), so the
/// result does not depend on the number of workers.
inline Census sample_census(int sticks, int samples, std::uint64_t seed, int workers = 1, SimplifyOptions budget = {}) {
  if (sticks < 1) throw InputError("need at least one stick");
  std::vector<std::string> labels(samples);
  parallel_for(samples, workers, [&](int i) {
    const StickRailArc a = random_arc(sticks, mix_seed(seed, i));
    try {
      labels[i] = classify(to_combinatorial(project(a, mix_seed(seed, i))), budget).label;
    } catch (const std::runtime_error&) {
      labels[i] = "unclassified";
    }
  });
  Census c;
  c.sticks = sticks;
  c.samples = samples;
  for (int i = 0; i < samples; ++i) {
    ++c.histogram[labels[i]];
    if (labels[i] == "unclassified") c.unclassified.push_back({i, random_arc(sticks, mix_seed(seed, i))});
  }
  return c;
}

// ---------------------------------------------------------------------------
// Annealing.

/// Either a knotoid label ("2_6", "W_3", "trivial") or a companion
/// ("under:5_1", "over:4_1").
struct Goal {
  bool companion = false;
  PassSide side = PassSide::under;
  std::string name;

  static Goal parse(const std::string& text) {
    Goal g;
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
      g.name = text;
      bool known = text == "trivial" || (text.rfind("W_", 0) == 0 && text.size() > 2);
      for (const auto& r : knotoid_references()) known = known || r.name == text;
      if (!known) throw InputError("unknown knotoid class: " + text);
      return g;
    }
    const std::string side = text.substr(0, colon);
    if (side != "under" && side != "over") throw InputError("goal side must be under or over: " + text);
    g.companion = true;
    g.side = side == "under" ? PassSide::under : PassSide::over;
    g.name = text.substr(colon + 1);
    KnotTable::shipped().get(g.name);
    return g;
  }
  std::string to_string() const { return companion ? std::string(side_name(side)) + ":" + name : name; }
};

struct Schedule {
  int steps = 20000;        // per chain
  double t_start = 1.0;
  double t_end = 0.02;      // geometric cooling
  int chains = 64;          // upper limit on chains run
  double step_scale = 0.5;  // initial vertex jitter, shrinks with temperature
};

struct AnnealResult {
  bool success = false;
  StickRailArc arc;
  double energy = 0;
  std::string label;  // classification or companion identification of `arc`
  int chain = -1;
  long long evaluations = 0;
};

namespace detail {

inline int reference_crossings(const Goal& g) {
  if (g.companion) return KnotTable::shipped().get(g.name).diagram().crossing_count();
  if (g.name == "trivial") return 0;
  if (g.name.rfind("W_", 0) == 0) return std::stoi(g.name.substr(2));
  return g.name[0] - '0';
}

struct Scored {
  double energy = 1e9;
  std::string label;
};

inline Scored score(const StickRailArc& a, const Goal& g, std::uint64_t seed) {
  Scored s;
  try {
    const KnotoidMap m = to_combinatorial(project(a, seed));
    const double sticks = 0.01 * stick_count(a);
    if (!g.companion) {
      const Classification c = classify(m);
      s.label = c.label;
      s.energy = c.label == g.name ? sticks : 1 + 0.5 * std::abs(c.crossings - reference_crossings(g)) + sticks;
      return s;
    }
    const Identification id = identify_companion(m, g.side);
    s.label = id.label();
    if (std::find(id.names.begin(), id.names.end(), g.name) != id.names.end()) {
      s.energy = sticks;
      return s;
    }
    const long long goal_det = *KnotTable::shipped().get(g.name).det;
    const double det_gap = std::min(3.0, std::abs(static_cast<double>(id.tuple.determinant - goal_det)) /
                                             std::max<long long>(goal_det, 1));
    s.energy = 1 + det_gap + 0.25 * std::abs(id.crossings - reference_crossings(g)) + sticks;
  } catch (const std::runtime_error&) {
  }
  return s;
}

inline AnnealResult anneal_chain(const Goal& goal, int max_sticks, const Schedule& sch, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0, 1);
  StickRailArc cur = random_arc(max_sticks, rng);
  Scored cur_s = score(cur, goal, seed);
  AnnealResult out;
  out.evaluations = 1;
  auto accept_goal = [&](const StickRailArc& a, const Scored& s) {
    if (s.energy >= 1) return false;
    out.success = true;
    out.arc = a;
    out.energy = s.energy;
    out.label = s.label;
    return true;
  };
  if (accept_goal(cur, cur_s)) return out;
  const double cool = std::pow(sch.t_end / sch.t_start, 1.0 / std::max(1, sch.steps));
  double temp = sch.t_start;
  StickRailArc best = cur;
  Scored best_s = cur_s;
  for (int step = 0; step < sch.steps; ++step, temp *= cool) {
    StickRailArc next = cur;
    auto& v = next.vertices;
    const int n = static_cast<int>(v.size());
    const double r = unit(rng);
    const Rational scale = detail::dyadic_below(sch.step_scale * temp / sch.t_start + 1.0 / 64);
    if (r < 0.1 && n > 2) {
      // resample an interior vertex from the sampling box (escapes flat plateaus)
      v[1 + static_cast<int>(rng() % (n - 2))] = random_vertex(rng);
    } else if (r < 0.75 && n > 2) {
      // jitter an interior vertex
      const int i = 1 + static_cast<int>(rng() % (n - 2));
      v[i].x += random_rational(rng, -scale, scale, 8);
      v[i].y += random_rational(rng, -scale, scale, 8);
      v[i].z += random_rational(rng, -scale, scale, 8);
    } else if (r < 0.9) {
      // slide an endpoint along its rail
      const int i = rng() % 2 ? 0 : n - 1;
      v[i].z += random_rational(rng, -scale, scale, 8);
    } else if (n - 1 < max_sticks) {
      // insert a vertex near a stick midpoint
      const int i = static_cast<int>(rng() % (n - 1));
      Point3 mid{(v[i].x + v[i + 1].x) / 2, (v[i].y + v[i + 1].y) / 2, (v[i].z + v[i + 1].z) / 2};
      mid.x += random_rational(rng, -scale, scale, 8);
      mid.y += random_rational(rng, -scale, scale, 8);
      mid.z += random_rational(rng, -scale, scale, 8);
      v.insert(v.begin() + i + 1, mid);
    } else if (n > 3) {
      // delete an interior vertex
      v.erase(v.begin() + 1 + static_cast<long>(rng() % (n - 2)));
    } else {
      continue;
    }
    if (!validate_rail_arc(next).ok()) continue;
    const Scored s = score(next, goal, seed + step);
    ++out.evaluations;
    if (accept_goal(next, s)) return out;
    if (s.energy <= cur_s.energy || unit(rng) < std::exp((cur_s.energy - s.energy) / temp)) {
      cur = std::move(next);
      cur_s = s;
      if (cur_s.energy < best_s.energy) {
        best = cur;
        best_s = cur_s;
      }
    }
  }
  out.arc = best;
  out.energy = best_s.energy;
  out.label = best_s.label;
  return out;
}

}  // namespace detail

/// Simulated annealing toward `goal` with at most `max_sticks` sticks. Chains
/// run in rounds of `workers`; the first successful chain by index wins, so the
/// outcome depends only on (seed, workers). Successes are re-verified with a
/// fresh projection before being reported.
inline AnnealResult anneal(const Goal& goal, int max_sticks, const Schedule& sch, std::uint64_t seed, int workers = 1) {
  if (max_sticks < 1) throw InputError("need at least one stick");
  workers = std::max(1, workers);
  AnnealResult best;
  best.energy = 1e18;
  long long evaluations = 0;
  for (int round = 0; round * workers < sch.chains; ++round) {
    const int count = std::min(workers, sch.chains - round * workers);
    std::vector<AnnealResult> results(count);
    parallel_for(count, workers, [&](int k) {
      const int chain = round * workers + k;
      results[k] = detail::anneal_chain(goal, max_sticks, sch, mix_seed(seed, chain));
      results[k].chain = chain;
    });
    for (auto& r : results) {
      evaluations += r.evaluations;
      if (r.success) {
        const auto check = detail::score(r.arc, goal, mix_seed(seed, 1u << 30));
        r.success = check.energy < 1 && stick_count(r.arc) <= max_sticks;
      }
      if (r.success) {
        r.evaluations = evaluations;
        return r;
      }
      if (r.energy < best.energy) best = r;
    }
  }
  best.evaluations = evaluations;
  return best;
}

struct SampleHit {
  long index = -1;
  StickRailArc arc;
};

/// Uniform sampling for companions: for each wanted knot, the first sample
/// index below `limit` whose arc has it as its `side` companion. Sample i is
/// random_arc(sticks, mix_seed(seed, i)), so a hit is reproducible from
/// (seed, index) and does not depend on the number of workers.
inline std::map<std::string, SampleHit> sample_companions(const std::vector<std::string>& knots, PassSide side, int sticks,
                                                         std::uint64_t seed, long limit, int workers = 1) {
  for (const auto& k : knots) KnotTable::shipped().get(k);
  std::map<std::string, SampleHit> found;
  constexpr int kBlock = 4096;
  for (long start = 0; start < limit && found.size() < knots.size(); start += kBlock) {
    const int count = static_cast<int>(std::min<long>(kBlock, limit - start));
    std::vector<std::string> labels(count);
    parallel_for(count, workers, [&](int k) {
      try {
        const StickRailArc a = random_arc(sticks, mix_seed(seed, start + k));
        const Identification id = identify_companion(to_combinatorial(project(a)), side);
        if (id.unique()) labels[k] = id.names[0];
      } catch (const std::runtime_error&) {
      }
    });
    for (int k = 0; k < count; ++k) {
      if (std::find(knots.begin(), knots.end(), labels[k]) == knots.end() || found.count(labels[k])) continue;
      found[labels[k]] = {start + k, random_arc(sticks, mix_seed(seed, start + k))};
    }
  }
  return found;
}

// ---------------------------------------------------------------------------
// Bounds.

/// 4 + 2(|w| - 1) for w != 0, else 4 (any nontrivial class).
inline int winding_lower_bound(int w) { return w == 0 ? 4 : 4 + 2 * (std::abs(w) - 1); }

struct Bounds {
  int lower = 0;
  int upper = 0;
  bool exact() const { return lower == upper; }
};

/// s[K] - 2 <= rs[K] <= s[K] - 1 from the shipped stick numbers; `certified`
/// collapses the interval when an (s[K]-2)-stick certificate is known.
inline Bounds rs_bounds(const std::string& knot, bool certified = false) {
  const KnotEntry& e = KnotTable::shipped().get(knot);
  if (!e.stick) throw InputError("no stick number shipped for " + knot);
  Bounds b{*e.stick - 2, *e.stick - 1};
  if (certified) b.upper = b.lower;
  return b;
}

/// s_CL[K] - 4, floored at 1 (a single stick already spans the rails).
inline int lattice_rs_lower(const std::string& knot) {
  const KnotEntry& e = KnotTable::shipped().get(knot);
  if (!e.lattice_stick) throw InputError("no lattice stick number shipped for " + knot);
  return std::max(1, *e.lattice_stick - 4);
}

/// s[r] + sum of s[K_i] over the closed components (stick numbers from the table).
inline int multi_lower_bound(int arc_stick_number, const std::vector<std::string>& components) {
  int total = arc_stick_number;
  for (const auto& c : components) {
    const KnotEntry& e = KnotTable::shipped().get(c);
    if (!e.stick) throw InputError("no stick number shipped for " + c);
    total += *e.stick;
  }
  return total;
}

}  // namespace railstick
