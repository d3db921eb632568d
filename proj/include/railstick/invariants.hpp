#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <complex>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "railstick/error.hpp"
#include "railstick/knotoid_map.hpp"
#include "railstick/laurent.hpp"
#include "railstick/pd.hpp"

namespace railstick {

/// Largest diagram handed to the bracket contraction.
inline constexpr int kBracketCrossingCap = 80;

namespace detail {

/// Order crossings so that each next one shares as many labels as possible
/// with those already processed; keeps the contraction frontier small.
inline std::vector<int> contraction_order(const PDCode& pd) {
  const int n = static_cast<int>(pd.crossings.size());
  std::vector<int> order;
  std::vector<bool> done(n, false);
  std::map<int, int> open;  // label -> ends seen so far
  for (int step = 0; step < n; ++step) {
    int best = -1, best_score = -100;
    for (int c = 0; c < n; ++c) {
      if (done[c]) continue;
      int score = 0;
      for (int l : pd.crossings[c]) score += open.count(l) ? 2 : -1;
      if (score > best_score) {
        best_score = score;
        best = c;
      }
    }
    done[best] = true;
    order.push_back(best);
    for (int l : pd.crossings[best]) {
      if (++open[l] == 2) open.erase(l);
    }
  }
  return order;
}

/// Adds the arc p-q to a boundary pairing. Returns true when it closes a loop.
inline bool join_arc(std::map<int, int>& partner, int p, int q) {
  if (p == q) return true;
  const auto ip = partner.find(p), iq = partner.find(q);
  const bool hp = ip != partner.end(), hq = iq != partner.end();
  if (hp && hq) {
    const int pp = ip->second, qq = iq->second;
    partner.erase(p);
    partner.erase(q);
    if (pp == q) return true;
    partner[pp] = qq;
    partner[qq] = pp;
    return false;
  }
  if (hp) {
    const int pp = ip->second;
    partner.erase(p);
    partner[pp] = q;
    partner[q] = pp;
    return false;
  }
  if (hq) {
    const int qq = iq->second;
    partner.erase(q);
    partner[qq] = p;
    partner[p] = qq;
    return false;
  }
  partner[p] = q;
  partner[q] = p;
  return false;
}

inline IntLaurent delta() { return IntLaurent(-1, 2) + IntLaurent(-1, -2); }

}  // namespace detail

/// Kauffman bracket in A with the unknot normalized to 1; the A-smoothing
/// joins (a,b),(c,d) at X(a,b,c,d).
inline IntLaurent kauffman_bracket(const PDCode& pd, int cap = kBracketCrossingCap) {
  if (static_cast<int>(pd.crossings.size()) > cap)
    throw InputError("diagram exceeds the bracket crossing cap of " + std::to_string(cap));
  const IntLaurent d = detail::delta();
  using Pairing = std::map<int, int>;
  std::map<Pairing, IntLaurent> states{{Pairing{}, IntLaurent(1)}};
  for (int c : detail::contraction_order(pd)) {
    const auto& x = pd.crossings[c];
    std::map<Pairing, IntLaurent> next;
    for (const auto& [pairing, poly] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        Pairing p = pairing;
        int loops = 0;
        if (smoothing == 0) {
          loops += detail::join_arc(p, x[0], x[1]);
          loops += detail::join_arc(p, x[2], x[3]);
        } else {
          loops += detail::join_arc(p, x[0], x[3]);
          loops += detail::join_arc(p, x[1], x[2]);
        }
        IntLaurent term = poly.shifted(smoothing == 0 ? 1 : -1);
        for (int i = 0; i < loops; ++i) term *= d;
        next[p] += term;
      }
    }
    states = std::move(next);
  }
  IntLaurent total;
  for (const auto& [pairing, poly] : states) total += poly;
  // one loop too many: the empty state of a nonempty diagram counts every loop
  IntLaurent out;
  if (pd.crossings.empty()) {
    out = IntLaurent(1);
    for (int i = 1; i < pd.free_loops; ++i) out *= d;
    return out;
  }
  if (!total.divide_exact(d, out)) throw ConstructionError("bracket state sum not divisible by delta");
  for (int i = 0; i < pd.free_loops; ++i) out *= d;
  return out;
}

inline int writhe(const KnotoidMap& m) {
  int w = 0;
  for (int v : m.signs()) w += v;
  return w;
}

/// Jones polynomial in s = t^(1/2), from an oriented closed diagram.
inline IntLaurent jones(const KnotoidMap& m) {
  const IntLaurent br = kauffman_bracket(to_pd(m));
  const int w = writhe(m);
  // (-A^3)^(-w) <D>, then A = s^(-1/2)
  IntLaurent f = br.shifted(-3 * w);
  if (w % 2 != 0) f *= IntLaurent(-1);
  IntLaurent out;
  for (int e = f.low(); e <= f.high(); ++e) {
    const long long c = f.coeff(e);
    if (c == 0) continue;
    if (e % 2 != 0) throw ConstructionError("odd A-exponent in normalized bracket");
    out += IntLaurent(c, -e / 2);
  }
  return out;
}

/// Jones polynomial of a knot in t (exponents of s halved).
inline IntLaurent jones_in_t(const KnotoidMap& m) {
  const IntLaurent js = jones(m);
  IntLaurent out;
  for (int e = js.low(); e <= js.high(); ++e) {
    if (js.coeff(e) == 0) continue;
    if (e % 2 != 0) throw InputError("Jones polynomial has half-integer exponents; not a knot");
    out += IntLaurent(js.coeff(e), e / 2);
  }
  return out;
}

namespace detail {

/// Fraction-free Gaussian elimination; T needs exact division.
template <class T, class Div>
T bareiss_det(std::vector<std::vector<T>> a, Div divide) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return T(1);
  T prev(1);
  int sign = 1;
  auto is_zero = [](const T& v) {
    if constexpr (std::is_same_v<T, mpz_class>)
      return v == 0;
    else
      return v.is_zero();
  };
  for (int k = 0; k < n - 1; ++k) {
    if (is_zero(a[k][k])) {
      int r = k + 1;
      while (r < n && is_zero(a[r][k])) ++r;
      if (r == n) return T(0);
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        T num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = divide(num, prev);
      }
    prev = a[k][k];
  }
  T out = a[n - 1][n - 1];
  if (sign < 0) out = T(0) - out;
  return out;
}

}  // namespace detail

/// Alexander polynomial of a knot, symmetric with positive value at t = 1.
inline IntLaurent alexander(const KnotoidMap& m) {
  if (m.is_knotoid() || m.component_count() != 1) throw InputError("Alexander polynomial needs a knot");
  const int n = m.crossing_count();
  if (n == 0) return IntLaurent(1);
  const int L = m.passage_count(0);
  std::vector<int> arc(L);
  int a = 0;
  for (int k = 0; k < L; ++k) {
    arc[k] = a;
    if (!m.strands()[0].passages[k].over) ++a;
  }
  for (int& v : arc) v %= n;
  const BigLaurent one(mpz_class(1)), t(mpz_class(1), 1), minus_one(mpz_class(-1));
  std::vector<std::vector<BigLaurent>> mat(n, std::vector<BigLaurent>(n));
  for (int c = 0; c < n; ++c) {
    const int pu = m.under_passage(c).second, po = m.over_passage(c).second;
    const int i = arc[m.in_edge(0, pu)], j = arc[m.out_edge(0, pu)], k = arc[m.in_edge(0, po)];
    mat[c][k] += one - t;
    if (m.signs()[c] > 0) {
      mat[c][i] += t;
      mat[c][j] += minus_one;
    } else {
      mat[c][i] += minus_one;
      mat[c][j] += t;
    }
  }
  mat.pop_back();
  for (auto& row : mat) row.pop_back();
  BigLaurent det = detail::bareiss_det(std::move(mat), [](const BigLaurent& num, const BigLaurent& den) {
    BigLaurent q;
    if (!num.divide_exact(den, q)) throw ConstructionError("Bareiss division failed");
    return q;
  });
  if (det.is_zero()) throw ConstructionError("Alexander polynomial vanished for a knot");
  const int span = det.high() - det.low();
  det = det.shifted(-det.low() - span / 2);
  mpz_class at_one = 0;
  for (const auto& c : det.coeffs()) at_one += c;
  IntLaurent out;
  for (int e = det.low(); e <= det.high(); ++e) {
    mpz_class c = det.coeff(e);
    if (at_one < 0) c = -c;
    if (c != 0) out += IntLaurent(c.get_si(), e);
  }
  return out;
}

/// Determinant from the Goeritz matrix of a checkerboard coloring.
inline long long determinant(const KnotoidMap& m) {
  if (m.is_knotoid()) throw InputError("determinant needs a closed diagram");
  const int n = m.crossing_count();
  if (n == 0) return m.free_loops() <= 1 ? 1 : 0;
  if (m.graph_components() > 1 || m.free_loops() > 0) return 0;  // split diagram
  const int F = m.face_count();
  std::vector<int> color(F, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (int id : m.face(f)) {
      const int g = m.face_of(id ^ 1);
      if (color[g] == -1) {
        color[g] = 1 - color[f];
        stack.push_back(g);
      } else if (color[g] == color[f]) {
        throw ConstructionError("diagram faces are not two-colorable");
      }
    }
  }
  auto sector_face = [&](int c, int pos) {
    const auto slot = m.slot_at(c, pos);
    const bool under = slot == KnotoidMap::ui || slot == KnotoidMap::uo;
    const auto [s, p] = under ? m.under_passage(c) : m.over_passage(c);
    const bool out = slot == KnotoidMap::uo || slot == KnotoidMap::oo;
    const int e = m.edge_id(s, out ? m.out_edge(s, p) : m.in_edge(s, p));
    return m.face_of(out ? 2 * e : 2 * e + 1);
  };
  std::vector<int> white_index(F, -1);
  int W = 0;
  for (int f = 0; f < F; ++f)
    if (color[f] == 0) white_index[f] = W++;
  std::vector<std::vector<mpz_class>> g(W, std::vector<mpz_class>(W, 0));
  for (int c = 0; c < n; ++c) {
    const int f0 = sector_face(c, 0), f1 = sector_face(c, 1), f2 = sector_face(c, 2), f3 = sector_face(c, 3);
    int eta = 0, a = -1, b = -1;
    if (color[f0] == 0) {
      eta = 1;
      a = f0;
      b = f2;
    } else {
      eta = -1;
      a = f1;
      b = f3;
    }
    if (a == b) continue;
    const int i = white_index[a], j = white_index[b];
    g[i][j] -= eta;
    g[j][i] -= eta;
    g[i][i] += eta;
    g[j][j] += eta;
  }
  g.pop_back();
  for (auto& row : g) row.pop_back();
  mpz_class det = detail::bareiss_det(std::move(g), [](const mpz_class& num, const mpz_class& den) {
    mpz_class q = num / den;
    return q;
  });
  return std::labs(det.get_si());
}

/// |V(-1)|, evaluated with s = t^(1/2) = i.
inline long long determinant_from_jones(const IntLaurent& js) {
  long long re = 0, im = 0;
  for (int e = js.low(); e <= js.high(); ++e) {
    const long long c = js.coeff(e);
    switch (((e % 4) + 4) % 4) {
      case 0: re += c; break;
      case 1: im += c; break;
      case 2: re -= c; break;
      case 3: im -= c; break;
    }
  }
  return std::llround(std::sqrt(static_cast<double>(re * re + im * im)));
}

/// Pairwise linking numbers of the strands (free loops link nothing).
inline std::vector<int> linking_numbers(const KnotoidMap& m) {
  const int S = static_cast<int>(m.strands().size());
  std::vector<std::vector<int>> twice(S, std::vector<int>(S, 0));
  for (int c = 0; c < m.crossing_count(); ++c) {
    const int a = m.under_passage(c).first, b = m.over_passage(c).first;
    if (a != b) {
      twice[a][b] += m.signs()[c];
      twice[b][a] += m.signs()[c];
    }
  }
  std::vector<int> out;
  for (int i = 0; i < S; ++i)
    for (int j = i + 1; j < S; ++j) out.push_back(twice[i][j] / 2);
  for (int k = 0; k < m.free_loops(); ++k)
    for (int i = 0; i < S + k; ++i) out.push_back(0);
  return out;
}

/// Bracket up to units +-A^k and the mirror A -> 1/A.
inline std::string normalized_bracket(const IntLaurent& br) {
  auto norm = [](const IntLaurent& p) {
    IntLaurent q = p.shifted(-p.low());
    if (!q.is_zero() && q.coeff(q.high()) < 0) q *= IntLaurent(-1);
    return q.to_string("A");
  };
  return std::min(norm(br), norm(br.substitute_power(-1)));
}

/// Invariants used to recognize a knot or link, insensitive to mirror images
/// and to component orientations.
struct InvariantTuple {
  int components = 1;
  long long determinant = 1;
  std::string bracket;
  std::string alexander;  // knots only
  std::vector<int> abs_linking;

  friend auto operator<=>(const InvariantTuple&, const InvariantTuple&) = default;
  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;

  std::string to_string() const {
    std::string out = "components=" + std::to_string(components) + " det=" + std::to_string(determinant) +
                      " bracket=[" + bracket + "]";
    if (!alexander.empty()) out += " alexander=[" + alexander + "]";
    if (!abs_linking.empty()) {
      out += " lk=";
      for (std::size_t i = 0; i < abs_linking.size(); ++i) out += (i ? "," : "") + std::to_string(abs_linking[i]);
    }
    return out;
  }
};

inline InvariantTuple invariant_tuple(const KnotoidMap& m) {
  InvariantTuple t;
  t.components = m.component_count();
  t.determinant = determinant(m);
  t.bracket = normalized_bracket(kauffman_bracket(to_pd(m)));
  if (t.components == 1) {
    const IntLaurent a = alexander(m);
    t.alexander = a.to_string("t");
  }
  for (int v : linking_numbers(m)) t.abs_linking.push_back(std::abs(v));
  std::sort(t.abs_linking.begin(), t.abs_linking.end());
  return t;
}

}  // namespace railstick
