#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace railstick {

/// Laurent polynomial sum c[i] * x^(low + i), kept trimmed.
template <class T>
class Laurent {
 public:
  Laurent() = default;
  Laurent(T c, int e = 0) {  // NOLINT: implicit monomial
    if (c != 0) {
      low_ = e;
      c_.push_back(std::move(c));
    }
  }
  static Laurent monomial(T c, int e) { return Laurent(std::move(c), e); }

  bool is_zero() const { return c_.empty(); }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  T coeff(int e) const {
    const int i = e - low_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return T(0);
    return c_[i];
  }
  const std::vector<T>& coeffs() const { return c_; }

  Laurent& operator+=(const Laurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    const int lo = std::min(low_, o.low_), hi = std::max(high(), o.high());
    std::vector<T> out(hi - lo + 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[low_ - lo + i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[o.low_ - lo + i] += o.c_[i];
    low_ = lo;
    c_ = std::move(out);
    trim();
    return *this;
  }
  Laurent& operator-=(const Laurent& o) { return *this += o * Laurent(T(-1)); }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    if (a.is_zero() || b.is_zero()) return r;
    r.low_ = a.low_ + b.low_;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent shifted(int k) const {
    Laurent r = *this;
    if (!r.is_zero()) r.low_ += k;
    return r;
  }
  /// p(x) -> p(x^k) for k = -1 or any nonzero integer.
  Laurent substitute_power(int k) const {
    Laurent r;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) r += Laurent(c_[i], k * (low_ + static_cast<int>(i)));
    return r;
  }
  /// Exact division; returns false when the divisor does not divide.
  bool divide_exact(const Laurent& d, Laurent& q) const {
    q = Laurent();
    if (d.is_zero()) return false;
    Laurent rem = *this;
    while (!rem.is_zero()) {
      if (rem.c_.size() < d.c_.size()) return false;
      const T& lead = rem.c_.back();
      const T& dl = d.c_.back();
      T f = lead / dl;
      if (f * dl != lead) return false;
      Laurent term(f, rem.high() - d.high());
      q += term;
      rem -= term * d;
    }
    return true;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.low_ == b.low_ && a.c_ == b.c_; }
  friend bool operator<(const Laurent& a, const Laurent& b) {
    if (a.low_ != b.low_) return a.low_ < b.low_;
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  /// Text like "1 - x^-2 + 3x^4"; `var` names the variable.
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      T c = c_[i];
      if (c == 0) continue;
      const int e = low_ + static_cast<int>(i);
      const bool neg = c < 0;
      if (neg) c = -c;
      if (out.empty())
        out += neg ? "-" : "";
      else
        out += neg ? " - " : " + ";
      const std::string mag = coeff_string(c);
      if (e == 0)
        out += mag;
      else {
        if (mag != "1") out += mag;
        out += var;
        if (e != 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  static std::string coeff_string(const T& c) {
    if constexpr (std::is_same_v<T, mpz_class>)
      return c.get_str();
    else
      return std::to_string(c);
  }
  void trim() {
    std::size_t a = 0;
    while (a < c_.size() && c_[a] == 0) ++a;
    if (a == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    std::size_t b = c_.size();
    while (c_[b - 1] == 0) --b;
    c_ = std::vector<T>(c_.begin() + static_cast<long>(a), c_.begin() + static_cast<long>(b));
    low_ += static_cast<int>(a);
  }

  int low_ = 0;
  std::vector<T> c_;
};

using IntLaurent = Laurent<long long>;
using BigLaurent = Laurent<mpz_class>;

}  // namespace railstick
