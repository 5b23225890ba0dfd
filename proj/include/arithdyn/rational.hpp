#ifndef ARITHDYN_RATIONAL_HPP
#define ARITHDYN_RATIONAL_HPP

#include <iosfwd>
#include <numeric>
#include <string>

#include "arithdyn/common.hpp"

namespace arithdyn {

/// Exact rational on 64-bit words, always reduced, denominator > 0.
/// Overflow raises error("overflow") instead of wrapping.
struct Rat {
  i64 num = 0;
  i64 den = 1;

  Rat() = default;
  Rat(i64 n) : num(n), den(1) {}
  Rat(i64 n, i64 d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw error("domain", "rational with zero denominator");
    if (den < 0) {
      num = sub_ck(i64(0), num);
      den = sub_ck(i64(0), den);
    }
    i64 g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  bool is_integer() const { return den == 1; }
  bool positive() const { return num > 0; }

  friend Rat operator*(const Rat &a, const Rat &b) {
    i64 g1 = std::gcd(a.num, b.den), g2 = std::gcd(b.num, a.den);
    Rat r;
    r.num = mul_ck(a.num / g1, b.num / g2);
    r.den = mul_ck(a.den / g2, b.den / g1);
    return r;
  }
  friend Rat operator/(const Rat &a, const Rat &b) {
    if (b.num == 0) throw error("domain", "rational division by zero");
    return a * Rat(b.den, b.num);
  }
  friend Rat operator+(const Rat &a, const Rat &b) {
    i64 g = std::gcd(a.den, b.den);
    i64 lhs = mul_ck(a.num, b.den / g);
    i64 rhs = mul_ck(b.num, a.den / g);
    return Rat(add_ck(lhs, rhs), mul_ck(a.den, b.den / g));
  }
  friend Rat operator-(const Rat &a, const Rat &b) {
    return a + Rat(sub_ck(i64(0), b.num), b.den);
  }
  friend bool operator==(const Rat &a, const Rat &b) {
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const Rat &a, const Rat &b) { return !(a == b); }
  friend bool operator<(const Rat &a, const Rat &b) {
    return i128(a.num) * b.den < i128(b.num) * a.den;
  }

  double to_double() const { return double(num) / double(den); }

  std::string str() const {
    std::string s = std::to_string(num);
    if (den != 1) s += "/" + std::to_string(den);
    return s;
  }

  /// Parses "n" or "n/d".
  static Rat parse(const std::string &s);
};

std::ostream &operator<<(std::ostream &os, const Rat &r);

} // namespace arithdyn

#endif
