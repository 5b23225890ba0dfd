#ifndef ARITHDYN_COMMON_HPP
#define ARITHDYN_COMMON_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace arithdyn {

using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i128 = __int128;
using u128 = unsigned __int128;

/// Library error with a stable machine-readable name. The CLI maps these
/// to exit code 2 and prints the name, so names are part of the interface.
class error : public std::runtime_error {
public:
  error(std::string name, const std::string &what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string &name() const noexcept { return name_; }

private:
  std::string name_;
};

/// Raised by level-truncated operations that would need a larger level.
/// Carries the minimal level the caller must rebuild at.
class insufficient_level : public error {
public:
  insufficient_level(i64 min_level, const std::string &what)
      : error("insufficient-level", what), min_level_(min_level) {}
  i64 min_level() const noexcept { return min_level_; }

private:
  i64 min_level_;
};

[[noreturn]] inline void throw_overflow(const char *where) {
  throw error("overflow", std::string("64-bit overflow in ") + where);
}

inline i64 add_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add");
  return r;
}

inline i64 sub_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub");
  return r;
}

inline i64 mul_ck(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul");
  return r;
}

inline i128 add_ck(i128 a, i128 b) {
  i128 r;
  if (__builtin_add_overflow(a, b, &r)) throw_overflow("add128");
  return r;
}

inline i128 sub_ck(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw_overflow("sub128");
  return r;
}

inline i128 mul_ck(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw_overflow("mul128");
  return r;
}

inline i64 narrow_ck(i128 v) {
  if (v > i128(INT64_MAX) || v < i128(INT64_MIN)) throw_overflow("narrow");
  return i64(v);
}

inline u64 mulmod(u64 a, u64 b, u64 m) { return u64(u128(a) * b % m); }

inline u64 powmod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 r = 1;
  base %= m;
  while (exp) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Extended gcd: returns g and x,y with a*x + b*y = g.
inline i64 egcd(i64 a, i64 b, i64 &x, i64 &y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  i64 x1, y1;
  i64 g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

/// Inverse of a mod m, m >= 1. Errors if gcd(a,m) != 1.
inline u64 invmod(i64 a, u64 m) {
  if (m == 1) return 0;
  i64 x, y;
  i64 g = egcd(((a % i64(m)) + i64(m)) % i64(m), i64(m), x, y);
  if (g != 1) throw error("non-coprime", "invmod: arguments not coprime");
  i64 r = x % i64(m);
  if (r < 0) r += i64(m);
  return u64(r);
}

inline std::string to_string_i128(i128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  u128 x = neg ? u128(-(v + 1)) + 1 : u128(v);
  std::string s;
  while (x) {
    s += char('0' + int(x % 10));
    x /= 10;
  }
  if (neg) s += '-';
  return std::string(s.rbegin(), s.rend());
}

} // namespace arithdyn

#endif
