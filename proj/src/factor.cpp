#include "arithdyn/factor.hpp"

#include <algorithm>
#include <numeric>

#include "arithdyn/rational.hpp"

namespace arithdyn {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  // Deterministic Miller-Rabin for n < 2^64 with the 12 smallest prime bases.
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

u64 pollard_rho(u64 n) {
  // Deterministic: sweep the increment c; Floyd cycle detection is plenty
  // at this scale (n <= 2^63 with no factor below 10^5).
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
    u64 x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      if (x == y) break;  // cycle without factor, try next c
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d > 1 && d < n) return d;
  }
}

void factor_rec(u64 n, std::vector<u64> &out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  u64 d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

Factorization factorize(u64 n) {
  if (n < 1 || n > (u64(1) << 63))
    throw error("out-of-range", "factorize: n must be in [1, 2^63]");
  Factorization f;
  f.value = n;
  std::vector<u64> ps;
  for (u64 p = 2; p * p <= n && p < 100000; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ps.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, ps);
  std::sort(ps.begin(), ps.end());
  for (u64 p : ps) {
    if (!f.factors.empty() && f.factors.back().first == p)
      f.factors.back().second++;
    else
      f.factors.push_back({p, 1});
  }
  return f;
}

u64 euler_phi(u64 n) {
  Factorization f = factorize(n);
  u64 r = 1;
  for (auto &[p, e] : f.factors) {
    r *= p - 1;
    for (int i = 1; i < e; ++i) r *= p;
  }
  return r;
}

u64 mult_order(u64 a, u64 m) {
  if (m < 2) throw error("out-of-range", "mult_order: modulus must be >= 2");
  a %= m;
  if (std::gcd(a, m) != 1)
    throw error("non-coprime", "mult_order: base not coprime to modulus");
  u64 e = euler_phi(m);
  for (auto &[p, k] : factorize(e).factors) {
    (void)k;
    while (e % p == 0 && powmod(a, e / p, m) == 1) e /= p;
  }
  return e;
}

u64 coprime_part(u64 nu, u64 p) {
  while (nu % p == 0) nu /= p;
  return nu;
}

std::vector<u64> primes_upto(u64 bound) {
  std::vector<u64> ps;
  if (bound < 2) return ps;
  std::vector<bool> sieve(bound + 1, true);
  for (u64 i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    ps.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return ps;
}

int kronecker(i64 a, i64 n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int sign = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) sign = -sign;
  }
  int v2 = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++v2;
  }
  if (v2 > 0) {
    if (a % 2 == 0) return 0;
    i64 am8 = ((a % 8) + 8) % 8;
    if (v2 % 2 == 1 && (am8 == 3 || am8 == 5)) sign = -sign;
  }
  a = ((a % n) + n) % n;
  // Jacobi symbol on the odd part.
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      i64 nm8 = n % 8;
      if (nm8 == 3 || nm8 == 5) sign = -sign;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) sign = -sign;
    a %= n;
  }
  return n == 1 ? sign : 0;
}

}  // namespace arithdyn
