#ifndef ARITHDYN_FACTOR_HPP
#define ARITHDYN_FACTOR_HPP

#include <cstdint>
#include <vector>

#include "arithdyn/common.hpp"

namespace arithdyn {

/// Prime factorization of a positive 64-bit integer.
/// Invariant: product of prime^exp equals value, primes strictly increasing.
struct Factorization {
  u64 value = 1;
  std::vector<std::pair<u64, int>> factors;

  bool check() const {
    u128 prod = 1;
    u64 last = 0;
    for (auto &[p, e] : factors) {
      if (p <= last || e < 1) return false;
      last = p;
      for (int i = 0; i < e; ++i) {
        prod *= p;
        if (prod > u128(UINT64_MAX)) return false;
      }
    }
    return prod == value;
  }
};

bool is_prime(u64 n);

/// Trial division + deterministic Pollard rho. 1 <= n <= 2^63.
Factorization factorize(u64 n);

u64 euler_phi(u64 n);

/// Smallest i >= 1 with a^i = 1 mod m. Requires gcd(a,m) = 1, m >= 2.
u64 mult_order(u64 a, u64 m);

/// Prime-to-p part of nu.
u64 coprime_part(u64 nu, u64 p);

/// All primes <= bound, ascending.
std::vector<u64> primes_upto(u64 bound);

/// Kronecker symbol (a|n), the fully extended quadratic symbol.
int kronecker(i64 a, i64 n);

} // namespace arithdyn

#endif
