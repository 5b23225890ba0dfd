#include "arithdyn/poly_int.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include "arithdyn/factor.hpp"
#include "arithdyn/poly_mod.hpp"

namespace arithdyn {
namespace polyz {

PolyZ trim(PolyZ f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PolyZ add(const PolyZ &a, const PolyZ &b) {
  PolyZ r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = add_ck(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return trim(std::move(r));
}

PolyZ sub(const PolyZ &a, const PolyZ &b) {
  PolyZ r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i)
    r[i] = sub_ck(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  return trim(std::move(r));
}

PolyZ mul(const PolyZ &a, const PolyZ &b) {
  if (a.empty() || b.empty()) return {};
  std::vector<i128> acc(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      acc[i + j] = add_ck(acc[i + j], mul_ck(i128(a[i]), i128(b[j])));
  PolyZ r(acc.size());
  for (size_t i = 0; i < acc.size(); ++i) r[i] = narrow_ck(acc[i]);
  return trim(std::move(r));
}

PolyZ scale(const PolyZ &a, i64 c) {
  PolyZ r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mul_ck(a[i], c);
  return trim(std::move(r));
}

PolyZ derivative(const PolyZ &f) {
  if (f.size() <= 1) return {};
  PolyZ r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = mul_ck(f[i], i64(i));
  return trim(std::move(r));
}

i64 content(const PolyZ &f) {
  i64 g = 0;
  for (i64 c : f) g = std::gcd(g, c);
  return g;
}

PolyZ div_exact(const PolyZ &a, const PolyZ &b) {
  if (b.empty()) throw error("domain", "polynomial division by zero");
  PolyZ r = a;
  if (r.empty()) return {};
  if (r.size() < b.size()) throw error("domain", "inexact polynomial division");
  PolyZ q(r.size() - b.size() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    i64 top = r.size() > k + b.size() - 1 ? r[k + b.size() - 1] : 0;
    if (top % lc(b) != 0) throw error("domain", "inexact polynomial division");
    i64 c = top / lc(b);
    q[k] = c;
    for (size_t i = 0; i < b.size(); ++i)
      r[k + i] = sub_ck(r[k + i], mul_ck(c, b[i]));
  }
  if (!trim(std::move(r)).empty()) throw error("domain", "inexact polynomial division");
  return trim(std::move(q));
}

PolyZ rem_monic(const PolyZ &a, const PolyZ &b) {
  if (b.empty() || lc(b) != 1) throw error("domain", "rem_monic needs a monic divisor");
  PolyZ r = a;
  while (r.size() >= b.size()) {
    i64 c = r.back();
    size_t shift = r.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      r[shift + i] = sub_ck(r[shift + i], mul_ck(c, b[i]));
    r = trim(std::move(r));
    if (r.size() < b.size()) break;
  }
  return r;
}

namespace {

// Pseudo-remainder over Z with 128-bit staging: lc(b)^(da-db+1) * a mod b.
std::vector<i128> prem128(std::vector<i128> a, const std::vector<i128> &b) {
  auto trim128 = [](std::vector<i128> &v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim128(a);
  if (a.size() < b.size()) {
    // still multiply by the required lc power for PRS bookkeeping? Not needed
    // for gcd use; return a as-is.
    return a;
  }
  i128 lb = b.back();
  int steps = int(a.size() - b.size()) + 1;
  for (int s = 0; s < steps && a.size() >= b.size(); ++s) {
    for (auto &c : a) c = mul_ck(c, lb);
    i128 top = a.back();
    i128 q = top / lb;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = sub_ck(a[shift + i], mul_ck(q, b[i]));
    trim128(a);
  }
  return a;
}

i128 content128(const std::vector<i128> &f) {
  i128 g = 0;
  for (i128 c : f) {
    i128 x = c < 0 ? -c : c;
    while (x) {
      i128 t = g % x;
      g = x;
      x = t;
    }
  }
  return g;
}

}  // namespace

PolyZ gcd(PolyZ a0, PolyZ b0) {
  a0 = trim(std::move(a0));
  b0 = trim(std::move(b0));
  if (a0.empty()) return b0;
  if (b0.empty()) return a0;
  i64 c = std::gcd(content(a0), content(b0));
  std::vector<i128> a(a0.begin(), a0.end()), b(b0.begin(), b0.end());
  auto primitive = [](std::vector<i128> &f) {
    i128 g = content128(f);
    if (g > 1)
      for (auto &x : f) x /= g;
    if (!f.empty() && f.back() < 0)
      for (auto &x : f) x = -x;
  };
  primitive(a);
  primitive(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<i128> r = prem128(a, b);
    primitive(r);
    a = std::move(b);
    b = std::move(r);
  }
  PolyZ g(a.size());
  for (size_t i = 0; i < a.size(); ++i) g[i] = narrow_ck(mul_ck(a[i], i128(c)));
  return g;
}

namespace {

// Sylvester-matrix resultant via Bareiss fraction-free elimination.
i128 resultant128(const PolyZ &a, const PolyZ &b) {
  int m = deg(a), n = deg(b);
  if (m < 0 || n < 0) return 0;
  if (m == 0 && n == 0) return 1;
  int size = m + n;
  std::vector<std::vector<i128>> s(size, std::vector<i128>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  i128 prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (s[k][k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < size; ++i)
        if (s[i][k] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return 0;
      std::swap(s[k], s[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i) {
      for (int j = k + 1; j < size; ++j) {
        i128 num = sub_ck(mul_ck(s[i][j], s[k][k]), mul_ck(s[i][k], s[k][j]));
        s[i][j] = num / prev;
      }
      s[i][k] = 0;
    }
    prev = s[k][k];
  }
  return sign > 0 ? s[size - 1][size - 1] : -s[size - 1][size - 1];
}

}  // namespace

i64 resultant(const PolyZ &a, const PolyZ &b) { return narrow_ck(resultant128(a, b)); }

i64 discriminant(const PolyZ &f) {
  int n = deg(f);
  if (n < 1) throw error("domain", "discriminant of a constant");
  if (n == 1) return 1;
  i128 res = resultant128(f, derivative(f));
  // monic f: disc = (-1)^(n(n-1)/2) * Res(f, f')
  if ((i64(n) * (n - 1) / 2) % 2 == 1) res = -res;
  return narrow_ck(res);
}

i128 eval_at(const PolyZ &f, i64 x) {
  i128 acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = add_ck(mul_ck(acc, i128(x)), i128(f[i]));
  return acc;
}

// ---------------------------------------------------------------------------
// Irreducibility over Q (monic f): factor mod a squarefree prime, Hensel-lift
// to p^K beyond the Mignotte bound, then try all factor subsets of degree
// <= n/2 as integer divisors.
// ---------------------------------------------------------------------------

namespace {

using PolyM = std::vector<u64>;  // coefficients in [0, m)

PolyM trim_m(PolyM f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PolyM mul_m(const PolyM &a, const PolyM &b, u64 m) {
  if (a.empty() || b.empty()) return {};
  PolyM r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = u64((u128(a[i]) * b[j] + r[i + j]) % m);
  return trim_m(std::move(r));
}

PolyM sub_m(const PolyM &a, const PolyM &b, u64 m) {
  PolyM r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0, y = i < b.size() ? b[i] : 0;
    r[i] = (x + m - y) % m;
  }
  return trim_m(std::move(r));
}

PolyM from_p(const PolyP &f) { return PolyM(f.begin(), f.end()); }

// Lift f = g*h (mod p^k) to (mod p^(k+1)); g, h monic, s*g + t*h = 1 (mod p).
void hensel_step(const PolyZ &f, PolyM &g, PolyM &h, const PolyP &s, const PolyP &t,
                 u64 p, u64 pk, u64 pk1) {
  // e = (f - g*h)/p^k mod p
  PolyM gh = mul_m(g, h, pk1);
  PolyP e;
  {
    size_t n = std::max(f.size(), gh.size());
    e.resize(n, 0);
    for (size_t i = 0; i < n; ++i) {
      i128 fi = i < f.size() ? i128(f[i]) : 0;
      i128 gi = i < gh.size() ? i128(gh[i]) : 0;
      i128 d = (fi - gi) % i128(pk1);
      if (d < 0) d += pk1;
      // d is divisible by p^k by the induction invariant
      e[i] = u32(u64(d / pk) % p);
    }
    e = polyp::trim(std::move(e));
  }
  PolyP gp(g.begin(), g.end()), hp(h.begin(), h.end());
  for (auto &c : gp) c = u32(c % p);
  for (auto &c : hp) c = u32(c % p);
  gp = polyp::trim(std::move(gp));
  hp = polyp::trim(std::move(hp));
  PolyP u = polyp::rem(polyp::mul(t, e, p), gp, p);
  PolyP v = polyp::rem(polyp::mul(s, e, p), hp, p);
  auto bump = [&](PolyM &target, const PolyP &corr) {
    if (target.size() < corr.size() + 0) target.resize(std::max(target.size(), corr.size()), 0);
    for (size_t i = 0; i < corr.size(); ++i)
      target[i] = (target[i] + u128(corr[i]) * pk) % pk1;
  };
  bump(g, u);
  bump(h, v);
}

// Lift the full monic factor list of f from mod p to mod p^K (recursive pair tree).
std::vector<PolyM> lift_tree(const PolyZ &f, const std::vector<PolyP> &factors, u64 p,
                             int K, u64 pK) {
  if (factors.size() == 1) {
    PolyM r(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
      i128 c = i128(f[i]) % i128(pK);
      if (c < 0) c += pK;
      r[i] = u64(c);
    }
    return {trim_m(std::move(r))};
  }
  size_t half = factors.size() / 2;
  PolyP g0{1}, h0{1};
  for (size_t i = 0; i < half; ++i) g0 = polyp::mul(g0, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i) h0 = polyp::mul(h0, factors[i], p);
  // Bezout s*g0 + t*h0 = 1 mod p via extended Euclid in F_p[t].
  PolyP s, t;
  {
    PolyP r0 = g0, r1 = h0;
    PolyP s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
      PolyP q, r;
      polyp::divmod(r0, r1, p, q, r);
      PolyP s2 = polyp::sub(s0, polyp::mul(q, s1, p), p);
      PolyP t2 = polyp::sub(t0, polyp::mul(q, t1, p), p);
      r0 = r1;
      r1 = r;
      s0 = s1;
      s1 = s2;
      t0 = t1;
      t1 = t2;
    }
    // r0 is a unit constant
    u64 inv = invmod(i64(r0[0]), p);
    for (auto &c : s0) c = u32(mulmod(c, inv, p));
    for (auto &c : t0) c = u32(mulmod(c, inv, p));
    s = s0;
    t = t0;
  }
  PolyM g = from_p(g0), h = from_p(h0);
  u64 pk = p;
  while (pk < pK) {
    u64 pk1 = pk * p;
    hensel_step(f, g, h, s, t, p, pk, pk1);
    pk = pk1;
  }
  // Recurse on both halves; g and h reduced mod pK are the sub-products.
  PolyZ gz(g.size()), hz(h.size());
  for (size_t i = 0; i < g.size(); ++i) gz[i] = i64(g[i]);
  for (size_t i = 0; i < h.size(); ++i) hz[i] = i64(h[i]);
  std::vector<PolyP> left(factors.begin(), factors.begin() + half);
  std::vector<PolyP> right(factors.begin() + half, factors.end());
  auto a = lift_tree(gz, left, p, K, pK);
  auto b = lift_tree(hz, right, p, K, pK);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

i64 symmetric(u64 c, u64 m) {
  return c > m / 2 ? i64(c) - i64(m) : i64(c);
}

}  // namespace

bool irreducible_over_q(const PolyZ &f_in) {
  PolyZ f = trim(f_in);
  int n = deg(f);
  if (n < 1) return false;
  if (lc(f) != 1) throw error("domain", "irreducibility test expects a monic polynomial");
  if (n == 1) return true;
  if (f[0] == 0) return false;  // divisible by t
  i64 disc = discriminant(f);
  if (disc == 0) return false;  // repeated root
  // Fast path: irreducible mod some small squarefree prime.
  std::vector<u64> good;
  for (u64 p : primes_upto(300)) {
    if (disc % i64(p) == 0) continue;
    good.push_back(p);
    if (polyp::is_irreducible(polyp::from_polyz(f, p), p)) return true;
    if (good.size() >= 8) break;
  }
  if (good.empty()) throw error("cap-exceeded", "no squarefree prime below 300");
  // Zassenhaus at the prime with the fewest modular factors.
  u64 p = good[0];
  std::vector<PolyP> best;
  for (u64 cand : good) {
    std::vector<PolyP> fs;
    for (auto &fa : polyp::factorize(polyp::from_polyz(f, cand), cand))
      fs.push_back(fa.g);
    if (best.empty() || fs.size() < best.size()) {
      best = fs;
      p = cand;
    }
  }
  // Mignotte bound: coefficients of any monic factor are < 2^n * ||f||_2.
  long double norm = 0;
  for (i64 c : f) norm += (long double)(c) * c;
  norm = sqrtl(norm);
  long double bound = ldexpl(norm, n) * 2 + 1;
  int K = 1;
  u64 pK = p;
  while ((long double)pK < bound) {
    if (pK > UINT64_MAX / p) throw_overflow("hensel modulus");
    pK *= p;
    ++K;
  }
  auto lifted = lift_tree(f, best, p, K, pK);
  int r = int(lifted.size());
  // Subset products of total degree <= n/2 tried as monic divisors over Z.
  for (u64 mask = 1; mask < (u64(1) << r) - 1; ++mask) {
    int degsum = 0;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) degsum += int(lifted[i].size()) - 1;
    if (degsum == 0 || degsum > n / 2) continue;
    PolyM prod{1};
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) prod = mul_m(prod, lifted[i], pK);
    PolyZ cand(prod.size());
    bool ok = true;
    for (size_t i = 0; i < prod.size(); ++i) {
      cand[i] = symmetric(prod[i], pK);
      if (std::abs((long double)cand[i]) > bound) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    try {
      (void)div_exact(f, cand);
      return false;  // found a proper factor
    } catch (const error &) {
      continue;
    }
  }
  return true;
}

std::string format(const PolyZ &f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = f.size(); i-- > 0;) {
    i64 c = f[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    i64 a = std::abs(c);
    if (i == 0) {
      os << a;
    } else {
      if (a != 1) os << a;
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

PolyZ parse(const std::string &s) {
  PolyZ f;
  size_t i = 0;
  auto fail = [&]() -> void { throw error("parse", "bad polynomial literal: " + s); };
  auto put = [&](size_t k, i64 c) {
    if (f.size() <= k) f.resize(k + 1, 0);
    f[k] = add_ck(f[k], c);
  };
  while (i < s.size()) {
    while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    if (i >= s.size()) break;
    i64 sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    i64 coeff = 1;
    bool saw_num = false;
    if (i < s.size() && std::isdigit((unsigned char)s[i])) {
      coeff = 0;
      while (i < s.size() && std::isdigit((unsigned char)s[i])) {
        coeff = add_ck(mul_ck(coeff, 10), i64(s[i] - '0'));
        ++i;
      }
      saw_num = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 't') {
      ++i;
      size_t k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail();
        k = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
          k = k * 10 + size_t(s[i] - '0');
          ++i;
        }
      }
      put(k, sign * coeff);
    } else {
      if (!saw_num) fail();
      put(0, sign * coeff);
    }
  }
  return trim(std::move(f));
}

}  // namespace polyz
}  // namespace arithdyn
