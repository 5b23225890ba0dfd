#include "arithdyn/poly_mod.hpp"

#include <algorithm>
#include <random>

#include "arithdyn/factor.hpp"

namespace arithdyn {
namespace polyp {

PolyP trim(PolyP f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

PolyP from_polyz(const PolyZ &f, u64 p) {
  PolyP r(f.size());
  for (size_t i = 0; i < f.size(); ++i) {
    i64 c = f[i] % i64(p);
    if (c < 0) c += i64(p);
    r[i] = u32(c);
  }
  return trim(std::move(r));
}

PolyP add(const PolyP &a, const PolyP &b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 s = (i < a.size() ? a[i] : 0u) + u64(i < b.size() ? b[i] : 0u);
    r[i] = u32(s % p);
  }
  return trim(std::move(r));
}

PolyP sub(const PolyP &a, const PolyP &b, u64 p) {
  PolyP r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    u64 s = (i < a.size() ? a[i] : 0u) + p - u64(i < b.size() ? b[i] : 0u);
    r[i] = u32(s % p);
  }
  return trim(std::move(r));
}

PolyP mul(const PolyP &a, const PolyP &b, u64 p) {
  if (a.empty() || b.empty()) return {};
  PolyP r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = u32((u64(r[i + j]) + u64(a[i]) * b[j]) % p);
  }
  return trim(std::move(r));
}

void divmod(const PolyP &a, const PolyP &b, u64 p, PolyP &q, PolyP &r) {
  if (b.empty()) throw error("domain", "polynomial division by zero");
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  u64 inv_lc = invmod(i64(b.back()), p);
  while (r.size() >= b.size()) {
    u64 c = mulmod(r.back(), inv_lc, p);
    size_t shift = r.size() - b.size();
    if (c != 0) {
      q[shift] = u32(c);
      for (size_t i = 0; i < b.size(); ++i) {
        u64 s = (u64(r[shift + i]) + p - mulmod(c, b[i], p)) % p;
        r[shift + i] = u32(s);
      }
    }
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() < b.size()) break;
  }
  q = trim(std::move(q));
  r = trim(std::move(r));
}

PolyP rem(const PolyP &a, const PolyP &b, u64 p) {
  PolyP q, r;
  divmod(a, b, p, q, r);
  return r;
}

PolyP make_monic(PolyP f, u64 p) {
  if (f.empty() || f.back() == 1) return f;
  u64 inv = invmod(i64(f.back()), p);
  for (auto &c : f) c = u32(mulmod(c, inv, p));
  return f;
}

PolyP gcd(PolyP a, PolyP b, u64 p) {
  while (!b.empty()) {
    PolyP r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(std::move(a), p);
}

PolyP powmod(const PolyP &base, u64 exp, const PolyP &mod, u64 p) {
  PolyP r{1};
  PolyP b = rem(base, mod, p);
  while (exp) {
    if (exp & 1) r = rem(mul(r, b, p), mod, p);
    b = rem(mul(b, b, p), mod, p);
    exp >>= 1;
  }
  return r;
}

PolyP derivative(const PolyP &f, u64 p) {
  if (f.size() <= 1) return {};
  PolyP r(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) r[i - 1] = u32(u64(f[i]) * (i % p) % p);
  return trim(std::move(r));
}

u32 eval(const PolyP &f, u32 x, u64 p) {
  u64 acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
  return u32(acc);
}

u64 encode(const PolyP &f, u64 p) {
  u64 code = 0;
  for (size_t i = f.size(); i-- > 0;) {
    if (code > (UINT64_MAX - f[i]) / p) throw_overflow("polyp::encode");
    code = code * p + f[i];
  }
  return code;
}

PolyP decode(u64 code, u64 p) {
  PolyP f;
  while (code) {
    f.push_back(u32(code % p));
    code /= p;
  }
  return f;
}

namespace {

// x^(p^k) mod f by iterated Frobenius; each step is one powmod with exponent p.
PolyP frob_power(const PolyP &f, u64 p, int k) {
  PolyP x{0, 1};
  PolyP h = rem(x, f, p);
  for (int i = 0; i < k; ++i) h = powmod(h, p, f, p);
  return h;
}

}  // namespace

bool is_irreducible(const PolyP &f, u64 p) {
  int n = deg(f);
  if (n <= 0) return false;
  if (n == 1) return true;
  PolyP x{0, 1};
  PolyP h = frob_power(f, p, n);
  if (sub(h, x, p) != PolyP{}) return false;
  for (auto &[q, e] : arithdyn::factorize(u64(n)).factors) {
    (void)e;
    PolyP hq = frob_power(f, p, n / int(q));
    if (!is_one(gcd(sub(hq, x, p), f, p))) return false;
  }
  return true;
}

PolyP first_irreducible(u64 p, int d) {
  if (d < 1) throw error("domain", "first_irreducible: degree must be >= 1");
  for (u64 code = 0;; ++code) {
    PolyP f = decode(code, p);
    f.resize(size_t(d) + 1, 0);
    f[d] = 1;
    if (is_irreducible(f, p)) return f;
    if (code == u64(-1)) break;
  }
  throw error("domain", "first_irreducible: search exhausted");
}

namespace {

// Squarefree decomposition in characteristic p.
void squarefree_rec(PolyP f, u64 p, int mult, std::vector<std::pair<PolyP, int>> &out) {
  f = make_monic(std::move(f), p);
  if (deg(f) <= 0) return;
  PolyP fp = derivative(f, p);
  if (fp.empty()) {
    // f = u(t^p); take coefficient-wise p-th root (identity on F_p).
    PolyP u;
    for (size_t i = 0; i < f.size(); i += size_t(p)) u.push_back(f[i]);
    squarefree_rec(trim(std::move(u)), p, mult * int(p), out);
    return;
  }
  PolyP c = gcd(f, fp, p);
  PolyP w, r0;
  divmod(f, c, p, w, r0);
  int i = 1;
  while (deg(w) > 0) {
    PolyP y = gcd(w, c, p);
    PolyP z, r;
    divmod(w, y, p, z, r);
    if (deg(z) > 0) out.push_back({make_monic(z, p), mult * i});
    w = std::move(y);
    PolyP q2;
    divmod(c, w, p, q2, r);
    c = std::move(q2);
    ++i;
  }
  if (deg(c) > 0) {
    PolyP u;
    for (size_t k = 0; k < c.size(); k += size_t(p)) u.push_back(c[k]);
    squarefree_rec(trim(std::move(u)), p, mult * int(p), out);
  }
}

// Distinct-degree stage: (product of irreducibles of degree d, d) pairs.
std::vector<std::pair<PolyP, int>> distinct_degree(PolyP f, u64 p) {
  std::vector<std::pair<PolyP, int>> out;
  PolyP x{0, 1};
  PolyP h = rem(x, f, p);
  int d = 0;
  while (deg(f) >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, p, f, p);
    PolyP g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      out.push_back({g, d});
      PolyP q, r;
      divmod(f, g, p, q, r);
      f = std::move(q);
      h = rem(h, f, p);
    }
  }
  if (deg(f) > 0) out.push_back({f, deg(f)});
  return out;
}

// a^((p^d-1)/2) mod w using (p^d-1)/2 = (p-1)/2 * (1 + p + ... + p^(d-1)).
PolyP half_order_power(const PolyP &a, int d, const PolyP &w, u64 p) {
  PolyP prod = rem(a, w, p);
  PolyP frob = prod;
  for (int i = 1; i < d; ++i) {
    frob = powmod(frob, p, w, p);
    prod = rem(mul(prod, frob, p), w, p);
  }
  return powmod(prod, (p - 1) / 2, w, p);
}

// Equal-degree splitting of a monic squarefree product of degree-d factors.
void equal_degree_rec(const PolyP &w, int d, u64 p, std::mt19937_64 &rng,
                      std::vector<PolyP> &out) {
  if (deg(w) == d) {
    out.push_back(w);
    return;
  }
  PolyP g;
  while (true) {
    PolyP a(size_t(deg(w)), 0);
    for (auto &c : a) c = u32(rng() % p);
    a = trim(std::move(a));
    if (deg(a) < 1) continue;
    if (p == 2) {
      // Trace map splits in characteristic 2.
      PolyP t = rem(a, w, p), acc = t;
      for (int i = 1; i < d; ++i) {
        t = rem(mul(t, t, p), w, p);
        acc = add(acc, t, p);
      }
      g = gcd(acc, w, p);
    } else {
      PolyP b = half_order_power(a, d, w, p);
      g = gcd(sub(b, PolyP{1}, p), w, p);
    }
    if (deg(g) > 0 && deg(g) < deg(w)) break;
  }
  PolyP q, r;
  divmod(w, g, p, q, r);
  equal_degree_rec(g, d, p, rng, out);
  equal_degree_rec(q, d, p, rng, out);
}

}  // namespace

std::vector<Factor> factorize(const PolyP &f_in, u64 p) {
  PolyP f = trim(f_in);
  if (f.empty()) throw error("domain", "factorize: zero polynomial");
  std::vector<Factor> out;
  if (deg(f) == 0) return out;
  std::vector<std::pair<PolyP, int>> sqf;
  squarefree_rec(f, p, 1, sqf);
  for (auto &[g, mult] : sqf) {
    for (auto &[prod, d] : distinct_degree(g, p)) {
      std::vector<PolyP> irr;
      // Seeded from the input so runs are reproducible.
      std::mt19937_64 rng(encode(prod, p) ^ 0x9e3779b97f4a7c15ull);
      equal_degree_rec(prod, d, p, rng, irr);
      for (auto &gi : irr) out.push_back({gi, mult});
    }
  }
  std::sort(out.begin(), out.end(), [&](const Factor &a, const Factor &b) {
    if (deg(a.g) != deg(b.g)) return deg(a.g) < deg(b.g);
    return encode(a.g, p) < encode(b.g, p);
  });
  return out;
}

std::vector<PolyP> all_monic_irreducibles(u64 p, int d) {
  std::vector<PolyP> out;
  u64 count = 1;
  for (int i = 0; i < d; ++i) {
    if (count > (u64(1) << 40) / p) throw error("cap-exceeded", "irreducible enumeration too large");
    count *= p;
  }
  for (u64 code = 0; code < count; ++code) {
    PolyP f = decode(code, p);
    f.resize(size_t(d) + 1, 0);
    f[d] = 1;
    if (is_irreducible(f, p)) out.push_back(f);
  }
  return out;
}

}  // namespace polyp
}  // namespace arithdyn
