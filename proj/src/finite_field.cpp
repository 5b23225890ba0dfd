#include "arithdyn/finite_field.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

namespace arithdyn {

FiniteField::FiniteField(u64 p, int d) : p_(p), d_(d) {
  modulus_ = polyp::first_irreducible(p, d);
  init();
}

FiniteField::FiniteField(u64 p, PolyP modulus) : p_(p), modulus_(std::move(modulus)) {
  d_ = polyp::deg(modulus_);
  if (d_ < 1) throw error("domain", "field modulus must have degree >= 1");
  if (modulus_.back() != 1) throw error("domain", "field modulus must be monic");
  if (!polyp::is_irreducible(modulus_, p_))
    throw error("domain", "field modulus is reducible");
  init();
}

void FiniteField::init() {
  if (p_ < 2 || !is_prime(p_)) throw error("domain", "field characteristic must be prime");
  q_ = 1;
  for (int i = 0; i < d_; ++i) {
    if (q_ > UINT64_MAX / p_) throw_overflow("field order");
    q_ *= p_;
  }
}

FiniteField::Elem FiniteField::one() const {
  Elem e(size_t(d_), 0);
  e[0] = 1;
  return e;
}

FiniteField::Elem FiniteField::from_int(i64 c) const {
  Elem e(size_t(d_), 0);
  i64 r = c % i64(p_);
  if (r < 0) r += i64(p_);
  e[0] = u32(r);
  return e;
}

FiniteField::Elem FiniteField::reduce(const PolyP &f) const {
  PolyP r = polyp::rem(f, modulus_, p_);
  r.resize(size_t(d_), 0);
  return r;
}

FiniteField::Elem FiniteField::reduce(const PolyZ &f) const {
  return reduce(polyp::from_polyz(f, p_));
}

bool FiniteField::is_zero(const Elem &a) const {
  return std::all_of(a.begin(), a.end(), [](u32 c) { return c == 0; });
}

FiniteField::Elem FiniteField::add(const Elem &a, const Elem &b) const {
  Elem r(size_t(d_), 0);
  for (int i = 0; i < d_; ++i) r[i] = u32((u64(a[i]) + b[i]) % p_);
  return r;
}

FiniteField::Elem FiniteField::sub(const Elem &a, const Elem &b) const {
  Elem r(size_t(d_), 0);
  for (int i = 0; i < d_; ++i) r[i] = u32((u64(a[i]) + p_ - b[i]) % p_);
  return r;
}

FiniteField::Elem FiniteField::neg(const Elem &a) const { return sub(zero(), a); }

FiniteField::Elem FiniteField::mul(const Elem &a, const Elem &b) const {
  PolyP r = polyp::mul(polyp::trim(a), polyp::trim(b), p_);
  return reduce(r);
}

FiniteField::Elem FiniteField::pow(const Elem &a, u64 e) const {
  Elem r = one();
  Elem b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FiniteField::Elem FiniteField::inv(const Elem &a) const {
  if (is_zero(a)) throw error("domain", "inverse of zero field element");
  return pow(a, q_ - 2);
}

u64 FiniteField::encode(const Elem &a) const {
  u64 code = 0;
  for (size_t i = a.size(); i-- > 0;) code = code * p_ + a[i];
  return code;
}

FiniteField::Elem FiniteField::decode(u64 code) const {
  Elem e(size_t(d_), 0);
  for (int i = 0; i < d_ && code; ++i) {
    e[i] = u32(code % p_);
    code /= p_;
  }
  return e;
}

const std::vector<std::pair<u64, int>> &FiniteField::group_factorization() const {
  if (group_factors_.empty() && q_ > 2)
    group_factors_ = factorize(q_ - 1).factors;
  return group_factors_;
}

u64 FiniteField::elem_order(const Elem &a) const {
  if (is_zero(a)) throw error("domain", "order of zero element");
  u64 e = q_ - 1;
  for (auto &[pr, k] : group_factorization()) {
    (void)k;
    while (e % pr == 0) {
      Elem t = pow(a, e / pr);
      if (t != one()) break;
      e /= pr;
    }
  }
  return e;
}

const FiniteField::Elem &FiniteField::generator() const {
  if (!have_gen_) {
    for (u64 code = 1; code < q_; ++code) {
      Elem c = decode(code);
      if (elem_order(c) == q_ - 1) {
        gen_ = c;
        have_gen_ = true;
        break;
      }
    }
  }
  return gen_;
}

u64 FiniteField::dlog(const Elem &base, const Elem &target) const {
  if (is_zero(target)) throw error("domain", "discrete log of zero");
  if (is_zero(base) || elem_order(base) != q_ - 1)
    throw error("not-a-generator", "discrete log base does not generate the unit group");
  u64 n = q_ - 1;
  if (n == 1) return 0;
  u64 m = u64(std::ceil(std::sqrt((double)n)));
  std::unordered_map<u64, u64> baby;
  baby.reserve(size_t(m * 2));
  Elem cur = one();
  for (u64 j = 0; j < m; ++j) {
    baby.emplace(encode(cur), j);
    cur = mul(cur, base);
  }
  Elem giant = inv(pow(base, m));  // base^(-m)
  Elem y = target;
  for (u64 k = 0; k * m <= n; ++k) {
    auto it = baby.find(encode(y));
    if (it != baby.end()) return (k * m + it->second) % n;
    y = mul(y, giant);
  }
  throw error("domain", "discrete log not found");
}

FiniteField::Elem FiniteField::min_root(const PolyP &g) const {
  if (q_ > (u64(1) << 22))
    throw error("cap-exceeded", "root search in a field beyond 2^22 elements");
  for (u64 code = 0; code < q_; ++code) {
    Elem x = decode(code);
    // Horner evaluation of g at x.
    Elem acc = zero();
    for (size_t i = g.size(); i-- > 0;) {
      acc = mul(acc, x);
      Elem c = from_int(i64(g[i]));
      acc = add(acc, c);
    }
    if (is_zero(acc)) return x;
  }
  throw error("domain", "polynomial has no root in this field");
}

FiniteField::Elem FiniteField::eval_polyz(const PolyZ &f, const Elem &x) const {
  Elem acc = zero();
  for (size_t i = f.size(); i-- > 0;) {
    acc = mul(acc, x);
    acc = add(acc, from_int(f[i]));
  }
  return acc;
}

}  // namespace arithdyn
