#include "arithdyn/witt.hpp"

#include <algorithm>
#include <numeric>

#include <json.hpp>

#include "arithdyn/factor.hpp"

namespace arithdyn {

WittRat::WittRat(PolyZ n, PolyZ d) : num(polyz::trim(std::move(n))), den(polyz::trim(std::move(d))) {
  if (num.empty() || den.empty() || num[0] != 1 || den[0] != 1)
    throw error("domain", "Witt vector parts need constant term 1");
  PolyZ h = polyz::gcd(num, den);
  if (polyz::deg(h) > 0) {
    if (h[0] == -1) h = polyz::scale(h, -1);
    if (h[0] != 1) throw error("domain", "common factor with unit constant expected");
    num = polyz::div_exact(num, h);
    den = polyz::div_exact(den, h);
  }
}

std::string WittRat::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["num"] = num;
  j["den"] = den;
  return j.dump();
}

WittRat WittRat::from_json(const std::string &text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (j.at("schema_version").get<int>() != 1)
    throw error("schema", "unsupported Witt schema version");
  return WittRat(j.at("num").get<PolyZ>(), j.at("den").get<PolyZ>());
}

WittRat teich(i64 r) { return WittRat(PolyZ{1, sub_ck(i64(0), r)}, PolyZ{1}); }

WittRat witt_add(const WittRat &a, const WittRat &b) {
  return WittRat(polyz::mul(a.num, b.num), polyz::mul(a.den, b.den));
}

WittRat witt_neg(const WittRat &a) { return WittRat(a.den, a.num); }

WittRat witt_sub(const WittRat &a, const WittRat &b) {
  return witt_add(a, witt_neg(b));
}

std::vector<i128> power_sums(const PolyZ &f, int n) {
  int m = polyz::deg(f);
  std::vector<i128> e(size_t(m) + 1, 0);
  e[0] = 1;
  for (int i = 1; i <= m; ++i) e[i] = (i % 2 == 0 ? 1 : -1) * i128(f[i]);
  std::vector<i128> p(size_t(n) + 1, 0);
  for (int k = 1; k <= n; ++k) {
    i128 acc = 0;
    int top = std::min(k - 1, m);
    for (int i = 1; i <= top; ++i) {
      i128 term = mul_ck(e[i], p[k - i]);
      acc = (i % 2 == 1) ? add_ck(acc, term) : sub_ck(acc, term);
    }
    if (k <= m) {
      i128 tail = mul_ck(i128(k), e[k]);
      acc = (k % 2 == 1) ? add_ck(acc, tail) : sub_ck(acc, tail);
    }
    p[k] = acc;
  }
  return std::vector<i128>(p.begin() + 1, p.end());
}

PolyZ poly_from_power_sums(const std::vector<i128> &p, int m) {
  if (int(p.size()) < m) throw error("domain", "not enough power sums");
  std::vector<i128> e(size_t(m) + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= m; ++k) {
    i128 acc = p[k - 1];
    for (int i = 1; i < k; ++i) {
      i128 term = mul_ck(e[i], p[k - i - 1]);
      acc = (i % 2 == 1) ? sub_ck(acc, term) : add_ck(acc, term);
    }
    if (acc % k != 0) throw error("overflow", "Newton reconstruction not integral");
    e[k] = ((k % 2 == 1) ? acc : -acc) / k;
  }
  PolyZ out(size_t(m) + 1);
  for (int i = 0; i <= m; ++i)
    out[i] = narrow_ck((i % 2 == 0 ? 1 : -1) * e[i]);
  return polyz::trim(std::move(out));
}

namespace {

// prod_(i,j) (1 - alpha_i beta_j t) from the power-sum product.
PolyZ root_product(const PolyZ &f, const PolyZ &g) {
  int m = polyz::deg(f), n = polyz::deg(g);
  if (m == 0 || n == 0) return PolyZ{1};
  int D = m * n;
  auto pf = power_sums(f, D);
  auto pg = power_sums(g, D);
  std::vector<i128> prod(size_t(D), 0);
  for (int k = 0; k < D; ++k) prod[k] = mul_ck(pf[k], pg[k]);
  return poly_from_power_sums(prod, D);
}

}  // namespace

WittRat witt_mul(const WittRat &a, const WittRat &b) {
  PolyZ n1 = root_product(a.num, b.num);
  PolyZ n2 = root_product(a.den, b.den);
  PolyZ d1 = root_product(a.num, b.den);
  PolyZ d2 = root_product(a.den, b.num);
  return WittRat(polyz::mul(n1, n2), polyz::mul(d1, d2));
}

GhostVector ghost(const WittRat &w, int n) {
  if (n < 1) throw error("domain", "ghost precision must be >= 1");
  auto pn = power_sums(w.num, n);
  auto pd = power_sums(w.den, n);
  GhostVector out;
  out.entries.resize(size_t(n));
  for (int k = 0; k < n; ++k) out.entries[k] = narrow_ck(sub_ck(pn[k], pd[k]));
  return out;
}

namespace {

PolyZ frobenius_part(const PolyZ &f, u64 nu) {
  int m = polyz::deg(f);
  if (m == 0) return f;
  auto p = power_sums(f, int(nu) * m);
  std::vector<i128> sub(size_t(m), 0);
  for (int k = 1; k <= m; ++k) sub[k - 1] = p[size_t(nu) * k - 1];
  return poly_from_power_sums(sub, m);
}

}  // namespace

WittRat frobenius_w(const WittRat &w, u64 nu) {
  if (nu == 0) throw error("domain", "frobenius index must be positive");
  if (nu > 64) throw error("domain", "frobenius index beyond supported range");
  return WittRat(frobenius_part(w.num, nu), frobenius_part(w.den, nu));
}

WittRat verschiebung(const WittRat &w, u64 nu) {
  if (nu == 0) throw error("domain", "verschiebung index must be positive");
  auto stretch = [&](const PolyZ &f) {
    PolyZ out(size_t(polyz::deg(f)) * nu + 1, 0);
    for (size_t i = 0; i < f.size(); ++i) out[i * nu] = f[i];
    return out;
  };
  return WittRat(stretch(w.num), stretch(w.den));
}

// ---------------------------------------------------------------------------

void TeichCombo::add_term(int sign, const PolyZ &elem) {
  if (sign != 1 && sign != -1) throw error("domain", "term sign must be +1 or -1");
  terms.push_back({sign, polyz::rem_monic(elem, base.f)});
}

TeichCombo combo_add(const TeichCombo &a, const TeichCombo &b) {
  if (!(a.base == b.base)) throw error("domain", "combo bases differ");
  TeichCombo out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

TeichCombo combo_neg(const TeichCombo &a) {
  TeichCombo out = a;
  for (auto &[s, r] : out.terms) s = -s;
  return out;
}

TeichCombo combo_mul(const TeichCombo &a, const TeichCombo &b) {
  if (!(a.base == b.base)) throw error("domain", "combo bases differ");
  TeichCombo out(a.base);
  for (auto &[sa, ra] : a.terms)
    for (auto &[sb, rb] : b.terms)
      out.add_term(sa * sb, polyz::mul(ra, rb));
  return out;
}

TeichCombo combo_frobenius(const TeichCombo &a, u64 nu) {
  if (nu == 0) throw error("domain", "frobenius index must be positive");
  TeichCombo out(a.base);
  for (auto &[s, r] : a.terms) {
    PolyZ acc{1};
    for (u64 k = 0; k < nu; ++k) acc = polyz::rem_monic(polyz::mul(acc, r), a.base.f);
    out.add_term(s, acc);
  }
  return out;
}

WittRat combo_to_wittrat(const TeichCombo &a) {
  if (a.base.degree() != 1)
    throw error("domain", "WittRat presentation needs the base Z");
  WittRat w;
  for (auto &[s, r] : a.terms) {
    i64 c = r.empty() ? 0 : r[0];
    w = s > 0 ? witt_add(w, teich(c)) : witt_sub(w, teich(c));
  }
  return w;
}

// ---------------------------------------------------------------------------

PolyZ cyclotomic_polynomial(i64 M) {
  if (M < 1) throw error("domain", "cyclotomic index must be positive");
  auto xn_minus_1 = [](i64 n) {
    PolyZ f(size_t(n) + 1, 0);
    f[0] = -1;
    f[size_t(n)] = 1;
    return f;
  };
  PolyZ out{1};
  std::vector<i64> divide_by;
  for (i64 d = 1; d <= M; ++d) {
    if (M % d != 0) continue;
    // Moebius of M/d
    i64 q = M / d;
    int mu = 1;
    for (auto &[pr, e] : factorize(u64(q)).factors) {
      if (e > 1) {
        mu = 0;
        break;
      }
      mu = -mu;
    }
    if (mu == 1)
      out = polyz::mul(out, xn_minus_1(d));
    else if (mu == -1)
      divide_by.push_back(d);
  }
  for (i64 d : divide_by) out = polyz::div_exact(out, xn_minus_1(d));
  return out;
}

void CycloValue::add_root(i64 exponent, i64 count) {
  i64 e = ((exponent % M) + M) % M;
  coords[size_t(e)] = add_ck(coords[size_t(e)], count);
}

bool CycloValue::is_zero() const {
  PolyZ f = polyz::trim(PolyZ(coords));
  if (f.empty()) return true;
  PolyZ rem = polyz::rem_monic(f, cyclotomic_polynomial(M));
  return rem.empty();
}

bool CycloValue::equals(const CycloValue &o) const {
  if (M != o.M) return false;
  CycloValue diff(M);
  for (i64 e = 0; e < M; ++e)
    diff.coords[size_t(e)] = sub_ck(coords[size_t(e)], o.coords[size_t(e)]);
  return diff.is_zero();
}

CycloValue evaluate(const TeichCombo &psi, const TruncatedCharacter &chi) {
  if (!(psi.base == chi.point.order))
    throw error("domain", "combo base and character point belong to different orders");
  CycloValue val(chi.M);
  auto cf = character_field(chi);
  for (auto &[sign, r] : psi.terms) {
    auto reduced = cf.point_field->reduce(r);
    if (cf.point_field->is_zero(reduced)) continue;  // the prime maps to 0
    auto y = cf.embed(reduced);
    i64 e = char_value(chi, cf, y);  // throws level-mismatch when outside mu_M
    val.add_root(e, sign);
  }
  return val;
}

std::vector<ClosedPoint> zero_set(const MonogenicOrder &order, const PolyZ &r0,
                                  u64 norm_bound) {
  PolyZ r = polyz::rem_monic(r0, order.f);
  if (r.empty()) throw error("domain", "zero element has the whole space as zero set");
  std::vector<ClosedPoint> out;
  for (auto &pt : census(order, norm_bound).points) {
    PolyP rp = polyp::from_polyz(r, pt.p);
    if (polyp::rem(rp, pt.g, pt.p).empty()) out.push_back(pt);
  }
  return out;
}

}  // namespace arithdyn
