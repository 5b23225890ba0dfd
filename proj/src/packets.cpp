#include "arithdyn/packets.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include <json.hpp>

namespace arithdyn {

namespace {

// p-adic valuation of a reduced positive rational.
int val_p(const Rat &r, u64 p) {
  int v = 0;
  i64 n = r.num;
  while (n % i64(p) == 0) {
    n /= i64(p);
    ++v;
  }
  i64 d = r.den;
  while (d % i64(p) == 0) {
    d /= i64(p);
    --v;
  }
  return v;
}

i64 min_coset_rep(i64 a, i64 M, u64 q) {
  if (M == 1) return 0;
  u64 step = q % u64(M);
  u64 ord = mult_order(step, u64(M));
  u64 best = u64(a) % u64(M);
  u64 cur = best;
  for (u64 k = 1; k < ord; ++k) {
    cur = mulmod(cur, step, u64(M));
    best = std::min(best, cur);
  }
  return i64(best);
}

}  // namespace

PacketPoint canonicalize(const ClosedPoint &pt, i64 M, i64 a_raw, const Rat &r_raw) {
  if (M < 1) throw error("domain", "level must be positive");
  if (std::gcd<u64, u64>(u64(M), pt.p) != 1)
    throw error("domain", "level shares a factor with p");
  if (!(r_raw.num > 0)) throw error("domain", "scale coordinate must be positive");
  i64 a = ((a_raw % M) + M) % M;
  if (M > 1 && std::gcd(a, M) != 1)
    throw error("domain", "exponent must be a unit mod the level");
  int e = val_p(r_raw, pt.p);
  Rat pe(1);
  Rat r = r_raw;
  for (int i = 0; i < std::abs(e); ++i) pe = pe * Rat(i64(pt.p));
  r = e >= 0 ? r / pe : r * pe;
  // twist the exponent by p^e (negative e uses the inverse)
  if (M > 1) {
    u64 step = e >= 0 ? pt.p % u64(M) : invmod(i64(pt.p % u64(M)), u64(M));
    u64 factor = powmod(step, u64(std::abs(e)), u64(M));
    a = i64(mulmod(u64(a), factor, u64(M)));
  }
  PacketPoint out{pt, M, min_coset_rep(a, M, pt.norm), r};
  return out;
}

PacketPoint act(const PacketPoint &pt, const Rat &scale) {
  if (!(scale.num > 0)) throw error("domain", "the action takes positive rationals");
  return canonicalize(pt.point, pt.M, pt.abar, pt.r * scale);
}

u64 isotropy_generator(const PacketPoint &pt) { return pt.point.norm; }

std::vector<i64> fiber_label(const PacketPoint &pt) {
  std::vector<i64> out;
  if (pt.M == 1) return {0};
  u64 M = u64(pt.M);
  u64 step = pt.point.p % M;
  u64 ord = mult_order(step, M);
  u64 cur = u64(pt.abar);
  for (u64 k = 0; k < ord; ++k) {
    out.push_back(i64(cur));
    cur = mulmod(cur, step, M);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IsotropyReport isotropy_at_level(const ClosedPoint &pt, i64 M, u64 B) {
  if (std::gcd<u64, u64>(u64(M), pt.p) != 1)
    throw error("domain", "level shares a factor with p");
  if (B < 1) throw error("domain", "bound must be >= 1");
  IsotropyReport rep{pt, M, B, {}};
  std::vector<u64> powers;  // q^k mod M over one period
  if (M == 1) {
    powers = {0};
  } else {
    u64 q = pt.norm % u64(M);
    u64 ord = mult_order(q, u64(M));
    u64 cur = 1;
    for (u64 k = 0; k < ord; ++k) {
      powers.push_back(cur);
      cur = mulmod(cur, q, u64(M));
    }
  }
  for (u64 nu = 1; nu <= B; ++nu) {
    for (u64 nu2 = 1; nu2 <= B; ++nu2) {
      if (std::gcd(nu, nu2) != 1) continue;
      bool hit = false;
      if (M == 1) {
        hit = true;
      } else {
        for (u64 pw : powers) {
          if (mulmod(nu2 % u64(M), pw, u64(M)) == nu % u64(M)) {
            hit = true;
            break;
          }
        }
      }
      if (hit) rep.detected.push_back({nu, nu2});
    }
  }
  std::sort(rep.detected.begin(), rep.detected.end());
  return rep;
}

std::vector<std::pair<u64, u64>> exact_isotropy_fractions(const ClosedPoint &pt, u64 B) {
  std::vector<std::pair<u64, u64>> out{{1, 1}};
  u64 q = pt.norm;
  for (u64 pw = q; pw <= B; ) {
    out.push_back({pw, 1});
    out.push_back({1, pw});
    if (pw > B / q) break;
    pw *= q;
  }
  std::sort(out.begin(), out.end());
  return out;
}

i64 stable_level(const ClosedPoint &pt, u64 B, i64 cap) {
  auto expected = exact_isotropy_fractions(pt, B);
  for (i64 M = 2; M <= cap; ++M) {
    if (std::gcd<u64, u64>(u64(M), pt.p) != 1) continue;
    if (isotropy_at_level(pt, M, B).detected == expected) return M;
  }
  throw error("cap-exceeded", "no exact level at or below the cap");
}

std::string IsotropyReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["point"] = {{"p", point.p}, {"d", point.d}};
  j["level"] = level;
  j["bound"] = bound;
  j["detected"] = nlohmann::json::array();
  for (auto &[nu, nu2] : detected)
    j["detected"].push_back(std::to_string(nu) + "/" + std::to_string(nu2));
  return j.dump();
}

// ---------------------------------------------------------------------------
// Coset-surjectivity witnesses
// ---------------------------------------------------------------------------

namespace {

// Ambient fields cached per (p, degree); construction dominates otherwise.
std::shared_ptr<FiniteField> ambient_field(u64 p, int degree) {
  thread_local std::map<std::pair<u64, int>, std::shared_ptr<FiniteField>> cache;
  auto key = std::make_pair(p, degree);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<FiniteField>(p, degree);
  cache.emplace(key, f);
  return f;
}

// Minimal x >= 0 with a*x = b (mod n), or -1 if unsolvable.
i64 solve_linear_congruence(u64 a, u64 b, u64 n) {
  u64 g = std::gcd(a, n);
  if (b % g != 0) return -1;
  u64 n2 = n / g;
  if (n2 == 1) return 0;
  u64 x = mulmod((b / g) % n2, invmod(i64((a / g) % n2), n2), n2);
  return i64(x);
}

}  // namespace

bool SurjectivityWitness::verify() const {
  const FiniteField &F = *ambient;
  u64 N = F.group_order();
  auto sig_y = F.pow(y, q);  // sigma(y) = y^q
  auto lhs = F.mul(F.pow(y, nu), F.inv(F.pow(sig_y, nu2)));
  if (F.mul(zeta, lhs) != c) return false;
  u64 ob = u64(order_bound) % N;
  if (ob == 0) ob = N;  // zeta^N = 1 anyway
  return F.pow(zeta, ob) == F.one();
}

SurjectivityWitness surjectivity_witness(const FiniteField &FQ, u64 q, u64 nu, u64 nu2,
                                         const FiniteField::Elem &c, u64 field_cap) {
  if (nu == nu2 || nu == 0 || nu2 == 0)
    throw error("domain", "the power pair must be distinct positive integers");
  u64 Q = FQ.order();
  // F_q must be a subfield.
  {
    int dq = 0;
    u64 qq = q;
    while (qq % FQ.p() == 0 && qq > 1) {
      qq /= FQ.p();
      ++dq;
    }
    if (qq != 1 || dq == 0 || FQ.degree() % dq != 0)
      throw error("domain", "q must cut out a subfield of the given field");
  }
  if (FQ.is_zero(c)) throw error("domain", "witness requires a unit");

  u64 e = FQ.dlog(FQ.generator(), c);
  u64 ordc = e == 0 ? 1 : (Q - 1) / std::gcd(e, Q - 1);
  u64 i = ordc == 1 ? 1 : mult_order(q % ordc, ordc);

  // D = nu^i - nu2^i, checked in 128-bit.
  i128 D = 1, D2 = 1;
  for (u64 k = 0; k < i; ++k) {
    D = mul_ck(D, i128(nu));
    D2 = mul_ck(D2, i128(nu2));
  }
  D = sub_ck(D, D2);
  i64 order_bound = narrow_ck(D < 0 ? -D : D);

  // Search the extension degree s where z^D = c becomes solvable.
  for (int s = 1;; ++s) {
    i128 Ns_wide = 1;
    for (int k = 0; k < s; ++k) Ns_wide = mul_ck(Ns_wide, i128(Q));
    if (Ns_wide > i128(field_cap))
      throw error("cap-exceeded", "no solvable extension below the field cap");
    u64 Ns = u64(Ns_wide) - 1;
    u64 embed_factor = Ns / (Q - 1);
    u64 e_amb = mulmod(e % Ns, embed_factor % Ns, Ns);
    i128 Dm_wide = D % i128(Ns);
    if (Dm_wide < 0) Dm_wide += Ns;
    u64 Dm = u64(Dm_wide);
    i64 x = solve_linear_congruence(Dm, e_amb, Ns);
    if (x < 0) continue;

    SurjectivityWitness w;
    w.q = q;
    w.nu = nu;
    w.nu2 = nu2;
    w.i = int(i);
    w.s = s;
    w.order_bound = order_bound;
    w.ambient = ambient_field(FQ.p(), FQ.degree() * s);
    const FiniteField &F = *w.ambient;
    auto g = F.generator();
    w.c = F.pow(g, e_amb);
    // y = z^W with W = sum nu^(i-1-k) nu2^k q^k, all mod the group order.
    u64 W = 0;
    for (u64 k = 0; k < i; ++k) {
      u64 term = 1;
      for (u64 t = 0; t < i - 1 - k; ++t) term = mulmod(term, nu % Ns, Ns);
      for (u64 t = 0; t < k; ++t) term = mulmod(term, nu2 % Ns, Ns);
      term = mulmod(term, powmod(q % Ns, k, Ns), Ns);
      W = (W + term) % Ns;
    }
    u64 zx = u64(x);
    w.y = F.pow(g, mulmod(zx, W, Ns));
    // eta = z^(q^i - 1); zeta = eta^(nu2^i)
    u64 qi = powmod(q % Ns, i, Ns);
    u64 eta_exp = mulmod(zx, (qi + Ns - 1) % Ns, Ns);
    u64 nu2i = 1;
    for (u64 t = 0; t < i; ++t) nu2i = mulmod(nu2i, nu2 % Ns, Ns);
    w.zeta = F.pow(g, mulmod(eta_exp, nu2i, Ns));
    return w;
  }
}

u64 union_index(u64 N, u64 nu, u64 nu2) {
  if (N < 1) throw error("domain", "N must be positive");
  if (N == 1) return 1;
  if (std::gcd(N, nu) != 1 || std::gcd(N, nu2) != 1)
    throw error("non-coprime", "the root order shares a factor with the power pair");
  u64 a = nu % N, b = nu2 % N;
  u64 pa = a, pb = b;
  u64 cap = euler_phi(N);
  for (u64 i = 1; i <= cap; ++i) {
    if (pa == pb) return i;
    pa = mulmod(pa, a, N);
    pb = mulmod(pb, b, N);
  }
  throw error("domain", "no index found below phi(N); broken invariant");
}

// ---------------------------------------------------------------------------
// Suspension flow
// ---------------------------------------------------------------------------

bool SuspensionPoint::operator==(const SuspensionPoint &o) const {
  if (packet_base() != o.packet_base() || theta != o.theta) return false;
  if (packet_base()) return *pbase == *o.pbase;
  return cbase->denom == o.cbase->denom && cbase->chr.M == o.cbase->chr.M &&
         cbase->chr.a == o.cbase->chr.a &&
         cbase->chr.point.same_place(o.cbase->chr.point);
}

namespace {

// Reduce theta into [0, log q); wraps act by the isotropy generator, which
// fixes canonical packet points, so only the coordinate moves.
LogLinear reduce_theta(const LogLinear &theta, u64 norm) {
  LogLinear period = LogLinear::log(norm);
  long double len = period.to_double();
  long double pos = theta.to_double();
  i64 k = i64(std::floor((double)(pos / len)));
  LogLinear out = theta - period.scaled(Rat(k));
  // guard the floor against numeric edges
  while (!out.is_zero() && out.to_double() < 0) out = out + period;
  while (out.to_double() >= len) {
    LogLinear next = out - period;
    if (next.is_zero()) return next;
    out = next;
  }
  return out;
}

}  // namespace

SuspensionPoint suspend(const PacketPoint &pt, const LogLinear &theta) {
  SuspensionPoint x;
  x.pbase = std::make_shared<PacketPoint>(pt);
  x.theta = reduce_theta(theta, pt.point.norm);
  return x;
}

SuspensionPoint suspend(const ColimitPoint &pt, const LogLinear &theta) {
  SuspensionPoint x;
  x.cbase = std::make_shared<ColimitPoint>(pt);
  x.theta = theta;
  return x;
}

SuspensionPoint flow(const SuspensionPoint &x, const LogLinear &t) {
  SuspensionPoint out = x;
  if (x.packet_base()) {
    out.theta = reduce_theta(x.theta + t, x.pbase->point.norm);
  } else {
    out.theta = x.theta + t;
  }
  return out;
}

bool is_periodic(const SuspensionPoint &x, const LogLinear &t) {
  if (t.is_zero()) return true;
  if (!x.packet_base()) return false;  // no fixed points off the packets
  return t.integer_multiple_of_log(x.pbase->point.norm);
}

// ---------------------------------------------------------------------------

Spectrum orbit_length_spectrum(const MonogenicOrder &order, u64 norm_bound) {
  Census c = census(order, norm_bound);
  Spectrum sp{order, norm_bound, {}, c.skipped_primes};
  std::map<u64, int> mult;
  for (auto &pt : c.points) mult[pt.norm]++;
  for (auto &[norm, m] : mult)
    sp.entries.push_back({norm, LogLinear::log(norm), m});
  return sp;
}

std::string Spectrum::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["poly"] = polyz::format(order.f);
  j["norm_bound"] = norm_bound;
  j["entries"] = nlohmann::json::array();
  for (auto &e : entries) {
    j["entries"].push_back({{"norm", e.norm},
                            {"length", e.length.str()},
                            {"multiplicity", e.multiplicity}});
  }
  j["skipped_primes"] = skipped_primes;
  return j.dump();
}

}  // namespace arithdyn
