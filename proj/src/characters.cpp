#include "arithdyn/characters.hpp"

#include <numeric>

#include <json.hpp>

#include "arithdyn/factor.hpp"

namespace arithdyn {

TruncatedCharacter::TruncatedCharacter(ClosedPoint pt, i64 level, i64 exponent,
                                       bool headroom_flag)
    : point(std::move(pt)), M(level), headroom(headroom_flag) {
  if (M < 1) throw error("domain", "character level must be positive");
  if (std::gcd<u64, u64>(u64(M), point.p) != 1)
    throw error("domain", "character level shares a factor with p");
  a = exponent % M;
  if (a < 0) a += M;
  // Field level: order of q modulo M, so that M | q^j - 1.
  j = M == 1 ? 1 : int(mult_order(point.norm % u64(M), u64(M)));
}

i64 TruncatedCharacter::kernel_order_raw() const {
  return a == 0 ? M : std::gcd(a, M);
}

std::string TruncatedCharacter::to_json() const {
  nlohmann::json jj;
  jj["schema_version"] = 1;
  jj["p"] = point.p;
  jj["d"] = point.d;
  jj["j"] = j;
  jj["M"] = M;
  jj["a"] = a;
  jj["headroom"] = headroom;
  return jj.dump();
}

TruncatedCharacter TruncatedCharacter::from_json(const std::string &text,
                                                 const MonogenicOrder &order) {
  nlohmann::json jj = nlohmann::json::parse(text);
  u64 p = jj.at("p").get<u64>();
  int d = jj.value("d", 1);
  auto pts = split_prime(order, p, true);
  const ClosedPoint *match = nullptr;
  for (auto &pt : pts)
    if (pt.d == d) {
      match = &pt;
      break;
    }
  if (!match) throw error("domain", "no point of the requested residue degree");
  TruncatedCharacter chi(*match, jj.at("M").get<i64>(), jj.at("a").get<i64>(),
                         jj.at("headroom").get<bool>());
  return chi;
}

FiniteField::Elem CharacterField::embed(const FiniteField::Elem &point_elem) const {
  // Evaluate the residue polynomial at the chosen root of g.
  FiniteField::Elem acc = field->zero();
  for (size_t i = point_elem.size(); i-- > 0;) {
    acc = field->mul(acc, point_root);
    acc = field->add(acc, field->from_int(i64(point_elem[i])));
  }
  return acc;
}

CharacterField character_field(const TruncatedCharacter &chi) {
  CharacterField cf;
  u64 p = chi.point.p;
  cf.point_field = std::make_shared<FiniteField>(p, chi.point.g);
  int big_degree = chi.point.d * chi.j;
  if (big_degree == chi.point.d) {
    cf.field = cf.point_field;
    if (chi.point.d == 1) {
      u64 c = chi.point.g.size() > 1 ? chi.point.g[0] : 0;
      cf.point_root = cf.field->from_int(-i64(c));
    } else {
      cf.point_root = cf.field->decode(p);  // t itself
    }
  } else {
    cf.field = std::make_shared<FiniteField>(p, big_degree);
    cf.point_root = cf.field->min_root(chi.point.g);
  }
  return cf;
}

i64 char_value(const TruncatedCharacter &chi, const CharacterField &cf,
               const FiniteField::Elem &y) {
  if (cf.field->is_zero(y))
    throw error("domain", "character undefined at 0 - multiplicative map sends 0 to 0");
  u64 group = cf.field->group_order();
  u64 M = u64(chi.M);
  u64 s = group / M;  // integral because M | q^j - 1
  u64 e = cf.field->dlog(cf.field->generator(), y);
  if (e % s != 0) throw error("level-mismatch", "element is not an M-th root of unity");
  return i64(mulmod(u64(chi.a % chi.M), (e / s) % M, M));
}

namespace {

// Minimal adequate level for applying F_nu: M * (nu_x / gcd(nu_x, M/k)).
i64 needed_level(i64 M, i64 k, u64 nu_x) {
  i64 mk = M / k;
  i64 extra = i64(nu_x / std::gcd<u64, u64>(nu_x, u64(mk)));
  return mul_ck(M, extra);
}

bool level_fits(i64 M, i64 k, u64 nu_x) {
  return i128(nu_x) * k <= M && M % narrow_ck(i128(nu_x) * k) == 0;
}

}  // namespace

TruncatedCharacter frobenius(const TruncatedCharacter &chi, u64 nu) {
  if (nu == 0) throw error("domain", "frobenius: nu must be positive");
  u64 nu_x = coprime_part(nu, chi.point.p);
  i64 k = chi.kernel_order_raw();
  if (!level_fits(chi.M, k, nu_x)) {
    i64 need = needed_level(chi.M, k, nu_x);
    throw insufficient_level(need, "frobenius would exceed the level; rebuild at M = " +
                                       std::to_string(need));
  }
  TruncatedCharacter out = chi;
  out.a = i64(mulmod(u64(chi.a), nu % u64(chi.M), u64(chi.M)));
  return out;
}

TruncatedCharacter frobenius_relaxed(const TruncatedCharacter &chi, u64 nu) {
  if (nu == 0) throw error("domain", "frobenius: nu must be positive");
  u64 nu_x = coprime_part(nu, chi.point.p);
  i64 k = chi.kernel_order_raw();
  TruncatedCharacter out = chi;
  out.a = i64(mulmod(u64(chi.a), nu % u64(chi.M), u64(chi.M)));
  out.headroom = chi.headroom && level_fits(chi.M, k, nu_x);
  return out;
}

TruncatedCharacter galois_twist(const TruncatedCharacter &chi, i64 k) {
  u64 M = u64(chi.M);
  if (M == 1) return chi;
  u64 q = chi.point.norm % M;
  u64 step = k >= 0 ? q : invmod(i64(q), M);
  u64 times = u64(k >= 0 ? k : -k);
  u64 factor = powmod(step, times, M);
  TruncatedCharacter out = chi;
  out.a = i64(mulmod(u64(chi.a), factor, M));
  return out;
}

i64 kernel_order(const TruncatedCharacter &chi) {
  if (!chi.headroom)
    throw error("domain", "kernel order undefined without headroom");
  return chi.kernel_order_raw();
}

ColimitPoint normalize(ColimitPoint pt) {
  if (pt.denom < 1) throw error("domain", "colimit denominator must be positive");
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto &[ell, e] : factorize(u64(pt.denom)).factors) {
      (void)e;
      if (ell == pt.chr.point.p) {
        // F_p is invertible on exponents at closed points: always absorbed.
        u64 M = u64(pt.chr.M);
        u64 inv = M == 1 ? 0 : invmod(i64(ell % M), M);
        pt.chr.a = M == 1 ? 0 : i64(mulmod(u64(pt.chr.a), inv, M));
        pt.denom /= i64(ell);
        progress = true;
        break;
      }
      // Certified division: some solution a2 of ell*a2 = a (mod M) whose
      // kernel satisfies ell*gcd(a2,M) = gcd(a,M) exactly. Smallest wins.
      if (!pt.chr.headroom) continue;
      i64 M = pt.chr.M;
      i64 g = std::gcd<i64, i64>(i64(ell), M);
      if (pt.chr.a % g != 0) continue;
      i64 Mg = M / g;
      i64 base = Mg == 1 ? 0
                         : i64(mulmod(u64((pt.chr.a / g) % Mg),
                                      invmod(i64(ell) / g, u64(Mg)), u64(Mg)));
      i64 found = -1;
      for (i64 t = 0; t < g; ++t) {
        i64 a2 = base + t * Mg;
        i64 k2 = a2 == 0 ? M : std::gcd(a2, M);
        if (mul_ck(i64(ell), k2) == pt.chr.kernel_order_raw()) {
          found = a2;
          break;
        }
      }
      if (found < 0) continue;
      pt.chr.a = found;
      pt.denom /= i64(ell);
      progress = true;
      break;
    }
  }
  return pt;
}

TruncatedCharacter pushforward(const TruncatedCharacter &chi,
                               const ClosedPoint &target) {
  if (target.p != chi.point.p || chi.point.d % target.d != 0)
    throw error("incompatible-points",
                "target point does not lie under the character's point");
  i64 M2 = std::gcd<i64, i64>(chi.M, i64(target.norm) - 1);
  if (M2 < 1) M2 = 1;
  return TruncatedCharacter(target, M2, chi.a % M2, chi.headroom);
}

i64 forced_kernel_rank(i64 rank, u64 nu, u64 nu_prime) {
  if (rank < 0) throw error("domain", "rank must be non-negative");
  return nu == nu_prime ? 0 : rank;
}

}  // namespace arithdyn
