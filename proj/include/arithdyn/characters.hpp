#ifndef ARITHDYN_CHARACTERS_HPP
#define ARITHDYN_CHARACTERS_HPP

#include <memory>
#include <string>

#include "arithdyn/finite_field.hpp"
#include "arithdyn/scheme.hpp"

namespace arithdyn {

/// A level-M character of the M-th roots of unity sitting in the degree-j
/// extension of the residue field of a closed point, stored as an exponent
/// class a mod M. With g the canonical generator of that extension and
/// s = (q^j - 1)/M, the character sends y in mu_M to zeta_M^(a * dlog(y)/s).
///
/// The headroom flag certifies that gcd(a, M) equals the kernel order of the
/// full character this truncation shadows; checked operations keep it true,
/// the relaxed frobenius clears it when the level is too small.
struct TruncatedCharacter {
  ClosedPoint point;
  i64 M = 1;     // level, coprime to p, divides q^j - 1
  int j = 1;     // field level: mu_M lives in F_{q^j}
  i64 a = 0;     // exponent class mod M, in [0, M)
  bool headroom = true;

  TruncatedCharacter(ClosedPoint pt, i64 level, i64 exponent, bool headroom_flag = true);

  u64 q() const { return point.norm; }

  /// Kernel order inside mu_M: gcd(a, M), with gcd(0, M) = M.
  i64 kernel_order_raw() const;

  std::string to_json() const;
  static TruncatedCharacter from_json(const std::string &text,
                                      const MonogenicOrder &order);
};

/// The field F_{q^j} housing mu_M, plus the embedding of the point's own
/// residue field F_p[t]/(g). Built on demand; cached per character use site.
struct CharacterField {
  std::shared_ptr<FiniteField> field;       // F_{p^(d*j)}
  std::shared_ptr<FiniteField> point_field; // F_p[t]/(g)
  FiniteField::Elem point_root;             // image of t under the embedding

  FiniteField::Elem embed(const FiniteField::Elem &point_elem) const;
};

CharacterField character_field(const TruncatedCharacter &chi);

/// Exponent e mod M with chi(y) = zeta_M^e. Errors: y = 0 ("character
/// undefined at 0"), y outside mu_M ("level-mismatch").
i64 char_value(const TruncatedCharacter &chi, const CharacterField &cf,
               const FiniteField::Elem &y);

/// Precomposition with the nu-th power map: exponent nu*a mod M.
/// Requires nu_x * gcd(a, M) | M (nu_x the prime-to-p part); otherwise an
/// insufficient_level error carrying the minimal adequate level.
TruncatedCharacter frobenius(const TruncatedCharacter &chi, u64 nu);

/// Same map without the level check: proceeds and clears headroom when the
/// truncated kernel no longer matches the shadowed one.
TruncatedCharacter frobenius_relaxed(const TruncatedCharacter &chi, u64 nu);

/// Galois action: exponent a * q^k mod M; k may be negative.
TruncatedCharacter galois_twist(const TruncatedCharacter &chi, i64 k);

/// Torsion kernel order of the shadowed character. Requires headroom.
i64 kernel_order(const TruncatedCharacter &chi);

/// A point of the backward-orbit extension: formally F_denom^{-1}(char).
struct ColimitPoint {
  i64 denom = 1;
  TruncatedCharacter chr;
};

/// Canonical representative: strips every certified prime from the
/// denominator (p always; ell != p when the division is exact and the
/// kernel relation gcd(a,M) = ell*gcd(a/ell,M) certifies it). Idempotent.
ColimitPoint normalize(ColimitPoint pt);

/// Restriction along the residue inclusion under a dominant map of orders:
/// level M' = gcd(M, q'-1), exponent a mod M'. The target point must lie
/// under the source (same p, residue degree dividing).
TruncatedCharacter pushforward(const TruncatedCharacter &chi,
                               const ClosedPoint &target);

/// Rational kernel rank forced on a rank-k free group by a fixed-point
/// relation between distinct power maps: k when nu != nu', else 0.
i64 forced_kernel_rank(i64 rank, u64 nu, u64 nu_prime);

}  // namespace arithdyn

#endif
