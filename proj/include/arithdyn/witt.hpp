#ifndef ARITHDYN_WITT_HPP
#define ARITHDYN_WITT_HPP

#include <string>
#include <vector>

#include "arithdyn/characters.hpp"
#include "arithdyn/poly_int.hpp"
#include "arithdyn/scheme.hpp"

namespace arithdyn {

/// Element of the rational Witt ring over Z: a quotient num/den of integer
/// polynomials with constant term 1, kept reduced. Conventions: [r] = 1 - rt,
/// addition is polynomial multiplication, negation swaps num and den; ghost
/// components come from -t (log num/den)'.
struct WittRat {
  PolyZ num{1};
  PolyZ den{1};

  WittRat() = default;
  WittRat(PolyZ n, PolyZ d);

  bool operator==(const WittRat &o) const { return num == o.num && den == o.den; }
  bool operator!=(const WittRat &o) const { return !(*this == o); }

  std::string to_json() const;
  static WittRat from_json(const std::string &text);
};

WittRat teich(i64 r);
WittRat witt_add(const WittRat &a, const WittRat &b);
WittRat witt_neg(const WittRat &a);
WittRat witt_sub(const WittRat &a, const WittRat &b);

/// Ring product: bilinear extension of [a].[b] = [ab], computed through
/// power sums of inverse roots and Newton reconstruction. Exact; raises
/// "overflow" if a coefficient leaves 64 bits.
WittRat witt_mul(const WittRat &a, const WittRat &b);

struct GhostVector {
  std::vector<i64> entries;  // gh_1 .. gh_n
  bool operator==(const GhostVector &o) const { return entries == o.entries; }
};

GhostVector ghost(const WittRat &w, int n);

/// gh_n(F_nu w) = gh_(nu n)(w): same degrees, roots raised to the nu-th power.
WittRat frobenius_w(const WittRat &w, u64 nu);

/// V_nu w = w(t^nu).
WittRat verschiebung(const WittRat &w, u64 nu);

/// Power sums of the inverse roots of f (f(0) = 1), Newton's identities.
std::vector<i128> power_sums(const PolyZ &f, int n);

/// Inverse direction: the degree-m integer polynomial with the given power
/// sums (errors if the Newton divisions are not exact).
PolyZ poly_from_power_sums(const std::vector<i128> &p, int m);

/// Signed multiset of order elements: sum_i sign_i * [r_i]. The only Witt
/// form supported over a general monogenic base.
struct TeichCombo {
  MonogenicOrder base;
  std::vector<std::pair<int, PolyZ>> terms;  // sign in {+1, -1}, element mod f

  explicit TeichCombo(MonogenicOrder order) : base(std::move(order)) {}
  void add_term(int sign, const PolyZ &elem);
};

TeichCombo combo_add(const TeichCombo &a, const TeichCombo &b);
TeichCombo combo_neg(const TeichCombo &a);
TeichCombo combo_mul(const TeichCombo &a, const TeichCombo &b);

/// The nu-th power map on Teichmueller terms: [r] -> [r^nu].
TeichCombo combo_frobenius(const TeichCombo &a, u64 nu);

/// WittRat presentation of a combo over Z (base must be the degree-1 order).
WittRat combo_to_wittrat(const TeichCombo &a);

/// Exact cyclotomic number: integer coordinates on 1, z, .., z^(M-1) for
/// z = zeta_M, i.e. an element of the group algebra Z[Z/M]. Equality in
/// Z[zeta_M] is decided by reduction mod the M-th cyclotomic polynomial.
struct CycloValue {
  i64 M = 1;
  std::vector<i64> coords;  // size M

  explicit CycloValue(i64 level) : M(level), coords(size_t(level), 0) {}
  void add_root(i64 exponent, i64 count = 1);
  bool is_zero() const;  // zero in Z[zeta_M]
  bool equals(const CycloValue &o) const;
};

PolyZ cyclotomic_polynomial(i64 M);

/// Evaluation pairing: reduce each term at the character's point; terms
/// hitting the prime contribute 0, the rest contribute their character
/// value as an M-th root of unity. Exact.
CycloValue evaluate(const TeichCombo &psi, const TruncatedCharacter &chi);

/// All census points of norm <= bound where r0 reduces to zero.
std::vector<ClosedPoint> zero_set(const MonogenicOrder &order, const PolyZ &r0,
                                  u64 norm_bound);

}  // namespace arithdyn

#endif
