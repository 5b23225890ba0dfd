#ifndef ARITHDYN_FINITE_FIELD_HPP
#define ARITHDYN_FINITE_FIELD_HPP

#include <memory>
#include <vector>

#include "arithdyn/factor.hpp"
#include "arithdyn/poly_mod.hpp"

namespace arithdyn {

/// F_{p^d} as residue polynomials modulo a monic irreducible of degree d.
/// When no modulus is supplied the canonical one is used: the first monic
/// irreducible of degree d in numeric-code order. Elements are coefficient
/// vectors of length d (ascending). Immutable after construction.
class FiniteField {
public:
  using Elem = std::vector<u32>;

  FiniteField(u64 p, int d);
  FiniteField(u64 p, PolyP modulus);

  u64 p() const { return p_; }
  int degree() const { return d_; }
  u64 order() const { return q_; }          // p^d
  u64 group_order() const { return q_ - 1; }
  const PolyP &modulus() const { return modulus_; }

  Elem zero() const { return Elem(size_t(d_), 0); }
  Elem one() const;
  Elem from_int(i64 c) const;
  Elem reduce(const PolyP &f) const;
  Elem reduce(const PolyZ &f) const;

  bool is_zero(const Elem &a) const;
  Elem add(const Elem &a, const Elem &b) const;
  Elem sub(const Elem &a, const Elem &b) const;
  Elem neg(const Elem &a) const;
  Elem mul(const Elem &a, const Elem &b) const;
  Elem pow(const Elem &a, u64 e) const;
  Elem inv(const Elem &a) const;

  u64 encode(const Elem &a) const;  // sum a_i p^i, the element's numeric index
  Elem decode(u64 code) const;

  u64 elem_order(const Elem &a) const;

  /// Canonical generator: smallest element in numeric-code order whose
  /// multiplicative order is p^d - 1. Cached.
  const Elem &generator() const;

  /// Discrete log of target w.r.t. base; base must generate the unit group.
  /// Baby-step giant-step. Result in [0, p^d - 2].
  u64 dlog(const Elem &base, const Elem &target) const;

  /// Root of a monic polynomial g over F_p in this field with minimal
  /// numeric code; used to embed F_p[t]/(g) along t -> root.
  Elem min_root(const PolyP &g) const;

  /// Evaluate a PolyZ at an element (coefficients reduced mod p).
  Elem eval_polyz(const PolyZ &f, const Elem &x) const;

private:
  u64 p_;
  int d_;
  u64 q_;
  PolyP modulus_;
  mutable Elem gen_;
  mutable bool have_gen_ = false;
  mutable std::vector<std::pair<u64, int>> group_factors_;

  const std::vector<std::pair<u64, int>> &group_factorization() const;
  void init();
};

}  // namespace arithdyn

#endif
