#ifndef ARITHDYN_POLY_MOD_HPP
#define ARITHDYN_POLY_MOD_HPP

#include <vector>

#include "arithdyn/common.hpp"
#include "arithdyn/poly_int.hpp"

namespace arithdyn {

/// Polynomial over F_p, coefficients ascending in [0, p). No trailing zeros.
using PolyP = std::vector<u32>;

namespace polyp {

PolyP trim(PolyP f);
inline int deg(const PolyP &f) { return int(f.size()) - 1; }
inline bool is_zero(const PolyP &f) { return f.empty(); }
inline bool is_one(const PolyP &f) { return f.size() == 1 && f[0] == 1; }

PolyP from_polyz(const PolyZ &f, u64 p);
PolyP add(const PolyP &a, const PolyP &b, u64 p);
PolyP sub(const PolyP &a, const PolyP &b, u64 p);
PolyP mul(const PolyP &a, const PolyP &b, u64 p);
void divmod(const PolyP &a, const PolyP &b, u64 p, PolyP &q, PolyP &r);
PolyP rem(const PolyP &a, const PolyP &b, u64 p);
PolyP gcd(PolyP a, PolyP b, u64 p);  // monic
PolyP make_monic(PolyP f, u64 p);
PolyP powmod(const PolyP &base, u64 exp, const PolyP &mod, u64 p);
PolyP derivative(const PolyP &f, u64 p);
u32 eval(const PolyP &f, u32 x, u64 p);

/// Numeric code sum c_i p^i; the lexicographic order used everywhere.
u64 encode(const PolyP &f, u64 p);
PolyP decode(u64 code, u64 p);

bool is_irreducible(const PolyP &f, u64 p);

/// First monic irreducible of degree d in numeric-code order.
PolyP first_irreducible(u64 p, int d);

/// One entry per distinct monic irreducible factor, with multiplicity.
struct Factor {
  PolyP g;
  int mult;
};

/// Complete factorization of nonzero f mod p (squarefree split, then
/// distinct-degree and equal-degree stages). Factors sorted by
/// (degree, numeric code); deterministic.
std::vector<Factor> factorize(const PolyP &f, u64 p);

/// All monic irreducibles of degree d, ascending numeric code.
/// Exhaustive; intended for p^d small (oracle / fallback use).
std::vector<PolyP> all_monic_irreducibles(u64 p, int d);

}  // namespace polyp

}  // namespace arithdyn

#endif
