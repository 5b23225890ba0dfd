#ifndef ARITHDYN_POLY_INT_HPP
#define ARITHDYN_POLY_INT_HPP

#include <string>
#include <vector>

#include "arithdyn/common.hpp"

namespace arithdyn {

/// Polynomial over Z, coefficients ascending (c[0] is the constant term).
/// Normal form: no trailing zeros; the zero polynomial is the empty vector.
using PolyZ = std::vector<i64>;

namespace polyz {

PolyZ trim(PolyZ f);
inline int deg(const PolyZ &f) { return int(f.size()) - 1; }
inline bool is_zero(const PolyZ &f) { return f.empty(); }
inline i64 lc(const PolyZ &f) { return f.empty() ? 0 : f.back(); }

PolyZ add(const PolyZ &a, const PolyZ &b);
PolyZ sub(const PolyZ &a, const PolyZ &b);
PolyZ mul(const PolyZ &a, const PolyZ &b);
PolyZ scale(const PolyZ &a, i64 c);
PolyZ derivative(const PolyZ &f);
i64 content(const PolyZ &f);

/// Quotient of exact division; errors("domain") if b does not divide a.
PolyZ div_exact(const PolyZ &a, const PolyZ &b);

/// Remainder of a by monic b.
PolyZ rem_monic(const PolyZ &a, const PolyZ &b);

/// gcd over Z via the primitive PRS, normalized to positive leading coeff.
PolyZ gcd(PolyZ a, PolyZ b);

/// Resultant of a and b over Z (subresultant PRS, exact).
i64 resultant(const PolyZ &a, const PolyZ &b);

/// Discriminant of monic f; degree-1 convention disc = 1.
i64 discriminant(const PolyZ &f);

i128 eval_at(const PolyZ &f, i64 x);

/// Irreducibility over Q for monic integer polynomials (Zassenhaus:
/// factor mod a good prime, Hensel lift, subset recombination).
bool irreducible_over_q(const PolyZ &f);

/// Human form a la "t^2-2" / parser for the same; variable letter t.
std::string format(const PolyZ &f);
PolyZ parse(const std::string &s);

}  // namespace polyz

}  // namespace arithdyn

#endif
