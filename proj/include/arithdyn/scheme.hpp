#ifndef ARITHDYN_SCHEME_HPP
#define ARITHDYN_SCHEME_HPP

#include <optional>
#include <string>
#include <vector>

#include "arithdyn/poly_int.hpp"
#include "arithdyn/poly_mod.hpp"

namespace arithdyn {

/// The order Z[t]/(f) for monic irreducible f. The convention f = t
/// encodes Z itself. Irreducibility over Q is verified at construction.
struct MonogenicOrder {
  PolyZ f;
  i64 disc = 1;

  explicit MonogenicOrder(PolyZ poly);
  static MonogenicOrder spec_z() { return MonogenicOrder(PolyZ{0, 1}); }

  int degree() const { return polyz::deg(f); }
  bool operator==(const MonogenicOrder &o) const { return f == o.f; }
};

/// A prime of the order: residue characteristic p, monic irreducible factor
/// g of f mod p, ramification exponent e, residue degree d, norm p^d.
struct ClosedPoint {
  MonogenicOrder order;
  u64 p = 0;
  PolyP g;
  int e = 1;
  int d = 1;
  u64 norm = 0;

  bool same_place(const ClosedPoint &o) const {
    return order == o.order && p == o.p && g == o.g;
  }
};

/// Dedekind criterion: is Z[t]/(f) maximal (normal) at p?
bool is_maximal_at(const MonogenicOrder &order, u64 p);

/// Points above p, ordered by the numeric code of g.
/// Errors("non-maximal") unless the order is maximal at p or override is set.
std::vector<ClosedPoint> split_prime(const MonogenicOrder &order, u64 p,
                                     bool allow_non_maximal = false);

struct Census {
  MonogenicOrder order;
  u64 norm_bound = 0;
  std::vector<ClosedPoint> points;       // sorted by (norm, p, g)
  std::vector<u64> skipped_primes;       // non-maximal, never silently dropped
};

/// Every closed point of norm <= norm_bound above the maximal primes.
Census census(const MonogenicOrder &order, u64 norm_bound);

/// JSON representation (schema_version 1).
std::string census_to_json(const Census &c);
Census census_from_json(const std::string &text);

/// Disk cache keyed by (f, norm_bound); atomic write-then-rename.
/// Returns the census and whether it was served from the cache.
Census census_cached(const MonogenicOrder &order, u64 norm_bound,
                     const std::string &cache_dir, bool *hit = nullptr);

}  // namespace arithdyn

#endif
