#ifndef ARITHDYN_PACKETS_HPP
#define ARITHDYN_PACKETS_HPP

#include <memory>
#include <string>
#include <vector>

#include "arithdyn/characters.hpp"
#include "arithdyn/loglinear.hpp"
#include "arithdyn/rational.hpp"
#include "arithdyn/scheme.hpp"

namespace arithdyn {

/// Canonical-form point of the packet above a closed point at level M:
/// abar is the minimal representative of its <q mod M> coset of units,
/// r a positive rational with zero p-adic valuation. Two inputs related by
/// the glue equivalence canonicalize to identical field values, so equality
/// is plain data comparison.
struct PacketPoint {
  ClosedPoint point;
  i64 M = 1;
  i64 abar = 0;
  Rat r = Rat(1);

  bool operator==(const PacketPoint &o) const {
    return point.same_place(o.point) && M == o.M && abar == o.abar && r == o.r;
  }
  bool operator!=(const PacketPoint &o) const { return !(*this == o); }
};

PacketPoint canonicalize(const ClosedPoint &pt, i64 M, i64 a_raw, const Rat &r_raw);

/// Right action of a positive rational: scales r, then recanonicalizes.
PacketPoint act(const PacketPoint &pt, const Rat &scale);

/// Generator of the isotropy group: the norm q = p^d.
u64 isotropy_generator(const PacketPoint &pt);

/// The <p mod M> coset of abar, sorted ascending; constant along orbits.
std::vector<i64> fiber_label(const PacketPoint &pt);

/// Fixed-point scan at level M: all reduced fractions nu/nu' with
/// nu, nu' <= B admitting k >= 0 with nu = nu' * q^k (mod M).
struct IsotropyReport {
  ClosedPoint point;
  i64 level = 1;
  u64 bound = 1;
  std::vector<std::pair<u64, u64>> detected;  // reduced (nu, nu'), sorted
  std::string to_json() const;
};

IsotropyReport isotropy_at_level(const ClosedPoint &pt, i64 M, u64 B);

/// Exact powers of q within [1/B, B] as reduced fractions (incl. 1/1).
std::vector<std::pair<u64, u64>> exact_isotropy_fractions(const ClosedPoint &pt, u64 B);

/// Smallest level M <= cap (ascending, coprime to p) whose scan detects the
/// exact fraction set. Errors("cap-exceeded") if none.
i64 stable_level(const ClosedPoint &pt, u64 B, i64 cap);

/// Witness that c, modulo H = { y^nu * sigma(y)^(-nu') }, equals a root of
/// unity of order dividing nu^i - nu'^i, with sigma the q-power map. Lives
/// in the extension F_{Q^s} where the needed power equation becomes solvable.
struct SurjectivityWitness {
  std::shared_ptr<FiniteField> ambient;  // F_{Q^s}
  u64 q = 0;
  u64 nu = 0, nu2 = 0;
  int i = 1;
  int s = 1;
  FiniteField::Elem c, y, zeta;
  i64 order_bound = 1;  // |nu^i - nu2^i|

  /// c * (y^nu * sigma(y)^(-nu2))^(-1) == zeta and zeta^order_bound == 1,
  /// all by direct field arithmetic.
  bool verify() const;
};

/// c is passed as an element of the base field F_Q (which must contain F_q).
/// The ambient extension degree is searched; fields beyond field_cap raise
/// "cap-exceeded".
SurjectivityWitness surjectivity_witness(const FiniteField &FQ, u64 q, u64 nu, u64 nu2,
                                         const FiniteField::Elem &c,
                                         u64 field_cap = (u64(1) << 44));

/// Minimal i >= 1 with N | nu^i - nu'^i (N coprime to nu*nu'); N = 1 gives 1.
u64 union_index(u64 N, u64 nu, u64 nu2);

/// Point of the suspended flow. Packet bases carry an exact log-coordinate
/// theta in [0, log q); colimit bases keep theta free and are never periodic.
struct SuspensionPoint {
  std::shared_ptr<PacketPoint> pbase;   // exactly one of pbase/cbase is set
  std::shared_ptr<ColimitPoint> cbase;
  LogLinear theta;

  bool packet_base() const { return pbase != nullptr; }
  bool operator==(const SuspensionPoint &o) const;
  bool operator!=(const SuspensionPoint &o) const { return !(*this == o); }
};

SuspensionPoint suspend(const PacketPoint &pt, const LogLinear &theta = LogLinear());
SuspensionPoint suspend(const ColimitPoint &pt, const LogLinear &theta = LogLinear());

/// phi^t in exact log-coordinates; packet thetas wrap mod log q.
SuspensionPoint flow(const SuspensionPoint &x, const LogLinear &t);

/// Exact periodicity decision; true iff t lies in (log N)Z for packet bases,
/// and iff t = 0 otherwise.
bool is_periodic(const SuspensionPoint &x, const LogLinear &t);

struct SpectrumEntry {
  u64 norm = 0;
  LogLinear length;  // log norm
  int multiplicity = 0;
};

struct Spectrum {
  MonogenicOrder order;
  u64 norm_bound = 0;
  std::vector<SpectrumEntry> entries;  // sorted by norm
  std::vector<u64> skipped_primes;
  std::string to_json() const;
};

/// One entry per closed-point norm from the census; exact symbolic lengths.
Spectrum orbit_length_spectrum(const MonogenicOrder &order, u64 norm_bound);

}  // namespace arithdyn

#endif
