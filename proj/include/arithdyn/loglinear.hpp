#ifndef ARITHDYN_LOGLINEAR_HPP
#define ARITHDYN_LOGLINEAR_HPP

#include <map>
#include <string>

#include "arithdyn/factor.hpp"
#include "arithdyn/rational.hpp"

namespace arithdyn {

/// Exact element of the Q-span of { log p : p prime }. Unique factorization
/// makes the log p linearly independent over Q, so zero-testing and equality
/// are coefficient comparisons; order comparisons fall back to numerics.
class LogLinear {
public:
  LogLinear() = default;

  /// c * log(n), expanded into prime logs.
  static LogLinear log(u64 n, Rat c = Rat(1));

  bool is_zero() const { return coeffs_.empty(); }
  const std::map<u64, Rat> &coeffs() const { return coeffs_; }

  LogLinear operator+(const LogLinear &o) const;
  LogLinear operator-(const LogLinear &o) const;
  LogLinear scaled(const Rat &c) const;
  bool operator==(const LogLinear &o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LogLinear &o) const { return !(*this == o); }

  /// Exact: true iff this = (r) * log(n) for an integer r.
  bool integer_multiple_of_log(u64 n, i64 *multiple = nullptr) const;

  long double to_double() const;

  /// "log(2)+3/2*log(5)" style; empty sum prints as "0".
  std::string str() const;
  static LogLinear parse(const std::string &text);

private:
  std::map<u64, Rat> coeffs_;  // prime -> rational coefficient
  void put(u64 p, const Rat &c);
};

}  // namespace arithdyn

#endif
