#include "arithdyn/loglinear.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

namespace arithdyn {

void LogLinear::put(u64 p, const Rat &c) {
  if (c.num == 0) {
    coeffs_.erase(p);
    return;
  }
  coeffs_[p] = c;
}

LogLinear LogLinear::log(u64 n, Rat c) {
  if (n == 0) throw error("domain", "log of zero");
  LogLinear out;
  if (c.num == 0) return out;
  for (auto &[p, e] : factorize(n).factors) out.put(p, c * Rat(e));
  return out;
}

LogLinear LogLinear::operator+(const LogLinear &o) const {
  LogLinear out = *this;
  for (auto &[p, c] : o.coeffs_) {
    auto it = out.coeffs_.find(p);
    Rat sum = it == out.coeffs_.end() ? c : it->second + c;
    out.put(p, sum);
  }
  return out;
}

LogLinear LogLinear::operator-(const LogLinear &o) const {
  return *this + o.scaled(Rat(-1));
}

LogLinear LogLinear::scaled(const Rat &c) const {
  LogLinear out;
  if (c.num == 0) return out;
  for (auto &[p, k] : coeffs_) out.put(p, k * c);
  return out;
}

bool LogLinear::integer_multiple_of_log(u64 n, i64 *multiple) const {
  if (is_zero()) {
    if (multiple) *multiple = 0;
    return true;
  }
  LogLinear base = log(n);
  if (base.is_zero()) return false;  // n = 1 and this != 0
  auto it = base.coeffs_.begin();
  auto jt = coeffs_.find(it->first);
  if (jt == coeffs_.end()) return false;
  Rat ratio = jt->second / it->second;
  if (!ratio.is_integer()) return false;
  if (*this != base.scaled(ratio)) return false;
  if (multiple) *multiple = ratio.num;
  return true;
}

long double LogLinear::to_double() const {
  long double acc = 0;
  for (auto &[p, c] : coeffs_)
    acc += (long double)(c.num) / (long double)(c.den) * logl((long double)p);
  return acc;
}

std::string LogLinear::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto &[p, c] : coeffs_) {
    Rat a = c;
    if (first) {
      if (a.num < 0) {
        os << "-";
        a.num = -a.num;
      }
      first = false;
    } else {
      os << (a.num < 0 ? "-" : "+");
      if (a.num < 0) a.num = -a.num;
    }
    if (!(a.num == 1 && a.den == 1)) os << a.str() << "*";
    os << "log(" << p << ")";
  }
  return os.str();
}

LogLinear LogLinear::parse(const std::string &text) {
  LogLinear out;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace((unsigned char)text[i])) ++i;
  };
  skip_ws();
  if (text.compare(i, std::string::npos, "0") == 0) return out;
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i >= text.size()) break;
    i64 sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (any) {
      throw error("parse", "expected + or - in log expression");
    }
    Rat coeff(1);
    size_t save = i;
    std::string num;
    while (i < text.size() && (std::isdigit((unsigned char)text[i]) || text[i] == '/'))
      num += text[i++];
    skip_ws();
    if (!num.empty() && i < text.size() && text[i] == '*') {
      coeff = Rat::parse(num);
      ++i;
      skip_ws();
    } else if (!num.empty()) {
      throw error("parse", "bare numeric term (only c*log(n) terms are exact)");
    } else {
      i = save;
    }
    if (text.compare(i, 4, "log(") != 0)
      throw error("parse", "expected log(n) in: " + text);
    i += 4;
    std::string arg;
    while (i < text.size() && text[i] != ')') arg += text[i++];
    if (i >= text.size()) throw error("parse", "unbalanced log(");
    ++i;
    u64 n = 0;
    try {
      n = std::stoull(arg);
    } catch (const std::logic_error &) {
      throw error("parse", "bad log argument: " + arg);
    }
    out = out + log(n, coeff * Rat(sign));
    any = true;
    skip_ws();
  }
  return out;
}

}  // namespace arithdyn
