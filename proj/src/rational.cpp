#include "arithdyn/rational.hpp"

#include <ostream>

namespace arithdyn {

Rat Rat::parse(const std::string &s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(std::stoll(s));
    return Rat(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::logic_error &) {
    throw error("parse", "bad rational literal: " + s);
  }
}

std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

}  // namespace arithdyn
