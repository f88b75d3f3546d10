#include "mhorn/extended_real.hpp"

#include <cstdio>

#include "mhorn/errors.hpp"

namespace mhorn {

ExtendedReal::ExtendedReal(double value) : value_(value) {
  if (std::isnan(value) || value == std::numeric_limits<double>::infinity())
    throw DomainError("extended real must be finite or -inf");
}

ExtendedReal ExtendedReal::logOf(double x) {
  if (!(x >= 0.0) || std::isinf(x)) throw DomainError("log of a negative or non-finite value");
  if (x == 0.0) return negInfinity();
  return ExtendedReal(std::log(x));
}

ExtendedReal ExtendedReal::scaled(double factor) const {
  if (!(factor >= 0.0)) throw DomainError("extended real scaled by a negative factor");
  if (factor == 0.0) return ExtendedReal();
  if (isNegInfinity()) return *this;
  return ExtendedReal(value_ * factor);
}

std::string ExtendedReal::toString() const {
  if (isNegInfinity()) return "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value_);
  return buf;
}

double slack(ExtendedReal lhs, ExtendedReal rhs) {
  if (lhs.isNegInfinity() && rhs.isNegInfinity()) return 0.0;
  return rhs.value() - lhs.value();
}

}  // namespace mhorn
