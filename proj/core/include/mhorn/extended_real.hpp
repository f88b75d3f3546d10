#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>

namespace mhorn {

/// A real number or minus infinity.
///
/// Sums of logarithms of singular values live here: log 0 is -inf, and adding
/// -inf to anything yields -inf. +inf and NaN are never representable.
class ExtendedReal {
 public:
  constexpr ExtendedReal() = default;
  explicit ExtendedReal(double value);

  static constexpr ExtendedReal negInfinity() {
    ExtendedReal r;
    r.value_ = -std::numeric_limits<double>::infinity();
    return r;
  }

  /// log(x) for x >= 0, with log(0) = -inf.
  static ExtendedReal logOf(double x);

  constexpr bool isNegInfinity() const { return value_ == -std::numeric_limits<double>::infinity(); }
  constexpr bool isFinite() const { return !isNegInfinity(); }
  constexpr double value() const { return value_; }

  ExtendedReal& operator+=(ExtendedReal other) {
    value_ += other.value_;
    return *this;
  }
  friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) { return a += b; }

  /// Multiplies by a nonnegative real; 0 * (-inf) is taken as 0 (zero-measure sets contribute nothing).
  ExtendedReal scaled(double factor) const;

  friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) { return a.value_ == b.value_; }
  friend constexpr std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) {
    return a.value_ <=> b.value_;
  }

  std::string toString() const;

 private:
  double value_ = 0.0;
};

/// rhs - lhs with (-inf) - (-inf) = 0. The result may be +inf (finite rhs, lhs = -inf)
/// or -inf (rhs = -inf, finite lhs).
double slack(ExtendedReal lhs, ExtendedReal rhs);

}  // namespace mhorn
