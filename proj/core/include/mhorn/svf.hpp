#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mhorn/combinatorics.hpp"
#include "mhorn/extended_real.hpp"
#include "mhorn/horn_system.hpp"
#include "mhorn/rational.hpp"
#include "mhorn/spectra.hpp"

namespace mhorn {

/// Points closer than this are identified when at least one of them is inexact.
inline constexpr double kEndpointTolerance = 1e-12;

/// A point of [0, 1], kept as an exact rational when one is known.
class Breakpoint {
 public:
  Breakpoint() = default;
  Breakpoint(Rational exact) : exact_(exact), value_(exact.toDouble()) {}
  explicit Breakpoint(double value) : value_(value) {}

  double value() const { return value_; }
  const std::optional<Rational>& exact() const { return exact_; }
  bool isExact() const { return exact_.has_value(); }

  /// Exact comparison when both are rational, otherwise equal within kEndpointTolerance.
  friend bool operator==(const Breakpoint& a, const Breakpoint& b);
  friend bool operator<(const Breakpoint& a, const Breakpoint& b) { return !(a == b) && a.value_ < b.value_; }
  friend bool operator<=(const Breakpoint& a, const Breakpoint& b) { return a == b || a.value_ < b.value_; }
  friend bool operator>(const Breakpoint& a, const Breakpoint& b) { return b < a; }

 private:
  std::optional<Rational> exact_;
  double value_ = 0.0;
};

/// Nonnegative length hi - lo, exact when both ends are.
struct Length {
  double value = 0.0;
  std::optional<Rational> exact;
  bool isPositive() const { return exact ? exact->num() > 0 : value > kEndpointTolerance; }
};

Length lengthBetween(const Breakpoint& lo, const Breakpoint& hi);

struct Interval {
  Breakpoint lo;
  Breakpoint hi;
};

/// Finite union of closed subintervals of [0, 1], sorted and merged where they touch.
class IntervalSet {
 public:
  IntervalSet() = default;
  /// Sorts and merges; throws DomainError for intervals outside [0, 1] or with hi < lo.
  /// Degenerate (zero-length) intervals are dropped.
  explicit IntervalSet(std::vector<Interval> intervals);

  std::span<const Interval> intervals() const { return intervals_; }
  bool isEmpty() const { return intervals_.empty(); }
  double measure() const;
  /// Measure as an exact rational when every endpoint is exact.
  std::optional<Rational> exactMeasure() const;

 private:
  std::vector<Interval> intervals_;
};

/// Right-continuous, nonincreasing, nonnegative step function on [0, 1):
/// value v_j on [t_{j-1}, t_j) with 0 = t_0 < ... < t_m = 1.
class StepFunction {
 public:
  StepFunction() = default;
  /// Validates the SVF invariants (DomainError otherwise). End points within
  /// kEndpointTolerance of 0 and 1 are snapped to exact 0 and 1. Adjacent pieces
  /// with equal values are kept.
  StepFunction(std::vector<Breakpoint> breakpoints, std::vector<double> values);

  static StepFunction constant(double value);

  std::span<const Breakpoint> breakpoints() const { return breakpoints_; }
  std::span<const double> values() const { return values_; }
  int pieces() const { return static_cast<int>(values_.size()); }
  /// f(t) for t in [0, 1]; f(1) is the last value.
  double operator()(double t) const;
  /// c * f for c >= 0.
  StepFunction scaled(double factor) const;

 private:
  std::vector<Breakpoint> breakpoints_;
  std::vector<double> values_;
};

/// F_I = union of [(i-1)/n, i/n] over i in I, with exact endpoints.
IntervalSet intervalSet(const IndexSubset& subset);

/// Closure of [0, 1] minus the set.
IntervalSet complementSet(const IntervalSet& set);

/// Integral of log f over the set: -inf iff f vanishes on a positive-measure part of it.
ExtendedReal logIntegral(const StepFunction& f, const IntervalSet& set);

/// Integral of log f over [0, 1]: the log of the Fuglede-Kadison determinant of any
/// operator whose singular value function is f.
ExtendedReal fkDeterminant(const StepFunction& f);

/// The two integral inequalities of one triple: forward
///   int_{F_I} log f + int_{F_J} log g <= int_{F_barK} log h
/// and complementary
///   int_{(F_barK)^c} log h <= int_{(F_I)^c} log f + int_{(F_J)^c} log g.
std::pair<InequalityRecord, InequalityRecord> vnInequalityCheck(const StepFunction& f,
                                                                const StepFunction& g,
                                                                const StepFunction& h,
                                                                const HornTriple& triple);

/// Checks every triple of the catalogs for n = 1..maxN. This is a truncation of
/// an infinite system and the report's note says so. Throws CapacityError for
/// maxN > kMaxCatalogSize and DomainError for maxN < 1.
MembershipReport vnMembership(const StepFunction& f, const StepFunction& g, const StepFunction& h,
                              int maxN, double tol);

/// Geometric means over [(j-1)/n, j/n): s_j = exp(n * integral of log s). An entry is
/// zero iff s vanishes on a positive-measure part of its interval. Exact when one
/// piece covers the whole interval.
SingularSpectrum discretize(const StepFunction& s, int n);

/// The step function taking v_j on [(j-1)/n, j/n), with exact breakpoints.
StepFunction spectrumToStep(const SingularSpectrum& v);

/// One finite stage of the matrix-model approximation.
struct MatrixModel {
  SingularSpectrum lam;
  SingularSpectrum mu;
  SingularSpectrum product;
};

/// (discretize(f, n), discretize(g, n), productSpectrum of these with haarUnitary(n, seed)).
MatrixModel matrixModel(const StepFunction& f, const StepFunction& g, int n, RngSeed seed);

/// L1 distance between two step functions on [0, 1].
double l1Distance(const StepFunction& a, const StepFunction& b);

}  // namespace mhorn
