#include "mhorn/svf.hpp"

#include <algorithm>
#include <cmath>

#include "mhorn/catalog_store.hpp"
#include "mhorn/errors.hpp"
#include "parallel.hpp"

namespace mhorn {

bool operator==(const Breakpoint& a, const Breakpoint& b) {
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  return std::abs(a.value_ - b.value_) <= kEndpointTolerance;
}

Length lengthBetween(const Breakpoint& lo, const Breakpoint& hi) {
  Length len;
  if (hi <= lo) return len;
  if (lo.isExact() && hi.isExact()) {
    len.exact = *hi.exact() - *lo.exact();
    len.value = len.exact->toDouble();
  } else {
    len.value = hi.value() - lo.value();
  }
  return len;
}

namespace {

const Breakpoint& maxOf(const Breakpoint& a, const Breakpoint& b) { return a < b ? b : a; }
const Breakpoint& minOf(const Breakpoint& a, const Breakpoint& b) { return b < a ? b : a; }

const Breakpoint kZero{Rational(0)};
const Breakpoint kOne{Rational(1)};

}  // namespace

IntervalSet::IntervalSet(std::vector<Interval> intervals) {
  for (const auto& iv : intervals) {
    if (iv.lo < kZero || kOne < iv.hi) throw DomainError("interval outside [0, 1]");
    if (iv.hi < iv.lo) throw DomainError("interval with hi < lo");
  }
  std::erase_if(intervals, [](const Interval& iv) { return !lengthBetween(iv.lo, iv.hi).isPositive(); });
  std::sort(intervals.begin(), intervals.end(),
            [](const Interval& a, const Interval& b) { return a.lo.value() < b.lo.value(); });
  for (auto& iv : intervals) {
    if (!intervals_.empty() && iv.lo <= intervals_.back().hi) {
      if (intervals_.back().hi < iv.hi) intervals_.back().hi = iv.hi;
    } else {
      intervals_.push_back(iv);
    }
  }
}

double IntervalSet::measure() const {
  double total = 0.0;
  for (const auto& iv : intervals_) total += lengthBetween(iv.lo, iv.hi).value;
  return total;
}

std::optional<Rational> IntervalSet::exactMeasure() const {
  Rational total(0);
  for (const auto& iv : intervals_) {
    const Length len = lengthBetween(iv.lo, iv.hi);
    if (!len.exact) return std::nullopt;
    total = total + *len.exact;
  }
  return total;
}

StepFunction::StepFunction(std::vector<Breakpoint> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("step function needs at least one piece");
  if (breakpoints_.size() != values_.size() + 1)
    throw DomainError("step function needs exactly one more breakpoint than values");
  if (!(breakpoints_.front() == kZero)) throw DomainError("first breakpoint must be 0");
  if (!(breakpoints_.back() == kOne)) throw DomainError("last breakpoint must be 1");
  breakpoints_.front() = kZero;
  breakpoints_.back() = kOne;
  for (std::size_t i = 1; i < breakpoints_.size(); ++i)
    if (!(breakpoints_[i - 1] < breakpoints_[i])) throw DomainError("breakpoints must be strictly increasing");
  for (std::size_t j = 0; j < values_.size(); ++j) {
    if (!std::isfinite(values_[j]) || values_[j] < 0.0)
      throw DomainError("step values must be finite and nonnegative");
    if (j > 0 && values_[j] > values_[j - 1]) throw DomainError("step values must be nonincreasing");
  }
}

StepFunction StepFunction::constant(double value) { return StepFunction({kZero, kOne}, {value}); }

double StepFunction::operator()(double t) const {
  for (std::size_t j = 0; j < values_.size(); ++j)
    if (t < breakpoints_[j + 1].value()) return values_[j];
  return values_.back();
}

StepFunction StepFunction::scaled(double factor) const {
  if (!(factor >= 0.0)) throw DomainError("step functions scale by nonnegative factors only");
  std::vector<double> v(values_.begin(), values_.end());
  for (double& x : v) x *= factor;
  return StepFunction(breakpoints_, std::move(v));
}

IntervalSet intervalSet(const IndexSubset& subset) {
  const int n = subset.ambient();
  std::vector<Interval> parts;
  for (int i : subset) parts.push_back({Breakpoint(Rational(i - 1, n)), Breakpoint(Rational(i, n))});
  return IntervalSet(std::move(parts));
}

IntervalSet complementSet(const IntervalSet& set) {
  std::vector<Interval> gaps;
  Breakpoint cursor = kZero;
  for (const auto& iv : set.intervals()) {
    if (cursor < iv.lo) gaps.push_back({cursor, iv.lo});
    cursor = iv.hi;
  }
  if (cursor < kOne) gaps.push_back({cursor, kOne});
  return IntervalSet(std::move(gaps));
}

ExtendedReal logIntegral(const StepFunction& f, const IntervalSet& set) {
  ExtendedReal total;
  const auto points = f.breakpoints();
  const auto values = f.values();
  for (const auto& iv : set.intervals()) {
    for (std::size_t j = 0; j < values.size(); ++j) {
      const Length overlap = lengthBetween(maxOf(iv.lo, points[j]), minOf(iv.hi, points[j + 1]));
      if (!overlap.isPositive()) continue;
      total += ExtendedReal::logOf(values[j]).scaled(overlap.value);
    }
  }
  return total;
}

ExtendedReal fkDeterminant(const StepFunction& f) {
  return logIntegral(f, IntervalSet({{kZero, kOne}}));
}

std::pair<InequalityRecord, InequalityRecord> vnInequalityCheck(const StepFunction& f,
                                                                const StepFunction& g,
                                                                const StepFunction& h,
                                                                const HornTriple& triple) {
  const IntervalSet fi = intervalSet(triple.I());
  const IntervalSet fj = intervalSet(triple.J());
  const IntervalSet fk = intervalSet(bar(triple.K()));

  InequalityRecord fwd;
  fwd.triple = triple;
  fwd.family = InequalityFamily::Forward;
  fwd.lhs = logIntegral(f, fi) + logIntegral(g, fj);
  fwd.rhs = logIntegral(h, fk);
  fwd.slack = slack(fwd.lhs, fwd.rhs);

  InequalityRecord cmp;
  cmp.triple = triple;
  cmp.family = InequalityFamily::Complementary;
  cmp.lhs = logIntegral(h, complementSet(fk));
  cmp.rhs = logIntegral(f, complementSet(fi)) + logIntegral(g, complementSet(fj));
  cmp.slack = slack(cmp.lhs, cmp.rhs);
  return {std::move(fwd), std::move(cmp)};
}

MembershipReport vnMembership(const StepFunction& f, const StepFunction& g, const StepFunction& h, int maxN,
                              double tol) {
  if (maxN < 1) throw DomainError("vnMembership needs maxN >= 1");
  if (maxN > kMaxCatalogSize)
    throw CapacityError("vnMembership: maxN = " + std::to_string(maxN) + " exceeds the catalog bound " +
                        std::to_string(kMaxCatalogSize));
  std::vector<HornTriple> triples;
  for (int n = 1; n <= maxN; ++n) {
    const auto catalog = catalogFor(n);
    triples.insert(triples.end(), catalog->triples.begin(), catalog->triples.end());
  }
  std::vector<InequalityRecord> records(2 * triples.size());
  detail::parallelFor(triples.size(), [&](std::size_t t) {
    auto [fwd, cmp] = vnInequalityCheck(f, g, h, triples[t]);
    records[2 * t] = std::move(fwd);
    records[2 * t + 1] = std::move(cmp);
  });
  return makeReport(std::move(records), tol,
                    "truncated check: Horn triples for n = 1.." + std::to_string(maxN) +
                        " only; membership in the full (all n) system is not established");
}

SingularSpectrum discretize(const StepFunction& s, int n) {
  if (n < 1) throw DomainError("discretize needs n >= 1");
  const auto points = s.breakpoints();
  const auto values = s.values();
  std::vector<double> out(static_cast<std::size_t>(n));
  const Rational scale(n);
  for (int j = 1; j <= n; ++j) {
    const Breakpoint lo(Rational(j - 1, n));
    const Breakpoint hi(Rational(j, n));
    bool vanishes = false;
    double logSum = 0.0;
    std::optional<double> wholeValue;
    for (std::size_t p = 0; p < values.size(); ++p) {
      const Length overlap = lengthBetween(maxOf(lo, points[p]), minOf(hi, points[p + 1]));
      if (!overlap.isPositive()) continue;
      const bool covers = overlap.exact ? (*overlap.exact * scale == Rational(1))
                                        : std::abs(overlap.value * n - 1.0) <= kEndpointTolerance * n;
      if (covers) wholeValue = values[p];
      if (values[p] == 0.0) {
        vanishes = true;
        break;
      }
      logSum += overlap.value * n * std::log(values[p]);
    }
    if (vanishes)
      out[static_cast<std::size_t>(j - 1)] = 0.0;
    else
      out[static_cast<std::size_t>(j - 1)] = wholeValue ? *wholeValue : std::exp(logSum);
  }
  // Geometric means of a nonincreasing function are nonincreasing; clamp rounding.
  for (std::size_t j = 1; j < out.size(); ++j) out[j] = std::min(out[j], out[j - 1]);
  return SingularSpectrum(std::move(out));
}

StepFunction spectrumToStep(const SingularSpectrum& v) {
  const int n = v.size();
  if (n < 1) throw DomainError("spectrumToStep needs a nonempty spectrum");
  std::vector<Breakpoint> points;
  for (int j = 0; j <= n; ++j) points.emplace_back(Rational(j, n));
  return StepFunction(std::move(points), std::vector<double>(v.values().begin(), v.values().end()));
}

MatrixModel matrixModel(const StepFunction& f, const StepFunction& g, int n, RngSeed seed) {
  MatrixModel model;
  model.lam = discretize(f, n);
  model.mu = discretize(g, n);
  model.product = productSpectrum(model.lam, model.mu, haarUnitary(n, seed));
  return model;
}

double l1Distance(const StepFunction& a, const StepFunction& b) {
  std::vector<double> cuts;
  for (const auto& p : a.breakpoints()) cuts.push_back(p.value());
  for (const auto& p : b.breakpoints()) cuts.push_back(p.value());
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    const double len = cuts[i] - cuts[i - 1];
    if (len <= 0.0) continue;
    const double mid = 0.5 * (cuts[i] + cuts[i - 1]);
    total += len * std::abs(a(mid) - b(mid));
  }
  return total;
}

}  // namespace mhorn
