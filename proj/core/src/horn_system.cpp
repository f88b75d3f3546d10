#include "mhorn/horn_system.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mhorn/errors.hpp"

namespace mhorn {

std::string toString(InequalityFamily family) {
  switch (family) {
    case InequalityFamily::Forward:
      return "forward";
    case InequalityFamily::Complementary:
      return "complementary";
    case InequalityFamily::Determinant:
      return "determinant";
  }
  return "unknown";
}

std::string InequalityRecord::describe() const {
  return toString(family) + " inequality of triple " + triple.toString() + " (n=" +
         std::to_string(triple.ambient()) + "): " + lhs.toString() + " <= " + rhs.toString() +
         ", slack " +
         (std::isinf(slack) ? (slack > 0 ? "inf" : "-inf") : std::to_string(slack));
}

std::vector<InequalityRecord> MembershipReport::violations() const {
  std::vector<InequalityRecord> out;
  for (const auto& rec : records)
    if (!rec.holds(tol)) out.push_back(rec);
  return out;
}

const InequalityRecord* MembershipReport::worst() const {
  const InequalityRecord* best = nullptr;
  for (const auto& rec : records)
    if (!best || rec.slack < best->slack) best = &rec;
  return best;
}

MembershipReport makeReport(std::vector<InequalityRecord> records, double tol, std::string note) {
  MembershipReport report;
  report.tol = tol;
  report.note = std::move(note);
  report.worstSlack = std::numeric_limits<double>::infinity();
  for (const auto& rec : records) report.worstSlack = std::min(report.worstSlack, rec.slack);
  report.pass = report.worstSlack >= -tol;
  report.records = std::move(records);
  return report;
}

namespace {

ExtendedReal sumOver(std::span<const ExtendedReal> values, const IndexSubset& subset) {
  ExtendedReal total;
  for (int k : subset) total += values[static_cast<std::size_t>(k - 1)];
  return total;
}

}  // namespace

std::vector<InequalityRecord> evaluateHornSystem(std::span<const ExtendedReal> a,
                                                 std::span<const ExtendedReal> b,
                                                 std::span<const ExtendedReal> d,
                                                 const TripleCatalog& catalog) {
  const auto n = static_cast<std::size_t>(catalog.n);
  if (a.size() != n || b.size() != n || d.size() != n)
    throw DimensionError("sequence lengths " + std::to_string(a.size()) + "," + std::to_string(b.size()) + "," +
                         std::to_string(d.size()) + " do not match catalog size " + std::to_string(n));
  std::vector<InequalityRecord> records;
  records.reserve(2 * catalog.triples.size());
  for (const auto& t : catalog.triples) {
    const IndexSubset kbar = bar(t.K());

    InequalityRecord fwd;
    fwd.triple = t;
    fwd.family = InequalityFamily::Forward;
    fwd.lhs = sumOver(a, t.I()) + sumOver(b, t.J());
    fwd.rhs = sumOver(d, kbar);
    fwd.slack = slack(fwd.lhs, fwd.rhs);
    records.push_back(std::move(fwd));

    InequalityRecord cmp;
    cmp.triple = t;
    cmp.family = InequalityFamily::Complementary;
    cmp.lhs = sumOver(d, kbar.complement());
    cmp.rhs = sumOver(a, t.I().complement()) + sumOver(b, t.J().complement());
    cmp.slack = slack(cmp.lhs, cmp.rhs);
    records.push_back(std::move(cmp));
  }
  return records;
}

namespace {

std::vector<ExtendedReal> checkedSequence(std::span<const double> xs, const char* name) {
  std::vector<ExtendedReal> out;
  out.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i])) throw DomainError(std::string(name) + " has a non-finite entry");
    if (i > 0 && xs[i] > xs[i - 1]) throw DomainError(std::string(name) + " is not nonincreasing");
    out.emplace_back(xs[i]);
  }
  return out;
}

}  // namespace

MembershipReport additiveHornCheck(std::span<const double> alpha,
                                   std::span<const double> beta,
                                   std::span<const double> rho,
                                   const TripleCatalog& catalog,
                                   double tol) {
  const auto a = checkedSequence(alpha, "alpha");
  const auto b = checkedSequence(beta, "beta");
  const auto d = checkedSequence(rho, "rho");
  return makeReport(evaluateHornSystem(a, b, d, catalog), tol);
}

double defaultTolerance(int n, double dataRange) {
  return 1e-9 * std::max(1, n) * std::max(1.0, std::abs(dataRange));
}

}  // namespace mhorn
