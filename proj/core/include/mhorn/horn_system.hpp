#pragma once

#include <span>
#include <string>
#include <vector>

#include "mhorn/combinatorics.hpp"
#include "mhorn/extended_real.hpp"

namespace mhorn {

/// Which side of a Horn triple an inequality record comes from.
enum class InequalityFamily {
  /// sum_I a + sum_J b <= sum_{bar K} d
  Forward,
  /// sum_{(bar K)^c} d <= sum_{I^c} a + sum_{J^c} b
  Complementary,
  /// Total-mass equality, reported as an inequality with slack -|rhs - lhs|.
  Determinant,
};

std::string toString(InequalityFamily family);

/// One evaluated inequality, always oriented as lhs <= rhs.
struct InequalityRecord {
  HornTriple triple;
  InequalityFamily family = InequalityFamily::Forward;
  ExtendedReal lhs;
  ExtendedReal rhs;
  /// rhs - lhs with (-inf) - (-inf) = 0; may be +inf.
  double slack = 0.0;

  bool holds(double tol) const { return slack >= -tol; }
  std::string describe() const;
};

/// Per-inequality slack ledger with an overall verdict.
struct MembershipReport {
  bool pass = true;
  double tol = 0.0;
  /// Minimum slack over all records, +inf for an empty ledger.
  double worstSlack = 0.0;
  std::vector<InequalityRecord> records;
  std::string note;

  std::vector<InequalityRecord> violations() const;
  /// Record attaining worstSlack, or nullptr when there are no records.
  const InequalityRecord* worst() const;
};

/// Computes worstSlack and the verdict (pass iff worstSlack >= -tol).
MembershipReport makeReport(std::vector<InequalityRecord> records, double tol, std::string note = {});

/// Evaluates the forward and complementary inequality of every catalog triple
/// for the sequences (a, b, d), in catalog order.
std::vector<InequalityRecord> evaluateHornSystem(std::span<const ExtendedReal> a,
                                                 std::span<const ExtendedReal> b,
                                                 std::span<const ExtendedReal> d,
                                                 const TripleCatalog& catalog);

/// Additive Horn inequalities for D = A + B given the nonincreasing eigenvalue
/// sequences alpha (A), beta (B), rho (D). Throws DimensionError on size mismatch and
/// DomainError if a sequence is not nonincreasing.
MembershipReport additiveHornCheck(std::span<const double> alpha,
                                   std::span<const double> beta,
                                   std::span<const double> rho,
                                   const TripleCatalog& catalog,
                                   double tol);

/// Default slack tolerance: 1e-9 scaled by n and by the spread of the (log) data.
double defaultTolerance(int n, double dataRange);

}  // namespace mhorn
