#pragma once

#include <memory>

#include "mhorn/combinatorics.hpp"
#include "mhorn/errors.hpp"
#include "mhorn/horn_system.hpp"
#include "mhorn/spectra.hpp"

namespace mhorn {

/// The pair (lam, mu) whose product body is studied, with the catalog for its size.
class BodySpec {
 public:
  /// Throws DimensionError if lam, mu and the catalog disagree on n.
  BodySpec(SingularSpectrum lam, SingularSpectrum mu, std::shared_ptr<const TripleCatalog> catalog);
  /// Uses the global catalog store.
  BodySpec(SingularSpectrum lam, SingularSpectrum mu);

  const SingularSpectrum& lam() const { return lam_; }
  const SingularSpectrum& mu() const { return mu_; }
  const TripleCatalog& catalog() const { return *catalog_; }
  int size() const { return lam_.size(); }

 private:
  SingularSpectrum lam_;
  SingularSpectrum mu_;
  std::shared_ptr<const TripleCatalog> catalog_;
};

/// Raised by realize() when the target is not in the body.
class PreconditionError : public Error {
 public:
  PreconditionError(const std::string& what, MembershipReport report)
      : Error(what), report_(std::move(report)) {}
  const MembershipReport& report() const { return report_; }

 private:
  MembershipReport report_;
};

/// Decides nu in the product body: both inequality families for every catalog triple
/// (r = 0 and r = n included), as log-sums with absolute slack tol.
MembershipReport membership(const BodySpec& spec, const SingularSpectrum& nu, double tol);

/// Invertible-case test: determinant equality plus the forward inequalities only.
/// Throws DomainError if any of lam, mu, nu has a zero entry.
MembershipReport membershipInvertible(const BodySpec& spec, const SingularSpectrum& nu, double tol);

/// s + eps componentwise. Throws DomainError for eps < 0.
SingularSpectrum epsilonShift(const SingularSpectrum& s, double eps);

struct RealizeOptions {
  /// Success threshold on the Euclidean residual for interior targets.
  double tol = 1e-6;
  /// Threshold used instead when the target lies on the boundary of the body.
  double boundaryTol = 1e-4;
  /// Slack tolerance of the membership precondition.
  double membershipTol = 1e-8;
  /// Iteration cap per restart.
  int budget = 5000;
  int restarts = 8;
};

struct RealizationResult {
  ComplexMatrix unitary;
  SingularSpectrum achieved;
  /// |productSpectrum(lam, mu, unitary) - nu|_2
  double residual = 0.0;
  /// Iterations used by the winning restart.
  int iterations = 0;
  int restart = 0;
  bool converged = false;
  bool boundary = false;
  /// Threshold actually applied (tol or boundaryTol).
  double successTol = 0.0;
};

/// Searches the unitary group for U with singular values of diag(lam) U diag(mu)
/// equal to nu. Independent restarts from seeded Haar points run Levenberg-Marquardt
/// steps U <- U cayley(X) with X skew-Hermitian; the lowest residual wins, ties going
/// to the lowest restart index. Throws PreconditionError if nu fails membership.
/// Exhausting the budget yields converged == false, not an exception.
RealizationResult realize(const BodySpec& spec, const SingularSpectrum& nu, const RealizeOptions& options,
                          RngSeed seed);

/// count product spectra for independent Haar unitaries; sample i uses deriveSeed(seed, i).
std::vector<SingularSpectrum> sampleBody(const BodySpec& spec, int count, RngSeed seed);

}  // namespace mhorn
