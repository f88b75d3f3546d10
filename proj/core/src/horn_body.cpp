#include "mhorn/horn_body.hpp"

#include <cmath>
#include <limits>

#include "mhorn/catalog_store.hpp"
#include "parallel.hpp"

namespace mhorn {

BodySpec::BodySpec(SingularSpectrum lam, SingularSpectrum mu, std::shared_ptr<const TripleCatalog> catalog)
    : lam_(std::move(lam)), mu_(std::move(mu)), catalog_(std::move(catalog)) {
  if (!catalog_) throw DomainError("BodySpec needs a catalog");
  if (lam_.size() != mu_.size() || lam_.size() != catalog_->n)
    throw DimensionError("BodySpec: lam, mu and catalog sizes disagree");
}

namespace {

std::shared_ptr<const TripleCatalog> catalogForPair(const SingularSpectrum& lam, const SingularSpectrum& mu) {
  if (lam.size() != mu.size())
    throw DimensionError("lam has size " + std::to_string(lam.size()) + ", mu has size " +
                         std::to_string(mu.size()));
  return catalogFor(lam.size());
}

}  // namespace

BodySpec::BodySpec(SingularSpectrum lam, SingularSpectrum mu)
    : BodySpec(lam, mu, catalogForPair(lam, mu)) {}

namespace {

void checkTarget(const BodySpec& spec, const SingularSpectrum& nu) {
  if (nu.size() != spec.size())
    throw DimensionError("target has size " + std::to_string(nu.size()) + ", body has size " +
                         std::to_string(spec.size()));
}

}  // namespace

MembershipReport membership(const BodySpec& spec, const SingularSpectrum& nu, double tol) {
  checkTarget(spec, nu);
  const auto la = spec.lam().logs();
  const auto lm = spec.mu().logs();
  const auto ln = nu.logs();
  return makeReport(evaluateHornSystem(la, lm, ln, spec.catalog()), tol);
}

MembershipReport membershipInvertible(const BodySpec& spec, const SingularSpectrum& nu, double tol) {
  checkTarget(spec, nu);
  if (!spec.lam().isStrictlyPositive() || !spec.mu().isStrictlyPositive() || !nu.isStrictlyPositive())
    throw DomainError("invertible-case membership needs strictly positive lam, mu and nu");
  const auto la = spec.lam().logs();
  const auto lm = spec.mu().logs();
  const auto ln = nu.logs();

  std::vector<InequalityRecord> records;
  InequalityRecord det;
  det.triple = HornTriple(IndexSubset::full(spec.size()), IndexSubset::full(spec.size()),
                          IndexSubset::full(spec.size()));
  det.family = InequalityFamily::Determinant;
  det.lhs = spec.lam().logProduct() + spec.mu().logProduct();
  det.rhs = nu.logProduct();
  det.slack = -std::abs(det.rhs.value() - det.lhs.value());
  records.push_back(det);

  for (auto& rec : evaluateHornSystem(la, lm, ln, spec.catalog()))
    if (rec.family == InequalityFamily::Forward) records.push_back(std::move(rec));
  return makeReport(std::move(records), tol);
}

SingularSpectrum epsilonShift(const SingularSpectrum& s, double eps) {
  if (!(eps >= 0.0)) throw DomainError("epsilonShift needs eps >= 0");
  std::vector<double> shifted(s.values().begin(), s.values().end());
  for (double& v : shifted) v += eps;
  return SingularSpectrum(std::move(shifted));
}

std::vector<SingularSpectrum> sampleBody(const BodySpec& spec, int count, RngSeed seed) {
  if (count < 1) throw DomainError("sample count must be positive");
  std::vector<SingularSpectrum> out(static_cast<std::size_t>(count));
  detail::parallelFor(out.size(), [&](std::size_t i) {
    out[i] = productSpectrum(spec.lam(), spec.mu(), haarUnitary(spec.size(), deriveSeed(seed, i)));
  });
  return out;
}

namespace {

// Residual map U -> sv(diag(lam) U diag(mu)) - nu and its Jacobian with respect to
// the real coordinates of X in U exp(X), X skew-Hermitian. Coordinates: for i < j,
// e_ij - e_ji and i(e_ij + e_ji); for each i, i e_ii.
class SpectrumResidual {
 public:
  SpectrumResidual(const SingularSpectrum& lam, const SingularSpectrum& mu, const SingularSpectrum& nu)
      : n_(lam.size()), lam_(n_), mu_(n_), nu_(n_) {
    for (int i = 0; i < n_; ++i) {
      lam_(i) = lam[static_cast<std::size_t>(i)];
      mu_(i) = mu[static_cast<std::size_t>(i)];
      nu_(i) = nu[static_cast<std::size_t>(i)];
    }
  }

  int dimension() const { return n_ * n_; }

  double evaluate(const ComplexMatrix& u, Eigen::VectorXd* residual, Eigen::MatrixXd* jacobian) const {
    const ComplexMatrix m = lam_.asDiagonal() * u * mu_.asDiagonal();
    if (!jacobian) {
      Eigen::JacobiSVD<ComplexMatrix> svd(m);
      *residual = svd.singularValues() - nu_;
      return residual->norm();
    }
    Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    *residual = svd.singularValues() - nu_;
    // d sigma_k = Re(u_k^* diag(lam) U dX diag(mu) v_k) = Re(a_k^* dX b_k).
    const ComplexMatrix left = svd.matrixU().adjoint() * lam_.asDiagonal() * u;  // row k is a_k^*
    const ComplexMatrix right = mu_.asDiagonal() * svd.matrixV();                // column k is b_k
    jacobian->resize(n_, dimension());
    for (int k = 0; k < n_; ++k) {
      int p = 0;
      for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) {
          const std::complex<double> aibj = left(k, i) * right(j, k);
          const std::complex<double> ajbi = left(k, j) * right(i, k);
          (*jacobian)(k, p++) = (aibj - ajbi).real();
          (*jacobian)(k, p++) = -(aibj + ajbi).imag();
        }
      for (int i = 0; i < n_; ++i) (*jacobian)(k, p++) = -(left(k, i) * right(i, k)).imag();
    }
    return residual->norm();
  }

  ComplexMatrix skewFromCoordinates(const Eigen::VectorXd& x) const {
    ComplexMatrix s = ComplexMatrix::Zero(n_, n_);
    int p = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j) {
        const double re = x(p++);
        const double im = x(p++);
        s(i, j) += std::complex<double>(re, im);
        s(j, i) += std::complex<double>(-re, im);
      }
    for (int i = 0; i < n_; ++i) s(i, i) = std::complex<double>(0.0, x(p++));
    return s;
  }

 private:
  int n_;
  Eigen::VectorXd lam_;
  Eigen::VectorXd mu_;
  Eigen::VectorXd nu_;
};

// Cayley transform of a skew-Hermitian matrix: a unitary close to exp(x).
ComplexMatrix cayley(const ComplexMatrix& x) {
  const auto n = x.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return (id - 0.5 * x).partialPivLu().solve(id + 0.5 * x);
}

// Restores unitarity lost to rounding: the unitary polar factor via SVD.
ComplexMatrix reunitarize(const ComplexMatrix& u) {
  Eigen::JacobiSVD<ComplexMatrix> svd(u, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

struct RestartOutcome {
  ComplexMatrix unitary;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

RestartOutcome runRestart(const SpectrumResidual& model, int n, double target, int budget, RngSeed seed) {
  RestartOutcome out;
  ComplexMatrix u = haarUnitary(n, seed);
  Eigen::VectorXd res;
  Eigen::MatrixXd jac;
  double current = model.evaluate(u, &res, &jac);
  double damping = 1e-3;
  int it = 0;
  while (it < budget && current > target) {
    ++it;
    // Minimum-norm damped Gauss-Newton step: the zero set is a manifold, so the
    // system is underdetermined.
    const Eigen::MatrixXd gram = jac * jac.transpose() + damping * Eigen::MatrixXd::Identity(n, n);
    const Eigen::VectorXd step = -jac.transpose() * gram.ldlt().solve(res);
    const ComplexMatrix candidate = u * cayley(model.skewFromCoordinates(step));
    Eigen::VectorXd candRes;
    const double candidateNorm = model.evaluate(candidate, &candRes, nullptr);
    if (candidateNorm < current) {
      u = (it % 64 == 0) ? reunitarize(candidate) : candidate;
      current = model.evaluate(u, &res, &jac);
      damping = std::max(damping / 3.0, 1e-12);
    } else {
      damping *= 4.0;
      if (damping > 1e12) break;  // stalled at a non-zero local minimum
    }
  }
  out.unitary = reunitarize(u);
  out.residual = current;
  out.iterations = it;
  return out;
}

bool isBoundaryTarget(const MembershipReport& report, double threshold) {
  // r = 0 and r = n records are tight for every member; a proper triple that is
  // tight (or evaluates -inf against -inf) puts the target on the boundary.
  for (const auto& rec : report.records) {
    const int r = rec.triple.rank();
    if (r == 0 || r == rec.triple.ambient()) continue;
    if (rec.slack <= threshold) return true;
  }
  return false;
}

}  // namespace

RealizationResult realize(const BodySpec& spec, const SingularSpectrum& nu, const RealizeOptions& options,
                          RngSeed seed) {
  if (options.budget < 0 || options.restarts < 1 || !(options.tol > 0.0))
    throw DomainError("realize needs tol > 0, budget >= 0 and at least one restart");
  const MembershipReport report = membership(spec, nu, options.membershipTol);
  if (!report.pass) throw PreconditionError("target spectrum is not in the product body", report);

  const int n = spec.size();
  const bool boundary = isBoundaryTarget(report, std::max(options.membershipTol, 1e-9));
  const double successTol = boundary ? std::max(options.tol, options.boundaryTol) : options.tol;
  const SpectrumResidual model(spec.lam(), spec.mu(), nu);

  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(options.restarts));
  detail::parallelFor(
      outcomes.size(),
      [&](std::size_t k) {
        // Aim below the threshold so the final reunitarization cannot push us over it.
        outcomes[k] = runRestart(model, n, 0.5 * successTol, options.budget, deriveSeed(seed, k));
      },
      1);

  std::size_t best = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k)
    if (outcomes[k].residual < outcomes[best].residual) best = k;

  RealizationResult result;
  result.unitary = outcomes[best].unitary;
  result.achieved = productSpectrum(spec.lam(), spec.mu(), result.unitary);
  Eigen::VectorXd diff(n);
  for (int i = 0; i < n; ++i)
    diff(i) = result.achieved[static_cast<std::size_t>(i)] - nu[static_cast<std::size_t>(i)];
  result.residual = diff.norm();
  result.iterations = outcomes[best].iterations;
  result.restart = static_cast<int>(best);
  result.boundary = boundary;
  result.successTol = successTol;
  result.converged = result.residual <= successTol;
  return result;
}

}  // namespace mhorn
