#include "mhorn/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "mhorn/errors.hpp"

namespace mhorn {

SingularSpectrum::SingularSpectrum(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) throw DomainError("spectrum entries must be finite");
    if (values_[i] < 0.0) throw DomainError("spectrum entries must be nonnegative");
    if (i > 0 && values_[i] > values_[i - 1]) throw DomainError("spectrum must be nonincreasing");
  }
}

SingularSpectrum SingularSpectrum::fromUnsorted(std::vector<double> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  return SingularSpectrum(std::move(values));
}

std::vector<ExtendedReal> SingularSpectrum::logs() const {
  std::vector<ExtendedReal> out;
  out.reserve(values_.size());
  for (double v : values_) out.push_back(ExtendedReal::logOf(v));
  return out;
}

ExtendedReal SingularSpectrum::logProduct() const {
  ExtendedReal total;
  for (double v : values_) total += ExtendedReal::logOf(v);
  return total;
}

RngSeed deriveSeed(RngSeed seed, std::uint64_t index) {
  // splitmix64 finalizer over a golden-ratio stride.
  std::uint64_t z = seed.value + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return RngSeed{z ^ (z >> 31)};
}

SingularSpectrum singularValues(const ComplexMatrix& a, double scale) {
  if (a.rows() != a.cols()) throw DimensionError("singular values need a square matrix");
  if (!a.allFinite()) throw NumericalError("matrix has non-finite entries");
  const auto n = a.rows();
  if (n == 0) return {};
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  const Eigen::VectorXd& s = svd.singularValues();
  if (!s.allFinite()) throw NumericalError("SVD produced non-finite singular values");
  std::vector<double> values(s.data(), s.data() + s.size());
  std::sort(values.begin(), values.end(), std::greater<>());
  const double threshold =
      static_cast<double>(n) * kZeroSingularValueTolerance * std::max(std::abs(scale), values.front());
  for (double& v : values)
    if (v <= threshold) v = 0.0;
  return SingularSpectrum(std::move(values));
}

ComplexMatrix haarUnitary(int n, RngSeed seed) {
  if (n < 1) throw DomainError("unitary size must be positive");
  std::mt19937_64 rng(seed.value);
  std::normal_distribution<double> gauss(0.0, std::sqrt(0.5));
  ComplexMatrix z(n, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(i, j) = {re, im};
    }
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix& r = qr.matrixQR();
  for (int j = 0; j < n; ++j) {
    const std::complex<double> d = r(j, j);
    const double mod = std::abs(d);
    if (mod > 0.0) q.col(j) *= d / mod;
  }
  return q;
}

ComplexMatrix diagonalMatrix(const SingularSpectrum& values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  ComplexMatrix d = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) d(i, i) = values[static_cast<std::size_t>(i)];
  return d;
}

SingularSpectrum productSpectrum(const SingularSpectrum& lam, const SingularSpectrum& mu, const ComplexMatrix& u) {
  const auto n = static_cast<Eigen::Index>(lam.size());
  if (mu.size() != lam.size() || u.rows() != n || u.cols() != n)
    throw DimensionError("productSpectrum: lam, mu and U sizes disagree");
  ComplexMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = lam[static_cast<std::size_t>(i)] * u(i, j) * mu[static_cast<std::size_t>(j)];
  return singularValues(m, lam.largest() * mu.largest());
}

MembershipReport productInequalityCheck(const ComplexMatrix& a,
                                        const ComplexMatrix& b,
                                        const TripleCatalog& catalog,
                                        double tol) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() || a.rows() != catalog.n)
    throw DimensionError("productInequalityCheck: A, B and catalog sizes disagree");
  const SingularSpectrum sa = singularValues(a);
  const SingularSpectrum sb = singularValues(b);
  const SingularSpectrum sd = singularValues(a * b, sa.largest() * sb.largest());
  const auto la = sa.logs();
  const auto lb = sb.logs();
  const auto ld = sd.logs();
  return makeReport(evaluateHornSystem(la, lb, ld, catalog), tol);
}

CompressionResult schubertCompressionCheck(const ComplexMatrix& a, const IndexSubset& subset, RngSeed seed) {
  const auto n = a.rows();
  if (a.cols() != n || subset.ambient() != n) throw DimensionError("compression: matrix and subset sizes disagree");
  if (subset.isEmpty()) throw DomainError("compression needs a nonempty index subset");
  if (!a.allFinite()) throw NumericalError("matrix has non-finite entries");
  const int r = subset.size();

  // Right singular vectors of A are eigenvectors of |A|, ordered by decreasing eigenvalue.
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::VectorXd& s = svd.singularValues();
  const ComplexMatrix& v = svd.matrixV();

  ComplexMatrix basisV(n, r);
  std::vector<double> targets;
  for (int l = 0; l < r; ++l) {
    const auto idx = static_cast<Eigen::Index>(subset[static_cast<std::size_t>(l)] - 1);
    basisV.col(l) = v.col(idx);
    targets.push_back(s(idx));
  }

  // The first r Householder vectors span a space containing every column of A V,
  // whatever its rank, so they give an r-dimensional range for Q.
  const ComplexMatrix image = a * basisV;
  Eigen::HouseholderQR<ComplexMatrix> qr(image);
  const ComplexMatrix basisQ = ComplexMatrix(qr.householderQ()).leftCols(r);
  const double drift = (basisQ.adjoint() * basisQ - ComplexMatrix::Identity(r, r)).norm();
  const double residual = (image - basisQ * (basisQ.adjoint() * image)).norm();
  if (!(drift <= 1e-10) || !(residual <= 1e-10 * std::max(1.0, image.norm())))
    throw NumericalError("orthonormalization of A(V) failed");

  // W = basisV * R * basisQ^* maps range(Q) onto V; written in the basis of V the
  // compression W A P is R * basisQ^* A basisV.
  const ComplexMatrix rot = haarUnitary(r, seed);
  const ComplexMatrix compression = rot * (basisQ.adjoint() * image);

  CompressionResult result;
  const double normA = s.size() ? s(0) : 0.0;
  result.compressionValues = singularValues(compression, normA);
  result.targetValues = targets;
  result.singularValueMargin = std::numeric_limits<double>::infinity();
  double targetProduct = 1.0;
  for (int l = 0; l < r; ++l) {
    result.singularValueMargin =
        std::min(result.singularValueMargin, result.compressionValues[static_cast<std::size_t>(l)] - targets[static_cast<std::size_t>(l)]);
    targetProduct *= targets[static_cast<std::size_t>(l)];
  }
  result.determinantMargin = std::abs(compression.determinant()) - targetProduct;
  const double unit = std::pow(std::max(1.0, normA), r - 1);
  result.margin = std::min(result.singularValueMargin, result.determinantMargin / unit);
  return result;
}

}  // namespace mhorn
