#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mhorn/combinatorics.hpp"
#include "mhorn/extended_real.hpp"
#include "mhorn/horn_system.hpp"

namespace mhorn {

using ComplexMatrix = Eigen::MatrixXcd;

/// Nonincreasing, nonnegative real vector: singular values s_1 >= ... >= s_n >= 0.
class SingularSpectrum {
 public:
  SingularSpectrum() = default;
  /// Throws DomainError unless values are finite, nonnegative and nonincreasing.
  explicit SingularSpectrum(std::vector<double> values);
  SingularSpectrum(std::initializer_list<double> values)
      : SingularSpectrum(std::vector<double>(values)) {}

  /// Sorts into nonincreasing order first; still rejects negative or non-finite values.
  static SingularSpectrum fromUnsorted(std::vector<double> values);

  int size() const { return static_cast<int>(values_.size()); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const { return values_; }
  double largest() const { return values_.empty() ? 0.0 : values_.front(); }
  bool isStrictlyPositive() const { return values_.empty() || values_.back() > 0.0; }

  /// Componentwise log with log 0 = -inf.
  std::vector<ExtendedReal> logs() const;
  /// Sum of logs, i.e. log |det|.
  ExtendedReal logProduct() const;

  friend bool operator==(const SingularSpectrum&, const SingularSpectrum&) = default;

 private:
  std::vector<double> values_;
};

struct RngSeed {
  std::uint64_t value = 0;
  friend bool operator==(RngSeed, RngSeed) = default;
};

/// Deterministic per-task seed for (seed, index), used by every parallel sampler.
RngSeed deriveSeed(RngSeed seed, std::uint64_t index);

/// Relative threshold below which computed singular values are reported as exactly zero.
inline constexpr double kZeroSingularValueTolerance = 1e-12;

/// Singular values of a square matrix in nonincreasing order.
///
/// Computed by one-sided Jacobi SVD, which is backward stable. Values not exceeding
/// n * 1e-12 * max(scale, s_1) are set to zero, which keeps every value within the
/// stated accuracy contract and turns structural zeros into exact zeros. Pass the
/// product of the factors' norms as `scale` when A is a product.
/// Throws NumericalError for non-finite input or output.
SingularSpectrum singularValues(const ComplexMatrix& a, double scale = 0.0);

/// Haar-distributed n x n unitary (QR of a complex Ginibre matrix with the phases
/// of R's diagonal divided out). Deterministic in the seed.
ComplexMatrix haarUnitary(int n, RngSeed seed);

/// diag(values) as a complex matrix.
ComplexMatrix diagonalMatrix(const SingularSpectrum& values);

/// Singular values of diag(lam) U diag(mu). Throws DimensionError on size mismatch.
SingularSpectrum productSpectrum(const SingularSpectrum& lam,
                                 const SingularSpectrum& mu,
                                 const ComplexMatrix& u);

/// Evaluates both product inequalities of every catalog triple for D = AB, in the
/// log domain with log 0 = -inf. Passes iff every slack >= -tol.
MembershipReport productInequalityCheck(const ComplexMatrix& a,
                                        const ComplexMatrix& b,
                                        const TripleCatalog& catalog,
                                        double tol);

/// Outcome of compressing A to a subspace of the eigenvector flag of |A|.
struct CompressionResult {
  /// Singular values of the r x r compression W A P.
  SingularSpectrum compressionValues;
  /// s_{i(1)}(A), ..., s_{i(r)}(A).
  std::vector<double> targetValues;
  /// min_l s_l(WAP) - s_{i(l)}(A)
  double singularValueMargin = 0.0;
  /// |det(WAP)| - prod_l s_{i(l)}(A)
  double determinantMargin = 0.0;
  /// min(singularValueMargin, determinantMargin / max(1, |A|)^(r-1)), in units of |A|.
  double margin = 0.0;
};

/// Builds V = span{v_i : i in I} from eigenvectors of |A|, a projection Q onto an
/// r-dimensional subspace containing A(V), a partial isometry W from Q onto V (a
/// seeded random unitary between orthonormal bases) and measures how far the
/// compression W A P lies above s_I(A). Throws DomainError for an empty I and
/// NumericalError if orthonormalization fails.
CompressionResult schubertCompressionCheck(const ComplexMatrix& a, const IndexSubset& subset, RngSeed seed);

}  // namespace mhorn
