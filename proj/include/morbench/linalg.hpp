// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_LINALG_HPP
#define MORBENCH_LINALG_HPP

#include <complex>
#include <type_traits>
#include <vector>

#include <Eigen/Core>

namespace morbench
{

using Index = Eigen::Index;
using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;

// Pivots smaller than this fraction of the largest input magnitude are treated as zero.
inline constexpr double kLuPivotTolerance = 1e-13;

// Default relative rank tolerance for pivoted Cholesky of Gramians.
inline constexpr double kDefaultRankTol = 1e-12;

//
// Partial-pivoting LU factorization PA = LU of a square matrix, stored packed (unit
// lower L below the diagonal, U on and above). Real and complex variants share one
// implementation; the complex one is used for transfer-function evaluation.
//
template <typename Scalar>
class LuFactorization
{
public:
  using MatrixType = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  static constexpr bool is_complex = !std::is_same_v<Scalar, double>;

  LuFactorization(MatrixType factors, std::vector<Index> pivots);

  Index order() const { return factors_.rows(); }
  const MatrixType &factors() const { return factors_; }

  // pivots()[k] is the row exchanged with row k at elimination step k.
  const std::vector<Index> &pivots() const { return pivots_; }

  // Solves M X = rhs for the factored M. Throws DimensionMismatch on row count.
  MatrixType solve(const MatrixType &rhs) const;

  // log |det M|, accumulated from the U diagonal without forming the product.
  double log_abs_det() const;

private:
  MatrixType factors_;
  std::vector<Index> pivots_;
};

// Throws SingularMatrix when a pivot magnitude drops below kLuPivotTolerance * max|M|.
LuFactorization<double> lu_factor(const Matrix &m);
LuFactorization<Complex> lu_factor(const ComplexMatrix &m);

template <typename Scalar>
typename LuFactorization<Scalar>::MatrixType
solve(const LuFactorization<Scalar> &f, const typename LuFactorization<Scalar>::MatrixType &b)
{
  return f.solve(b);
}

Matrix inverse(const Matrix &m);

struct PsdFactor
{
  Matrix factor;  // n x rank, factor * factor^T ~= S
  Index rank = 0;
};

// Diagonally pivoted Cholesky of a symmetric positive-semidefinite matrix. The input is
// symmetrized first. Pivots below rank_tol * max-diagonal end the factorization; a
// trailing block that is clearly indefinite raises NotPSD.
PsdFactor cholesky_psd(const Matrix &s, double rank_tol = kDefaultRankTol);

struct SvdResult
{
  Matrix u;      // p x r, orthonormal columns
  Vector sigma;  // r, non-increasing
  Matrix v;      // r x r, orthogonal
};

// One-sided (Hestenes) Jacobi SVD of a p x r matrix with p >= r. Wider inputs are
// handled by transposition. Throws NonFinite on NaN/Inf entries.
SvdResult jacobi_svd(const Matrix &m);

// All singular values of a complex matrix, non-increasing. Computed from the real
// embedding [Re -Im; Im Re], whose spectrum repeats each singular value twice.
std::vector<double> singular_values(const ComplexMatrix &m);

// Returns an n x n factor R^T with R^T R = F F^T for a wide factor F (n x p, p > n).
// Narrow factors are returned unchanged.
Matrix compress_factor(const Matrix &f);

}  // namespace morbench

#endif  // MORBENCH_LINALG_HPP
