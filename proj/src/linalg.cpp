// SPDX-License-Identifier: Apache-2.0

#include "morbench/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/QR>

#include "morbench/error.hpp"

namespace morbench
{

namespace
{

template <typename Scalar>
LuFactorization<Scalar> lu_factor_impl(
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> &m)
{
  if (m.rows() != m.cols())
  {
    throw Error(ErrorCode::DimensionMismatch,
                "lu_factor: matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()) + ", expected square");
  }
  const Index n = m.rows();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> lu = m;
  std::vector<Index> pivots(static_cast<std::size_t>(n));
  if (n == 0)
  {
    return {std::move(lu), std::move(pivots)};
  }
  if (!lu.allFinite())
  {
    throw Error(ErrorCode::NonFinite, "lu_factor: matrix has non-finite entries");
  }
  const double max_abs = lu.cwiseAbs().maxCoeff();
  const double threshold = kLuPivotTolerance * max_abs;
  for (Index k = 0; k < n; k++)
  {
    Index p = k;
    const double pivot_abs = lu.col(k).tail(n - k).cwiseAbs().maxCoeff(&p);
    p += k;
    if (!(pivot_abs > threshold) || max_abs == 0.0)
    {
      throw Error(ErrorCode::SingularMatrix,
                  "lu_factor: pivot " + std::to_string(pivot_abs) + " at step " +
                      std::to_string(k) + " below tolerance");
    }
    pivots[static_cast<std::size_t>(k)] = p;
    if (p != k)
    {
      lu.row(k).swap(lu.row(p));
    }
    const Index rest = n - k - 1;
    if (rest > 0)
    {
      lu.col(k).tail(rest) /= lu(k, k);
      lu.bottomRightCorner(rest, rest).noalias() -=
          lu.col(k).tail(rest) * lu.row(k).tail(rest);
    }
  }
  return {std::move(lu), std::move(pivots)};
}

}  // namespace

template <typename Scalar>
LuFactorization<Scalar>::LuFactorization(MatrixType factors, std::vector<Index> pivots)
  : factors_(std::move(factors)), pivots_(std::move(pivots))
{
}

template <typename Scalar>
typename LuFactorization<Scalar>::MatrixType
LuFactorization<Scalar>::solve(const MatrixType &rhs) const
{
  const Index n = order();
  if (rhs.rows() != n)
  {
    throw Error(ErrorCode::DimensionMismatch,
                "solve: right-hand side has " + std::to_string(rhs.rows()) +
                    " rows, factorization has order " + std::to_string(n));
  }
  MatrixType x = rhs;
  for (Index k = 0; k < n; k++)
  {
    const Index p = pivots_[static_cast<std::size_t>(k)];
    if (p != k)
    {
      x.row(k).swap(x.row(p));
    }
  }
  // Forward substitution with unit lower L.
  for (Index k = 0; k < n; k++)
  {
    const Index rest = n - k - 1;
    if (rest > 0)
    {
      x.bottomRows(rest).noalias() -= factors_.col(k).tail(rest) * x.row(k);
    }
  }
  // Back substitution with U.
  for (Index k = n - 1; k >= 0; k--)
  {
    x.row(k) /= factors_(k, k);
    if (k > 0)
    {
      x.topRows(k).noalias() -= factors_.col(k).head(k) * x.row(k);
    }
  }
  return x;
}

template <typename Scalar>
double LuFactorization<Scalar>::log_abs_det() const
{
  double acc = 0.0;
  for (Index k = 0; k < order(); k++)
  {
    acc += std::log(std::abs(factors_(k, k)));
  }
  return acc;
}

template class LuFactorization<double>;
template class LuFactorization<Complex>;

LuFactorization<double> lu_factor(const Matrix &m)
{
  return lu_factor_impl<double>(m);
}

LuFactorization<Complex> lu_factor(const ComplexMatrix &m)
{
  return lu_factor_impl<Complex>(m);
}

Matrix inverse(const Matrix &m)
{
  return lu_factor(m).solve(Matrix::Identity(m.rows(), m.cols()));
}

PsdFactor cholesky_psd(const Matrix &s, double rank_tol)
{
  if (s.rows() != s.cols())
  {
    throw Error(ErrorCode::DimensionMismatch, "cholesky_psd: matrix is not square");
  }
  if (!s.allFinite())
  {
    throw Error(ErrorCode::NonFinite, "cholesky_psd: matrix has non-finite entries");
  }
  const Index n = s.rows();
  // Work on the permuted Schur complement in place.
  Matrix work = 0.5 * (s + s.transpose());
  std::vector<Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Index{0});

  PsdFactor out;
  out.factor = Matrix::Zero(n, n);
  if (n == 0)
  {
    return out;
  }
  const double scale = work.diagonal().cwiseAbs().maxCoeff();
  const double entry_scale = work.cwiseAbs().maxCoeff();
  const double threshold = rank_tol * scale;

  Matrix l = Matrix::Zero(n, n);
  Index k = 0;
  for (; k < n; k++)
  {
    Index j = k;
    const double pivot = work.diagonal().tail(n - k).maxCoeff(&j);
    j += k;
    if (!(pivot > threshold))
    {
      break;
    }
    if (j != k)
    {
      work.row(k).swap(work.row(j));
      work.col(k).swap(work.col(j));
      l.row(k).swap(l.row(j));
      std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(j)]);
    }
    const double root = std::sqrt(pivot);
    l(k, k) = root;
    const Index rest = n - k - 1;
    if (rest > 0)
    {
      l.col(k).tail(rest) = work.col(k).tail(rest) / root;
      work.bottomRightCorner(rest, rest).noalias() -=
          l.col(k).tail(rest) * l.col(k).tail(rest).transpose();
    }
  }
  if (k < n)
  {
    // The trailing Schur complement is what gets dropped; for a PSD input its entries
    // are bounded by the (small) remaining diagonal.
    const auto tail = work.bottomRightCorner(n - k, n - k);
    const double min_diag = tail.diagonal().minCoeff();
    const double max_entry = tail.cwiseAbs().maxCoeff();
    const double eps = std::numeric_limits<double>::epsilon();
    const double bound =
        std::max(threshold, 8.0 * eps * static_cast<double>(n) * entry_scale);
    if (min_diag < -bound || max_entry > bound)
    {
      throw Error(ErrorCode::NotPSD,
                  "cholesky_psd: indefinite trailing block (min diagonal " +
                      std::to_string(min_diag) + ", max entry " + std::to_string(max_entry) +
                      ")");
    }
  }
  out.rank = k;
  out.factor = Matrix::Zero(n, k);
  for (Index i = 0; i < n; i++)
  {
    out.factor.row(perm[static_cast<std::size_t>(i)]) = l.row(i).head(k);
  }
  return out;
}

SvdResult jacobi_svd(const Matrix &m)
{
  if (!m.allFinite())
  {
    throw Error(ErrorCode::NonFinite, "jacobi_svd: matrix has non-finite entries");
  }
  if (m.rows() < m.cols())
  {
    SvdResult t = jacobi_svd(m.transpose());
    // M^T = U S V^T  =>  M = V S U^T; the wide case returns a square U and a thin V.
    return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
  }
  const Index p = m.rows();
  const Index r = m.cols();
  Matrix u = m;
  Matrix v = Matrix::Identity(r, r);
  const double eps = std::numeric_limits<double>::epsilon();
  const double tol = eps * std::sqrt(static_cast<double>(p));
  constexpr int kMaxSweeps = 80;

  for (int sweep = 0; sweep < kMaxSweeps; sweep++)
  {
    bool rotated = false;
    for (Index i = 0; i + 1 < r; i++)
    {
      for (Index j = i + 1; j < r; j++)
      {
        const double alpha = u.col(i).squaredNorm();
        const double beta = u.col(j).squaredNorm();
        const double gamma = u.col(i).dot(u.col(j));
        if (alpha == 0.0 || beta == 0.0 || std::abs(gamma) <= tol * std::sqrt(alpha * beta))
        {
          continue;
        }
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t =
            std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (Index row = 0; row < p; row++)
        {
          const double ui = u(row, i);
          const double uj = u(row, j);
          u(row, i) = c * ui - s * uj;
          u(row, j) = s * ui + c * uj;
        }
        for (Index row = 0; row < r; row++)
        {
          const double vi = v(row, i);
          const double vj = v(row, j);
          v(row, i) = c * vi - s * vj;
          v(row, j) = s * vi + c * vj;
        }
      }
    }
    if (!rotated)
    {
      break;
    }
  }

  Vector norms(r);
  for (Index i = 0; i < r; i++)
  {
    norms(i) = u.col(i).norm();
  }
  std::vector<Index> order(static_cast<std::size_t>(r));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return norms(a) > norms(b); });

  SvdResult out;
  out.u = Matrix::Zero(p, r);
  out.sigma = Vector::Zero(r);
  out.v = Matrix::Zero(r, r);
  const double smax = r > 0 ? norms(order.front()) : 0.0;
  const double null_tol = smax * eps * static_cast<double>(std::max(p, r));
  std::vector<Index> deficient;
  for (Index k = 0; k < r; k++)
  {
    const Index src = order[static_cast<std::size_t>(k)];
    out.sigma(k) = norms(src);
    out.v.col(k) = v.col(src);
    if (norms(src) > null_tol && norms(src) > 0.0)
    {
      out.u.col(k) = u.col(src) / norms(src);
    }
    else
    {
      deficient.push_back(k);
    }
  }
  // Complete U with orthonormal directions where sigma is numerically zero.
  for (Index k : deficient)
  {
    Vector best;
    double best_norm = -1.0;
    for (Index e = 0; e < p; e++)
    {
      Vector cand = Vector::Unit(p, e);
      for (int pass = 0; pass < 2; pass++)
      {
        for (Index c = 0; c < r; c++)
        {
          if (c != k && out.u.col(c).squaredNorm() > 0.0)
          {
            cand -= out.u.col(c).dot(cand) * out.u.col(c);
          }
        }
      }
      const double nrm = cand.norm();
      if (nrm > best_norm)
      {
        best_norm = nrm;
        best = cand;
      }
      if (nrm > 0.5)
      {
        break;
      }
    }
    out.u.col(k) = best / best_norm;
  }
  return out;
}

std::vector<double> singular_values(const ComplexMatrix &m)
{
  const Index q = m.rows();
  const Index c = m.cols();
  Matrix embed(2 * q, 2 * c);
  embed.topLeftCorner(q, c) = m.real();
  embed.topRightCorner(q, c) = -m.imag();
  embed.bottomLeftCorner(q, c) = m.imag();
  embed.bottomRightCorner(q, c) = m.real();
  const SvdResult svd = jacobi_svd(embed);
  const Index k = std::min(q, c);
  std::vector<double> out(static_cast<std::size_t>(k));
  for (Index i = 0; i < k; i++)
  {
    // Each value appears twice; average the pair to cancel rounding asymmetry.
    out[static_cast<std::size_t>(i)] = 0.5 * (svd.sigma(2 * i) + svd.sigma(2 * i + 1));
  }
  return out;
}

Matrix compress_factor(const Matrix &f)
{
  if (f.cols() <= f.rows())
  {
    return f;
  }
  Eigen::HouseholderQR<Matrix> qr(f.transpose());
  const Index n = f.rows();
  Matrix r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  return r.transpose();
}

}  // namespace morbench
