// SPDX-License-Identifier: Apache-2.0

#include "morbench/methods.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "morbench/error.hpp"

namespace morbench
{

SignIteration sign_newton(Matrix a, Matrix f)
{
  const Index n = a.rows();
  if (n == 0 || a.cols() != n)
  {
    throw Error(ErrorCode::DimensionMismatch, "sign iteration needs a nonempty square matrix");
  }
  if (f.size() > 0 && f.rows() != n)
  {
    throw Error(ErrorCode::DimensionMismatch, "sign iteration: factor row count mismatch");
  }
  const Matrix identity = Matrix::Identity(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  SignIteration out;
  for (int k = 1; k <= kSignMaxIterations; k++)
  {
    Matrix a_inv;
    double log_det = 0.0;
    try
    {
      const auto lu = lu_factor(a);
      a_inv = lu.solve(identity);
      log_det = lu.log_abs_det();
    }
    catch (const Error &err)
    {
      if (err.code() != ErrorCode::SingularMatrix)
      {
        throw;
      }
      throw Error(ErrorCode::SignDivergence,
                  "sign iteration hit a singular iterate at step " + std::to_string(k) +
                      " (eigenvalue on or near the imaginary axis)");
    }
    // Determinant scaling c = |det a|^(-1/n), computed in log space, so that c a has
    // unit determinant magnitude.
    const double c = std::exp(-log_det / static_cast<double>(n));
    Matrix next = 0.5 * (c * a + a_inv / c);
    if (!next.allFinite())
    {
      throw Error(ErrorCode::SignDivergence, "sign iteration produced non-finite values");
    }
    if (f.size() > 0)
    {
      const double root_c = std::sqrt(c);
      Matrix grown(n, 2 * f.cols());
      grown.leftCols(f.cols()) = root_c * inv_sqrt2 * f;
      grown.rightCols(f.cols()).noalias() = (inv_sqrt2 / root_c) * (a_inv * f);
      f = compress_factor(grown);
    }
    const double a_norm = a.norm();
    const double to_minus_identity = (next + identity).norm();
    const double step = (next - a).norm();
    a = std::move(next);
    out.iterations = k;
    if (to_minus_identity <= kSignTolerance * a_norm)
    {
      out.outcome = SignOutcome::negative_identity;
      out.value = std::move(a);
      out.factor = std::move(f);
      return out;
    }
    if (step <= kSignTolerance * a_norm && (a * a - identity).norm() <= 1e-8 * n)
    {
      out.outcome = SignOutcome::other_sign;
      out.value = std::move(a);
      out.factor = std::move(f);
      return out;
    }
  }
  throw Error(ErrorCode::SignDivergence,
              "sign iteration did not converge in " + std::to_string(kSignMaxIterations) +
                  " steps (eigenvalues near the imaginary axis?)");
}

Matrix lyap_sign(const Matrix &a_hat, const Matrix &f)
{
  if (f.rows() != a_hat.rows())
  {
    throw Error(ErrorCode::DimensionMismatch, "lyap_sign: factor has " +
                                                  std::to_string(f.rows()) + " rows, expected " +
                                                  std::to_string(a_hat.rows()));
  }
  if (f.cols() == 0)
  {
    return Matrix::Zero(a_hat.rows(), 0);
  }
  SignIteration it = sign_newton(a_hat, f);
  if (it.outcome != SignOutcome::negative_identity)
  {
    throw Error(ErrorCode::SignDivergence,
                "lyap_sign: matrix is not Hurwitz (sign function differs from -I)");
  }
  return it.factor / std::sqrt(2.0);
}

GramianPair gramians_sign(const LtiSystem &sys)
{
  GramianPair out;
  out.backend = GramianBackend::sign;
  const Matrix a_left = sys.solve_e(sys.a());          // E^{-1} A
  out.lp = lyap_sign(a_left, sys.solve_e(sys.b()));
  const Matrix a_right = sys.right_solve_e(sys.a());   // A E^{-1}
  const Matrix c_hat = sys.right_solve_e(sys.c());     // C E^{-1}
  out.lq = lyap_sign(a_right.transpose(), c_hat.transpose());
  return out;
}

namespace
{

// Classic RK4 for X' = gen X with a visitor called at every snapshot (t = k h).
template <typename Visit>
void integrate_rk4(const Matrix &gen, Matrix x, double t_final, int steps, Visit &&visit)
{
  if (!(t_final > 0.0) || steps < 1)
  {
    throw Error(ErrorCode::InvalidParameter,
                "simulation needs t_final > 0 and steps >= 1");
  }
  const double h = t_final / steps;
  visit(0, x);
  Matrix k1, k2, k3, k4;
  for (int k = 1; k <= steps; k++)
  {
    k1.noalias() = gen * x;
    k2.noalias() = gen * (x + 0.5 * h * k1);
    k3.noalias() = gen * (x + 0.5 * h * k2);
    k4.noalias() = gen * (x + h * k3);
    x += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (!x.allFinite())
    {
      throw Error(ErrorCode::NonFinite,
                  "impulse simulation overflowed at t=" + std::to_string(k * h) +
                      " (unstable system or step h=" + std::to_string(h) + " too large)");
    }
    visit(k, x);
  }
}

Matrix quadrature_gramian(const Matrix &gen, const Matrix &x0, double t_final, int steps)
{
  const double h = t_final / steps;
  const Index n = gen.rows();
  Matrix sum = Matrix::Zero(n, n);
  integrate_rk4(gen, x0, t_final, steps, [&](int k, const Matrix &x) {
    const double w = (k == 0 || k == steps) ? 0.5 * h : h;
    sum.selfadjointView<Eigen::Lower>().rankUpdate(x, w);
  });
  return sum.selfadjointView<Eigen::Lower>();
}

}  // namespace

std::vector<Matrix> simulate_impulse(const LtiSystem &sys, double t_final, int steps)
{
  std::vector<Matrix> snapshots;
  snapshots.reserve(static_cast<std::size_t>(std::max(steps, 0)) + 1);
  integrate_rk4(sys.solve_e(sys.a()), sys.solve_e(sys.b()), t_final, steps,
                [&](int, const Matrix &x) { snapshots.push_back(x); });
  return snapshots;
}

GramianPair gramians_emp(const LtiSystem &sys, double t_final, int steps)
{
  GramianPair out;
  out.backend = GramianBackend::emp;
  const Matrix p = quadrature_gramian(sys.solve_e(sys.a()), sys.solve_e(sys.b()), t_final,
                                      steps);
  const Matrix a_right = sys.right_solve_e(sys.a());
  const Matrix q = quadrature_gramian(a_right.transpose(),
                                      sys.right_solve_e(sys.c()).transpose(), t_final, steps);
  out.lp = cholesky_psd(p).factor;
  out.lq = cholesky_psd(q).factor;
  return out;
}

Index select_order(const Vector &hsv, double tol, Index max_order)
{
  const Index len = hsv.size();
  Index r = len;
  if (len > 0)
  {
    const double threshold = tol * hsv(0);
    for (Index k = 1; k < len; k++)
    {
      if (hsv(k) <= threshold)
      {
        r = k;
        break;
      }
    }
  }
  return std::min(r, std::max<Index>(max_order, 0));
}

ReducedModel balance_truncate(const LtiSystem &sys, const GramianPair &gram, double tol,
                              Index max_order)
{
  const Index n = sys.order();
  if (gram.lp.rows() != n || gram.lq.rows() != n)
  {
    throw Error(ErrorCode::DimensionMismatch, "balance_truncate: Gramian factors do not match system order");
  }
  Vector hsv;
  SvdResult svd;
  if (gram.lp.cols() > 0 && gram.lq.cols() > 0)
  {
    svd = jacobi_svd(gram.lq.transpose() * sys.apply_e(gram.lp));
    hsv = svd.sigma;
  }
  if (hsv.size() == 0 || hsv(0) == 0.0)
  {
    return ReducedModel{LtiSystem::static_gain(sys.d_dense()), 0, hsv, 0.0};
  }
  const Index r = std::max<Index>(select_order(hsv, tol, max_order), 1);

  const Vector inv_root = hsv.head(r).cwiseSqrt().cwiseInverse();
  const Matrix w = gram.lq * svd.u.leftCols(r) * inv_root.asDiagonal();
  Matrix t = gram.lp * svd.v.leftCols(r) * inv_root.asDiagonal();

  // Re-biorthogonalize so that W^T E T = I holds to rounding even when the trailing
  // retained singular values carry absolute SVD error.
  const Matrix k = w.transpose() * sys.apply_e(t);
  t = lu_factor(Matrix(k.transpose())).solve(t.transpose()).transpose();
  const Matrix check = w.transpose() * sys.apply_e(t) - Matrix::Identity(r, r);
  if (!(check.norm() <= 1e-8 * std::sqrt(static_cast<double>(r))))
  {
    throw Error(ErrorCode::SingularMatrix,
                "balance_truncate: projection not biorthogonal (|W^T E T - I| = " +
                    std::to_string(check.norm()) + ")");
  }

  SystemMatrices reduced;
  reduced.a = w.transpose() * sys.a() * t;
  reduced.b = w.transpose() * sys.b();
  reduced.c = sys.c() * t;
  if (sys.d())
  {
    reduced.d = *sys.d();
  }
  double tail = 0.0;
  for (Index i = r; i < hsv.size(); i++)
  {
    tail += hsv(i);
  }
  return ReducedModel{LtiSystem(std::move(reduced)), r, std::move(hsv), tail};
}

void MethodRegistry::add(MethodRegistryEntry entry)
{
  if (find(entry.method_id, entry.impl_id) != nullptr)
  {
    throw Error(ErrorCode::InvalidParameter,
                "duplicate method registration " + entry.method_id + "-" + entry.impl_id);
  }
  entries_.push_back(std::move(entry));
}

const MethodRegistryEntry *MethodRegistry::find(std::string_view method_id,
                                                std::string_view impl_id) const
{
  for (const auto &e : entries_)
  {
    if (e.method_id == method_id && e.impl_id == impl_id)
    {
      return &e;
    }
  }
  return nullptr;
}

bool MethodRegistry::has_method(std::string_view method_id) const
{
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const auto &e) { return e.method_id == method_id; });
}

namespace
{

bool is_positive_integer(double v)
{
  return v >= 1.0 && std::floor(v) == v && v < 1e15;
}

double param_or(const AlgorithmIsotope &iso, const MethodRegistryEntry &entry,
                std::string_view name)
{
  if (auto v = iso.param(name))
  {
    return *v;
  }
  for (const auto &[key, value] : entry.default_params)
  {
    if (key == name)
    {
      return value;
    }
  }
  throw Error(ErrorCode::InvalidParameter, "no value or default for '" + std::string(name) + "'");
}

Index max_order_or(const AlgorithmIsotope &iso, const LtiSystem &sys)
{
  if (auto v = iso.param("max_order"))
  {
    return static_cast<Index>(*v);
  }
  return sys.order();
}

}  // namespace

void MethodRegistry::validate(const AlgorithmIsotope &iso, const std::string &where) const
{
  const auto *entry = find(iso.method_id, iso.impl_id);
  if (entry == nullptr)
  {
    throw Error(ErrorCode::UnknownMethod,
                "unknown method/implementation '" + iso.method_id + "-" + iso.impl_id + "'");
  }
  const std::string prefix = where.empty() ? iso.label : where;
  for (const auto &[key, value] : iso.params)
  {
    const auto &known = entry->recognized_params;
    if (std::find(known.begin(), known.end(), key) == known.end())
    {
      throw Error(ErrorCode::InvalidParameter,
                  prefix + "." + key + ": unknown parameter for " + iso.method_id + "-" +
                      iso.impl_id);
    }
    bool ok = std::isfinite(value);
    if (key == "tol")
    {
      ok = ok && value > 0.0 && value < 1.0;
    }
    else if (key == "max_order" || key == "steps")
    {
      ok = ok && is_positive_integer(value);
    }
    else if (key == "t_final")
    {
      ok = ok && value > 0.0;
    }
    if (!ok)
    {
      throw Error(ErrorCode::InvalidParameter,
                  prefix + "." + key + ": value " + std::to_string(value) + " out of range");
    }
  }
}

const MethodRegistry &MethodRegistry::builtin()
{
  static const MethodRegistry registry = [] {
    MethodRegistry reg;
    MethodRegistryEntry sign;
    sign.method_id = "bt";
    sign.impl_id = "sign";
    sign.description = "square-root balanced truncation, Gramians from the matrix sign function";
    sign.default_params = {{"tol", 1e-6}};
    sign.recognized_params = {"tol", "max_order"};
    sign.reducer = [entry = sign](const LtiSystem &sys, const AlgorithmIsotope &iso) {
      const double tol = param_or(iso, entry, "tol");
      return balance_truncate(sys, gramians_sign(sys), tol, max_order_or(iso, sys));
    };
    reg.add(sign);

    MethodRegistryEntry emp;
    emp.method_id = "bt";
    emp.impl_id = "emp";
    emp.description = "square-root balanced truncation, empirical Gramians from RK4 impulse responses";
    emp.default_params = {{"tol", 1e-6}, {"t_final", 10.0}, {"steps", 1000.0}};
    emp.recognized_params = {"tol", "max_order", "t_final", "steps"};
    emp.reducer = [entry = emp](const LtiSystem &sys, const AlgorithmIsotope &iso) {
      const double tol = param_or(iso, entry, "tol");
      const double t_final = param_or(iso, entry, "t_final");
      const int steps = static_cast<int>(param_or(iso, entry, "steps"));
      return balance_truncate(sys, gramians_emp(sys, t_final, steps), tol,
                              max_order_or(iso, sys));
    };
    reg.add(emp);
    return reg;
  }();
  return registry;
}

ReducedModel reduce(const LtiSystem &sys, const AlgorithmIsotope &iso,
                    const MethodRegistry &registry)
{
  registry.validate(iso);
  return registry.find(iso.method_id, iso.impl_id)->reducer(sys, iso);
}

}  // namespace morbench
