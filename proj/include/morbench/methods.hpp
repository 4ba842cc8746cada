// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_METHODS_HPP
#define MORBENCH_METHODS_HPP

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morbench/model.hpp"

namespace morbench
{

enum class GramianBackend
{
  sign,
  emp,
};

// Low-rank factors of the controllability (P = lp lp^T) and observability
// (Q = lq lq^T) Gramians. Q is paired with E so that the Hankel singular values are
// the singular values of lq^T E lp.
struct GramianPair
{
  Matrix lp;
  Matrix lq;
  GramianBackend backend = GramianBackend::sign;
};

inline constexpr int kSignMaxIterations = 100;
inline constexpr double kSignTolerance = 1e-10;

enum class SignOutcome
{
  negative_identity,  // converged to -I: all eigenvalues in the open left half plane
  other_sign,         // converged, but some eigenvalue lies in the right half plane
};

struct SignIteration
{
  SignOutcome outcome = SignOutcome::negative_identity;
  Matrix value;   // last iterate
  Matrix factor;  // accumulated right-hand side factor (empty when none given)
  int iterations = 0;
};

// Scaled Newton iteration for the matrix sign function. When `f` is non-empty the
// Lyapunov right-hand-side factor is carried along. Throws SignDivergence when the
// iteration stagnates or an iterate is singular (eigenvalues on the imaginary axis).
SignIteration sign_newton(Matrix a, Matrix f = {});

// Factor Z with X = Z Z^T solving a_hat X + X a_hat^T + f f^T = 0 for Hurwitz a_hat.
Matrix lyap_sign(const Matrix &a_hat, const Matrix &f);

// Lyapunov-equation Gramians: A P E^T + E P A^T + B B^T = 0 and
// A^T Q E + E^T Q A + C^T C = 0.
GramianPair gramians_sign(const LtiSystem &sys);

// Fixed-step RK4 impulse response. Entry k is the n x m state matrix at t = k h,
// h = t_final / steps, starting from E^{-1} B.
std::vector<Matrix> simulate_impulse(const LtiSystem &sys, double t_final, int steps);

// Gramians by trapezoidal quadrature of impulse-response snapshots of the system and
// its dual.
GramianPair gramians_emp(const LtiSystem &sys, double t_final, int steps);

// Smallest r with hsv[r] <= tol * hsv[0] (all of hsv if none), capped by max_order.
Index select_order(const Vector &hsv, double tol, Index max_order);

// Square-root balanced truncation. A system with vanishing Gramians (B or C zero)
// yields the order-0 model G_r = D.
ReducedModel balance_truncate(const LtiSystem &sys, const GramianPair &gram, double tol,
                              Index max_order);

struct MethodRegistryEntry
{
  std::string method_id;
  std::string impl_id;
  std::string description;
  // Defaults applied when a parameter is absent. max_order defaults to the system order
  // and is therefore not listed.
  std::vector<std::pair<std::string, double>> default_params;
  std::vector<std::string> recognized_params;
  std::function<ReducedModel(const LtiSystem &, const AlgorithmIsotope &)> reducer;
};

class MethodRegistry
{
public:
  // Throws on a duplicate (method_id, impl_id).
  void add(MethodRegistryEntry entry);

  const MethodRegistryEntry *find(std::string_view method_id, std::string_view impl_id) const;
  bool has_method(std::string_view method_id) const;
  const std::vector<MethodRegistryEntry> &entries() const { return entries_; }

  // Throws InvalidParameter for unknown keys or out-of-range values. `where` prefixes
  // messages with the location of the parameter set.
  void validate(const AlgorithmIsotope &iso, const std::string &where = {}) const;

  // bt-sign and bt-emp.
  static const MethodRegistry &builtin();

private:
  std::vector<MethodRegistryEntry> entries_;
};

// Dispatches to the registered reducer. Throws UnknownMethod for unregistered pairs.
ReducedModel reduce(const LtiSystem &sys, const AlgorithmIsotope &iso,
                    const MethodRegistry &registry = MethodRegistry::builtin());

}  // namespace morbench

#endif  // MORBENCH_METHODS_HPP
