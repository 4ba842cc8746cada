// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_ANALYZER_HPP
#define MORBENCH_ANALYZER_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "morbench/model.hpp"
#include "morbench/options.hpp"

namespace morbench
{

struct FrequencyGrid
{
  double lo = 0.0;
  double hi = 0.0;
  std::vector<double> omegas;  // rad/s, log-spaced from 10^lo to 10^hi inclusive

  int points() const { return static_cast<int>(omegas.size()); }
};

// Throws InvalidRange unless lo < hi and max_points >= 2.
FrequencyGrid freq_grid(double lo, double hi, int max_points);
FrequencyGrid freq_grid(const PlotGridOptions &opts);

// G(s) = C (sE - A)^{-1} B + D. Throws SingularAtFrequency when s is a pole.
ComplexMatrix eval_tf(const LtiSystem &sys, Complex s);

// Realization of G - G_r of order n + r with E_err = blockdiag(E, I).
LtiSystem error_system(const LtiSystem &orig, const LtiSystem &reduced);
LtiSystem error_system(const LtiSystem &orig, const ReducedModel &rom);

// G(i omega) per grid point; nullopt marks a pole.
std::vector<std::optional<ComplexMatrix>> frequency_response(const LtiSystem &sys,
                                                             const FrequencyGrid &grid);

struct CurveSamples
{
  FrequencyCurve bode;       // |G_ij|, row-major (i, j)
  FrequencyCurve sigma;      // all singular values, non-increasing
  FrequencyCurve frobenius;  // ||G||_F
  int missing = 0;
};

CurveSamples sample_curves(const LtiSystem &sys, const FrequencyGrid &grid);

// Discrete sequence norms of error samples; returns requested ids in request order.
// l0 counts samples above 1e-12 * linf.
std::vector<std::pair<std::string, double>> lp_norms(const std::vector<double> &samples,
                                                      const std::vector<std::string> &requested);

// H2 norm from the controllability Gramian; +infinity with nonzero feedthrough or an
// unstable system.
double h2_norm(const LtiSystem &sys);

// Norms of G - G_r and frequency curves of the reduced and error systems.
MeasureSet measure(const LtiSystem &orig, const ReducedModel &rom, const AnalysisOptions &opts);

// Bode, sigma and Frobenius curves of the original system on the configured grids.
std::map<std::string, FrequencyCurve> original_curves(const LtiSystem &orig,
                                                      const AnalysisOptions &opts);

}  // namespace morbench

#endif  // MORBENCH_ANALYZER_HPP
