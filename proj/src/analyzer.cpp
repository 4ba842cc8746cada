// SPDX-License-Identifier: Apache-2.0

#include "morbench/analyzer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "morbench/error.hpp"
#include "morbench/methods.hpp"

namespace morbench
{

FrequencyGrid freq_grid(double lo, double hi, int max_points)
{
  if (!(lo < hi) || max_points < 2 || !std::isfinite(lo) || !std::isfinite(hi))
  {
    throw Error(ErrorCode::InvalidRange, "frequency range [" + std::to_string(lo) + ", " +
                                             std::to_string(hi) + "] with " +
                                             std::to_string(max_points) + " points is invalid");
  }
  FrequencyGrid grid;
  grid.lo = lo;
  grid.hi = hi;
  grid.omegas.resize(static_cast<std::size_t>(max_points));
  const double span = hi - lo;
  for (int k = 0; k < max_points; k++)
  {
    const double expo = (k == max_points - 1) ? hi : lo + span * k / (max_points - 1);
    grid.omegas[static_cast<std::size_t>(k)] = std::pow(10.0, expo);
  }
  return grid;
}

FrequencyGrid freq_grid(const PlotGridOptions &opts)
{
  return freq_grid(opts.lo, opts.hi, opts.max_points);
}

ComplexMatrix eval_tf(const LtiSystem &sys, Complex s)
{
  ComplexMatrix g = sys.d_dense().cast<Complex>();
  if (sys.order() == 0)
  {
    return g;
  }
  ComplexMatrix pencil = s * sys.e_dense().cast<Complex>() - sys.a().cast<Complex>();
  try
  {
    const auto lu = lu_factor(pencil);
    g.noalias() += sys.c().cast<Complex>() * lu.solve(sys.b().cast<Complex>());
  }
  catch (const Error &err)
  {
    if (err.code() != ErrorCode::SingularMatrix)
    {
      throw;
    }
    throw Error(ErrorCode::SingularAtFrequency,
                "sE - A is singular at s = " + std::to_string(s.real()) + "+" +
                    std::to_string(s.imag()) + "i");
  }
  return g;
}

LtiSystem error_system(const LtiSystem &orig, const LtiSystem &reduced)
{
  if (orig.inputs() != reduced.inputs() || orig.outputs() != reduced.outputs())
  {
    throw Error(ErrorCode::DimensionMismatch,
                "error_system: original and reduced models differ in inputs/outputs");
  }
  const Index n = orig.order();
  const Index r = reduced.order();
  SystemMatrices mats;
  mats.a = Matrix::Zero(n + r, n + r);
  mats.a.topLeftCorner(n, n) = orig.a();
  mats.a.bottomRightCorner(r, r) = reduced.a();
  mats.b.resize(n + r, orig.inputs());
  mats.b.topRows(n) = orig.b();
  mats.b.bottomRows(r) = reduced.b();
  Matrix c(orig.outputs(), n + r);
  c.leftCols(n) = orig.c();
  c.rightCols(r) = -reduced.c();
  mats.c = std::move(c);
  if (orig.d() || reduced.d())
  {
    mats.d = orig.d_dense() - reduced.d_dense();
  }
  if (orig.e() || reduced.e())
  {
    Matrix e = Matrix::Zero(n + r, n + r);
    e.topLeftCorner(n, n) = orig.e_dense();
    e.bottomRightCorner(r, r) = reduced.e_dense();
    mats.e = std::move(e);
  }
  return LtiSystem(std::move(mats));
}

LtiSystem error_system(const LtiSystem &orig, const ReducedModel &rom)
{
  return error_system(orig, rom.system);
}

std::vector<std::optional<ComplexMatrix>> frequency_response(const LtiSystem &sys,
                                                             const FrequencyGrid &grid)
{
  std::vector<std::optional<ComplexMatrix>> out;
  out.reserve(grid.omegas.size());
  for (double w : grid.omegas)
  {
    try
    {
      out.emplace_back(eval_tf(sys, Complex(0.0, w)));
    }
    catch (const Error &err)
    {
      if (err.code() != ErrorCode::SingularAtFrequency)
      {
        throw;
      }
      out.emplace_back(std::nullopt);
    }
  }
  return out;
}

namespace
{

CurveSamples curves_from_response(const FrequencyGrid &grid,
                                  const std::vector<std::optional<ComplexMatrix>> &resp)
{
  CurveSamples out;
  out.bode.omega = out.sigma.omega = out.frobenius.omega = grid.omegas;
  for (const auto &g : resp)
  {
    if (!g)
    {
      out.bode.values.emplace_back();
      out.sigma.values.emplace_back();
      out.frobenius.values.emplace_back();
      out.missing++;
      continue;
    }
    std::vector<double> mags;
    mags.reserve(static_cast<std::size_t>(g->size()));
    for (Index i = 0; i < g->rows(); i++)
    {
      for (Index j = 0; j < g->cols(); j++)
      {
        mags.push_back(std::abs((*g)(i, j)));
      }
    }
    out.bode.values.push_back(std::move(mags));
    out.sigma.values.push_back(singular_values(*g));
    out.frobenius.values.push_back({g->norm()});
  }
  return out;
}

FrequencyCurve sigma_max_curve(const FrequencyGrid &grid,
                               const std::vector<std::optional<ComplexMatrix>> &resp)
{
  FrequencyCurve out;
  out.omega = grid.omegas;
  for (const auto &g : resp)
  {
    if (g)
      out.values.push_back({singular_values(*g).front()});
    else
      out.values.emplace_back();
  }
  return out;
}

bool same_grid(const PlotGridOptions &x, const PlotGridOptions &y)
{
  return x.lo == y.lo && x.hi == y.hi && x.max_points == y.max_points;
}

// Memoizes responses of one system per grid.
class ResponseCache
{
public:
  explicit ResponseCache(const LtiSystem &sys) : sys_(sys) {}

  const std::vector<std::optional<ComplexMatrix>> &get(const PlotGridOptions &opts)
  {
    for (auto &[key, resp] : entries_)
    {
      if (same_grid(key, opts))
      {
        return resp;
      }
    }
    entries_.emplace_back(opts, frequency_response(sys_, freq_grid(opts)));
    return entries_.back().second;
  }

private:
  const LtiSystem &sys_;
  std::vector<std::pair<PlotGridOptions, std::vector<std::optional<ComplexMatrix>>>> entries_;
};

}  // namespace

CurveSamples sample_curves(const LtiSystem &sys, const FrequencyGrid &grid)
{
  return curves_from_response(grid, frequency_response(sys, grid));
}

std::vector<std::pair<std::string, double>> lp_norms(const std::vector<double> &samples,
                                                      const std::vector<std::string> &requested)
{
  double l1 = 0.0;
  double sq = 0.0;
  double linf = 0.0;
  for (double e : samples)
  {
    const double a = std::abs(e);
    l1 += a;
    sq += a * a;
    linf = std::max(linf, a);
  }
  double l0 = 0.0;
  if (linf > 0.0)
  {
    for (double e : samples)
    {
      if (std::abs(e) > 1e-12 * linf)
      {
        l0 += 1.0;
      }
    }
  }
  std::vector<std::pair<std::string, double>> out;
  for (const auto &id : requested)
  {
    if (id == "l0")
      out.emplace_back(id, l0);
    else if (id == "l1")
      out.emplace_back(id, l1);
    else if (id == "l2")
      out.emplace_back(id, std::sqrt(sq));
    else if (id == "linf")
      out.emplace_back(id, linf);
  }
  return out;
}

double h2_norm(const LtiSystem &sys)
{
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (sys.d() && !sys.d()->isZero(0.0))
  {
    return inf;
  }
  if (sys.order() == 0)
  {
    return 0.0;
  }
  try
  {
    const Matrix lp = lyap_sign(sys.solve_e(sys.a()), sys.solve_e(sys.b()));
    return (sys.c() * lp).norm();
  }
  catch (const Error &err)
  {
    if (err.code() == ErrorCode::SignDivergence)
    {
      return inf;
    }
    throw;
  }
}

MeasureSet measure(const LtiSystem &orig, const ReducedModel &rom, const AnalysisOptions &opts)
{
  MeasureSet out;
  const LtiSystem err = error_system(orig, rom);
  ResponseCache err_cache(err);
  ResponseCache rom_cache(rom.system);

  const PlotGridOptions meas_grid = opts.measurement_grid();
  const auto &err_resp = err_cache.get(meas_grid);
  std::vector<double> samples;
  samples.reserve(err_resp.size());
  for (const auto &g : err_resp)
  {
    if (g)
    {
      samples.push_back(singular_values(*g).front());
    }
    else
    {
      out.partial = true;
    }
  }
  const auto lp = lp_norms(samples, opts.meas.norm_ids);
  for (const auto &id : opts.meas.norm_ids)
  {
    if (id == "h2")
    {
      out.norms.emplace_back(id, h2_norm(err));
      continue;
    }
    for (const auto &[key, value] : lp)
    {
      if (key == id)
      {
        out.norms.emplace_back(key, value);
      }
    }
  }

  const PlotGridOptions bode = opts.bode_grid();
  const PlotGridOptions sigma = opts.sigma_grid();
  const PlotGridOptions frob = opts.frobenius_grid();
  out.freq_samples["bode"] = curves_from_response(freq_grid(bode), rom_cache.get(bode)).bode;
  out.freq_samples["sigma"] = curves_from_response(freq_grid(sigma), rom_cache.get(sigma)).sigma;
  out.freq_samples["frobenius"] =
      curves_from_response(freq_grid(frob), rom_cache.get(frob)).frobenius;
  const PlotGridOptions error = opts.error_grid();
  out.freq_samples["error"] = sigma_max_curve(freq_grid(error), err_cache.get(error));
  for (const auto &[kind, curve] : out.freq_samples)
  {
    for (const auto &row : curve.values)
    {
      if (row.empty())
      {
        out.partial = true;
      }
    }
  }
  return out;
}

std::map<std::string, FrequencyCurve> original_curves(const LtiSystem &orig,
                                                      const AnalysisOptions &opts)
{
  ResponseCache cache(orig);
  std::map<std::string, FrequencyCurve> out;
  const PlotGridOptions bode = opts.bode_grid();
  const PlotGridOptions sigma = opts.sigma_grid();
  const PlotGridOptions frob = opts.frobenius_grid();
  out["bode"] = curves_from_response(freq_grid(bode), cache.get(bode)).bode;
  out["sigma"] = curves_from_response(freq_grid(sigma), cache.get(sigma)).sigma;
  out["frobenius"] = curves_from_response(freq_grid(frob), cache.get(frob)).frobenius;
  return out;
}

}  // namespace morbench
