// SPDX-License-Identifier: Apache-2.0

#include "morbench/options.hpp"

#include "morbench/error.hpp"

namespace morbench
{

PlotGridOptions AnalysisOptions::measurement_grid() const
{
  PlotGridOptions out;
  if (meas.sigmaplot)
  {
    out = *meas.sigmaplot;
  }
  else if (bode)
  {
    out = *bode;
  }
  out.max_points = meas.time_points;
  return out;
}

PlotGridOptions AnalysisOptions::bode_grid() const
{
  if (meas.bodemag)
    return *meas.bodemag;
  if (bode)
    return *bode;
  return {};
}

PlotGridOptions AnalysisOptions::sigma_grid() const
{
  return meas.sigmaplot.value_or(PlotGridOptions{});
}

PlotGridOptions AnalysisOptions::frobenius_grid() const
{
  return meas.frobeniusplot.value_or(PlotGridOptions{});
}

ReportFormat parse_report_format(const std::string &name)
{
  if (name == "md" || name == "markdown")
    return ReportFormat::markdown;
  if (name == "tex")
    return ReportFormat::tex;
  throw Error(ErrorCode::UnknownFormat, "unknown report format '" + name + "' (md|tex)");
}

std::string report_format_name(ReportFormat format)
{
  return format == ReportFormat::tex ? "tex" : "md";
}

}  // namespace morbench
