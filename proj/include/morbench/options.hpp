// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_OPTIONS_HPP
#define MORBENCH_OPTIONS_HPP

#include <optional>
#include <string>
#include <vector>

namespace morbench
{

// Frequency range (base-10 exponents of rad/s) and sample count of one plot.
struct PlotGridOptions
{
  double lo = -8.0;
  double hi = 8.0;
  int max_points = 500;
};

inline const std::vector<std::string> kNormIds = {"l0", "l1", "l2", "linf", "h2"};

struct MeasureOptions
{
  std::vector<std::string> norm_ids = kNormIds;
  int time_points = 250;  // sample count of the measurement grid
  std::string h2_method = "lyap";
  std::optional<PlotGridOptions> bodemag;
  std::optional<PlotGridOptions> sigmaplot;
  std::optional<PlotGridOptions> frobeniusplot;
};

struct AnalysisOptions
{
  MeasureOptions meas;
  std::optional<PlotGridOptions> bode;  // top-level bode_opt block

  // Frequency range of the norm grid: sigma plot range, else bode_opt, else default.
  PlotGridOptions measurement_grid() const;
  PlotGridOptions bode_grid() const;
  PlotGridOptions sigma_grid() const;
  PlotGridOptions frobenius_grid() const;
  PlotGridOptions error_grid() const { return sigma_grid(); }
};

struct PlotOptions
{
  bool save_vector = true;  // "save_eps": SVG plots
  bool save_data = true;    // "save_fig": CSV data
};

enum class ReportFormat
{
  markdown,
  tex,
};

struct ReportOptions
{
  ReportFormat format = ReportFormat::markdown;
};

// Parses "md" / "tex"; throws UnknownFormat otherwise.
ReportFormat parse_report_format(const std::string &name);
std::string report_format_name(ReportFormat format);

}  // namespace morbench

#endif  // MORBENCH_OPTIONS_HPP
