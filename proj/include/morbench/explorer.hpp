// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_EXPLORER_HPP
#define MORBENCH_EXPLORER_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "morbench/driver.hpp"
#include "morbench/options.hpp"

namespace morbench
{

inline const std::vector<std::string> kPlotKinds = {"bode", "sigma", "frobenius", "error"};

// Divides each present value by the maximum; absent entries (failed runs) stay absent.
// Throws EmptySeries when no value is present.
std::vector<std::optional<double>> scale_runtimes(const std::vector<std::optional<double>> &times);

// Three significant digits with a two-digit exponent ("2.23e-06"); "inf" for +infinity.
std::string format_norm(double x);

// File names emit_plots produces for the given options, in emission order.
std::vector<std::string> plot_file_names(const PlotOptions &plot);

// Writes one SVG (log-log) and/or one CSV per plot kind. Returns the written paths.
std::vector<std::filesystem::path> emit_plots(const ResultsFile &results, const PlotOptions &plot,
                                              const std::filesystem::path &out_dir);

// Bar chart of scaled run times, one bar per isotope.
std::string runtime_chart_svg(const ResultsFile &results);

// Report text; a pure function of `results`.
std::string render_report_text(const ResultsFile &results, ReportFormat format);

// Writes report.md / report.tex and runtimes.svg into out_dir; returns the report path.
std::filesystem::path render_report(const ResultsFile &results, const ReportOptions &report,
                                    const std::filesystem::path &out_dir);

}  // namespace morbench

#endif  // MORBENCH_EXPLORER_HPP
