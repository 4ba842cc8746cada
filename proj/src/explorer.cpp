// SPDX-License-Identifier: Apache-2.0

#include "morbench/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "morbench/error.hpp"

namespace morbench
{

namespace fs = std::filesystem;

namespace
{

constexpr const char *kDash = "\xE2\x80\x94";  // em dash, marks failed runs
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string fmt(const char *format, double v)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, v);
  return buf;
}

void write_file(const fs::path &path, const std::string &content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
  {
    throw Error(ErrorCode::Io, "cannot write " + path.string());
  }
  out << content;
  if (!out)
  {
    throw Error(ErrorCode::Io, "write failed for " + path.string());
  }
}

struct Series
{
  std::string label;
  std::vector<double> values;  // NaN where missing
};

struct PlotData
{
  std::string kind;
  std::vector<double> omega;
  std::vector<Series> series;
};

std::size_t row_width(const FrequencyCurve &curve)
{
  for (const auto &row : curve.values)
  {
    if (!row.empty())
      return row.size();
  }
  return 0;
}

std::string component_label(const std::string &kind, std::size_t index, std::size_t width,
                            Index inputs)
{
  if (width <= 1)
    return "";
  if (kind == "bode")
  {
    const auto m = static_cast<std::size_t>(std::max<Index>(inputs, 1));
    return ":y" + std::to_string(index / m + 1) + "u" + std::to_string(index % m + 1);
  }
  return ":s" + std::to_string(index + 1);
}

void append_series(PlotData &plot, const std::string &label, const FrequencyCurve &curve,
                   Index inputs)
{
  const std::size_t width = row_width(curve);
  for (std::size_t c = 0; c < width; c++)
  {
    Series s;
    s.label = label + component_label(plot.kind, c, width, inputs);
    s.values.reserve(curve.values.size());
    for (const auto &row : curve.values)
    {
      s.values.push_back(c < row.size() ? row[c] : kNaN);
    }
    plot.series.push_back(std::move(s));
  }
}

PlotData collect(const ResultsFile &results, const std::string &kind)
{
  PlotData plot;
  plot.kind = kind;
  const Index inputs = results.problem_size.m;
  const auto orig = results.original.find(kind == "error" ? "sigma" : kind);
  if (orig != results.original.end())
  {
    plot.omega = orig->second.omega;
    if (kind != "error")
    {
      append_series(plot, "original", orig->second, inputs);
    }
  }
  for (const auto &run : results.runs)
  {
    if (run.status != RunStatus::ok)
      continue;
    const auto ms = results.measures.find(run.isotope);
    if (ms == results.measures.end())
      continue;
    const auto curve = ms->second.freq_samples.find(kind);
    if (curve == ms->second.freq_samples.end())
      continue;
    if (plot.omega.empty())
      plot.omega = curve->second.omega;
    if (curve->second.omega.size() != plot.omega.size())
      continue;
    append_series(plot, run.isotope, curve->second, inputs);
  }
  return plot;
}

std::string csv_text(const PlotData &plot)
{
  std::ostringstream out;
  out << "omega";
  for (const auto &s : plot.series)
    out << "," << s.label;
  out << "\n";
  for (std::size_t k = 0; k < plot.omega.size(); k++)
  {
    out << fmt("%.17g", plot.omega[k]);
    for (const auto &s : plot.series)
    {
      out << ",";
      if (std::isfinite(s.values[k]))
        out << fmt("%.17g", s.values[k]);
    }
    out << "\n";
  }
  return out.str();
}

std::string xml_escape(const std::string &s)
{
  std::string out;
  for (char c : s)
  {
    switch (c)
    {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

const std::vector<std::string> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                           "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                           "#bcbd22", "#17becf"};

std::string plot_title(const std::string &kind)
{
  if (kind == "bode")
    return "Bode magnitude";
  if (kind == "sigma")
    return "Singular values";
  if (kind == "frobenius")
    return "Frobenius norm";
  return "Error (largest singular value)";
}

std::string svg_text(const PlotData &plot, const std::string &problem_id)
{
  constexpr double width = 760, height = 460;
  constexpr double left = 80, right = 600, top = 40, bottom = 390;

  double ymin = std::numeric_limits<double>::infinity();
  double ymax = -ymin;
  for (const auto &s : plot.series)
  {
    for (double v : s.values)
    {
      if (std::isfinite(v) && v > 0.0)
      {
        ymin = std::min(ymin, v);
        ymax = std::max(ymax, v);
      }
    }
  }
  double ylo = -1, yhi = 1;
  if (ymin <= ymax)
  {
    ylo = std::floor(std::log10(ymin));
    yhi = std::ceil(std::log10(ymax));
    if (yhi <= ylo)
    {
      ylo -= 1;
      yhi += 1;
    }
  }
  double xlo = 0, xhi = 1;
  if (plot.omega.size() >= 2)
  {
    xlo = std::log10(plot.omega.front());
    xhi = std::log10(plot.omega.back());
  }
  auto px = [&](double w) { return left + (std::log10(w) - xlo) / (xhi - xlo) * (right - left); };
  auto py = [&](double v) { return bottom - (std::log10(v) - ylo) / (yhi - ylo) * (bottom - top); };

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << xml_escape(plot_title(plot.kind) + " - " + problem_id) << "</text>\n";

  // Decade grid lines and tick labels.
  auto decades = [](double lo, double hi) {
    std::vector<int> out;
    const int first = static_cast<int>(std::ceil(lo - 1e-9));
    const int last = static_cast<int>(std::floor(hi + 1e-9));
    const int step = std::max(1, (last - first) / 8);
    for (int e = first; e <= last; e += step)
      out.push_back(e);
    return out;
  };
  for (int e : decades(xlo, xhi))
  {
    const double x = px(std::pow(10.0, e));
    out << "<line x1=\"" << fmt("%.2f", x) << "\" y1=\"" << top << "\" x2=\"" << fmt("%.2f", x)
        << "\" y2=\"" << bottom << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << fmt("%.2f", x) << "\" y=\"" << bottom + 16
        << "\" text-anchor=\"middle\">1e" << e << "</text>\n";
  }
  for (int e : decades(ylo, yhi))
  {
    const double y = py(std::pow(10.0, e));
    out << "<line x1=\"" << left << "\" y1=\"" << fmt("%.2f", y) << "\" x2=\"" << right
        << "\" y2=\"" << fmt("%.2f", y) << "\" stroke=\"#dddddd\"/>\n";
    out << "<text x=\"" << left - 6 << "\" y=\"" << fmt("%.2f", y + 4)
        << "\" text-anchor=\"end\">1e" << e << "</text>\n";
  }
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left
      << "\" height=\"" << bottom - top << "\" fill=\"none\" stroke=\"black\"/>\n";
  out << "<text x=\"" << (left + right) / 2 << "\" y=\"" << bottom + 36
      << "\" text-anchor=\"middle\">frequency [rad/s]</text>\n";
  out << "<text x=\"20\" y=\"" << (top + bottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
      << (top + bottom) / 2 << ")\">magnitude</text>\n";

  for (std::size_t i = 0; i < plot.series.size(); i++)
  {
    const auto &s = plot.series[i];
    const std::string &color = kPalette[i % kPalette.size()];
    std::string points;
    auto flush = [&] {
      if (!points.empty())
      {
        out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\""
            << points << "\"/>\n";
        points.clear();
      }
    };
    for (std::size_t k = 0; k < s.values.size() && k < plot.omega.size(); k++)
    {
      const double v = s.values[k];
      if (!(std::isfinite(v) && v > 0.0))
      {
        flush();
        continue;
      }
      if (!points.empty())
        points += " ";
      points += fmt("%.2f", px(plot.omega[k])) + "," + fmt("%.2f", py(v));
    }
    flush();
    const double ly = top + 12 + 14.0 * static_cast<double>(i);
    out << "<line x1=\"" << right + 12 << "\" y1=\"" << fmt("%.2f", ly - 4) << "\" x2=\"" << right + 32
        << "\" y2=\"" << fmt("%.2f", ly - 4) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << right + 36 << "\" y=\"" << fmt("%.2f", ly) << "\">" << xml_escape(s.label)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::vector<std::optional<double>> run_times(const ResultsFile &results)
{
  std::vector<std::optional<double>> times;
  for (const auto &run : results.runs)
  {
    if (run.status == RunStatus::ok)
      times.emplace_back(run.wall_time_s);
    else
      times.emplace_back(std::nullopt);
  }
  return times;
}

std::vector<std::optional<double>> scaled_or_empty(const ResultsFile &results)
{
  const auto times = run_times(results);
  try
  {
    return scale_runtimes(times);
  }
  catch (const Error &)
  {
    return std::vector<std::optional<double>>(times.size());
  }
}

std::string md_escape(const std::string &s)
{
  std::string out;
  for (char c : s)
  {
    if (c == '|')
      out += "\\|";
    else if (c == '\n' || c == '\r')
      out += ' ';
    else
      out += c;
  }
  return out;
}

std::string tex_escape(const std::string &s)
{
  std::string out;
  for (char c : s)
  {
    switch (c)
    {
      case '_': case '%': case '&': case '#': case '$': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      case '\n': case '\r': out += ' '; break;
      default: out += c;
    }
  }
  return out;
}

std::string norm_header(const std::string &id, ReportFormat format)
{
  const bool tex = format == ReportFormat::tex;
  if (id == "l0") return tex ? "$L_0$" : "L0";
  if (id == "l1") return tex ? "$L_1$" : "L1";
  if (id == "l2") return tex ? "$L_2$" : "L2";
  if (id == "linf") return tex ? "$L_{\\infty}$" : "Linf";
  if (id == "h2") return tex ? "$H_2$" : "H2";
  return id;
}

std::string size_text(const ProblemDims &d)
{
  return "n = " + std::to_string(d.n) + ", m = " + std::to_string(d.m) + ", q = " +
         std::to_string(d.q);
}

std::vector<std::string> norm_columns(const ResultsFile &results)
{
  if (!results.norm_ids.empty())
    return results.norm_ids;
  for (const auto &[label, ms] : results.measures)
  {
    std::vector<std::string> ids;
    for (const auto &[id, v] : ms.norms)
      ids.push_back(id);
    return ids;
  }
  return {};
}

const char *kScalingNote = "Each bar is the run time divided by the longest run time in the series.";

std::string markdown_report(const ResultsFile &r)
{
  std::ostringstream out;
  out << "# Benchmark report: " << md_escape(r.problem_id) << "\n\n";
  out << "<!-- environment\n"
      << "timestamp: " << r.env.timestamp << "\n"
      << "os: " << r.env.os_name_version << "\n"
      << "tool_version: " << r.env.tool_version << "\n"
      << "hostname: " << r.env.hostname << "\n"
      << "jobs: " << r.jobs << "\n"
      << "-->\n\n";

  out << "## Run Details\n\n";
  out << "| Field | Value |\n|---|---|\n";
  out << "| Timestamp | " << md_escape(r.env.timestamp) << " |\n";
  out << "| Benchmark ID | " << md_escape(r.problem_id) << " |\n";
  out << "| Operating system | " << md_escape(r.env.os_name_version) << " |\n";
  out << "| Software version | " << md_escape(r.env.tool_version) << " |\n";
  out << "| Problem size | " << size_text(r.problem_size) << " |\n";
  out << "| Host | " << md_escape(r.env.hostname) << " |\n\n";

  out << "## Run Times\n\n";
  out << "| Algorithm Isotope | Wall time [s] | Scaled | Reduced order | Status |\n";
  out << "|---|---:|---:|---:|---|\n";
  const auto scaled = scaled_or_empty(r);
  for (std::size_t i = 0; i < r.runs.size(); i++)
  {
    const auto &run = r.runs[i];
    const bool ok = run.status == RunStatus::ok;
    out << "| " << md_escape(run.isotope) << " | "
        << (ok ? fmt("%.6f", run.wall_time_s) : kDash) << " | "
        << (scaled[i] ? fmt("%.3f", *scaled[i]) : kDash) << " | "
        << (run.reduced_order ? std::to_string(*run.reduced_order) : kDash) << " | "
        << (ok ? "ok" : "failed: " + md_escape(run.message)) << " |\n";
  }
  out << "\n![Run times](runtimes.svg)\n\n" << kScalingNote << "\n";
  if (r.jobs > 1)
  {
    out << "\n> Runs executed with " << r.jobs
        << " parallel jobs: timings are not comparable across isotopes.\n";
  }
  out << "\n";

  out << "## Error Norms\n\n";
  const auto cols = norm_columns(r);
  out << "| Algorithm Isotope |";
  for (const auto &id : cols)
    out << " " << norm_header(id, ReportFormat::markdown) << " |";
  out << "\n|---|";
  for (std::size_t i = 0; i < cols.size(); i++)
    out << "---:|";
  out << "\n";
  for (const auto &run : r.runs)
  {
    const auto ms = r.measures.find(run.isotope);
    if (run.status != RunStatus::ok || ms == r.measures.end())
      continue;
    out << "| " << md_escape(run.isotope) << " |";
    for (const auto &id : cols)
    {
      const auto v = ms->second.norm(id);
      out << " " << (v ? format_norm(*v) : kDash) << " |";
    }
    out << "\n";
  }
  out << "\n";

  out << "## Plots\n\n";
  for (const auto &kind : kPlotKinds)
  {
    std::vector<std::string> links;
    if (r.plot.save_vector)
      links.push_back("[" + kind + ".svg](" + kind + ".svg)");
    if (r.plot.save_data)
      links.push_back("[" + kind + ".csv](" + kind + ".csv)");
    if (links.empty())
      continue;
    out << "- " << plot_title(kind) << ": ";
    for (std::size_t i = 0; i < links.size(); i++)
      out << (i ? ", " : "") << links[i];
    out << "\n";
  }
  if (!r.plot.save_vector && !r.plot.save_data)
    out << "No plot files were requested.\n";
  return out.str();
}

std::string tex_report(const ResultsFile &r)
{
  std::ostringstream out;
  out << "% environment\n"
      << "% timestamp: " << r.env.timestamp << "\n"
      << "% os: " << r.env.os_name_version << "\n"
      << "% tool_version: " << r.env.tool_version << "\n"
      << "% hostname: " << r.env.hostname << "\n"
      << "% jobs: " << r.jobs << "\n";
  out << "\\documentclass{article}\n\\begin{document}\n\n";
  out << "\\section*{Benchmark report: \\texttt{" << tex_escape(r.problem_id) << "}}\n\n";

  out << "\\section*{Run Details}\n\n\\begin{tabular}{ll}\n";
  out << "Timestamp & " << tex_escape(r.env.timestamp) << " \\\\\n";
  out << "Benchmark ID & \\texttt{" << tex_escape(r.problem_id) << "} \\\\\n";
  out << "Operating system & " << tex_escape(r.env.os_name_version) << " \\\\\n";
  out << "Software version & " << tex_escape(r.env.tool_version) << " \\\\\n";
  out << "Problem size & $n = " << r.problem_size.n << "$, $m = " << r.problem_size.m
      << "$, $q = " << r.problem_size.q << "$ \\\\\n";
  out << "Host & " << tex_escape(r.env.hostname) << " \\\\\n";
  out << "\\end{tabular}\n\n";

  out << "\\section*{Run Times}\n\n\\begin{tabular}{l|r|r|r|l}\n\\hline\n";
  out << "Algorithm Isotope & Wall time [s] & Scaled & Reduced order & Status \\\\\n\\hline\n";
  const auto scaled = scaled_or_empty(r);
  for (std::size_t i = 0; i < r.runs.size(); i++)
  {
    const auto &run = r.runs[i];
    const bool ok = run.status == RunStatus::ok;
    out << tex_escape(run.isotope) << " & " << (ok ? fmt("%.6f", run.wall_time_s) : "--") << " & "
        << (scaled[i] ? fmt("%.3f", *scaled[i]) : "--") << " & "
        << (run.reduced_order ? std::to_string(*run.reduced_order) : "--") << " & "
        << (ok ? "ok" : "failed: " + tex_escape(run.message)) << " \\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n\n";

  // Bar chart drawn with the picture environment so no graphics package is needed.
  constexpr double bar_len = 70.0;
  const double chart_height = 8.0 * static_cast<double>(r.runs.size()) + 4.0;
  out << "\\medskip\n\n\\setlength{\\unitlength}{1mm}\n\\begin{picture}(125," << chart_height
      << ")\n";
  for (std::size_t i = 0; i < r.runs.size(); i++)
  {
    const double y = chart_height - 8.0 * static_cast<double>(i + 1);
    out << "\\put(0," << y << "){\\small\\texttt{" << tex_escape(r.runs[i].isotope) << "}}\n";
    if (scaled[i])
    {
      const double len = std::max(bar_len * *scaled[i], 0.1);
      out << "\\put(40," << y << "){\\rule{" << fmt("%.2f", len) << "mm}{4mm}}\n";
      out << "\\put(" << fmt("%.2f", 42.0 + len) << "," << y << "){\\small " << fmt("%.3f", *scaled[i])
          << "}\n";
    }
    else
    {
      out << "\\put(40," << y << "){\\small failed}\n";
    }
  }
  out << "\\end{picture}\n\n" << kScalingNote << "\n";
  if (r.jobs > 1)
  {
    out << "\n\\emph{Runs executed with " << r.jobs
        << " parallel jobs: timings are not comparable across isotopes.}\n";
  }
  out << "\n";

  out << "\\section*{Error Norms}\n\n";
  const auto cols = norm_columns(r);
  out << "\\begin{tabular}{l";
  for (std::size_t i = 0; i < cols.size(); i++)
    out << "|c";
  out << "}\n\\hline\nAlgorithm Isotope";
  for (const auto &id : cols)
    out << " & " << norm_header(id, ReportFormat::tex);
  out << " \\\\\n\\hline\n";
  for (const auto &run : r.runs)
  {
    const auto ms = r.measures.find(run.isotope);
    if (run.status != RunStatus::ok || ms == r.measures.end())
      continue;
    out << tex_escape(run.isotope);
    for (const auto &id : cols)
    {
      const auto v = ms->second.norm(id);
      out << " & " << (v ? format_norm(*v) : "--");
    }
    out << " \\\\\n";
  }
  out << "\\hline\n\\end{tabular}\n\n";

  out << "\\section*{Plots}\n\n";
  const auto files = plot_file_names(r.plot);
  if (files.empty())
  {
    out << "No plot files were requested.\n\n";
  }
  else
  {
    out << "\\begin{itemize}\n";
    for (const auto &f : files)
      out << "\\item \\texttt{" << tex_escape(f) << "}\n";
    out << "\\end{itemize}\n\n";
  }
  out << "\\end{document}\n";
  return out.str();
}

}  // namespace

std::vector<std::optional<double>> scale_runtimes(const std::vector<std::optional<double>> &times)
{
  double max_time = 0.0;
  bool any = false;
  for (const auto &t : times)
  {
    if (t)
    {
      max_time = any ? std::max(max_time, *t) : *t;
      any = true;
    }
  }
  if (!any)
  {
    throw Error(ErrorCode::EmptySeries, "no successful runs to scale");
  }
  std::vector<std::optional<double>> out;
  out.reserve(times.size());
  for (const auto &t : times)
  {
    if (!t)
      out.emplace_back(std::nullopt);
    else if (*t == max_time)
      out.emplace_back(1.0);
    else
      out.emplace_back(max_time > 0.0 ? *t / max_time : 1.0);
  }
  return out;
}

std::string format_norm(double x)
{
  if (std::isinf(x))
    return x > 0 ? "inf" : "-inf";
  if (std::isnan(x))
    return "nan";
  return fmt("%.2e", x);
}

std::vector<std::string> plot_file_names(const PlotOptions &plot)
{
  std::vector<std::string> out;
  for (const auto &kind : kPlotKinds)
  {
    if (plot.save_vector)
      out.push_back(kind + ".svg");
    if (plot.save_data)
      out.push_back(kind + ".csv");
  }
  return out;
}

std::vector<fs::path> emit_plots(const ResultsFile &results, const PlotOptions &plot,
                                 const fs::path &out_dir)
{
  fs::create_directories(out_dir);
  std::vector<fs::path> written;
  for (const auto &kind : kPlotKinds)
  {
    const PlotData data = collect(results, kind);
    if (plot.save_vector)
    {
      const fs::path path = out_dir / (kind + ".svg");
      write_file(path, svg_text(data, results.problem_id));
      written.push_back(path);
    }
    if (plot.save_data)
    {
      const fs::path path = out_dir / (kind + ".csv");
      write_file(path, csv_text(data));
      written.push_back(path);
    }
  }
  return written;
}

std::string runtime_chart_svg(const ResultsFile &results)
{
  const auto scaled = scaled_or_empty(results);
  constexpr double left = 150, bar_max = 420, row = 28;
  const double height = 70 + row * static_cast<double>(results.runs.size());
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"680\" height=\"" << height
      << "\" viewBox=\"0 0 680 " << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"340\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">Scaled run times - "
      << xml_escape(results.problem_id) << "</text>\n";
  for (std::size_t i = 0; i < results.runs.size(); i++)
  {
    const double y = 36 + row * static_cast<double>(i);
    out << "<text x=\"" << left - 8 << "\" y=\"" << y + 15 << "\" text-anchor=\"end\">"
        << xml_escape(results.runs[i].isotope) << "</text>\n";
    if (scaled[i])
    {
      const double w = bar_max * *scaled[i];
      out << "<rect x=\"" << left << "\" y=\"" << y << "\" width=\"" << fmt("%.2f", w)
          << "\" height=\"20\" fill=\"" << kPalette[0] << "\"/>\n";
      out << "<text x=\"" << fmt("%.2f", left + w + 6) << "\" y=\"" << y + 15 << "\">"
          << fmt("%.3f", *scaled[i]) << "</text>\n";
    }
    else
    {
      out << "<text x=\"" << left + 6 << "\" y=\"" << y + 15 << "\" fill=\"#d62728\">failed</text>\n";
    }
  }
  out << "<text x=\"340\" y=\"" << height - 10 << "\" text-anchor=\"middle\" font-style=\"italic\">"
      << kScalingNote << "</text>\n";
  out << "</svg>\n";
  return out.str();
}

std::string render_report_text(const ResultsFile &results, ReportFormat format)
{
  return format == ReportFormat::tex ? tex_report(results) : markdown_report(results);
}

fs::path render_report(const ResultsFile &results, const ReportOptions &report,
                       const fs::path &out_dir)
{
  fs::create_directories(out_dir);
  write_file(out_dir / "runtimes.svg", runtime_chart_svg(results));
  const fs::path path =
      out_dir / (report.format == ReportFormat::tex ? "report.tex" : "report.md");
  write_file(path, render_report_text(results, report.format));
  return path;
}

}  // namespace morbench
