// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <fstream>
#include <regex>
#include <sstream>

#include "morbench/error.hpp"
#include "morbench/explorer.hpp"
#include "morbench/problems.hpp"
#include "test_support.hpp"

using namespace morbench;
using namespace morbench::testing;
namespace fs = std::filesystem;

namespace
{

std::string slurp(const fs::path &p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string &text)
{
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

const ResultsFile &sample_results()
{
  static const ResultsFile res = [] {
    RunPlan plan;
    plan.problem_id = "heatToy_n100m2q2";
    plan.isotopes = {{"bt", "sign", {{"tol", 1e-6}}, "bt-sign"},
                     {"bt", "emp", {}, "bt-emp"},
                     {"bt", "sign", {{"tol", 1e-10}}, "bt-sign-fine"}};
    plan.analysis.meas.sigmaplot = PlotGridOptions{-2, 8, 120};
    plan.analysis.bode = PlotGridOptions{-2, 8, 80};
    return run_plan(plan, make_heat_toy(100), 1, MethodRegistry::builtin(),
                    EnvInfo{"2024-01-02T03:04:05Z", "TestOS 1.0", "morbench test", "host_1"});
  }();
  return res;
}

// Minimal TeX well-formedness: balanced braces and environments, document wrapper.
void check_tex(const std::string &tex)
{
  int depth = 0;
  for (std::size_t i = 0; i < tex.size(); i++)
  {
    if (tex[i] == '\\' && i + 1 < tex.size())
    {
      i++;
      continue;
    }
    if (tex[i] == '%')
    {
      while (i < tex.size() && tex[i] != '\n')
        i++;
      continue;
    }
    if (tex[i] == '{')
      depth++;
    if (tex[i] == '}')
      depth--;
    REQUIRE(depth >= 0);
  }
  CHECK(depth == 0);
  std::vector<std::string> stack;
  const std::regex env(R"(\\(begin|end)\{([a-z*]+)\})");
  for (auto it = std::sregex_iterator(tex.begin(), tex.end(), env); it != std::sregex_iterator(); ++it)
  {
    if ((*it)[1] == "begin")
    {
      stack.push_back((*it)[2]);
    }
    else
    {
      REQUIRE(!stack.empty());
      CHECK(stack.back() == (*it)[2]);
      stack.pop_back();
    }
  }
  CHECK(stack.empty());
  CHECK(tex.find("\\documentclass") != std::string::npos);
  CHECK(tex.find("\\end{document}") != std::string::npos);
  // Unescaped specials outside math and comments would break compilation.
  CHECK(tex.find("heatToy_n") == std::string::npos);
  CHECK((tex.find("host_1") == std::string::npos || tex.find("% hostname: host_1") != std::string::npos));
}

}  // namespace

TEST_CASE("norm formatting", "[explorer]")
{
  CHECK(format_norm(2.2251e-6) == "2.23e-06");
  CHECK(format_norm(0.00290) == "2.90e-03");
  CHECK(format_norm(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_norm(0.0) == "0.00e+00");
  CHECK(format_norm(12345.0) == "1.23e+04");
  CHECK(format_norm(1e-100) == "1.00e-100");
}

TEST_CASE("norm formatting pattern", "[explorer][property]")
{
  Rng rng(71);
  std::uniform_real_distribution<double> exp_dist(-99, 99);
  const std::regex pattern(R"(\d\.\d\de[+-]\d\d)");
  for (int trial = 0; trial < 500; trial++)
  {
    const double x = std::pow(10.0, exp_dist(rng));
    const std::string s = format_norm(x);
    CHECK(std::regex_match(s, pattern));
    CHECK((std::abs(std::stod(s) - x) <= 0.005 * x * 1.0001));
  }
}

TEST_CASE("runtime scaling", "[explorer]")
{
  const auto s = scale_runtimes({2.0, 1.0, 4.0});
  CHECK(*s[0] == 0.5);
  CHECK(*s[1] == 0.25);
  CHECK(*s[2] == 1.0);
  CHECK(*scale_runtimes({7.0})[0] == 1.0);
  const auto gap = scale_runtimes({std::nullopt, 3.0});
  CHECK(!gap[0]);
  CHECK(*gap[1] == 1.0);
  CHECK_THROWS_AS(scale_runtimes({std::nullopt, std::nullopt}), Error);
  CHECK_THROWS_AS(scale_runtimes({}), Error);
}

TEST_CASE("runtime scaling property", "[explorer][property]")
{
  Rng rng(73);
  std::uniform_real_distribution<double> dist(1e-6, 10.0);
  for (int trial = 0; trial < 200; trial++)
  {
    std::vector<std::optional<double>> t(static_cast<std::size_t>(random_index(rng, 1, 10)));
    for (auto &v : t)
      v = dist(rng);
    if (trial % 3 == 0)
      t.push_back(t.front());  // a tie
    const auto s = scale_runtimes(t);
    const double mx = **std::max_element(t.begin(), t.end());
    int ones = 0;
    for (std::size_t i = 0; i < t.size(); i++)
    {
      CHECK(*s[i] > 0.0);
      CHECK(*s[i] <= 1.0);
      ones += *s[i] == 1.0;
      CHECK((*t[i] == mx) == (*s[i] == 1.0));
    }
    CHECK(ones >= 1);
  }
}

TEST_CASE("plot emission", "[explorer]")
{
  const auto &res = sample_results();
  const auto dir = scratch_dir("explorer_plots");
  const auto files = emit_plots(res, PlotOptions{true, true}, dir);
  CHECK(files.size() == 8);
  for (const auto &f : files)
    CHECK(fs::exists(f));
  CHECK(plot_file_names(PlotOptions{true, true}).size() == 8);

  const std::string sigma = slurp(dir / "sigma.csv");
  CHECK(line_count(sigma) == 121);
  CHECK(sigma.rfind("omega,original:s1,original:s2,bt-sign:s1,bt-sign:s2,bt-sign-fine:s1", 0) == 0);
  const std::string bode = slurp(dir / "bode.csv");
  CHECK(line_count(bode) == 81);
  CHECK(bode.rfind("omega,original:y1u1,original:y1u2,original:y2u1,original:y2u2,bt-sign:y1u1", 0) == 0);
  const std::string error = slurp(dir / "error.csv");
  CHECK(error.rfind("omega,bt-sign,bt-sign-fine\n", 0) == 0);
  CHECK(slurp(dir / "frobenius.csv").rfind("omega,original,bt-sign,bt-sign-fine\n", 0) == 0);
  const std::string svg = slurp(dir / "bode.svg");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  CHECK(svg.find("bt-emp") == std::string::npos);

  const auto csv_only = scratch_dir("explorer_csv_only");
  const auto only = emit_plots(res, PlotOptions{false, true}, csv_only);
  CHECK(only.size() == 4);
  for (const auto &f : only)
    CHECK(f.extension() == ".csv");
  CHECK(emit_plots(res, PlotOptions{false, false}, csv_only).empty());
}

TEST_CASE("markdown report structure", "[explorer]")
{
  const auto &res = sample_results();
  const std::string md = render_report_text(res, ReportFormat::markdown);
  const std::vector<std::string> order = {"<!--", "## Run Details", "2024-01-02T03:04:05Z", "heatToy_n100m2q2",
                                          "TestOS 1.0", "morbench test", "n = 100, m = 2, q = 2",
                                          "## Run Times", "runtimes.svg", "## Error Norms", "## Plots"};
  std::size_t pos = 0;
  for (const auto &needle : order)
  {
    INFO(needle);
    const auto found = md.find(needle, pos);
    REQUIRE(found != std::string::npos);
    pos = found;
  }
  const auto runtimes = md.substr(md.find("## Run Times"), md.find("## Error Norms") - md.find("## Run Times"));
  const auto errors = md.substr(md.find("## Error Norms"), md.find("## Plots") - md.find("## Error Norms"));
  for (const auto &label : {"| bt-sign |", "| bt-emp |", "| bt-sign-fine |"})
    CHECK(runtimes.find(label) != std::string::npos);
  CHECK(runtimes.find("failed: NonFinite") != std::string::npos);
  CHECK(errors.find("| bt-sign |") != std::string::npos);
  CHECK(errors.find("| bt-sign-fine |") != std::string::npos);
  CHECK(errors.find("bt-emp") == std::string::npos);
  CHECK(errors.find("| Algorithm Isotope | L0 | L1 | L2 | Linf | H2 |") != std::string::npos);
  const std::regex cell(R"(\| (\d\.\d\de[+-]\d\d|inf) )");
  CHECK(std::distance(std::sregex_iterator(errors.begin(), errors.end(), cell), std::sregex_iterator()) == 10);
  CHECK(md.find("not comparable") == std::string::npos);

  auto parallel = res;
  parallel.jobs = 3;
  CHECK(render_report_text(parallel, ReportFormat::markdown).find("not comparable") != std::string::npos);
}

TEST_CASE("report rendering is deterministic", "[explorer]")
{
  const auto &res = sample_results();
  const auto a = scratch_dir("explorer_report_a");
  const auto b = scratch_dir("explorer_report_b");
  const auto pa = render_report(res, ReportOptions{}, a);
  const auto pb = render_report(res, ReportOptions{}, b);
  CHECK(pa.filename() == "report.md");
  CHECK(slurp(pa) == slurp(pb));
  CHECK(slurp(a / "runtimes.svg") == slurp(b / "runtimes.svg"));
  const auto reread = results_from_json(results_to_json(res));
  CHECK(render_report_text(reread, ReportFormat::markdown) == slurp(pa));
}

TEST_CASE("tex report", "[explorer]")
{
  const auto &res = sample_results();
  const auto dir = scratch_dir("explorer_tex");
  const auto path = render_report(res, ReportOptions{ReportFormat::tex}, dir);
  CHECK(path.filename() == "report.tex");
  const std::string tex = slurp(path);
  CHECK(tex.rfind("% environment", 0) == 0);
  CHECK(tex.find("\\section*{Run Details}") < tex.find("\\section*{Run Times}"));
  CHECK(tex.find("\\section*{Run Times}") < tex.find("\\section*{Error Norms}"));
  CHECK(tex.find("\\section*{Error Norms}") < tex.find("\\section*{Plots}"));
  check_tex(tex);
}

TEST_CASE("runtime chart", "[explorer]")
{
  const auto svg = runtime_chart_svg(sample_results());
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 3);
  CHECK(svg.find("failed") != std::string::npos);
  CHECK(svg.find("1.000") != std::string::npos);
}
