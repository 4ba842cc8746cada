// SPDX-License-Identifier: Apache-2.0

#include "morbench/commands.hpp"

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "morbench/config.hpp"
#include "morbench/error.hpp"
#include "morbench/explorer.hpp"
#include "morbench/problems.hpp"

namespace morbench
{

namespace fs = std::filesystem;

namespace
{

std::string one_line(std::string s)
{
  for (char &c : s)
  {
    if (c == '\n' || c == '\r')
      c = ' ';
  }
  return s;
}

int fail(std::ostream &err, const Error &e)
{
  err << "error: " << to_string(e.code()) << ": " << one_line(e.what()) << "\n";
  return 1;
}

int fail(std::ostream &err, const std::exception &e)
{
  err << "error: " << to_string(ErrorCode::Io) << ": " << one_line(e.what()) << "\n";
  return 1;
}

void warn(std::ostream &err, const std::string &msg) { err << "warning: " << one_line(msg) << "\n"; }

std::string params_text(const AlgorithmIsotope &iso)
{
  if (iso.params.empty())
    return "{}";
  std::ostringstream s;
  s << "{";
  for (std::size_t i = 0; i < iso.params.size(); i++)
  {
    s << (i ? ", " : "") << iso.params[i].first << ": " << iso.params[i].second;
  }
  s << "}";
  return s.str();
}

std::vector<ExpandedPlan> expand_all(const BenchmarkConfig &config, const ImplMap &impl_map,
                                     std::ostream &err)
{
  for (const auto &w : config.warnings)
    warn(err, w);
  std::vector<ExpandedPlan> plans;
  for (const auto &problem : config.problems)
  {
    plans.push_back(expand_config(problem, impl_map));
    for (const auto &w : plans.back().warnings)
      warn(err, w);
    for (const auto &n : plans.back().notices)
      err << "note: " << one_line(n) << "\n";
  }
  return plans;
}

}  // namespace

fs::path default_registry()
{
  if (const char *env = std::getenv(kRegistryEnv); env != nullptr && *env != '\0')
    return env;
  return "data/registry";
}

ImplMap parse_impl_map(const std::vector<std::string> &pairs)
{
  ImplMap map;
  for (const auto &p : pairs)
  {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == p.size())
      throw Error(ErrorCode::InvalidParameter, "--map-impl expects from=to, got '" + p + "'");
    map[p.substr(0, eq)] = p.substr(eq + 1);
  }
  return map;
}

int cmd_list(const fs::path &registry_dir, std::ostream &out, std::ostream &err)
{
  try
  {
    const auto listing = list_problems(registry_dir);
    for (const auto &w : listing.warnings)
      warn(err, w);
    for (const auto &p : listing.problems)
    {
      const auto &d = p.declared_dims;
      out << std::left << std::setw(32) << p.id << " n=" << d.n << " m=" << d.m
          << " q=" << d.q << "\n";
    }
    return 0;
  }
  catch (const Error &e)
  {
    return fail(err, e);
  }
  catch (const std::exception &e)
  {
    return fail(err, e);
  }
}

int cmd_validate(const fs::path &config_path, const fs::path &registry_dir, const ImplMap &impl_map,
                 std::ostream &out, std::ostream &err)
{
  try
  {
    const auto config = parse_config(config_path);
    const auto plans = expand_all(config, impl_map, err);
    for (const auto &ep : plans)
    {
      const auto &plan = ep.plan;
      const fs::path manifest = manifest_path_for(registry_dir, plan.problem_id);
      if (fs::exists(manifest))
        read_manifest(manifest);
      else
        warn(err, plan.problem_id + ": not found in registry " + registry_dir.string());
      out << plan.problem_id << ": " << plan.isotopes.size() << " isotope(s)\n";
      for (const auto &iso : plan.isotopes)
      {
        out << "  " << std::left << std::setw(20) << iso.label << " " << std::setw(12)
            << (iso.method_id + "-" + iso.impl_id) << " " << params_text(iso) << "\n";
      }
    }
    return 0;
  }
  catch (const Error &e)
  {
    return fail(err, e);
  }
  catch (const std::exception &e)
  {
    return fail(err, e);
  }
}

int cmd_run(const fs::path &config_path, const fs::path &registry_dir, const fs::path &out_dir,
            int jobs, const ImplMap &impl_map, std::ostream &out, std::ostream &err)
{
  try
  {
    if (jobs < 1)
      throw Error(ErrorCode::InvalidParameter, "--jobs must be at least 1");
    const auto config = parse_config(config_path);
    const auto plans = expand_all(config, impl_map, err);
    const bool nested = plans.size() > 1;
    for (const auto &ep : plans)
    {
      const auto &plan = ep.plan;
      if (plan.isotopes.empty())
        throw Error(ErrorCode::SchemaError, plan.problem_id + ": no runnable isotopes");
      const auto loaded = load_problem(manifest_path_for(registry_dir, plan.problem_id));
      const ResultsFile results = run_plan(plan, loaded.system, jobs);
      const fs::path dir = nested ? out_dir / plan.problem_id : out_dir;
      fs::create_directories(dir);
      write_results(dir / "results.json", results);
      emit_plots(results, results.plot, dir);
      const fs::path report = render_report(results, results.report, dir);
      std::size_t failed = 0;
      for (const auto &run : results.runs)
      {
        if (run.status == RunStatus::failed)
        {
          failed++;
          warn(err, plan.problem_id + ": " + run.isotope + " failed: " + run.message);
        }
      }
      out << plan.problem_id << ": " << results.runs.size() - failed << " ok, " << failed
          << " failed; report " << report.string() << "\n";
    }
    return 0;
  }
  catch (const Error &e)
  {
    return fail(err, e);
  }
  catch (const std::exception &e)
  {
    return fail(err, e);
  }
}

int cmd_report(const fs::path &results_path, const fs::path &out_dir,
               const std::optional<std::string> &format, std::ostream &out, std::ostream &err)
{
  try
  {
    const ResultsFile results = read_results(results_path);
    ReportOptions report = results.report;
    if (format)
      report.format = parse_report_format(*format);
    const fs::path path = render_report(results, report, out_dir);
    out << path.string() << "\n";
    return 0;
  }
  catch (const Error &e)
  {
    return fail(err, e);
  }
  catch (const std::exception &e)
  {
    return fail(err, e);
  }
}

}  // namespace morbench
