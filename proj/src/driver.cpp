// SPDX-License-Identifier: Apache-2.0

#include "morbench/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "morbench/analyzer.hpp"
#include "morbench/env.hpp"
#include "morbench/error.hpp"

namespace morbench
{

using json = nlohmann::json;

ExpandedPlan expand_config(const ProblemConfig &config, const ImplMap &impl_map,
                           const MethodRegistry &registry)
{
  parse_problem_id(config.problem_id);
  ExpandedPlan out;
  out.plan.problem_id = config.problem_id;
  out.plan.analysis = config.analysis;
  out.plan.plot = config.plot;
  out.plan.report = config.report;
  std::set<std::string> labels;
  for (const auto &method : config.alg_iso)
  {
    for (const auto &impl : method.impls)
    {
      if (impl.form == ImplConfig::Form::null)
      {
        out.notices.push_back(impl.path + ": null placeholder, no isotope run");
        continue;
      }
      const auto mapped = impl_map.find(impl.impl_id);
      const std::string impl_id = mapped != impl_map.end() ? mapped->second : impl.impl_id;
      if (registry.find(method.method_id, impl_id) == nullptr)
      {
        out.warnings.push_back(impl.path + ": no built-in implementation '" + method.method_id +
                               "-" + impl_id + "', skipped");
        continue;
      }
      for (std::size_t k = 0; k < impl.param_sets.size(); k++)
      {
        AlgorithmIsotope iso;
        iso.method_id = method.method_id;
        iso.impl_id = impl_id;
        iso.params = impl.param_sets[k];
        iso.label = method.method_id + "-" + impl.impl_id;
        std::string where = impl.path;
        if (impl.form == ImplConfig::Form::array)
        {
          iso.label += "-" + std::to_string(k + 1);
          where += "[" + std::to_string(k) + "]";
        }
        registry.validate(iso, where);
        if (!labels.insert(iso.label).second)
        {
          throw Error(ErrorCode::SchemaError, where + ": duplicate isotope label '" + iso.label + "'");
        }
        out.plan.isotopes.push_back(std::move(iso));
      }
    }
  }
  return out;
}

ResultsFile run_plan(const RunPlan &plan, const LtiSystem &sys, int jobs,
                     const MethodRegistry &registry, std::optional<EnvInfo> env)
{
  ResultsFile res;
  res.env = env ? *env : capture_env();
  res.problem_id = plan.problem_id;
  res.problem_size = {sys.order(), sys.inputs(), sys.outputs()};
  res.jobs = std::max(jobs, 1);
  res.norm_ids = plan.analysis.meas.norm_ids;
  res.plot = plan.plot;
  res.report = plan.report;
  res.original = original_curves(sys, plan.analysis);

  const std::size_t count = plan.isotopes.size();
  std::vector<RunRecord> records(count);
  std::vector<std::optional<MeasureSet>> measures(count);

  auto execute = [&](std::size_t i) {
    const AlgorithmIsotope &iso = plan.isotopes[i];
    RunRecord &rec = records[i];
    rec.isotope = iso.label;
    rec.problem_id = plan.problem_id;
    rec.environment = res.env;
    try
    {
      const auto start = std::chrono::steady_clock::now();
      ReducedModel rom = reduce(sys, iso, registry);
      const auto stop = std::chrono::steady_clock::now();
      rec.wall_time_s = std::chrono::duration<double>(stop - start).count();
      try
      {
        measures[i] = measure(sys, rom, plan.analysis);
        rec.status = RunStatus::ok;
        rec.reduced_order = rom.r;
        rec.truncation_tail = rom.truncation_tail;
      }
      catch (const std::exception &e)
      {
        rec.status = RunStatus::failed;
        rec.message = std::string("measurement failed: ") + e.what();
      }
    }
    catch (const Error &e)
    {
      rec.status = RunStatus::failed;
      rec.message = std::string(to_string(e.code())) + ": " + e.what();
    }
    catch (const std::exception &e)
    {
      rec.status = RunStatus::failed;
      rec.message = e.what();
    }
    catch (...)
    {
      rec.status = RunStatus::failed;
      rec.message = "unknown exception";
    }
  };

  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(res.jobs), count);
  if (workers <= 1)
  {
    for (std::size_t i = 0; i < count; i++)
    {
      execute(i);
    }
  }
  else
  {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; w++)
    {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++)
        {
          execute(i);
        }
      });
    }
    for (auto &t : pool)
    {
      t.join();
    }
  }

  res.runs = std::move(records);
  for (std::size_t i = 0; i < count; i++)
  {
    if (measures[i])
    {
      res.measures.emplace(res.runs[i].isotope, std::move(*measures[i]));
    }
  }
  return res;
}

namespace
{

json number_or_inf(double v)
{
  if (std::isinf(v))
    return v > 0 ? "inf" : "-inf";
  if (std::isnan(v))
    return "nan";
  return v;
}

double read_number(const json &v)
{
  if (v.is_string())
  {
    const auto s = v.get<std::string>();
    if (s == "inf")
      return std::numeric_limits<double>::infinity();
    if (s == "-inf")
      return -std::numeric_limits<double>::infinity();
    if (s == "nan")
      return std::numeric_limits<double>::quiet_NaN();
    throw Error(ErrorCode::ParseError, "results: unexpected string '" + s + "' for a number");
  }
  return v.get<double>();
}

json curve_to_json(const FrequencyCurve &c)
{
  return {{"omega", c.omega}, {"values", c.values}};
}

FrequencyCurve curve_from_json(const json &j)
{
  FrequencyCurve c;
  c.omega = j.at("omega").get<std::vector<double>>();
  c.values = j.at("values").get<std::vector<std::vector<double>>>();
  return c;
}

}  // namespace

std::string results_to_json(const ResultsFile &r)
{
  json doc;
  doc["schema_version"] = r.schema_version;
  doc["env"] = {{"timestamp", r.env.timestamp},
                {"os", r.env.os_name_version},
                {"tool_version", r.env.tool_version},
                {"hostname", r.env.hostname}};
  doc["problem_id"] = r.problem_id;
  doc["problem_size"] = {{"n", r.problem_size.n}, {"m", r.problem_size.m}, {"q", r.problem_size.q}};
  doc["jobs"] = r.jobs;
  doc["norm_ids"] = r.norm_ids;
  json runs = json::array();
  for (const auto &rec : r.runs)
  {
    json j = {{"isotope", rec.isotope},
              {"status", rec.status == RunStatus::ok ? "ok" : "failed"},
              {"wall_time_s", rec.wall_time_s}};
    if (rec.status == RunStatus::failed)
      j["message"] = rec.message;
    if (rec.reduced_order)
      j["reduced_order"] = *rec.reduced_order;
    if (rec.truncation_tail)
      j["truncation_tail"] = *rec.truncation_tail;
    runs.push_back(std::move(j));
  }
  doc["runs"] = std::move(runs);
  json measures = json::object();
  for (const auto &[label, ms] : r.measures)
  {
    json norms = json::object();
    for (const auto &[id, v] : ms.norms)
      norms[id] = number_or_inf(v);
    json samples = json::object();
    for (const auto &[kind, curve] : ms.freq_samples)
      samples[kind] = curve_to_json(curve);
    measures[label] = {{"norms", norms}, {"freq_samples", samples}, {"partial", ms.partial}};
  }
  doc["measures"] = std::move(measures);
  json original = json::object();
  for (const auto &[kind, curve] : r.original)
    original[kind] = curve_to_json(curve);
  doc["original"] = std::move(original);
  doc["options"] = {{"plot_opt", {{"save_eps", r.plot.save_vector}, {"save_fig", r.plot.save_data}}},
                    {"report_opt", {{"format", report_format_name(r.report.format)}}}};
  return doc.dump(1) + "\n";
}

ResultsFile results_from_json(const std::string &text)
{
  ResultsFile r;
  try
  {
    const json doc = json::parse(text);
    r.schema_version = doc.at("schema_version").get<int>();
    if (r.schema_version != kResultsSchemaVersion)
    {
      throw Error(ErrorCode::SchemaError,
                  "results: unsupported schema_version " + std::to_string(r.schema_version));
    }
    const json &env = doc.at("env");
    r.env.timestamp = env.at("timestamp").get<std::string>();
    r.env.os_name_version = env.at("os").get<std::string>();
    r.env.tool_version = env.at("tool_version").get<std::string>();
    r.env.hostname = env.at("hostname").get<std::string>();
    r.problem_id = doc.at("problem_id").get<std::string>();
    if (doc.contains("problem_size"))
    {
      const json &sz = doc["problem_size"];
      r.problem_size = {sz.at("n").get<Index>(), sz.at("m").get<Index>(), sz.at("q").get<Index>()};
    }
    else
    {
      r.problem_size = parse_problem_id(r.problem_id).dims;
    }
    r.jobs = doc.value("jobs", 1);
    if (doc.contains("norm_ids"))
      r.norm_ids = doc["norm_ids"].get<std::vector<std::string>>();
    for (const auto &j : doc.at("runs"))
    {
      RunRecord rec;
      rec.isotope = j.at("isotope").get<std::string>();
      rec.problem_id = r.problem_id;
      rec.environment = r.env;
      const auto status = j.at("status").get<std::string>();
      if (status != "ok" && status != "failed")
        throw Error(ErrorCode::SchemaError, "results: bad status '" + status + "'");
      rec.status = status == "ok" ? RunStatus::ok : RunStatus::failed;
      rec.message = j.value("message", "");
      rec.wall_time_s = j.at("wall_time_s").get<double>();
      if (j.contains("reduced_order"))
        rec.reduced_order = j["reduced_order"].get<Index>();
      if (j.contains("truncation_tail"))
        rec.truncation_tail = j["truncation_tail"].get<double>();
      r.runs.push_back(std::move(rec));
    }
    for (const auto &[label, j] : doc.at("measures").items())
    {
      MeasureSet ms;
      // Keep the requested norm order rather than the alphabetical JSON key order.
      const json &norms = j.at("norms");
      for (const auto &id : r.norm_ids)
      {
        if (norms.contains(id))
          ms.norms.emplace_back(id, read_number(norms[id]));
      }
      for (const auto &[id, v] : norms.items())
      {
        if (std::find(r.norm_ids.begin(), r.norm_ids.end(), id) == r.norm_ids.end())
          ms.norms.emplace_back(id, read_number(v));
      }
      for (const auto &[kind, c] : j.at("freq_samples").items())
        ms.freq_samples[kind] = curve_from_json(c);
      ms.partial = j.value("partial", false);
      r.measures.emplace(label, std::move(ms));
    }
    if (doc.contains("original"))
    {
      for (const auto &[kind, c] : doc["original"].items())
        r.original[kind] = curve_from_json(c);
    }
    if (doc.contains("options"))
    {
      const json &opts = doc["options"];
      if (opts.contains("plot_opt"))
      {
        r.plot.save_vector = opts["plot_opt"].value("save_eps", true);
        r.plot.save_data = opts["plot_opt"].value("save_fig", true);
      }
      if (opts.contains("report_opt"))
        r.report.format = parse_report_format(opts["report_opt"].value("format", "md"));
    }
  }
  catch (const json::exception &e)
  {
    throw Error(ErrorCode::ParseError, std::string("results: ") + e.what());
  }
  return r;
}

void write_results(const std::filesystem::path &path, const ResultsFile &results)
{
  std::ofstream out(path);
  if (!out)
  {
    throw Error(ErrorCode::Io, "cannot write " + path.string());
  }
  out << results_to_json(results);
  if (!out)
  {
    throw Error(ErrorCode::Io, "write failed for " + path.string());
  }
}

ResultsFile read_results(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error(ErrorCode::Io, "cannot open " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return results_from_json(ss.str());
}

}  // namespace morbench
