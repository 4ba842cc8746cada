// SPDX-License-Identifier: Apache-2.0

#include "morbench/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "morbench/error.hpp"

namespace morbench
{

using ojson = nlohmann::ordered_json;

namespace
{

[[noreturn]] void schema_error(const std::string &path, const std::string &what)
{
  throw Error(ErrorCode::SchemaError, path + ": " + what);
}

const ojson &require_object(const ojson &node, const std::string &path)
{
  if (!node.is_object())
  {
    schema_error(path, "expected an object");
  }
  return node;
}

double require_number(const ojson &node, const std::string &path)
{
  if (!node.is_number())
  {
    schema_error(path, "expected a number, got " + std::string(node.type_name()));
  }
  return node.get<double>();
}

bool require_bool(const ojson &node, const std::string &path)
{
  // Numeric 0/1 flags are accepted alongside booleans.
  if (node.is_boolean())
    return node.get<bool>();
  if (node.is_number_integer() && (node.get<long>() == 0 || node.get<long>() == 1))
    return node.get<long>() == 1;
  schema_error(path, "expected a boolean");
}

ParamSet parse_params(const ojson &node, const std::string &path)
{
  require_object(node, path);
  ParamSet out;
  for (const auto &[key, value] : node.items())
  {
    out.emplace_back(key, require_number(value, path + "." + key));
  }
  return out;
}

PlotGridOptions parse_grid(const ojson &node, const std::string &path,
                           std::vector<std::string> &warnings)
{
  require_object(node, path);
  PlotGridOptions out;
  for (const auto &[key, value] : node.items())
  {
    const std::string where = path + "." + key;
    if (key == "FreqRange")
    {
      if (!value.is_array() || value.size() != 2)
      {
        schema_error(where, "expected [lo, hi]");
      }
      out.lo = require_number(value[0], where + "[0]");
      out.hi = require_number(value[1], where + "[1]");
      if (!(out.lo < out.hi))
      {
        schema_error(where, "lo must be below hi");
      }
    }
    else if (key == "MaxPoints")
    {
      if (!value.is_number_integer() || value.get<long>() < 2)
      {
        schema_error(where, "expected an integer >= 2");
      }
      out.max_points = value.get<int>();
    }
    else if (key == "ShowPlot")
    {
      // Accepted for compatibility; plots are never shown interactively.
      require_bool(value, where);
    }
    else
    {
      warnings.push_back(where + ": unknown option ignored");
    }
  }
  return out;
}

MeasureOptions parse_meas(const ojson &node, const std::string &path,
                          std::vector<std::string> &warnings)
{
  require_object(node, path);
  MeasureOptions out;
  for (const auto &[key, value] : node.items())
  {
    const std::string where = path + "." + key;
    if (key == "norm_id")
    {
      if (!value.is_array())
      {
        schema_error(where, "expected an array of norm ids");
      }
      out.norm_ids.clear();
      for (std::size_t i = 0; i < value.size(); i++)
      {
        const std::string item_path = where + "[" + std::to_string(i) + "]";
        if (!value[i].is_string())
        {
          schema_error(item_path, "expected a string");
        }
        const auto id = value[i].get<std::string>();
        if (std::find(kNormIds.begin(), kNormIds.end(), id) == kNormIds.end())
        {
          schema_error(item_path, "unknown norm id '" + id + "'");
        }
        if (std::find(out.norm_ids.begin(), out.norm_ids.end(), id) != out.norm_ids.end())
        {
          schema_error(item_path, "duplicate norm id '" + id + "'");
        }
        out.norm_ids.push_back(id);
      }
    }
    else if (key == "time_points")
    {
      if (!value.is_number_integer() || value.get<long>() < 2)
      {
        schema_error(where, "expected an integer >= 2");
      }
      out.time_points = value.get<int>();
    }
    else if (key == "h2_method")
    {
      if (!value.is_string())
      {
        schema_error(where, "expected a string");
      }
      out.h2_method = value.get<std::string>();
      if (out.h2_method != "lyap")
      {
        warnings.push_back(where + ": only \"lyap\" is implemented; using it");
        out.h2_method = "lyap";
      }
    }
    else if (key == "ml_bodemag")
    {
      out.bodemag = parse_grid(value, where, warnings);
    }
    else if (key == "ml_sigmaplot")
    {
      out.sigmaplot = parse_grid(value, where, warnings);
    }
    else if (key == "ml_frobeniusplot")
    {
      out.frobeniusplot = parse_grid(value, where, warnings);
    }
    else
    {
      warnings.push_back(where + ": unknown option ignored");
    }
  }
  return out;
}

PlotOptions parse_plot(const ojson &node, const std::string &path,
                       std::vector<std::string> &warnings)
{
  require_object(node, path);
  PlotOptions out;
  for (const auto &[key, value] : node.items())
  {
    const std::string where = path + "." + key;
    if (key == "save_eps")
      out.save_vector = require_bool(value, where);
    else if (key == "save_fig")
      out.save_data = require_bool(value, where);
    else
      warnings.push_back(where + ": unknown option ignored");
  }
  return out;
}

ReportOptions parse_report(const ojson &node, const std::string &path,
                           std::vector<std::string> &warnings)
{
  require_object(node, path);
  ReportOptions out;
  for (const auto &[key, value] : node.items())
  {
    const std::string where = path + "." + key;
    if (key == "format")
    {
      if (!value.is_string())
      {
        schema_error(where, "expected \"md\" or \"tex\"");
      }
      try
      {
        out.format = parse_report_format(value.get<std::string>());
      }
      catch (const Error &e)
      {
        schema_error(where, e.what());
      }
    }
    else
    {
      warnings.push_back(where + ": unknown option ignored");
    }
  }
  return out;
}

std::vector<MethodConfig> parse_alg_iso(const ojson &node, const std::string &path)
{
  require_object(node, path);
  std::vector<MethodConfig> out;
  for (const auto &[method, impls] : node.items())
  {
    const std::string mpath = path + "." + method;
    require_object(impls, mpath);
    MethodConfig mc;
    mc.method_id = method;
    for (const auto &[impl, value] : impls.items())
    {
      ImplConfig ic;
      ic.impl_id = impl;
      ic.path = mpath + "." + impl;
      if (value.is_null())
      {
        ic.form = ImplConfig::Form::null;
      }
      else if (value.is_array())
      {
        ic.form = ImplConfig::Form::array;
        if (value.empty())
        {
          schema_error(ic.path, "empty parameter array");
        }
        for (std::size_t i = 0; i < value.size(); i++)
        {
          ic.param_sets.push_back(
              parse_params(value[i], ic.path + "[" + std::to_string(i) + "]"));
        }
      }
      else if (value.is_object())
      {
        ic.form = ImplConfig::Form::object;
        ic.param_sets.push_back(parse_params(value, ic.path));
      }
      else
      {
        schema_error(ic.path, "expected an object, an array of objects, or null");
      }
      mc.impls.push_back(std::move(ic));
    }
    out.push_back(std::move(mc));
  }
  return out;
}

}  // namespace

BenchmarkConfig parse_config_text(const std::string &text, const std::string &source)
{
  ojson doc;
  try
  {
    doc = ojson::parse(text);
  }
  catch (const ojson::parse_error &e)
  {
    throw Error(ErrorCode::ParseError, source + ": " + e.what());
  }
  if (!doc.is_object() || doc.empty())
  {
    schema_error(source, "top level must be a non-empty object keyed by benchmark id");
  }
  BenchmarkConfig out;
  for (const auto &[id, body] : doc.items())
  {
    require_object(body, id);
    ProblemConfig pc;
    pc.problem_id = id;
    if (!body.contains("alg_iso"))
    {
      schema_error(id, "missing required field 'alg_iso'");
    }
    for (const auto &[key, value] : body.items())
    {
      const std::string where = id + "." + key;
      if (key == "alg_iso")
        pc.alg_iso = parse_alg_iso(value, where);
      else if (key == "meas_opt")
        pc.analysis.meas = parse_meas(value, where, out.warnings);
      else if (key == "bode_opt")
        pc.analysis.bode = parse_grid(value, where, out.warnings);
      else if (key == "plot_opt")
        pc.plot = parse_plot(value, where, out.warnings);
      else if (key == "report_opt")
        pc.report = parse_report(value, where, out.warnings);
      else
        schema_error(where, "unknown field (expected alg_iso, meas_opt, bode_opt, plot_opt, report_opt)");
    }
    out.problems.push_back(std::move(pc));
  }
  return out;
}

BenchmarkConfig parse_config(const std::filesystem::path &path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw Error(ErrorCode::Io, "cannot open config " + path.string());
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  BenchmarkConfig out = parse_config_text(ss.str(), path.string());
  const std::string stem = path.stem().string();
  if (out.problems.size() == 1 && out.problems.front().problem_id != stem)
  {
    out.warnings.push_back(path.string() + ": file name does not match benchmark id '" +
                           out.problems.front().problem_id + "'");
  }
  return out;
}

}  // namespace morbench
