// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_CONFIG_HPP
#define MORBENCH_CONFIG_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "morbench/options.hpp"

namespace morbench
{

using ParamSet = std::vector<std::pair<std::string, double>>;

// One implementation entry under a method in "alg_iso".
struct ImplConfig
{
  enum class Form
  {
    object,  // one isotope
    array,   // one isotope per element, labels suffixed -1, -2, ...
    null,    // listed but skipped
  };

  std::string impl_id;
  Form form = Form::object;
  std::vector<ParamSet> param_sets;
  std::string path;  // location in the config, for messages
};

struct MethodConfig
{
  std::string method_id;
  std::vector<ImplConfig> impls;
};

struct ProblemConfig
{
  std::string problem_id;
  std::vector<MethodConfig> alg_iso;
  AnalysisOptions analysis;
  PlotOptions plot;
  ReportOptions report;
};

struct BenchmarkConfig
{
  std::vector<ProblemConfig> problems;  // file order
  std::vector<std::string> warnings;
};

// Throws SchemaError naming the offending path, e.g. "id.alg_iso.bt.cst[0].tol".
BenchmarkConfig parse_config(const std::filesystem::path &path);
BenchmarkConfig parse_config_text(const std::string &text, const std::string &source = "<config>");

}  // namespace morbench

#endif  // MORBENCH_CONFIG_HPP
