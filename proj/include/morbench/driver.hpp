// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_DRIVER_HPP
#define MORBENCH_DRIVER_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "morbench/config.hpp"
#include "morbench/methods.hpp"
#include "morbench/model.hpp"
#include "morbench/options.hpp"

namespace morbench
{

inline constexpr int kResultsSchemaVersion = 1;

// Renames implementation ids of external packages onto built-in ones ("mess" -> "sign").
using ImplMap = std::map<std::string, std::string>;

struct RunPlan
{
  std::string problem_id;
  std::vector<AlgorithmIsotope> isotopes;  // config order
  AnalysisOptions analysis;
  PlotOptions plot;
  ReportOptions report;
};

struct ExpandedPlan
{
  RunPlan plan;
  std::vector<std::string> warnings;  // skipped unknown methods/implementations
  std::vector<std::string> notices;   // null placeholders
};

// Expands "alg_iso" into isotopes. Labels use the implementation id as written in the
// config, so remapped packages stay distinguishable. Parameters of runnable isotopes
// are validated against the registry.
ExpandedPlan expand_config(const ProblemConfig &config, const ImplMap &impl_map = {},
                           const MethodRegistry &registry = MethodRegistry::builtin());

struct ResultsFile
{
  int schema_version = kResultsSchemaVersion;
  EnvInfo env;
  std::string problem_id;
  ProblemDims problem_size;
  int jobs = 1;
  std::vector<std::string> norm_ids;
  std::vector<RunRecord> runs;                  // plan order
  std::map<std::string, MeasureSet> measures;  // ok runs only, keyed by label
  std::map<std::string, FrequencyCurve> original;
  PlotOptions plot;
  ReportOptions report;
};

// Executes every isotope on `sys`; failures are recorded, never propagated. Only the
// reduce call is timed. With jobs > 1 isotopes run on a thread pool; results keep plan
// order.
ResultsFile run_plan(const RunPlan &plan, const LtiSystem &sys, int jobs = 1,
                     const MethodRegistry &registry = MethodRegistry::builtin(),
                     std::optional<EnvInfo> env = std::nullopt);

std::string results_to_json(const ResultsFile &results);
ResultsFile results_from_json(const std::string &text);

void write_results(const std::filesystem::path &path, const ResultsFile &results);
ResultsFile read_results(const std::filesystem::path &path);

}  // namespace morbench

#endif  // MORBENCH_DRIVER_HPP
