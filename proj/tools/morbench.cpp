// SPDX-License-Identifier: Apache-2.0

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "morbench/commands.hpp"
#include "morbench/env.hpp"
#include "morbench/error.hpp"

int main(int argc, char **argv)
{
  using namespace morbench;

  CLI::App app{"Benchmark runner for model order reduction"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  std::string registry = default_registry().string();
  std::vector<std::string> map_impl;

  auto *list = app.add_subcommand("list", "List problems in the registry");
  list->add_option("--registry", registry, "Registry directory");

  std::string config;
  auto *validate = app.add_subcommand("validate", "Expand a config without running it");
  validate->add_option("config", config, "Config file")->required();
  validate->add_option("--registry", registry, "Registry directory");
  validate->add_option("--map-impl", map_impl, "Remap an implementation id (from=to)");

  std::string out_dir = "out";
  int jobs = 1;
  auto *run = app.add_subcommand("run", "Run a config and write results, plots and report");
  run->add_option("config", config, "Config file")->required();
  run->add_option("--registry", registry, "Registry directory");
  run->add_option("--out", out_dir, "Output directory");
  run->add_option("--jobs", jobs, "Parallel isotope runs");
  run->add_option("--map-impl", map_impl, "Remap an implementation id (from=to)");

  std::string results;
  std::optional<std::string> format;
  std::string report_out = ".";
  auto *report = app.add_subcommand("report", "Render a report from results.json");
  report->add_option("results", results, "results.json")->required();
  report->add_option("--format", format, "md or tex");
  report->add_option("--out", report_out, "Output directory");

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    if (e.get_exit_code() == 0)
      return app.exit(e);
    std::cerr << "error: Usage: " << e.what() << "\n";
    return 2;
  }

  ImplMap impl_map;
  try
  {
    impl_map = parse_impl_map(map_impl);
  }
  catch (const Error &e)
  {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  }

  if (*list)
    return cmd_list(registry, std::cout, std::cerr);
  if (*validate)
    return cmd_validate(config, registry, impl_map, std::cout, std::cerr);
  if (*run)
    return cmd_run(config, registry, out_dir, jobs, impl_map, std::cout, std::cerr);
  return cmd_report(results, report_out, format, std::cout, std::cerr);
}
