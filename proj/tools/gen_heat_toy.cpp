// SPDX-License-Identifier: Apache-2.0

// Writes the bundled heatToy problem into a registry directory.

#include <iostream>
#include <string>

#include "morbench/error.hpp"
#include "morbench/model.hpp"
#include "morbench/problems.hpp"

int main(int argc, char **argv)
{
  if (argc < 2 || argc > 3)
  {
    std::cerr << "usage: gen_heat_toy <registry_dir> [n]\n";
    return 2;
  }
  try
  {
    const morbench::Index n = argc == 3 ? std::stol(argv[2]) : 100;
    const auto sys = morbench::make_heat_toy(n);
    const std::string id = morbench::format_problem_id("heatToy", {n, sys.inputs(), sys.outputs()});
    const auto path = morbench::write_problem(
        argv[1], id, sys,
        {{"description", "1D heat equation, finite differences, Dirichlet boundary"},
         {"generator", "gen_heat_toy"}});
    std::cout << path.string() << "\n";
  }
  catch (const std::exception &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
