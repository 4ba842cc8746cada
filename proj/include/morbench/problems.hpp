// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_PROBLEMS_HPP
#define MORBENCH_PROBLEMS_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "morbench/model.hpp"

namespace morbench
{

inline constexpr int kManifestFormatVersion = 1;
inline constexpr const char *kManifestName = "manifest.json";

struct ProblemManifest
{
  std::string id;
  std::map<std::string, std::string> files;  // role -> path relative to the manifest
  std::map<std::string, std::string> metadata;
  int format_version = kManifestFormatVersion;
};

// Parses and validates a manifest (schema, id, mandatory roles A and B, file
// existence). Does not read matrix files.
ProblemManifest read_manifest(const std::filesystem::path &manifest_path);

struct LoadedProblem
{
  BenchmarkProblem problem;
  LtiSystem system;
};

// Loads all matrices of a problem and applies the defaults E = I, C = I, D = 0.
LoadedProblem load_problem(const std::filesystem::path &manifest_path);

struct ProblemListing
{
  std::vector<BenchmarkProblem> problems;  // sorted by id
  std::vector<std::string> warnings;       // one per malformed manifest
};

ProblemListing list_problems(const std::filesystem::path &registry_dir);

// Manifest path for a problem id inside a registry.
std::filesystem::path manifest_path_for(const std::filesystem::path &registry_dir,
                                        const std::string &id);

// Writes <dir>/<id>/manifest.json plus one Matrix Market file per present matrix.
// Returns the manifest path.
std::filesystem::path write_problem(const std::filesystem::path &registry_dir,
                                    const std::string &id, const LtiSystem &sys,
                                    const std::map<std::string, std::string> &metadata = {});

// True iff every eigenvalue of the pencil (A, E) has negative real part, decided by
// the matrix sign function of E^{-1} A. Throws SignDivergence when undecidable.
bool is_stable(const LtiSystem &sys);

// 1-D heat equation on n interior points: A = (n+1)^2 tridiag(1, -2, 1), unit
// injections at x = 1/4 and 3/4, point evaluations at x = 1/2 and 9/10.
LtiSystem make_heat_toy(Index n);

}  // namespace morbench

#endif  // MORBENCH_PROBLEMS_HPP
