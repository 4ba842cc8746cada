// SPDX-License-Identifier: Apache-2.0

#include "morbench/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include <json.hpp>

#include "morbench/error.hpp"
#include "morbench/matrix_market.hpp"
#include "morbench/methods.hpp"

namespace morbench
{

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace
{

const std::vector<std::string> kRoles = {"A", "B", "C", "D", "E"};

[[noreturn]] void manifest_error(const fs::path &path, const std::string &what)
{
  throw Error(ErrorCode::SchemaError, path.string() + ": " + what);
}

}  // namespace

ProblemManifest read_manifest(const fs::path &manifest_path)
{
  std::ifstream in(manifest_path);
  if (!in)
  {
    throw Error(ErrorCode::Io, "cannot open manifest " + manifest_path.string());
  }
  json doc;
  try
  {
    doc = json::parse(in);
  }
  catch (const json::parse_error &e)
  {
    throw Error(ErrorCode::ParseError, manifest_path.string() + ": " + e.what());
  }
  if (!doc.is_object())
  {
    manifest_error(manifest_path, "manifest must be a JSON object");
  }
  ProblemManifest out;
  if (!doc.contains("id") || !doc["id"].is_string())
  {
    manifest_error(manifest_path, "missing string field 'id'");
  }
  out.id = doc["id"].get<std::string>();
  parse_problem_id(out.id);
  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
  {
    manifest_error(manifest_path, "missing integer field 'format_version'");
  }
  out.format_version = doc["format_version"].get<int>();
  if (out.format_version != kManifestFormatVersion)
  {
    manifest_error(manifest_path,
                   "unsupported format_version " + std::to_string(out.format_version));
  }
  if (!doc.contains("files") || !doc["files"].is_object())
  {
    manifest_error(manifest_path, "missing object field 'files'");
  }
  for (const auto &[role, file] : doc["files"].items())
  {
    if (std::find(kRoles.begin(), kRoles.end(), role) == kRoles.end())
    {
      manifest_error(manifest_path, "unknown matrix role '" + role + "'");
    }
    if (!file.is_string())
    {
      manifest_error(manifest_path, "files." + role + " must be a string");
    }
    out.files[role] = file.get<std::string>();
  }
  for (const char *role : {"A", "B"})
  {
    if (!out.files.count(role))
    {
      throw Error(ErrorCode::MissingRole,
                  manifest_path.string() + ": mandatory matrix role " + role + " missing");
    }
  }
  if (doc.contains("metadata"))
  {
    if (!doc["metadata"].is_object())
    {
      manifest_error(manifest_path, "'metadata' must be an object");
    }
    for (const auto &[key, value] : doc["metadata"].items())
    {
      if (!value.is_string())
      {
        manifest_error(manifest_path, "metadata." + key + " must be a string");
      }
      out.metadata[key] = value.get<std::string>();
    }
  }
  const fs::path dir = manifest_path.parent_path();
  for (const auto &[role, file] : out.files)
  {
    if (!fs::exists(dir / file))
    {
      throw Error(ErrorCode::Io, manifest_path.string() + ": file for role " + role +
                                     " not found: " + (dir / file).string());
    }
  }
  return out;
}

LoadedProblem load_problem(const fs::path &manifest_path)
{
  const ProblemManifest manifest = read_manifest(manifest_path);
  const ProblemId parsed = parse_problem_id(manifest.id);
  const fs::path dir = manifest_path.parent_path();

  BenchmarkProblem problem;
  problem.id = manifest.id;
  problem.metadata = manifest.metadata;
  problem.declared_dims = parsed.dims;
  SystemMatrices mats;
  for (const auto &[role, file] : manifest.files)
  {
    problem.matrix_files[role] = dir / file;
    Matrix m = read_matrix_market(dir / file);
    if (role == "A")
      mats.a = std::move(m);
    else if (role == "B")
      mats.b = std::move(m);
    else if (role == "C")
      mats.c = std::move(m);
    else if (role == "D")
      mats.d = std::move(m);
    else
      mats.e = std::move(m);
  }

  const ProblemDims want = parsed.dims;
  const Index q_loaded = mats.c ? mats.c->rows() : mats.a.rows();
  const ProblemDims got{mats.a.rows(), mats.b.cols(), q_loaded};
  if (!(got == want))
  {
    throw Error(ErrorCode::DimensionMismatch,
                manifest.id + ": id declares n=" + std::to_string(want.n) +
                    " m=" + std::to_string(want.m) + " q=" + std::to_string(want.q) +
                    ", matrices give n=" + std::to_string(got.n) +
                    " m=" + std::to_string(got.m) + " q=" + std::to_string(got.q));
  }
  return {std::move(problem), LtiSystem(std::move(mats))};
}

ProblemListing list_problems(const fs::path &registry_dir)
{
  ProblemListing out;
  if (!fs::is_directory(registry_dir))
  {
    out.warnings.push_back("registry directory " + registry_dir.string() + " does not exist");
    return out;
  }
  for (const auto &entry : fs::directory_iterator(registry_dir))
  {
    const fs::path manifest = entry.path() / kManifestName;
    if (!entry.is_directory() || !fs::exists(manifest))
    {
      continue;
    }
    try
    {
      const ProblemManifest m = read_manifest(manifest);
      BenchmarkProblem p;
      p.id = m.id;
      p.metadata = m.metadata;
      p.declared_dims = parse_problem_id(m.id).dims;
      for (const auto &[role, file] : m.files)
      {
        p.matrix_files[role] = entry.path() / file;
      }
      out.problems.push_back(std::move(p));
    }
    catch (const Error &e)
    {
      out.warnings.push_back(std::string(to_string(e.code())) + ": " + e.what());
    }
  }
  std::sort(out.problems.begin(), out.problems.end(),
            [](const auto &x, const auto &y) { return x.id < y.id; });
  std::sort(out.warnings.begin(), out.warnings.end());
  return out;
}

fs::path manifest_path_for(const fs::path &registry_dir, const std::string &id)
{
  return registry_dir / id / kManifestName;
}

fs::path write_problem(const fs::path &registry_dir, const std::string &id,
                       const LtiSystem &sys, const std::map<std::string, std::string> &metadata)
{
  parse_problem_id(id);
  const fs::path dir = registry_dir / id;
  fs::create_directories(dir);
  json files = json::object();
  auto put = [&](const char *role, const Matrix &m) {
    const std::string name = std::string(role) + ".mtx";
    write_matrix_market(dir / name, m);
    files[role] = name;
  };
  put("A", sys.a());
  put("B", sys.b());
  put("C", sys.c());
  if (sys.d())
  {
    put("D", *sys.d());
  }
  if (sys.e())
  {
    put("E", *sys.e());
  }
  json doc = {{"id", id}, {"format_version", kManifestFormatVersion}, {"files", files},
              {"metadata", metadata}};
  const fs::path manifest = dir / kManifestName;
  std::ofstream out(manifest);
  if (!out)
  {
    throw Error(ErrorCode::Io, "cannot write " + manifest.string());
  }
  out << doc.dump(2) << "\n";
  return manifest;
}

bool is_stable(const LtiSystem &sys)
{
  if (sys.order() == 0)
  {
    return true;
  }
  return sign_newton(sys.solve_e(sys.a())).outcome == SignOutcome::negative_identity;
}

LtiSystem make_heat_toy(Index n)
{
  const double scale = static_cast<double>((n + 1) * (n + 1));
  SystemMatrices mats;
  mats.a = Matrix::Zero(n, n);
  for (Index i = 0; i < n; i++)
  {
    mats.a(i, i) = -2.0 * scale;
    if (i > 0)
      mats.a(i, i - 1) = scale;
    if (i + 1 < n)
      mats.a(i, i + 1) = scale;
  }
  // Node i sits at x = (i + 1) / (n + 1).
  auto node = [&](double x) {
    const auto i = static_cast<Index>(std::lround(x * static_cast<double>(n + 1))) - 1;
    return std::clamp<Index>(i, 0, n - 1);
  };
  mats.b = Matrix::Zero(n, 2);
  mats.b(node(0.25), 0) = 1.0;
  mats.b(node(0.75), 1) = 1.0;
  Matrix c = Matrix::Zero(2, n);
  c(0, node(0.5)) = 1.0;
  c(1, node(0.9)) = 1.0;
  mats.c = std::move(c);
  return LtiSystem(std::move(mats));
}

}  // namespace morbench
