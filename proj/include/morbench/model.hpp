// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_MODEL_HPP
#define MORBENCH_MODEL_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "morbench/linalg.hpp"

namespace morbench
{

// Raw matrices of E x' = A x + B u, y = C x + D u before validation. Absent C means
// identity (q = n); absent D means zero; absent E means identity.
struct SystemMatrices
{
  Matrix a;
  Matrix b;
  std::optional<Matrix> c;
  std::optional<Matrix> d;
  std::optional<Matrix> e;
};

//
// Linear time-invariant first-order system. Immutable once constructed; construction
// validates all shapes and factors E (when present) to reject singular descriptors.
//
class LtiSystem
{
public:
  explicit LtiSystem(SystemMatrices mats);

  // Order-0 system G(s) = D. Only reduced models use this form.
  static LtiSystem static_gain(Matrix d);

  Index order() const { return a_.rows(); }
  Index inputs() const { return b_.cols(); }
  Index outputs() const { return c_.rows(); }

  const Matrix &a() const { return a_; }
  const Matrix &b() const { return b_; }
  const Matrix &c() const { return c_; }
  const std::optional<Matrix> &e() const { return e_; }
  const std::optional<Matrix> &d() const { return d_; }

  Matrix e_dense() const;
  Matrix d_dense() const;

  // E X, E^{-1} X and X E^{-1}; all reduce to copies when E is implicit.
  Matrix apply_e(const Matrix &x) const;
  Matrix solve_e(const Matrix &x) const;
  Matrix right_solve_e(const Matrix &x) const;

private:
  struct StaticGainTag
  {
  };
  LtiSystem(StaticGainTag, Matrix d);

  Matrix a_, b_, c_;
  std::optional<Matrix> d_, e_;
  // Factorizations of E and E^T, shared between copies.
  std::shared_ptr<const LuFactorization<double>> e_lu_, et_lu_;
};

struct ReducedModel
{
  LtiSystem system;
  Index r = 0;
  Vector hsv;
  double truncation_tail = 0.0;
};

struct ProblemDims
{
  Index n = 0;
  Index m = 0;
  Index q = 0;

  bool operator==(const ProblemDims &) const = default;
};

struct ProblemId
{
  std::string name;
  ProblemDims dims;
};

// Parses "<name>_n<N>m<M>q<Q>" with an alphanumeric name and positive dimensions.
ProblemId parse_problem_id(std::string_view id);
std::string format_problem_id(const std::string &name, const ProblemDims &dims);

struct BenchmarkProblem
{
  std::string id;
  std::map<std::string, std::filesystem::path> matrix_files;
  std::map<std::string, std::string> metadata;
  ProblemDims declared_dims;
};

struct AlgorithmIsotope
{
  std::string method_id;
  std::string impl_id;
  std::vector<std::pair<std::string, double>> params;
  std::string label;

  std::optional<double> param(std::string_view name) const;
};

struct EnvInfo
{
  std::string timestamp;
  std::string os_name_version;
  std::string tool_version;
  std::string hostname;
};

enum class RunStatus
{
  ok,
  failed,
};

struct RunRecord
{
  std::string isotope;
  std::string problem_id;
  RunStatus status = RunStatus::failed;
  std::string message;
  double wall_time_s = 0.0;
  std::optional<Index> reduced_order;
  std::optional<double> truncation_tail;  // sum of discarded Hankel singular values
  EnvInfo environment;
};

// Samples of one plot kind on a frequency grid. An empty value row marks a sample that
// could not be evaluated (the grid point is a pole).
struct FrequencyCurve
{
  std::vector<double> omega;
  std::vector<std::vector<double>> values;
};

struct MeasureSet
{
  std::vector<std::pair<std::string, double>> norms;
  std::map<std::string, FrequencyCurve> freq_samples;
  bool partial = false;

  std::optional<double> norm(std::string_view id) const;
};

}  // namespace morbench

#endif  // MORBENCH_MODEL_HPP
