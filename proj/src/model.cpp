// SPDX-License-Identifier: Apache-2.0

#include "morbench/model.hpp"

#include <charconv>
#include <regex>

#include "morbench/error.hpp"

namespace morbench
{

namespace
{

std::string shape(const Matrix &m)
{
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_shape(const Matrix &m, Index rows, Index cols, const char *role)
{
  if (m.rows() != rows || m.cols() != cols)
  {
    throw Error(ErrorCode::DimensionMismatch, std::string(role) + " is " + shape(m) +
                                                  ", expected " + std::to_string(rows) +
                                                  "x" + std::to_string(cols));
  }
}

}  // namespace

LtiSystem::LtiSystem(SystemMatrices mats)
  : a_(std::move(mats.a)), b_(std::move(mats.b)), d_(std::move(mats.d)), e_(std::move(mats.e))
{
  const Index n = a_.rows();
  if (n < 1 || a_.cols() != n)
  {
    throw Error(ErrorCode::DimensionMismatch, "A is " + shape(a_) + ", expected square n>=1");
  }
  if (b_.rows() != n || b_.cols() < 1)
  {
    throw Error(ErrorCode::DimensionMismatch,
                "B is " + shape(b_) + ", expected " + std::to_string(n) + "xm with m>=1");
  }
  c_ = mats.c ? std::move(*mats.c) : Matrix::Identity(n, n);
  if (c_.cols() != n || c_.rows() < 1)
  {
    throw Error(ErrorCode::DimensionMismatch,
                "C is " + shape(c_) + ", expected qx" + std::to_string(n) + " with q>=1");
  }
  if (d_)
  {
    require_shape(*d_, c_.rows(), b_.cols(), "D");
  }
  if (e_)
  {
    require_shape(*e_, n, n, "E");
    try
    {
      e_lu_ = std::make_shared<const LuFactorization<double>>(lu_factor(*e_));
      et_lu_ = std::make_shared<const LuFactorization<double>>(
          lu_factor(Matrix(e_->transpose())));
    }
    catch (const Error &err)
    {
      throw Error(ErrorCode::SingularE, std::string("E is singular: ") + err.what());
    }
  }
}

LtiSystem::LtiSystem(StaticGainTag, Matrix d)
  : a_(0, 0), b_(0, d.cols()), c_(d.rows(), 0), d_(std::move(d))
{
}

LtiSystem LtiSystem::static_gain(Matrix d)
{
  if (d.rows() < 1 || d.cols() < 1)
  {
    throw Error(ErrorCode::DimensionMismatch, "static gain D is " + shape(d));
  }
  return LtiSystem(StaticGainTag{}, std::move(d));
}

Matrix LtiSystem::e_dense() const
{
  return e_ ? *e_ : Matrix::Identity(order(), order());
}

Matrix LtiSystem::d_dense() const
{
  return d_ ? *d_ : Matrix::Zero(outputs(), inputs());
}

Matrix LtiSystem::apply_e(const Matrix &x) const
{
  return e_ ? Matrix(*e_ * x) : x;
}

Matrix LtiSystem::solve_e(const Matrix &x) const
{
  return e_lu_ ? e_lu_->solve(x) : x;
}

Matrix LtiSystem::right_solve_e(const Matrix &x) const
{
  if (!et_lu_)
  {
    return x;
  }
  return et_lu_->solve(x.transpose()).transpose();
}

ProblemId parse_problem_id(std::string_view id)
{
  static const std::regex pattern("^([A-Za-z0-9]+)_n([0-9]+)m([0-9]+)q([0-9]+)$");
  std::match_results<std::string_view::const_iterator> match;
  if (!std::regex_match(id.begin(), id.end(), match, pattern))
  {
    throw Error(ErrorCode::MalformedId,
                "problem id '" + std::string(id) + "' does not match <name>_n<N>m<M>q<Q>");
  }
  auto to_dim = [&](int group) {
    Index value = 0;
    const auto text = match[group].str();
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value < 1)
    {
      throw Error(ErrorCode::MalformedId,
                  "problem id '" + std::string(id) + "' has invalid dimension '" + text + "'");
    }
    return value;
  };
  ProblemId out;
  out.name = match[1].str();
  out.dims = {to_dim(2), to_dim(3), to_dim(4)};
  return out;
}

std::string format_problem_id(const std::string &name, const ProblemDims &dims)
{
  return name + "_n" + std::to_string(dims.n) + "m" + std::to_string(dims.m) + "q" +
         std::to_string(dims.q);
}

std::optional<double> AlgorithmIsotope::param(std::string_view name) const
{
  for (const auto &[key, value] : params)
  {
    if (key == name)
    {
      return value;
    }
  }
  return std::nullopt;
}

std::optional<double> MeasureSet::norm(std::string_view id) const
{
  for (const auto &[key, value] : norms)
  {
    if (key == id)
    {
      return value;
    }
  }
  return std::nullopt;
}

}  // namespace morbench
