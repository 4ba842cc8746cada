// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_ERROR_HPP
#define MORBENCH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace morbench
{

enum class ErrorCode
{
  MalformedId,
  DimensionMismatch,
  SingularMatrix,
  SingularE,
  NotPSD,
  NonFinite,
  SignDivergence,
  ParseError,
  UnsupportedFormat,
  MissingRole,
  SchemaError,
  UnknownMethod,
  InvalidParameter,
  InvalidRange,
  SingularAtFrequency,
  EmptySeries,
  UnknownFormat,
  Io,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported through this exception. The code is stable and
// machine-readable; the message is for humans.
class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string &message);

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace morbench

#endif  // MORBENCH_ERROR_HPP
