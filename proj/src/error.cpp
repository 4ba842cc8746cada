// SPDX-License-Identifier: Apache-2.0

#include "morbench/error.hpp"

namespace morbench
{

std::string_view to_string(ErrorCode code)
{
  switch (code)
  {
    case ErrorCode::MalformedId:
      return "MalformedId";
    case ErrorCode::DimensionMismatch:
      return "DimensionMismatch";
    case ErrorCode::SingularMatrix:
      return "SingularMatrix";
    case ErrorCode::SingularE:
      return "SingularE";
    case ErrorCode::NotPSD:
      return "NotPSD";
    case ErrorCode::NonFinite:
      return "NonFinite";
    case ErrorCode::SignDivergence:
      return "SignDivergence";
    case ErrorCode::ParseError:
      return "ParseError";
    case ErrorCode::UnsupportedFormat:
      return "UnsupportedFormat";
    case ErrorCode::MissingRole:
      return "MissingRole";
    case ErrorCode::SchemaError:
      return "SchemaError";
    case ErrorCode::UnknownMethod:
      return "UnknownMethod";
    case ErrorCode::InvalidParameter:
      return "InvalidParameter";
    case ErrorCode::InvalidRange:
      return "InvalidRange";
    case ErrorCode::SingularAtFrequency:
      return "SingularAtFrequency";
    case ErrorCode::EmptySeries:
      return "EmptySeries";
    case ErrorCode::UnknownFormat:
      return "UnknownFormat";
    case ErrorCode::Io:
      return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
  : std::runtime_error(message), code_(code)
{
}

}  // namespace morbench
