// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_ENV_HPP
#define MORBENCH_ENV_HPP

#include <string>

#include "morbench/model.hpp"

namespace morbench
{

std::string tool_version();

// Timestamp (UTC, ISO-8601), OS name/release, tool version and host name.
EnvInfo capture_env();

}  // namespace morbench

#endif  // MORBENCH_ENV_HPP
