// SPDX-License-Identifier: Apache-2.0

#include "morbench/env.hpp"

#include <chrono>
#include <ctime>

#include <sys/utsname.h>
#include <unistd.h>

#ifndef MORBENCH_VERSION
#define MORBENCH_VERSION "0.0.0"
#endif

namespace morbench
{

std::string tool_version()
{
  return std::string("morbench ") + MORBENCH_VERSION;
}

EnvInfo capture_env()
{
  EnvInfo env;
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &utc);
  env.timestamp = stamp;

  utsname uts{};
  if (uname(&uts) == 0)
  {
    env.os_name_version = std::string(uts.sysname) + " " + uts.release + " " + uts.machine;
  }
  else
  {
    env.os_name_version = "unknown";
  }
  env.tool_version = tool_version();
  char host[256] = {};
  if (gethostname(host, sizeof(host) - 1) == 0 && host[0] != '\0')
  {
    env.hostname = host;
  }
  else
  {
    env.hostname = "unknown";
  }
  return env;
}

}  // namespace morbench
