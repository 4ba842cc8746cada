// SPDX-License-Identifier: Apache-2.0

#ifndef MORBENCH_COMMANDS_HPP
#define MORBENCH_COMMANDS_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "morbench/driver.hpp"

namespace morbench
{

inline constexpr const char *kRegistryEnv = "MORBENCH_REGISTRY";

// Each command returns a process exit code. Hard errors print one line
// "error: <Code>: <message>" to err; warnings print "warning: <message>".

int cmd_list(const std::filesystem::path &registry_dir, std::ostream &out, std::ostream &err);

int cmd_validate(const std::filesystem::path &config_path, const std::filesystem::path &registry_dir,
                 const ImplMap &impl_map, std::ostream &out, std::ostream &err);

int cmd_run(const std::filesystem::path &config_path, const std::filesystem::path &registry_dir,
            const std::filesystem::path &out_dir, int jobs, const ImplMap &impl_map,
            std::ostream &out, std::ostream &err);

int cmd_report(const std::filesystem::path &results_path, const std::filesystem::path &out_dir,
               const std::optional<std::string> &format, std::ostream &out, std::ostream &err);

// Parses repeated "from=to" pairs. Throws InvalidParameter.
ImplMap parse_impl_map(const std::vector<std::string> &pairs);

// MORBENCH_REGISTRY if set, else "data/registry".
std::filesystem::path default_registry();

}  // namespace morbench

#endif  // MORBENCH_COMMANDS_HPP
