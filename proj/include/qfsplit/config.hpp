/*
   Copyright 2026 The qfsplit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QFSPLIT_CONFIG_HPP
#define QFSPLIT_CONFIG_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

namespace qfs {

/// Tunables read from an optional key=value file. Zero means "derive from p".
struct Config {
    /// Truncation degree of graded searches; 0 means 4 p^2.
    std::uint64_t truncation_degree = 0;
    /// Extra room in the Frobenius-image candidate window; 0 means p.
    std::uint64_t candidate_slack = 0;
    std::size_t witt_length_cap = 8;
};

/// Lines "key = value"; blank lines and lines starting with '#' are
/// ignored. Unknown keys and malformed values throw InvalidArgument.
Config parse_config(std::string_view text);
Config load_config_file(const std::filesystem::path& path);

/// Name of the environment variable holding a config path.
inline constexpr const char* kConfigEnvVar = "QFSPLIT_CONFIG";
std::optional<std::filesystem::path> config_path_from_env();

}  // namespace qfs

#endif
