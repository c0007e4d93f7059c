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

#include "qfsplit/config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "qfsplit/error.hpp"
#include "qfsplit/witt.hpp"

namespace qfs {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::uint64_t parse_number(std::string_view key, std::string_view value) {
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc() || ptr != value.data() + value.size())
        throw InvalidArgument("config: bad value '" + std::string(value) + "' for " + std::string(key));
    return out;
}

}  // namespace

Config parse_config(std::string_view text) {
    Config cfg;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw InvalidArgument("config line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        if (key == "truncation_degree") {
            cfg.truncation_degree = parse_number(key, value);
        } else if (key == "candidate_slack") {
            cfg.candidate_slack = parse_number(key, value);
        } else if (key == "witt_length_cap") {
            cfg.witt_length_cap = parse_number(key, value);
            if (cfg.witt_length_cap == 0 || cfg.witt_length_cap > kMaxWittLength)
                throw InvalidArgument("config: witt_length_cap must be between 1 and " + std::to_string(kMaxWittLength));
        } else {
            throw InvalidArgument("config line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
        }
    }
    return cfg;
}

Config load_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::optional<std::filesystem::path> config_path_from_env() {
    const char* v = std::getenv(kConfigEnvVar);
    if (v == nullptr || *v == '\0') return std::nullopt;
    return std::filesystem::path(v);
}

}  // namespace qfs
