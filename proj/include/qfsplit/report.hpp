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

#ifndef QFSPLIT_REPORT_HPP
#define QFSPLIT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qfsplit/config.hpp"

namespace qfs {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchemaVersion = 1;

std::string tool_version();

enum class Kind { Hypersurface, DoubleCover };
std::string to_string(Kind k);
/// Throws InvalidArgument for anything but "hypersurface" / "doublecover".
Kind kind_from_string(std::string_view s);

struct CatalogEntry {
    std::string name;
    std::uint32_t p = 2;
    Kind kind = Kind::Hypersurface;
    /// f for hypersurfaces, g for double covers.
    std::string poly;
    std::vector<std::string> tags;
    /// Variable order; empty means the sorted identifiers of poly
    /// (hypersurface) or x, y (double cover).
    std::vector<std::string> variables;

    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;
};

Json to_json(const CatalogEntry& e);
/// Throws InvalidArgument on missing or mistyped fields.
CatalogEntry catalog_entry_from_json(const Json& j);

struct ReportVerdict {
    bool f_split = false;
    bool quasi2 = false;
    std::string height;
    friend bool operator==(const ReportVerdict&, const ReportVerdict&) = default;
};

struct Report {
    int schema_version = kReportSchemaVersion;
    std::string tool_version;
    CatalogEntry entry;
    std::string status;  ///< "ok" or "error"
    std::optional<std::string> error;
    std::optional<ReportVerdict> verdict;
    std::vector<std::string> flags;
    std::string summary;
    /// Present only when requested.
    std::optional<Json> intermediates;
    std::optional<Json> cross_check;
    std::optional<double> timing_ms;

    friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

struct AnalysisOptions {
    bool explain = false;
    bool timing = false;
    bool cross_check = false;
    int max_height = 2;
    Config config;
};

/// Runs the analysis for one entry. Library errors are captured in the
/// report (status "error", flag "error") rather than thrown.
Report analyze(const CatalogEntry& entry, const AnalysisOptions& options);

/// Same as analyze but lets library errors propagate; the CLI uses it to
/// map input errors to exit codes.
Report analyze_or_throw(const CatalogEntry& entry, const AnalysisOptions& options);

}  // namespace qfs

#endif
