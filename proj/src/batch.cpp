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

#include "qfsplit/batch.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace qfs {

std::vector<CatalogEntry> read_catalog(std::istream& in) {
    std::vector<CatalogEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Json j;
        try {
            j = Json::parse(line);
        } catch (const nlohmann::json::parse_error&) {
            throw CatalogError(line_no, "malformed JSON");
        }
        try {
            entries.push_back(catalog_entry_from_json(j));
        } catch (const InvalidArgument& e) {
            throw CatalogError(line_no, e.what());
        }
    }
    return entries;
}

std::vector<Report> run_batch(const std::vector<CatalogEntry>& entries, const AnalysisOptions& options,
                              unsigned jobs) {
    std::vector<Report> reports(entries.size());
    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < entries.size(); i = next++) reports[i] = analyze(entries[i], options);
    };
    if (workers <= 1) {
        work();
        return reports;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();  // joins
    return reports;
}

void write_reports(std::ostream& out, const std::vector<Report>& reports) {
    for (const auto& r : reports) out << to_json(r).dump() << '\n';
}

BatchSummary summarize(const std::vector<Report>& reports) {
    BatchSummary s;
    s.entries = reports.size();
    for (const auto& r : reports) {
        if (r.status != "ok" || !r.verdict) ++s.errors;
        else if (r.verdict->height == "1") ++s.height1;
        else if (r.verdict->height == "2") ++s.height2;
        else ++s.unknown;
    }
    return s;
}

std::string to_string(const BatchSummary& s) {
    if (s.entries == 0) return "0 entries";
    return std::to_string(s.entries) + (s.entries == 1 ? " entry: " : " entries: ") + std::to_string(s.height1) +
           " height 1, " + std::to_string(s.height2) + " height 2, " + std::to_string(s.unknown) + " unknown, " +
           std::to_string(s.errors) + " errors";
}

}  // namespace qfs
