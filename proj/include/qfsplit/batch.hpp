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

#ifndef QFSPLIT_BATCH_HPP
#define QFSPLIT_BATCH_HPP

#include <cstddef>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "qfsplit/error.hpp"
#include "qfsplit/report.hpp"

namespace qfs {

/// A catalog line that is not a valid entry; aborts the whole batch.
class CatalogError : public Error {
public:
    CatalogError(std::size_t line, const std::string& what)
        : Error("catalog line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// JSON Lines catalog; blank lines are skipped.
std::vector<CatalogEntry> read_catalog(std::istream& in);

/// Analyses every entry on up to `jobs` threads. The result keeps the
/// catalog order whatever the scheduling.
std::vector<Report> run_batch(const std::vector<CatalogEntry>& entries, const AnalysisOptions& options,
                              unsigned jobs);

/// One compact JSON document per line.
void write_reports(std::ostream& out, const std::vector<Report>& reports);

struct BatchSummary {
    std::size_t entries = 0;
    std::size_t height1 = 0;
    std::size_t height2 = 0;
    std::size_t unknown = 0;
    std::size_t errors = 0;
};

BatchSummary summarize(const std::vector<Report>& reports);
/// "0 entries" or e.g. "5 entries: 2 height 1, 2 height 2, 1 unknown, 0 errors".
std::string to_string(const BatchSummary& s);

}  // namespace qfs

#endif
