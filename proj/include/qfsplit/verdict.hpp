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

#ifndef QFSPLIT_VERDICT_HPP
#define QFSPLIT_VERDICT_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "qfsplit/polynomial.hpp"

namespace qfs {

/// Upper bound on the quasi-F-split height established by a test.
enum class Height { One, Two, Unknown };

std::string to_string(Height h);
/// Inverse of to_string; throws InvalidArgument.
Height height_from_string(const std::string& s);

namespace flags {
inline constexpr const char* kCriterionCertified = "criterion-certified";
inline constexpr const char* kNonHomogeneous = "non-homogeneous-criterion";
inline constexpr const char* kDegreeMismatch = "degree-mismatch-criterion";
inline constexpr const char* kSearchCapped = "height-search-capped";
inline constexpr const char* kAssumedDomain = "assumed-domain";
inline constexpr const char* kSocleCriterion = "socle-criterion-verdict";
inline constexpr const char* kError = "error";
inline constexpr const char* kCrossCheckMismatch = "cross-check-mismatch";
}  // namespace flags

struct Verdict {
    bool f_split = false;
    bool quasi2 = false;
    Height height = Height::Unknown;
    /// f^(p-1) modulo (x_i^p): nonzero exactly when the Fedder clause holds.
    std::optional<Poly> fedder_residue;
    /// f^(p^2-p-1) Delta(f) modulo (x_i^(p^2)), when the second clause was evaluated.
    std::optional<Poly> clause2_residue;
    /// Sorted, without duplicates.
    std::vector<std::string> flags;

    void add_flag(const std::string& flag) {
        auto it = std::lower_bound(flags.begin(), flags.end(), flag);
        if (it == flags.end() || *it != flag) flags.insert(it, flag);
    }
    bool has_flag(const std::string& flag) const {
        return std::binary_search(flags.begin(), flags.end(), flag);
    }
};

/// Human-readable one-line conclusion, e.g. "not F-split; 2-quasi-F-split (height 2)".
std::string summary(const Verdict& v);

}  // namespace qfs

#endif
