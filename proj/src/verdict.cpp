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

#include "qfsplit/verdict.hpp"

namespace qfs {

std::string to_string(Height h) {
    switch (h) {
        case Height::One: return "1";
        case Height::Two: return "2";
        case Height::Unknown: break;
    }
    return "unknown";
}

Height height_from_string(const std::string& s) {
    if (s == "1") return Height::One;
    if (s == "2") return Height::Two;
    if (s == "unknown") return Height::Unknown;
    throw InvalidArgument("unknown height '" + s + "'");
}

std::string summary(const Verdict& v) {
    if (v.f_split) return "F-split (height 1)";
    if (v.quasi2) return "not F-split; 2-quasi-F-split (height 2)";
    if (v.has_flag(flags::kSearchCapped)) return "not F-split; height search stopped at 1";
    return "not F-split; not 2-quasi-F-split (height unknown)";
}

}  // namespace qfs
