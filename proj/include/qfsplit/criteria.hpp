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

#ifndef QFSPLIT_CRITERIA_HPP
#define QFSPLIT_CRITERIA_HPP

#include <cstdint>

#include "qfsplit/polynomial.hpp"
#include "qfsplit/verdict.hpp"

namespace qfs {

/// f^(p-1) modulo (x_1^p, ..., x_n^p).
Poly fedder_residue(const Poly& f);

/// Fedder: f^(p-1) is not in (x_1^p, ..., x_n^p). Throws ZeroInput for f = 0.
bool fedder_test(const Poly& f);

/// Height-2 test for hypersurfaces: clause 1 is Fedder, clause 2 asks
/// f^(p^2-p-1) Delta(f) not in (x_1^(p^2), ..., x_n^(p^2)). Clause 2 is only
/// evaluated when clause 1 fails. The criterion is proven for
/// homogeneous f of degree equal to the number of variables; other inputs
/// get a flag instead of a certificate. Throws ZeroInput.
Verdict quasi2_test(const Poly& f);

/// Number of points of y^2 = x^3 + a x + b over F_p, including infinity.
/// Requires p >= 5 (InvalidArgument) and a nonzero discriminant
/// (SingularCurve).
std::uint64_t count_points(std::uint32_t p, std::uint32_t a, std::uint32_t b);

/// #E(F_p) == p + 1.
bool supersingular_oracle(std::uint32_t p, std::uint32_t a, std::uint32_t b);

/// Fedder first; the second clause only when max_n == 2 and Fedder fails.
/// max_n must be 1 or 2.
Verdict height_search(const Poly& f, int max_n);

}  // namespace qfs

#endif
