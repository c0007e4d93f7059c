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

#ifndef QFSPLIT_SPLITTING_ORACLE_HPP
#define QFSPLIT_SPLITTING_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qfsplit/polynomial.hpp"
#include "qfsplit/verdict.hpp"

namespace qfs {

/// Positive integer weights with every monomial of g of weighted degree
/// 2 * wz, so that z^2 + g is quasi-homogeneous.
struct Weights {
    std::uint64_t wx = 0;
    std::uint64_t wy = 0;
    std::uint64_t wz = 0;
};

/// Weights making g quasi-homogeneous, or nullopt if none exist.
std::optional<Weights> quasi_homogeneous_weights(const Poly& g);

struct OracleResult {
    Height height = Height::Unknown;
    bool f_split = false;
    bool quasi2 = false;
    Weights weights;
    /// Dimensions of the graded pieces searched (0 when F-split).
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    /// Some class of the source piece was cut by the truncation degree.
    bool truncated = false;
    /// When quasi2 and not F-split: the splitting functional on the target
    /// piece, normalised to 1 on the carry class and 0 on the Frobenius image.
    std::vector<std::uint32_t> functional;
};

/// Brute-force decision for z^2 + g with g quasi-homogeneous in two
/// variables, kept separate from the local cohomology engine:
///   1. Fedder on z^2 + g with the full power f^(p-1);
///   2. the carry of [z]^p / [xy]^p from Witt vector arithmetic in W_2,
///      splitting z^p mod (z^2 + g) by long division;
///   3. a splitting functional alpha on the graded piece of degree p^2 s
///      (s the socle degree) with alpha(F(source)) = 0 and alpha(carry) = 1,
///      found from the left kernel of the Frobenius matrix. The source piece
///      has degree p s; indices are capped by the truncation degree
///      (0 means 4 p^2).
/// Throws InvalidArgument when g is not quasi-homogeneous.
OracleResult splitting_search_oracle(const Poly& g, std::uint64_t truncation = 0);

}  // namespace qfs

#endif
