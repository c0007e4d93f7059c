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

#ifndef QFSPLIT_POLY_PARSE_HPP
#define QFSPLIT_POLY_PARSE_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qfsplit/polynomial.hpp"

namespace qfs {

inline constexpr std::uint64_t kDefaultExponentBound = 2147483647ull;  // 2^31 - 1

/// Grammar (whitespace insensitive):
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := power (['*'] power)*
///   power  := atom ['^' digits]
///   atom   := digits | identifier | '(' expr ')' | '-' atom
///
/// Integer literals are reduced modulo p. Identifiers must be variables of
/// the ring. Throws ParseError carrying the byte offset of the failure.
Poly parse_poly(std::string_view text, const RingPtr& ring,
                std::uint64_t exponent_bound = kDefaultExponentBound);

/// Same grammar with exact integer coefficients.
IntPoly parse_int_poly(std::string_view text, const RingPtr& ring,
                       std::uint64_t exponent_bound = kDefaultExponentBound);

/// Distinct identifiers occurring in the text, sorted.
std::vector<std::string> collect_variables(std::string_view text);

}  // namespace qfs

#endif
