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

#include <doctest.h>

#include "qfsplit/localcoh.hpp"
#include "qfsplit/splitting_oracle.hpp"
#include "test_support.hpp"

using namespace qfs;

namespace {

Poly g_of(std::uint32_t p, const char* g) { return parse_poly(g, make_ring(p, {"x", "y"})); }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("quasi-homogeneous weights") {
    auto w = quasi_homogeneous_weights(g_of(3, "x^3 + y^4"));
    REQUIRE(w);
    CHECK(w->wx == 4);
    CHECK(w->wy == 3);
    CHECK(w->wz == 6);
    w = quasi_homogeneous_weights(g_of(2, "x*y"));
    REQUIRE(w);
    CHECK(2 * w->wz == w->wx + w->wy);
    w = quasi_homogeneous_weights(g_of(3, "x^3 + x*y^3"));
    REQUIRE(w);
    CHECK(3 * w->wx == w->wx + 3 * w->wy);
    CHECK_FALSE(quasi_homogeneous_weights(g_of(3, "x^2 + x*y + y^3")));
    CHECK_FALSE(quasi_homogeneous_weights(g_of(3, "x^2 + x^3")));
    CHECK_THROWS_AS(splitting_search_oracle(g_of(3, "x^2 + x*y + y^3")), InvalidArgument);
}

TEST_CASE("oracle verdicts") {
    CHECK(splitting_search_oracle(g_of(2, "x*y")).height == Height::One);
    CHECK(splitting_search_oracle(g_of(5, "x^2 + y^3")).height == Height::One);
    const auto e6 = splitting_search_oracle(g_of(3, "x^3 + y^4"));
    CHECK(e6.height == Height::Two);
    CHECK_FALSE(e6.f_split);
    CHECK(e6.target_dim >= 1);
    CHECK_FALSE(e6.functional.empty());
    CHECK(splitting_search_oracle(g_of(3, "x^3 + y^5")).height == Height::Unknown);
}

TEST_CASE("oracle agrees with the engine beyond the fixed list") {
    for (auto [p, g] : {std::pair{3u, "x^4 + y^4"}, std::pair{5u, "x^4 + y^4"}, std::pair{7u, "x^4 + y^4"},
                        std::pair{5u, "x^3 + y^6"}, std::pair{7u, "x^3 + y^6"}, std::pair{2u, "x^3 + y^3"},
                        std::pair{3u, "x^2 + y^5"}, std::pair{2u, "x^2*y + y^4"}, std::pair{5u, "x^2*y + y^4"}}) {
        CAPTURE(g);
        CAPTURE(p);
        const Poly gp = g_of(p, g);
        CHECK(splitting_search_oracle(gp).height == quasi2_doublecover(DoubleCover(gp)).height);
    }
}

}  // TEST_SUITE
