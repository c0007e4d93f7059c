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

#include <cmath>

#include "qfsplit/criteria.hpp"
#include "test_support.hpp"

using namespace qfs;

namespace {

Poly parse(std::uint32_t p, const char* f, std::vector<std::string> vars = {"x", "y", "z"}) {
    return parse_poly(f, make_ring(p, std::move(vars)));
}

// Weierstrass cubic y^2 z = x^3 + a x z^2 + b z^3.
Poly weierstrass(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    const auto r = make_ring(p, {"x", "y", "z"});
    return parse_poly("y^2*z - x^3 - " + std::to_string(a) + "*x*z^2 - " + std::to_string(b) + "*z^3", r);
}

}  // namespace

TEST_SUITE("criteria") {

TEST_CASE("Fedder on simple inputs") {
    CHECK(fedder_test(parse(3, "x^2 + y^2 + z^2")));
    CHECK(fedder_test(parse(2, "x*y + z^2")));
    CHECK_FALSE(fedder_test(parse(2, "x^2 + y^3", {"x", "y"})));
    CHECK_FALSE(fedder_test(parse(5, "x^2 + y^3", {"x", "y"})));
    CHECK(fedder_test(parse(5, "x^2 + y^3 + z^2")));
    CHECK_FALSE(fedder_test(parse(3, "x^3", {"x"})));
    CHECK(fedder_test(parse(7, "x", {"x"})));
    CHECK_THROWS_AS(fedder_test(Poly(make_ring(3, {"x"}))), ZeroInput);
    CHECK(to_string(fedder_residue(parse(3, "x + y", {"x", "y"}))) == "x^2 + 2*x*y + y^2");
}

TEST_CASE("Fermat cubic") {
    for (std::uint32_t p : {5u, 7u, 11u}) {
        const Poly f = parse(p, "x^3 + y^3 + z^3");
        const Verdict v = quasi2_test(f);
        CHECK(v.f_split == (p % 3 == 1));
        CHECK(v.quasi2);
        CHECK(v.has_flag(flags::kCriterionCertified));
        CHECK(v.clause2_residue.has_value() == !v.f_split);
    }
}

TEST_CASE("point counts") {
    CHECK(count_points(5, 1, 0) == 4);
    CHECK(count_points(7, 0, 1) == 12);
    CHECK(supersingular_oracle(5, 0, 1));
    CHECK(supersingular_oracle(11, 1, 0));
    CHECK_FALSE(supersingular_oracle(13, 1, 0));
    CHECK_THROWS_AS(count_points(3, 1, 1), InvalidArgument);
    CHECK_THROWS_AS(count_points(5, 0, 0), SingularCurve);
    // Hasse bound
    for (std::uint32_t p : {5u, 7u, 11u, 13u, 101u})
        for (std::uint32_t a = 0; a < 4; ++a)
            for (std::uint32_t b = 1; b < 4; ++b) {
                if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
                const auto n = static_cast<double>(count_points(p, a, b));
                CHECK(std::abs(n - p - 1) <= 2 * std::sqrt(static_cast<double>(p)));
            }
}

TEST_CASE("elliptic curves: F-split exactly when ordinary, always height <= 2") {
    for (std::uint32_t p : {5u, 7u}) {
        for (std::uint32_t a = 0; a < p; ++a) {
            for (std::uint32_t b = 0; b < p; ++b) {
                if ((4 * a * a * a + 27 * b * b) % p == 0) continue;
                const Verdict v = quasi2_test(weierstrass(p, a, b));
                CHECK(v.f_split == !supersingular_oracle(p, a, b));
                CHECK(v.quasi2);
            }
        }
    }
}

TEST_CASE("flags describe how far the criterion is certified") {
    CHECK(quasi2_test(parse(5, "x^3 + y^3 + z^3")).flags == std::vector<std::string>{flags::kCriterionCertified});
    CHECK(quasi2_test(parse(3, "x^3 + y^4 + z^2")).has_flag(flags::kNonHomogeneous));
    CHECK(quasi2_test(parse(3, "x^2 + y^2 + z^2")).has_flag(flags::kDegreeMismatch));
    CHECK(height_search(parse(3, "x^3 + y^4 + z^2"), 1).has_flag(flags::kNonHomogeneous));
}

TEST_CASE("height search") {
    const Poly e6 = parse(3, "z^2 + x^3 + y^4");
    Verdict v = height_search(e6, 1);
    CHECK_FALSE(v.f_split);
    CHECK_FALSE(v.quasi2);
    CHECK(v.height == Height::Unknown);
    CHECK(v.has_flag(flags::kSearchCapped));
    CHECK(summary(v) == "not F-split; height search stopped at 1");

    v = height_search(e6, 2);
    CHECK(v.height == Height::Two);
    CHECK(summary(v) == "not F-split; 2-quasi-F-split (height 2)");

    v = height_search(parse(7, "x^3 + y^3 + z^3"), 1);
    CHECK(v.height == Height::One);
    CHECK_FALSE(v.has_flag(flags::kSearchCapped));
    CHECK(summary(v) == "F-split (height 1)");
    CHECK_THROWS_AS(height_search(e6, 3), InvalidArgument);
}

TEST_CASE("verdict helpers") {
    CHECK(to_string(Height::One) == "1");
    CHECK(height_from_string("2") == Height::Two);
    CHECK(height_from_string("unknown") == Height::Unknown);
    CHECK_THROWS_AS(height_from_string("3"), InvalidArgument);
    Verdict v;
    v.add_flag("b");
    v.add_flag("a");
    v.add_flag("b");
    CHECK(v.flags == std::vector<std::string>{"a", "b"});
    CHECK(summary(v) == "not F-split; not 2-quasi-F-split (height unknown)");
}

}  // TEST_SUITE
