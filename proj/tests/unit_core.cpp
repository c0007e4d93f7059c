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

#include "qfsplit/poly_parse.hpp"
#include "qfsplit/polynomial.hpp"
#include "test_support.hpp"

using namespace qfs;

TEST_SUITE("core") {

TEST_CASE("ring construction validates p and variables") {
    CHECK_NOTHROW(make_ring(2, {"x"}));
    CHECK_NOTHROW(make_ring(65521, {"x", "y"}));
    CHECK_THROWS_AS(make_ring(4, {"x"}), InvalidArgument);
    CHECK_THROWS_AS(make_ring(1, {"x"}), InvalidArgument);
    CHECK_THROWS_AS(make_ring(65537, {"x"}), InvalidArgument);
    CHECK_THROWS_AS(make_ring(3, {"x", "x"}), InvalidArgument);
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("canonical rendering is graded lex with the first variable largest") {
    const auto r = make_ring(5, {"x", "y", "z"});
    CHECK(to_string(parse_poly("y + x^2*z + 3*x*y*z + 7", r)) == "x^2*z + 3*x*y*z + y + 2");
    CHECK(to_string(parse_poly("z + y + x", r)) == "x + y + z");
    CHECK(to_string(parse_poly("x - x", r)) == "0");
    CHECK(to_string(parse_poly("-1", r)) == "4");
}

TEST_CASE("parser grammar") {
    const auto r = make_ring(7, {"x", "y"});
    CHECK(parse_poly("(x+y)^2", r) == parse_poly("x^2 + 2 x y + y^2", r));
    CHECK(parse_poly("2x", r) == parse_poly("2*x", r));
    CHECK(parse_poly("-(x - y)", r) == parse_poly("y - x", r));
    CHECK(parse_poly("14*x + 1", r) == Poly::one(r));
    CHECK_THROWS_AS(parse_poly("x + w", r), ParseError);
    CHECK_THROWS_AS(parse_poly("x +", r), ParseError);
    CHECK_THROWS_AS(parse_poly("x^^2", r), ParseError);
    CHECK_THROWS_AS(parse_poly("(x", r), ParseError);
    CHECK_THROWS_AS(parse_poly("x^5", r, 4), ParseError);
    try {
        parse_poly("x + $", r);
        FAIL("no throw");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK(collect_variables("y^2 + x*y + 3*zeta") == std::vector<std::string>{"x", "y", "zeta"});
}

TEST_CASE("arithmetic agrees with the integer lift") {
    testing::Rng rng(11);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const auto r = make_ring(p, {"x", "y", "z"});
        for (int it = 0; it < 30; ++it) {
            const Poly a = testing::random_poly(r, rng, 4, 5);
            const Poly b = testing::random_poly(r, rng, 4, 5);
            const Poly c = testing::random_poly(r, rng, 3, 3);
            CHECK(reduce(lift(a) * lift(b)) == a * b);
            CHECK(reduce(lift(a) + lift(b)) == a + b);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a - a == Poly(r));
            CHECK(pow(a, 3) == a * a * a);
        }
    }
}

TEST_CASE("Frobenius power and the Frobenius-power ideal") {
    testing::Rng rng(12);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto r = make_ring(p, {"x", "y"});
        for (int it = 0; it < 20; ++it) {
            const Poly a = testing::random_poly(r, rng, 3, 4);
            CHECK(frobenius_power(a, 1) == pow(a, p));
            CHECK(frobenius_power(a, 2) == pow(a, p * p));
            const Poly b = testing::random_poly(r, rng, 3, 4);
            CHECK(mul_mod_frobenius_power(a, b, 1) == truncate_frobenius_power_ideal(a * b, 1));
            CHECK(pow_mod_frobenius_power(a, 2 * p - 1, 1) == truncate_frobenius_power_ideal(pow(a, 2 * p - 1), 1));
        }
    }
    const auto r = make_ring(3, {"x", "y"});
    CHECK(in_frobenius_power_ideal(parse_poly("x^3*y + y^4", r), 1));
    CHECK_FALSE(in_frobenius_power_ideal(parse_poly("x^3*y + x^2*y^2", r), 1));
    CHECK(in_frobenius_power_ideal(Poly(r), 1));
    CHECK(in_frobenius_power_ideal(parse_poly("x^9", r), 2));
    CHECK_FALSE(in_frobenius_power_ideal(parse_poly("x^8*y^8", r), 2));
}

TEST_CASE("integer helpers") {
    const auto r = make_ring(3, {"x"});
    const IntPoly f = parse_int_poly("9*x^2 - 6*x + 3", r);
    CHECK(to_string(divide_exact(f, 3)) == "3*x^2 - 2*x + 1");
    CHECK_THROWS_AS(divide_exact(f, 9), InternalError);
    CHECK(to_string(reduce_mod(f, 9)) == "3*x + 3");
    CHECK(pow_mod(lift(parse_poly("x + 1", r)), 3, 9) == reduce_mod(pow(lift(parse_poly("x + 1", r)), 3), 9));
}

TEST_CASE("substitute and embed") {
    const auto r = make_ring(5, {"x", "y"});
    const auto s = make_ring(5, {"t"});
    const Poly f = parse_poly("x^2 + x*y", r);
    const Poly g = substitute(f, {{"x", parse_poly("t", s)}, {"y", parse_poly("t + 1", s)}});
    CHECK(g == parse_poly("2*t^2 + t", s));
    CHECK_THROWS_AS(substitute(f, {{"x", parse_poly("t", s)}}), InvalidArgument);
    const auto big = make_ring(5, {"x", "y", "z"});
    CHECK(to_string(embed(f, big)) == "x^2 + x*y");
    CHECK_THROWS_AS(parse_poly("x", r) + parse_poly("t", s), RingMismatch);
}

TEST_CASE("exponent overflow is detected") {
    CHECK_THROWS(checked_pow(2, 64));
    CHECK(checked_pow(3, 4) == 81);
    const auto r = make_ring(2, {"x"});
    CHECK_THROWS(pow(parse_poly("x^2147483647", r), 1ull << 40));
}

}  // TEST_SUITE
