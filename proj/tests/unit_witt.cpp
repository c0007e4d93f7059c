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

#include "qfsplit/witt.hpp"
#include "test_support.hpp"

using namespace qfs;

namespace {

WittVector wv(const RingPtr& r, std::initializer_list<const char*> comps) {
    std::vector<Poly> v;
    for (const char* c : comps) v.push_back(parse_poly(c, r));
    return WittVector(std::move(v));
}

}  // namespace

TEST_SUITE("witt") {

TEST_CASE("construction") {
    const auto r = make_ring(3, {"x", "y"});
    CHECK_THROWS_AS(WittVector(std::vector<Poly>{}), InvalidArgument);
    CHECK_THROWS_AS(WittVector(std::vector<Poly>(9, Poly(r))), InvalidArgument);
    const auto s = make_ring(3, {"t"});
    CHECK_THROWS_AS(WittVector(std::vector<Poly>{Poly(r), Poly(s)}), RingMismatch);
    CHECK_THROWS_AS(WittVector::zero(r, 2) + WittVector::zero(r, 3), LengthMismatch);
    CHECK(WittVector::zero(r, 3).is_zero());
    CHECK(to_string(WittVector::one(r, 2)) == "(1; 0)");
}

TEST_CASE("small values") {
    const auto r2 = make_ring(2, {"x", "y"});
    CHECK(to_string(teichmuller(Poly::one(r2), 2) + teichmuller(Poly::one(r2), 2)) == "(0; 1)");
    CHECK(to_string(teichmuller(parse_poly("x", r2), 2) + teichmuller(parse_poly("y", r2), 2)) == "(x + y; x*y)");
    const auto r3 = make_ring(3, {"x", "y"});
    CHECK(to_string(teichmuller(parse_poly("x", r3), 2) + teichmuller(parse_poly("y", r3), 2)) ==
          "(x + y; 2*x^2*y + 2*x*y^2)");
    CHECK(wv(r3, {"x", "1"}) * wv(r3, {"y", "1"}) == wv(r3, {"x*y", "x^3 + y^3"}));
    CHECK(to_string(WittVector::from_integer(r3, 3, 3)) == "(0; 1; 0)");
    CHECK(to_string(WittVector::from_integer(r3, 2, -1)) == "(2; 0)");
    CHECK(WittVector::from_integer(r3, 2, -1) + WittVector::one(r3, 2) == WittVector::zero(r3, 2));
    // V(1) * V(1) = V(F V 1) = p V(1) = V^2(1) in characteristic p
    const auto v1 = verschiebung(WittVector::one(r3, 2));
    CHECK(v1 * v1 == wv(r3, {"0", "0", "1"}));
}

TEST_CASE("n = 2 sums and products match the explicit Witt polynomials") {
    testing::Rng rng(31);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto r = make_ring(p, {"x", "y"});
        const mpz_class pz = p;
        for (int it = 0; it < 25; ++it) {
            const auto a = testing::random_witt(r, rng, 2, 2, 3);
            const auto b = testing::random_witt(r, rng, 2, 2, 3);
            const IntPoly a0 = lift(a[0]), b0 = lift(b[0]), a1 = lift(a[1]), b1 = lift(b[1]);
            // S_1 = a1 + b1 + (a0^p + b0^p - (a0 + b0)^p) / p
            const IntPoly s1 = a1 + b1 + divide_exact(pow(a0, p) + pow(b0, p) - pow(a0 + b0, p), pz);
            CHECK(a + b == WittVector({a[0] + b[0], reduce(s1)}));
            // P_1 = a0^p b1 + b0^p a1 + p a1 b1
            const IntPoly p1 = pow(a0, p) * b1 + pow(b0, p) * a1 + (a1 * b1).scaled(pz);
            CHECK(a * b == WittVector({a[0] * b[0], reduce(p1)}));
        }
    }
}

TEST_CASE("ghost components of sums and products, computed from the definition") {
    testing::Rng rng(32);
    for (std::uint32_t p : {2u, 3u}) {
        const auto r = make_ring(p, {"x", "y"});
        for (int it = 0; it < 10; ++it) {
            const auto a = testing::random_witt(r, rng, 3, 2, 3);
            const auto b = testing::random_witt(r, rng, 3, 2, 3);
            const auto ga = testing::ghost_by_definition(a);
            const auto gb = testing::ghost_by_definition(b);
            CHECK(testing::ghosts_agree(testing::ghost_by_definition(a + b), testing::ghost_sum(ga, gb), p));
            CHECK(testing::ghosts_agree(testing::ghost_by_definition(a * b), testing::ghost_product(ga, gb, p), p));
            CHECK(testing::ghosts_agree(ghost_components(a), ga, p));
            CHECK(from_ghost(r, ghost_components(a)) == a);
        }
    }
}

TEST_CASE("negation, subtraction and powers") {
    testing::Rng rng(33);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto r = make_ring(p, {"x", "y"});
        for (int it = 0; it < 10; ++it) {
            const auto a = testing::random_witt(r, rng, 2, 2, 3);
            const auto b = testing::random_witt(r, rng, 2, 2, 3);
            CHECK(a + (-a) == WittVector::zero(r, 2));
            CHECK((a - b) + b == a);
            CHECK(pow(a, 3) == a * a * a);
            CHECK(pow(a, 0) == WittVector::one(r, 2));
        }
    }
}

TEST_CASE("F, V, R") {
    const auto r = make_ring(3, {"x"});
    const auto a = wv(r, {"x", "x + 1"});
    CHECK(frobenius(a) == wv(r, {"x^3", "x^3 + 1"}));
    CHECK(verschiebung(a) == wv(r, {"0", "x", "x + 1"}));
    CHECK(restriction(verschiebung(a)) == wv(r, {"0", "x"}));
    CHECK_THROWS_AS(restriction(teichmuller(parse_poly("x", r), 1)), InvalidArgument);
    CHECK_THROWS_AS(verschiebung(WittVector::zero(r, kMaxWittLength)), InvalidArgument);
}

TEST_CASE("Witt carry") {
    const auto r = make_ring(3, {"x", "y"});
    CHECK(delta_carry(parse_poly("x^3 + y^4", r)) == parse_poly("x^6*y^4 + x^3*y^8", r));
    CHECK(delta_carry(parse_poly("x", r)).is_zero());
    CHECK(delta_carry(parse_poly("2*x", r)).is_zero());
    const auto r2 = make_ring(2, {"x", "y"});
    CHECK(delta_carry(parse_poly("x + y", r2)) == parse_poly("x*y", r2));
    // coefficient carries: 1 + 1 at p = 2 is the carry of [1] + [1]
    CHECK(delta_carry(parse_poly("x + x*y", r2)) == parse_poly("x^2*y", r2));
}

TEST_CASE("Teichmuller expansion of f") {
    testing::Rng rng(34);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const auto r = make_ring(p, {"x", "y"});
        std::map<std::string, WittVector> args{{"x", teichmuller(parse_poly("x", r), 2)},
                                               {"y", teichmuller(parse_poly("y", r), 2)}};
        for (int it = 0; it < 10; ++it) {
            const Poly f = testing::random_nonzero_poly(r, rng, 3, 4);
            CHECK(teichmuller(f, 2) == evaluate(f, args) + verschiebung(teichmuller(delta_carry(f), 1)));
        }
    }
}

TEST_CASE("longer vectors stay exact") {
    const auto r = make_ring(2, {"x"});
    const auto a = teichmuller(parse_poly("x + 1", r), 5);
    const auto two = WittVector::from_integer(r, 6, 2);
    CHECK(frobenius(verschiebung(a)) == two * teichmuller(parse_poly("x + 1", r), 6));
    CHECK(WittVector::from_integer(r, 5, 16) == wv(r, {"0", "0", "0", "0", "1"}));
    CHECK(WittVector::from_integer(r, 5, 32).is_zero());
}

}  // TEST_SUITE
