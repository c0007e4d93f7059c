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

#include "qfsplit/criteria.hpp"

#include "qfsplit/witt.hpp"

namespace qfs {

namespace {

void require_nonzero(const Poly& f) {
    if (f.is_zero()) throw ZeroInput();
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1u) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

void classify(const Poly& f, Verdict& v) {
    if (!f.is_homogeneous()) v.add_flag(flags::kNonHomogeneous);
    else if (f.total_degree() != f.ring().nvars()) v.add_flag(flags::kDegreeMismatch);
    else v.add_flag(flags::kCriterionCertified);
}

}  // namespace

Poly fedder_residue(const Poly& f) {
    require_nonzero(f);
    return pow_mod_frobenius_power(f, f.ring().p() - 1, 1);
}

bool fedder_test(const Poly& f) { return !fedder_residue(f).is_zero(); }

Verdict quasi2_test(const Poly& f) {
    require_nonzero(f);
    const std::uint64_t p = f.ring().p();
    Verdict v;
    classify(f, v);
    v.fedder_residue = fedder_residue(f);
    if (!v.fedder_residue->is_zero()) {
        v.f_split = true;
        v.quasi2 = true;
        v.height = Height::One;
        return v;
    }
    const Poly power = pow_mod_frobenius_power(f, p * p - p - 1, 2);
    v.clause2_residue = mul_mod_frobenius_power(power, delta_carry(f), 2);
    v.quasi2 = !v.clause2_residue->is_zero();
    v.height = v.quasi2 ? Height::Two : Height::Unknown;
    return v;
}

std::uint64_t count_points(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    if (p < 5 || !is_prime(p)) throw InvalidArgument("point counting needs a prime p >= 5");
    const std::uint64_t q = p;
    a %= p;
    b %= p;
    const std::uint64_t disc = (4 * powmod(a, 3, q) + 27 * (static_cast<std::uint64_t>(b) * b % q)) % q;
    if (disc == 0) throw SingularCurve();
    std::uint64_t count = 1;  // point at infinity
    for (std::uint64_t x = 0; x < q; ++x) {
        const std::uint64_t rhs = (powmod(x, 3, q) + a * x + b) % q;
        if (rhs == 0) count += 1;
        else if (powmod(rhs, (q - 1) / 2, q) == 1) count += 2;
    }
    return count;
}

bool supersingular_oracle(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    return count_points(p, a, b) == static_cast<std::uint64_t>(p) + 1;
}

Verdict height_search(const Poly& f, int max_n) {
    if (max_n != 1 && max_n != 2) throw InvalidArgument("height search supports max_n 1 or 2");
    if (max_n == 2) return quasi2_test(f);
    Verdict v;
    classify(f, v);
    v.fedder_residue = fedder_residue(f);
    v.f_split = !v.fedder_residue->is_zero();
    v.quasi2 = v.f_split;
    v.height = v.f_split ? Height::One : Height::Unknown;
    if (!v.f_split) v.add_flag(flags::kSearchCapped);
    return v;
}

}  // namespace qfs
