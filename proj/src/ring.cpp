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

#include "qfsplit/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "qfsplit/error.hpp"

namespace qfs {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

bool is_identifier(const std::string& s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Ring::Ring(std::uint32_t p, std::vector<std::string> variables)
    : p_(p), variables_(std::move(variables)) {
    if (p >= kMaxPrime || !is_prime(p))
        throw InvalidArgument("characteristic must be a prime below 65536, got " + std::to_string(p));
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (!is_identifier(v)) throw InvalidArgument("invalid variable name '" + v + "'");
        if (!seen.insert(v).second) throw InvalidArgument("duplicate variable name '" + v + "'");
    }
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it == variables_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - variables_.begin());
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> variables) {
    return std::make_shared<const Ring>(p, std::move(variables));
}

RingPtr with_variables(const Ring& ring, std::vector<std::string> variables) {
    return make_ring(ring.p(), std::move(variables));
}

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept {
    return a == b || (a && b && *a == *b);
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!same_ring(a, b)) throw RingMismatch();
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw InvalidArgument("exponent overflow");
    return r;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InvalidArgument("exponent overflow");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t Monomial::degree() const {
    std::uint64_t d = 0;
    for (auto e : exps_) d = checked_add(d, e);
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](std::uint64_t e) { return e == 0; });
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw RingMismatch();
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r.exps_[i] = checked_add(a.exps_[i], b.exps_[i]);
    return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
    Monomial r(size());
    for (std::size_t i = 0; i < size(); ++i) r.exps_[i] = checked_mul(exps_[i], k);
    return r;
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a.exponents()) da += e;
    for (auto e : b.exponents()) db += e;
    if (da != db) return da > db;
    return a.exponents() > b.exponents();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto e : m.exponents()) {
        h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

}  // namespace qfs
