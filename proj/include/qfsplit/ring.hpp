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

#ifndef QFSPLIT_RING_HPP
#define QFSPLIT_RING_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qfs {

/// Largest supported characteristic (exclusive).
inline constexpr std::uint32_t kMaxPrime = 1u << 16;

bool is_prime(std::uint64_t n);

/// Polynomial ring context F_p[x_1, ..., x_n]: the characteristic and the
/// variable names. Shared by all polynomials living in the ring.
class Ring {
public:
    /// Throws InvalidArgument unless p is a prime below kMaxPrime and the
    /// variable names are distinct identifiers.
    Ring(std::uint32_t p, std::vector<std::string> variables);

    std::uint32_t p() const noexcept { return p_; }
    std::size_t nvars() const noexcept { return variables_.size(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::string& variable(std::size_t i) const { return variables_.at(i); }
    std::optional<std::size_t> index_of(const std::string& name) const;

    friend bool operator==(const Ring& a, const Ring& b) noexcept {
        return a.p_ == b.p_ && a.variables_ == b.variables_;
    }

private:
    std::uint32_t p_;
    std::vector<std::string> variables_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::uint32_t p, std::vector<std::string> variables);

/// Same characteristic, different variables.
RingPtr with_variables(const Ring& ring, std::vector<std::string> variables);

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector. Length equals the ring's variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint64_t> exps) : exps_(std::move(exps)) {}

    std::size_t size() const noexcept { return exps_.size(); }
    std::uint64_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint64_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint64_t>& exponents() const noexcept { return exps_; }

    std::uint64_t degree() const;
    bool is_one() const noexcept;

    /// Overflow-checked product of monomials.
    friend Monomial operator*(const Monomial& a, const Monomial& b);
    /// Overflow-checked exponent scaling x^a -> x^(k a).
    Monomial scaled(std::uint64_t k) const;
    bool divides(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<std::uint64_t> exps_;
};

/// Graded lexicographic comparison: true when a > b (higher total degree
/// first, ties broken lexicographically with the first variable largest).
bool grlex_greater(const Monomial& a, const Monomial& b);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
/// p^e with overflow check.
std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e);

}  // namespace qfs

#endif
