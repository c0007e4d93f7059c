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

#ifndef QFSPLIT_WITT_HPP
#define QFSPLIT_WITT_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qfsplit/polynomial.hpp"

namespace qfs {

/// Hard cap on Witt vector length; the p^(n-1) exponent growth makes longer
/// vectors impractical over polynomial rings.
inline constexpr std::size_t kMaxWittLength = 8;

/// Truncated Witt vector (a_0, ..., a_{n-1}) over a polynomial ring F_p[x].
///
/// Sums and products are computed through ghost components: the components
/// are lifted to Z[x], the ghost polynomials
///
///     w_k = a_0^(p^k) + p a_1^(p^(k-1)) + ... + p^k a_k
///
/// are combined componentwise, and the recursion is solved back for the
/// result components with exact division by p^k. Only w_k mod p^(k+1)
/// influences the F_p-components, so every lift is kept reduced modulo
/// p^(k+1).
class WittVector {
public:
    /// Throws InvalidArgument for an empty or over-long vector and
    /// RingMismatch when the components do not share a ring.
    explicit WittVector(std::vector<Poly> components);

    static WittVector zero(const RingPtr& ring, std::size_t n);
    static WittVector one(const RingPtr& ring, std::size_t n);
    /// The image of the integer k under Z -> W_n(F_p[x]).
    static WittVector from_integer(const RingPtr& ring, std::size_t n, long k);

    std::size_t length() const noexcept { return components_.size(); }
    const Poly& operator[](std::size_t i) const { return components_.at(i); }
    const std::vector<Poly>& components() const noexcept { return components_; }
    const RingPtr& ring_ptr() const noexcept { return components_.front().ring_ptr(); }
    const Ring& ring() const noexcept { return components_.front().ring(); }
    bool is_zero() const;

    friend bool operator==(const WittVector&, const WittVector&) = default;

private:
    std::vector<Poly> components_;
};

WittVector operator+(const WittVector& u, const WittVector& v);
WittVector operator-(const WittVector& u);
WittVector operator-(const WittVector& u, const WittVector& v);
WittVector operator*(const WittVector& u, const WittVector& v);
WittVector pow(const WittVector& u, std::uint64_t e);

/// F(a_0, ..., a_{n-1}) = (a_0^p, ..., a_{n-1}^p).
WittVector frobenius(const WittVector& w);
/// V: W_n -> W_{n+1}, (a_0, ..., a_{n-1}) -> (0, a_0, ..., a_{n-1}).
WittVector verschiebung(const WittVector& w);
/// R: W_{n+1} -> W_n, drops the last component.
WittVector restriction(const WittVector& w);
/// [f] = (f, 0, ..., 0).
WittVector teichmuller(const Poly& f, std::size_t n);

/// Witt carry Delta(f) = ((sum_I a_I x^I)^p - sum_I (a_I x^I)^p) / p mod p,
/// with every coefficient lifted to its representative in [0, p). Satisfies
/// [f] = f([x_1], ..., [x_n]) + V Delta(f) in W_2.
Poly delta_carry(const Poly& f);

/// f evaluated at Witt vectors, with every coefficient of f replaced by its
/// Teichmuller lift; computed with Witt sums and products.
WittVector evaluate(const Poly& f, const std::map<std::string, WittVector>& arguments);

/// Exact integer ghost components (w_0, ..., w_{n-1}) of the representative lift.
using GhostVector = std::vector<IntPoly>;
GhostVector ghost_components(const WittVector& w);

/// w_k == v_k mod p^(k+1) for every k; the ghost map is injective on
/// W_n(F_p[x]) at this precision.
bool ghost_congruent(const GhostVector& a, const GhostVector& b);

/// Inverse of the ghost map at precision p^(k+1): recovers the Witt vector
/// whose ghost components are congruent to the given ones. Throws
/// InternalError if a congruence class has no Witt preimage.
WittVector from_ghost(const RingPtr& ring, const GhostVector& ghosts);

/// "(a0; a1; ...)" with canonical component renderings.
std::string to_string(const WittVector& w);

}  // namespace qfs

#endif
