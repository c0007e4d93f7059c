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

#ifndef QFSPLIT_CARTIER_HPP
#define QFSPLIT_CARTIER_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qfsplit/polynomial.hpp"
#include "qfsplit/witt.hpp"

namespace qfs {

/// Bitmask of variable indices; bit k set means dx_k occurs. Basis forms are
/// always written dx_{k_1} ^ ... ^ dx_{k_i} with k_1 < ... < k_i.
using IndexSet = std::uint32_t;

inline constexpr std::size_t kMaxFormVariables = 32;

/// Differential form of fixed degree over F_p[x_1, ..., x_n]: a map from
/// index sets of that size to nonzero polynomial coefficients.
class DiffForm {
public:
    DiffForm(RingPtr ring, std::size_t degree);

    /// Degree-0 form.
    static DiffForm function(const Poly& f);
    /// f dx_K.
    static DiffForm term(const Poly& f, IndexSet k);
    /// dx_i.
    static DiffForm dx(const RingPtr& ring, std::size_t i);

    std::size_t degree() const noexcept { return degree_; }
    const Ring& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    const std::map<IndexSet, Poly>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    Poly coefficient(IndexSet k) const;
    /// The coefficient of a degree-0 form.
    Poly as_function() const;

    DiffForm& operator+=(const DiffForm& b);
    DiffForm& operator-=(const DiffForm& b);
    friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
    friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a -= b; }
    DiffForm operator-() const;
    /// Multiplication by a function.
    friend DiffForm operator*(const Poly& f, const DiffForm& w);

    friend bool operator==(const DiffForm& a, const DiffForm& b);

private:
    void add_term(IndexSet k, const Poly& f);

    RingPtr ring_;
    std::size_t degree_;
    std::map<IndexSet, Poly> terms_;
};

std::size_t index_count(IndexSet k);

DiffForm wedge(const DiffForm& a, const DiffForm& b);
DiffForm exterior_derivative(const DiffForm& w);
bool is_closed(const DiffForm& w);

/// Cartier operator on a closed form. A term c x^a dx_K contributes
/// c x^((a - (p-1) 1_K) / p) dx_K when a_k == p-1 (mod p) for k in K and
/// a_m == 0 (mod p) otherwise, and nothing else. The discarded remainder is
/// checked to be exact. Throws NotClosed when dw != 0.
DiffForm cartier(const DiffForm& w);

/// The conforming lift c x^b dx_K -> c x^(p b + (p-1) 1_K) dx_K; satisfies
/// cartier(cartier_inverse_lift(w)) == w for every w.
DiffForm cartier_inverse_lift(const DiffForm& w);

/// A form v with dv == w, or nullopt when w is not exact. Works one
/// multidegree at a time: on the part of weight b (exponents plus 1_K), a
/// coordinate with b_j != 0 mod p gives the potential i_{x_j d/dx_j}(w_b) / b_j;
/// the part with b == 0 mod p is exact only when it vanishes.
std::optional<DiffForm> exact_potential(const DiffForm& w);

struct ZnResult {
    bool member = false;
    /// C^n(w) when member.
    std::optional<DiffForm> image;
};

/// Membership in Z_n: C can be applied n times with every intermediate form
/// closed. Level 0 is unconditional with C^0 the identity.
ZnResult zn_membership(const DiffForm& w, std::size_t n);

/// Membership in B_n = kernel of C^n on Z_n; B_0 = {0}.
bool bn_membership(const DiffForm& w, std::size_t n);

/// s(f_0, ..., f_{n-1}) = sum_i f_i^(p^(n-1-i) - 1) df_i.
DiffForm serre_map(const WittVector& w);

/// Some w with serre_map(w) == form at length n, or nullopt when form is not
/// in B_n. Built top-down: df_0 = C^(n-1)(form), then the remainder lies in
/// B_(n-1) and is solved at length n-1.
std::optional<WittVector> serre_preimage(const DiffForm& form, std::size_t n);

/// "c*x^a dx^dy" style rendering, terms ordered by index set.
std::string to_string(const DiffForm& w);

}  // namespace qfs

#endif
