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

#ifndef QFSPLIT_POLYNOMIAL_HPP
#define QFSPLIT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qfsplit/error.hpp"
#include "qfsplit/ring.hpp"

namespace qfs {

/// Coefficients in F_p, stored as the representative in [0, p).
struct FpCoeffs {
    using value_type = std::uint32_t;

    static value_type zero() noexcept { return 0; }
    static value_type one(const Ring&) noexcept { return 1; }
    static bool is_zero(value_type a) noexcept { return a == 0; }
    static value_type add(const Ring& r, value_type a, value_type b) noexcept {
        std::uint32_t s = a + b;
        return s >= r.p() ? s - r.p() : s;
    }
    static value_type neg(const Ring& r, value_type a) noexcept { return a == 0 ? 0 : r.p() - a; }
    static value_type mul(const Ring& r, value_type a, value_type b) noexcept {
        return static_cast<value_type>(static_cast<std::uint64_t>(a) * b % r.p());
    }
    static value_type from_integer(const Ring& r, long long v) noexcept {
        long long m = v % static_cast<long long>(r.p());
        return static_cast<value_type>(m < 0 ? m + r.p() : m);
    }
};

/// Exact integer coefficients; used for lifts to characteristic zero.
struct IntCoeffs {
    using value_type = mpz_class;

    static value_type zero() { return 0; }
    static value_type one(const Ring&) { return 1; }
    static bool is_zero(const value_type& a) { return sgn(a) == 0; }
    static value_type add(const Ring&, const value_type& a, const value_type& b) { return a + b; }
    static value_type neg(const Ring&, const value_type& a) { return -a; }
    static value_type mul(const Ring&, const value_type& a, const value_type& b) { return a * b; }
    static value_type from_integer(const Ring&, long long v) { return mpz_class(static_cast<long>(v)); }
};

/// Sparse multivariate polynomial. Terms are kept in descending graded
/// lexicographic order without zero coefficients, so equal polynomials have
/// identical term lists.
template <class Coeffs>
class Polynomial {
public:
    using coeff_type = typename Coeffs::value_type;
    using Term = std::pair<Monomial, coeff_type>;

    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial constant(RingPtr ring, coeff_type c) {
        Polynomial r(ring);
        if (!Coeffs::is_zero(c)) r.terms_.emplace_back(Monomial(ring->nvars()), std::move(c));
        return r;
    }
    static Polynomial one(RingPtr ring) { return constant(ring, Coeffs::one(*ring)); }
    static Polynomial variable(RingPtr ring, std::size_t index) {
        Monomial m(ring->nvars());
        m[index] = 1;
        return monomial(ring, std::move(m), Coeffs::one(*ring));
    }
    static Polynomial monomial(RingPtr ring, Monomial m, coeff_type c) {
        if (m.size() != ring->nvars()) throw RingMismatch();
        Polynomial r(ring);
        if (!Coeffs::is_zero(c)) r.terms_.emplace_back(std::move(m), std::move(c));
        return r;
    }
    /// Canonicalises arbitrary (possibly repeated, possibly zero) terms.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms) {
        Polynomial r(ring);
        r.terms_ = std::move(terms);
        r.canonicalize();
        return r;
    }

    const Ring& ring() const noexcept { return *ring_; }
    const RingPtr& ring_ptr() const noexcept { return ring_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    coeff_type coeff(const Monomial& m) const {
        for (const auto& [mono, c] : terms_)
            if (mono == m) return c;
        return Coeffs::zero();
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first.degree());
        return d;
    }
    std::uint64_t degree_in(std::size_t var) const {
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.first[var]);
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        const auto d = terms_.front().first.degree();
        return std::all_of(terms_.begin(), terms_.end(),
                           [d](const Term& t) { return t.first.degree() == d; });
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [m, c] : terms_) r.terms_.emplace_back(m, Coeffs::neg(*ring_, c));
        return r;
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = add_impl(*this, b, false); }
    Polynomial& operator-=(const Polynomial& b) { return *this = add_impl(*this, b, true); }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return add_impl(a, b, false); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return add_impl(a, b, true); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        require_same_ring(a.ring_, b.ring_);
        if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
        const Ring& r = *a.ring_;
        std::unordered_map<Monomial, coeff_type, MonomialHash> acc;
        acc.reserve(a.size() * b.size());
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                auto prod = Coeffs::mul(r, ca, cb);
                auto [it, inserted] = acc.try_emplace(ma * mb, prod);
                if (!inserted) it->second = Coeffs::add(r, it->second, prod);
            }
        }
        std::vector<Term> terms;
        terms.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!Coeffs::is_zero(c)) terms.emplace_back(m, std::move(c));
        Polynomial out(a.ring_);
        out.terms_ = std::move(terms);
        out.sort_terms();
        return out;
    }

    /// Multiplies every coefficient by c.
    Polynomial scaled(const coeff_type& c) const {
        Polynomial r(ring_);
        for (const auto& [m, v] : terms_) {
            auto w = Coeffs::mul(*ring_, v, c);
            if (!Coeffs::is_zero(w)) r.terms_.emplace_back(m, std::move(w));
        }
        return r;
    }

    /// Multiplies by a monomial.
    Polynomial shifted(const Monomial& m) const {
        Polynomial r(ring_);
        r.terms_.reserve(terms_.size());
        for (const auto& [mono, c] : terms_) r.terms_.emplace_back(mono * m, c);
        return r;  // multiplication by a monomial preserves the grlex order
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
    }

private:
    static Polynomial add_impl(const Polynomial& a, const Polynomial& b, bool subtract) {
        require_same_ring(a.ring_, b.ring_);
        const Ring& r = *a.ring_;
        Polynomial out(a.ring_);
        out.terms_.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() || j < b.terms_.size()) {
            if (j == b.terms_.size() ||
                (i < a.terms_.size() && grlex_greater(a.terms_[i].first, b.terms_[j].first))) {
                out.terms_.push_back(a.terms_[i++]);
            } else if (i == a.terms_.size() || grlex_greater(b.terms_[j].first, a.terms_[i].first)) {
                const auto& [m, c] = b.terms_[j++];
                out.terms_.emplace_back(m, subtract ? Coeffs::neg(r, c) : c);
            } else {
                auto c = subtract ? Coeffs::add(r, a.terms_[i].second, Coeffs::neg(r, b.terms_[j].second))
                                  : Coeffs::add(r, a.terms_[i].second, b.terms_[j].second);
                if (!Coeffs::is_zero(c)) out.terms_.emplace_back(a.terms_[i].first, std::move(c));
                ++i;
                ++j;
            }
        }
        return out;
    }

    void sort_terms() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_greater(x.first, y.first); });
    }

    void canonicalize() {
        for (const auto& t : terms_)
            if (t.first.size() != ring_->nvars()) throw RingMismatch();
        sort_terms();
        std::vector<Term> merged;
        merged.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!merged.empty() && merged.back().first == t.first) {
                merged.back().second = Coeffs::add(*ring_, merged.back().second, t.second);
            } else {
                if (!merged.empty() && Coeffs::is_zero(merged.back().second)) merged.pop_back();
                merged.push_back(std::move(t));
            }
        }
        if (!merged.empty() && Coeffs::is_zero(merged.back().second)) merged.pop_back();
        terms_ = std::move(merged);
    }

    RingPtr ring_;
    std::vector<Term> terms_;
};

using Poly = Polynomial<FpCoeffs>;
using IntPoly = Polynomial<IntCoeffs>;

/// a^e by binary exponentiation.
template <class Coeffs>
Polynomial<Coeffs> pow(const Polynomial<Coeffs>& a, std::uint64_t e) {
    auto result = Polynomial<Coeffs>::one(a.ring_ptr());
    auto base = a;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

/// Exponent-scaling shortcut for a^(p^k) over F_p: each monomial's exponents
/// are multiplied by p^k and coefficients are unchanged (c^p = c).
Poly frobenius_power(const Poly& a, unsigned k);

/// Integer lift using coefficient representatives in [0, p).
IntPoly lift(const Poly& f);
/// Reduction of an integer polynomial modulo p.
Poly reduce(const IntPoly& f);
/// Coefficients reduced into [0, m).
IntPoly reduce_mod(const IntPoly& f, const mpz_class& m);
/// Divides every coefficient by d; throws InternalError unless exact.
IntPoly divide_exact(const IntPoly& f, const mpz_class& d);
/// a^e with coefficients reduced modulo m after every product.
IntPoly pow_mod(const IntPoly& a, std::uint64_t e, const mpz_class& m);
IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const mpz_class& m);

/// True iff every monomial of f is divisible by x_i^(p^e) for some i, i.e.
/// f lies in the monomial ideal (x_1^(p^e), ..., x_n^(p^e)).
bool in_frobenius_power_ideal(const Poly& f, unsigned e);
/// f with every member monomial of (x_1^(p^e), ..., x_n^(p^e)) dropped.
Poly truncate_frobenius_power_ideal(const Poly& f, unsigned e);
/// a*b computed modulo the Frobenius-power ideal of exponent e.
Poly mul_mod_frobenius_power(const Poly& a, const Poly& b, unsigned e);
/// a^k computed modulo the Frobenius-power ideal of exponent e.
Poly pow_mod_frobenius_power(const Poly& a, std::uint64_t k, unsigned e);

/// Ring homomorphism sending each named variable to the given polynomial;
/// the images must share one target ring. Throws InvalidArgument when a
/// variable occurring in f has no image.
Poly substitute(const Poly& f, const std::map<std::string, Poly>& assignment);

/// Same polynomial viewed in another ring of the same characteristic whose
/// variables are a superset of f's variables.
Poly embed(const Poly& f, const RingPtr& target);

/// Canonical text: terms in descending grlex order, coefficients in [0, p),
/// "*" between factors and "^" for powers, e.g. "2*x^3*z^2 + y".
std::string to_string(const Poly& f);
std::string to_string(const IntPoly& f);

}  // namespace qfs

#endif
