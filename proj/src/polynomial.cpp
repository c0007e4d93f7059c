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

#include "qfsplit/polynomial.hpp"

#include <sstream>

namespace qfs {

Poly frobenius_power(const Poly& a, unsigned k) {
    const std::uint64_t q = checked_pow(a.ring().p(), k);
    std::vector<Poly::Term> terms;
    terms.reserve(a.size());
    for (const auto& [m, c] : a.terms()) terms.emplace_back(m.scaled(q), c);
    return Poly::from_terms(a.ring_ptr(), std::move(terms));
}

IntPoly lift(const Poly& f) {
    std::vector<IntPoly::Term> terms;
    terms.reserve(f.size());
    for (const auto& [m, c] : f.terms()) terms.emplace_back(m, mpz_class(static_cast<unsigned long>(c)));
    return IntPoly::from_terms(f.ring_ptr(), std::move(terms));
}

Poly reduce(const IntPoly& f) {
    const mpz_class p(static_cast<unsigned long>(f.ring().p()));
    std::vector<Poly::Term> terms;
    terms.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
        if (sgn(r) != 0) terms.emplace_back(m, static_cast<std::uint32_t>(r.get_ui()));
    }
    return Poly::from_terms(f.ring_ptr(), std::move(terms));
}

IntPoly reduce_mod(const IntPoly& f, const mpz_class& modulus) {
    std::vector<IntPoly::Term> terms;
    terms.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), modulus.get_mpz_t());
        if (sgn(r) != 0) terms.emplace_back(m, std::move(r));
    }
    return IntPoly::from_terms(f.ring_ptr(), std::move(terms));
}

IntPoly divide_exact(const IntPoly& f, const mpz_class& d) {
    std::vector<IntPoly::Term> terms;
    terms.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
            throw InternalError("inexact division in integer lift");
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
        terms.emplace_back(m, std::move(q));
    }
    return IntPoly::from_terms(f.ring_ptr(), std::move(terms));
}

IntPoly mul_mod(const IntPoly& a, const IntPoly& b, const mpz_class& m) {
    return reduce_mod(a * b, m);
}

IntPoly pow_mod(const IntPoly& a, std::uint64_t e, const mpz_class& m) {
    auto result = reduce_mod(IntPoly::one(a.ring_ptr()), m);
    auto base = reduce_mod(a, m);
    while (e > 0) {
        if (e & 1u) result = mul_mod(result, base, m);
        e >>= 1;
        if (e > 0) base = mul_mod(base, base, m);
    }
    return result;
}

namespace {

bool monomial_in_frobenius_ideal(const Monomial& m, std::uint64_t q) {
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] >= q) return true;
    return false;
}

}  // namespace

bool in_frobenius_power_ideal(const Poly& f, unsigned e) {
    if (e == 0) throw InvalidArgument("Frobenius exponent must be positive");
    const std::uint64_t q = checked_pow(f.ring().p(), e);
    for (const auto& t : f.terms())
        if (!monomial_in_frobenius_ideal(t.first, q)) return false;
    return true;
}

Poly truncate_frobenius_power_ideal(const Poly& f, unsigned e) {
    if (e == 0) throw InvalidArgument("Frobenius exponent must be positive");
    const std::uint64_t q = checked_pow(f.ring().p(), e);
    std::vector<Poly::Term> kept;
    for (const auto& t : f.terms())
        if (!monomial_in_frobenius_ideal(t.first, q)) kept.push_back(t);
    return Poly::from_terms(f.ring_ptr(), std::move(kept));
}

Poly mul_mod_frobenius_power(const Poly& a, const Poly& b, unsigned e) {
    require_same_ring(a.ring_ptr(), b.ring_ptr());
    const std::uint64_t q = checked_pow(a.ring().p(), e);
    const Ring& r = a.ring();
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> acc;
    for (const auto& [ma, ca] : a.terms()) {
        if (monomial_in_frobenius_ideal(ma, q)) continue;
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m = ma * mb;
            if (monomial_in_frobenius_ideal(m, q)) continue;
            auto prod = FpCoeffs::mul(r, ca, cb);
            auto [it, inserted] = acc.try_emplace(std::move(m), prod);
            if (!inserted) it->second = FpCoeffs::add(r, it->second, prod);
        }
    }
    std::vector<Poly::Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) terms.emplace_back(m, c);
    return Poly::from_terms(a.ring_ptr(), std::move(terms));
}

Poly pow_mod_frobenius_power(const Poly& a, std::uint64_t k, unsigned e) {
    auto result = truncate_frobenius_power_ideal(Poly::one(a.ring_ptr()), e);
    auto base = truncate_frobenius_power_ideal(a, e);
    while (k > 0) {
        if (k & 1u) result = mul_mod_frobenius_power(result, base, e);
        k >>= 1;
        if (k > 0) base = mul_mod_frobenius_power(base, base, e);
    }
    return result;
}

Poly substitute(const Poly& f, const std::map<std::string, Poly>& assignment) {
    if (assignment.empty()) {
        if (f.total_degree() == 0) return f;
        throw InvalidArgument("empty assignment for a non-constant polynomial");
    }
    const RingPtr& target = assignment.begin()->second.ring_ptr();
    for (const auto& [name, image] : assignment) require_same_ring(image.ring_ptr(), target);
    if (target->p() != f.ring().p()) throw RingMismatch();

    const std::size_t n = f.ring().nvars();
    std::vector<const Poly*> images(n, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = assignment.find(f.ring().variable(i));
        if (it != assignment.end()) images[i] = &it->second;
    }
    // powers are cached per variable since the same exponents recur
    std::vector<std::map<std::uint64_t, Poly>> power_cache(n);
    Poly result(target);
    for (const auto& [m, c] : f.terms()) {
        Poly term = Poly::constant(target, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (m[i] == 0) continue;
            if (!images[i]) throw InvalidArgument("no image for variable '" + f.ring().variable(i) + "'");
            auto it = power_cache[i].find(m[i]);
            if (it == power_cache[i].end()) it = power_cache[i].emplace(m[i], pow(*images[i], m[i])).first;
            term = term * it->second;
        }
        result += term;
    }
    return result;
}

Poly embed(const Poly& f, const RingPtr& target) {
    if (target->p() != f.ring().p()) throw RingMismatch();
    std::vector<std::size_t> map(f.ring().nvars());
    for (std::size_t i = 0; i < f.ring().nvars(); ++i) {
        auto idx = target->index_of(f.ring().variable(i));
        if (!idx) {
            if (f.degree_in(i) == 0) {
                map[i] = target->nvars();
                continue;
            }
            throw RingMismatch("variable '" + f.ring().variable(i) + "' missing from target ring");
        }
        map[i] = *idx;
    }
    std::vector<Poly::Term> terms;
    terms.reserve(f.size());
    for (const auto& [m, c] : f.terms()) {
        Monomial t(target->nvars());
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) t[map[i]] = m[i];
        terms.emplace_back(std::move(t), c);
    }
    return Poly::from_terms(target, std::move(terms));
}

namespace {

template <class P, class CoeffWriter>
std::string render(const P& f, CoeffWriter write_coeff) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::string coeff = write_coeff(c);
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff.erase(0, 1);
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        std::vector<std::string> factors;
        if (coeff != "1" || m.is_one()) factors.push_back(coeff);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            std::string v = f.ring().variable(i);
            if (m[i] > 1) v += "^" + std::to_string(m[i]);
            factors.push_back(std::move(v));
        }
        for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
    }
    return os.str();
}

}  // namespace

std::string to_string(const Poly& f) {
    return render(f, [](std::uint32_t c) { return std::to_string(c); });
}

std::string to_string(const IntPoly& f) {
    return render(f, [](const mpz_class& c) { return c.get_str(); });
}

}  // namespace qfs
