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

#include "qfsplit/cartier.hpp"

#include <bit>

#include "qfsplit/gf_linalg.hpp"

namespace qfs {

namespace {

bool has(IndexSet k, std::size_t i) { return (k >> i) & 1u; }

// (-1)^(number of indices in k below j)
bool odd_below(IndexSet k, std::size_t j) {
    const IndexSet below = j == 0 ? 0 : (k & ((IndexSet{1} << j) - 1));
    return std::popcount(below) % 2 == 1;
}

Poly partial(const Poly& f, std::size_t j) {
    const Ring& r = f.ring();
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : f.terms()) {
        if (m[j] == 0) continue;
        const auto factor = FpCoeffs::mul(r, c, static_cast<std::uint32_t>(m[j] % r.p()));
        if (factor == 0) continue;
        Monomial n = m;
        n[j] -= 1;
        out.emplace_back(std::move(n), factor);
    }
    return Poly::from_terms(f.ring_ptr(), std::move(out));
}

Monomial weight_of(const Monomial& a, IndexSet k) {
    Monomial b = a;
    for (std::size_t i = 0; i < b.size(); ++i)
        if (has(k, i)) b[i] += 1;
    return b;
}

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents() < b.exponents(); }
};

// Splits w by multidegree weight a + 1_K; d and the Cartier rule both respect it.
std::map<Monomial, DiffForm, MonomialLess> by_weight(const DiffForm& w) {
    std::map<Monomial, DiffForm, MonomialLess> parts;
    for (const auto& [k, f] : w.terms()) {
        for (const auto& [m, c] : f.terms()) {
            auto it = parts.try_emplace(weight_of(m, k), w.ring_ptr(), w.degree()).first;
            it->second += DiffForm::term(Poly::monomial(w.ring_ptr(), m, c), k);
        }
    }
    return parts;
}

// Conforming part of w mapped through the Cartier term rule; the rest is
// returned in `residual`.
DiffForm cartier_terms(const DiffForm& w, DiffForm& residual) {
    const std::uint32_t p = w.ring().p();
    DiffForm out(w.ring_ptr(), w.degree());
    for (const auto& [k, f] : w.terms()) {
        std::vector<Poly::Term> image;
        std::vector<Poly::Term> rest;
        for (const auto& [m, c] : f.terms()) {
            bool conforming = true;
            Monomial q(m.size());
            for (std::size_t i = 0; i < m.size() && conforming; ++i) {
                const std::uint64_t need = has(k, i) ? p - 1 : 0;
                if (m[i] % p != need) conforming = false;
                else q[i] = (m[i] - need) / p;
            }
            if (conforming) image.emplace_back(std::move(q), c);
            else rest.emplace_back(m, c);
        }
        out += DiffForm::term(Poly::from_terms(w.ring_ptr(), std::move(image)), k);
        residual += DiffForm::term(Poly::from_terms(w.ring_ptr(), std::move(rest)), k);
    }
    return out;
}

}  // namespace

std::size_t index_count(IndexSet k) { return static_cast<std::size_t>(std::popcount(k)); }

DiffForm::DiffForm(RingPtr ring, std::size_t degree) : ring_(std::move(ring)), degree_(degree) {
    if (ring_->nvars() > kMaxFormVariables) throw InvalidArgument("too many variables for differential forms");
}

DiffForm DiffForm::function(const Poly& f) {
    DiffForm w(f.ring_ptr(), 0);
    w.add_term(0, f);
    return w;
}

DiffForm DiffForm::term(const Poly& f, IndexSet k) {
    if (f.ring().nvars() < kMaxFormVariables && (k >> f.ring().nvars()) != 0)
        throw InvalidArgument("index set outside the ring's variables");
    DiffForm w(f.ring_ptr(), index_count(k));
    w.add_term(k, f);
    return w;
}

DiffForm DiffForm::dx(const RingPtr& ring, std::size_t i) {
    if (i >= ring->nvars()) throw InvalidArgument("dx index out of range");
    return term(Poly::one(ring), IndexSet{1} << i);
}

Poly DiffForm::coefficient(IndexSet k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Poly(ring_) : it->second;
}

Poly DiffForm::as_function() const {
    if (degree_ != 0) throw InvalidArgument("not a degree-0 form");
    return coefficient(0);
}

void DiffForm::add_term(IndexSet k, const Poly& f) {
    require_same_ring(ring_, f.ring_ptr());
    if (index_count(k) != degree_) throw InvalidArgument("index set size differs from form degree");
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffForm& DiffForm::operator+=(const DiffForm& b) {
    require_same_ring(ring_, b.ring_);
    if (b.degree_ != degree_ && !b.is_zero()) throw InvalidArgument("adding forms of different degree");
    for (const auto& [k, f] : b.terms_) add_term(k, f);
    return *this;
}

DiffForm& DiffForm::operator-=(const DiffForm& b) { return *this += -b; }

DiffForm DiffForm::operator-() const {
    DiffForm out(ring_, degree_);
    for (const auto& [k, f] : terms_) out.terms_.emplace(k, -f);
    return out;
}

DiffForm operator*(const Poly& f, const DiffForm& w) {
    DiffForm out(w.ring_ptr(), w.degree());
    for (const auto& [k, g] : w.terms()) out.add_term(k, f * g);
    return out;
}

bool operator==(const DiffForm& a, const DiffForm& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    if (a.is_zero() && b.is_zero()) return true;
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

DiffForm wedge(const DiffForm& a, const DiffForm& b) {
    require_same_ring(a.ring_ptr(), b.ring_ptr());
    DiffForm out(a.ring_ptr(), a.degree() + b.degree());
    for (const auto& [k, f] : a.terms()) {
        for (const auto& [l, g] : b.terms()) {
            if (k & l) continue;
            // sign of the shuffle: pairs (a in k, b in l) with a > b
            int inversions = 0;
            for (std::size_t i = 0; i < kMaxFormVariables; ++i)
                if (has(l, i) && i + 1 < kMaxFormVariables) inversions += std::popcount(k >> (i + 1));
            const bool negative = inversions % 2 == 1;
            Poly prod = f * g;
            out += DiffForm::term(negative ? -prod : prod, k | l);
        }
    }
    return out;
}

DiffForm exterior_derivative(const DiffForm& w) {
    DiffForm out(w.ring_ptr(), w.degree() + 1);
    const std::size_t n = w.ring().nvars();
    for (const auto& [k, f] : w.terms()) {
        for (std::size_t j = 0; j < n; ++j) {
            if (has(k, j)) continue;
            Poly df = partial(f, j);
            if (df.is_zero()) continue;
            out += DiffForm::term(odd_below(k, j) ? -df : df, k | (IndexSet{1} << j));
        }
    }
    return out;
}

bool is_closed(const DiffForm& w) { return exterior_derivative(w).is_zero(); }

DiffForm cartier(const DiffForm& w) {
    if (!is_closed(w)) throw NotClosed();
    DiffForm residual(w.ring_ptr(), w.degree());
    DiffForm out = cartier_terms(w, residual);
    if (!residual.is_zero() && (w.degree() == 0 || !exact_potential(residual)))
        throw InternalError("non-conforming part of a closed form is not exact");
    return out;
}

DiffForm cartier_inverse_lift(const DiffForm& w) {
    const std::uint64_t p = w.ring().p();
    DiffForm out(w.ring_ptr(), w.degree());
    for (const auto& [k, f] : w.terms()) {
        std::vector<Poly::Term> terms;
        for (const auto& [m, c] : f.terms()) {
            Monomial a = m.scaled(p);
            for (std::size_t i = 0; i < a.size(); ++i)
                if (has(k, i)) a[i] = checked_add(a[i], p - 1);
            terms.emplace_back(std::move(a), c);
        }
        out += DiffForm::term(Poly::from_terms(w.ring_ptr(), std::move(terms)), k);
    }
    return out;
}

std::optional<DiffForm> exact_potential(const DiffForm& w) {
    if (w.degree() == 0) throw InvalidArgument("degree-0 forms have no potential");
    const Ring& r = w.ring();
    const std::uint32_t p = r.p();
    DiffForm potential(w.ring_ptr(), w.degree() - 1);
    for (const auto& [b, part] : by_weight(w)) {
        std::size_t j = b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (b[i] % p != 0) {
                j = i;
                break;
            }
        }
        if (j == b.size()) return std::nullopt;  // nonzero part of weight 0 mod p
        const auto inv = linalg::inverse_mod(static_cast<std::uint32_t>(b[j] % p), p);
        DiffForm eta(w.ring_ptr(), w.degree() - 1);
        for (const auto& [k, f] : part.terms()) {
            if (!has(k, j)) continue;
            Monomial xj(r.nvars());
            xj[j] = 1;
            Poly g = f.shifted(xj).scaled(inv);
            eta += DiffForm::term(odd_below(k, j) ? -g : g, k & ~(IndexSet{1} << j));
        }
        if (!(exterior_derivative(eta) == part)) return std::nullopt;
        potential += eta;
    }
    return potential;
}

ZnResult zn_membership(const DiffForm& w, std::size_t n) {
    DiffForm cur = w;
    for (std::size_t k = 0; k < n; ++k) {
        if (!is_closed(cur)) return {};
        cur = cartier(cur);
    }
    return {true, cur};
}

bool bn_membership(const DiffForm& w, std::size_t n) {
    if (n == 0) return w.is_zero();
    auto z = zn_membership(w, n);
    return z.member && z.image->is_zero();
}

DiffForm serre_map(const WittVector& w) {
    const std::size_t n = w.length();
    const std::uint64_t p = w.ring().p();
    DiffForm out(w.ring_ptr(), 1);
    for (std::size_t i = 0; i < n; ++i) {
        const Poly& f = w[i];
        if (f.is_zero()) continue;
        const std::uint64_t e = checked_pow(p, n - 1 - i) - 1;
        out += pow(f, e) * exterior_derivative(DiffForm::function(f));
    }
    return out;
}

namespace {

std::vector<Poly> serre_solve(const DiffForm& form, std::size_t n) {
    const std::uint64_t p = form.ring().p();
    const DiffForm top = n == 1 ? form : *zn_membership(form, n - 1).image;
    auto pot = exact_potential(top);
    if (!pot) throw InternalError("top Cartier image of a B_n form is not exact");
    const Poly f0 = pot->as_function();
    std::vector<Poly> out{f0};
    if (n == 1) return out;
    const DiffForm rest = form - pow(f0, checked_pow(p, n - 1) - 1) * exterior_derivative(DiffForm::function(f0));
    auto tail = serre_solve(rest, n - 1);
    out.insert(out.end(), tail.begin(), tail.end());
    return out;
}

}  // namespace

std::optional<WittVector> serre_preimage(const DiffForm& form, std::size_t n) {
    if (n == 0) throw InvalidArgument("Witt length must be positive");
    if (form.degree() != 1 && !form.is_zero()) throw InvalidArgument("Serre preimage needs a 1-form");
    if (!bn_membership(form, n)) return std::nullopt;
    return WittVector(serre_solve(form, n));
}

std::string to_string(const DiffForm& w) {
    if (w.is_zero()) return "0";
    std::string out;
    for (const auto& [k, f] : w.terms()) {
        if (!out.empty()) out += " + ";
        std::string coeff = to_string(f);
        std::string basis;
        for (std::size_t i = 0; i < w.ring().nvars(); ++i) {
            if (!has(k, i)) continue;
            if (!basis.empty()) basis += "∧";
            basis += "d" + w.ring().variable(i);
        }
        if (basis.empty()) {
            out += coeff;
        } else if (coeff == "1") {
            out += basis;
        } else if (f.size() > 1) {
            out += "(" + coeff + ") " + basis;
        } else {
            out += coeff + " " + basis;
        }
    }
    return out;
}

}  // namespace qfs
