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

#include "qfsplit/witt.hpp"

#include <functional>

namespace qfs {

namespace {

mpz_class prime_power(std::uint32_t p, std::size_t e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

// Lazily extended table a^(p^j) mod p^(j+1) for a lifted component a.
class PowerTower {
public:
    PowerTower(const Poly& a) : p_(a.ring().p()) { levels_.push_back(reduce_mod(lift(a), p_)); }

    const IntPoly& at(std::size_t j) {
        while (levels_.size() <= j) {
            // (a + p^j t)^p == a^p mod p^(j+1), so raising the previous level suffices
            const std::size_t next = levels_.size();
            levels_.push_back(pow_mod(levels_.back(), p_, prime_power(p_, next + 1)));
        }
        return levels_[j];
    }

private:
    std::uint32_t p_;
    std::vector<IntPoly> levels_;
};

// Ghost components reduced mod p^(k+1).
GhostVector ghost_mod(const WittVector& w) {
    const std::uint32_t p = w.ring().p();
    const std::size_t n = w.length();
    std::vector<PowerTower> towers;
    towers.reserve(n);
    for (const auto& c : w.components()) towers.emplace_back(c);
    GhostVector out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        IntPoly acc(w.ring_ptr());
        for (std::size_t i = 0; i <= k; ++i) {
            if (w[i].is_zero()) continue;
            acc += towers[i].at(k - i).scaled(prime_power(p, i));
        }
        out.push_back(reduce_mod(acc, prime_power(p, k + 1)));
    }
    return out;
}

void require_compatible(const WittVector& u, const WittVector& v) {
    require_same_ring(u.ring_ptr(), v.ring_ptr());
    if (u.length() != v.length())
        throw LengthMismatch("Witt vectors of lengths " + std::to_string(u.length()) + " and " +
                             std::to_string(v.length()));
}

WittVector combine(const WittVector& u, const WittVector& v,
                   const std::function<IntPoly(const IntPoly&, const IntPoly&, const mpz_class&)>& op) {
    require_compatible(u, v);
    const auto gu = ghost_mod(u);
    const auto gv = ghost_mod(v);
    GhostVector g;
    g.reserve(gu.size());
    for (std::size_t k = 0; k < gu.size(); ++k) g.push_back(op(gu[k], gv[k], prime_power(u.ring().p(), k + 1)));
    return from_ghost(u.ring_ptr(), g);
}

}  // namespace

WittVector::WittVector(std::vector<Poly> components) : components_(std::move(components)) {
    if (components_.empty()) throw InvalidArgument("Witt vector needs at least one component");
    if (components_.size() > kMaxWittLength)
        throw InvalidArgument("Witt length " + std::to_string(components_.size()) + " exceeds cap " +
                              std::to_string(kMaxWittLength));
    for (const auto& c : components_) require_same_ring(components_.front().ring_ptr(), c.ring_ptr());
}

WittVector WittVector::zero(const RingPtr& ring, std::size_t n) {
    return WittVector(std::vector<Poly>(n, Poly(ring)));
}

WittVector WittVector::one(const RingPtr& ring, std::size_t n) {
    std::vector<Poly> c(n, Poly(ring));
    if (n > 0) c[0] = Poly::one(ring);
    return WittVector(std::move(c));
}

WittVector WittVector::from_integer(const RingPtr& ring, std::size_t n, long k) {
    GhostVector g;
    for (std::size_t i = 0; i < n; ++i)
        g.push_back(reduce_mod(IntPoly::constant(ring, mpz_class(k)), prime_power(ring->p(), i + 1)));
    return from_ghost(ring, g);
}

bool WittVector::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero()) return false;
    return true;
}

WittVector from_ghost(const RingPtr& ring, const GhostVector& ghosts) {
    const std::uint32_t p = ring->p();
    const std::size_t n = ghosts.size();
    if (n == 0 || n > kMaxWittLength) throw InvalidArgument("bad ghost vector length");
    std::vector<Poly> comps;
    std::vector<PowerTower> towers;
    comps.reserve(n);
    towers.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        require_same_ring(ring, ghosts[k].ring_ptr());
        const mpz_class modulus = prime_power(p, k + 1);
        IntPoly acc = ghosts[k];
        for (std::size_t i = 0; i < k; ++i) {
            if (comps[i].is_zero()) continue;
            acc -= towers[i].at(k - i).scaled(prime_power(p, i));
        }
        acc = divide_exact(reduce_mod(acc, modulus), prime_power(p, k));
        comps.push_back(reduce(acc));
        towers.emplace_back(comps.back());
    }
    return WittVector(std::move(comps));
}

WittVector operator+(const WittVector& u, const WittVector& v) {
    return combine(u, v, [](const IntPoly& a, const IntPoly& b, const mpz_class& m) { return reduce_mod(a + b, m); });
}

WittVector operator-(const WittVector& u, const WittVector& v) {
    return combine(u, v, [](const IntPoly& a, const IntPoly& b, const mpz_class& m) { return reduce_mod(a - b, m); });
}

WittVector operator-(const WittVector& u) { return WittVector::zero(u.ring_ptr(), u.length()) - u; }

WittVector operator*(const WittVector& u, const WittVector& v) {
    return combine(u, v, [](const IntPoly& a, const IntPoly& b, const mpz_class& m) { return mul_mod(a, b, m); });
}

WittVector pow(const WittVector& u, std::uint64_t e) {
    auto result = WittVector::one(u.ring_ptr(), u.length());
    auto base = u;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

WittVector frobenius(const WittVector& w) {
    std::vector<Poly> c;
    c.reserve(w.length());
    for (const auto& a : w.components()) c.push_back(frobenius_power(a, 1));
    return WittVector(std::move(c));
}

WittVector verschiebung(const WittVector& w) {
    std::vector<Poly> c;
    c.reserve(w.length() + 1);
    c.emplace_back(w.ring_ptr());
    for (const auto& a : w.components()) c.push_back(a);
    return WittVector(std::move(c));
}

WittVector restriction(const WittVector& w) {
    if (w.length() < 2) throw InvalidArgument("restriction needs length at least 2");
    std::vector<Poly> c(w.components().begin(), w.components().end() - 1);
    return WittVector(std::move(c));
}

WittVector teichmuller(const Poly& f, std::size_t n) {
    std::vector<Poly> c(n, Poly(f.ring_ptr()));
    if (n > 0) c[0] = f;
    return WittVector(std::move(c));
}

Poly delta_carry(const Poly& f) {
    const std::uint32_t p = f.ring().p();
    const mpz_class p2 = mpz_class(p) * p;
    const IntPoly s = lift(f);
    IntPoly diff = pow_mod(s, p, p2);
    for (const auto& [m, c] : s.terms()) {
        mpz_class cp;
        mpz_powm_ui(cp.get_mpz_t(), c.get_mpz_t(), p, p2.get_mpz_t());
        diff -= IntPoly::monomial(s.ring_ptr(), m.scaled(p), cp);
    }
    return reduce(divide_exact(reduce_mod(diff, p2), mpz_class(p)));
}

WittVector evaluate(const Poly& f, const std::map<std::string, WittVector>& arguments) {
    if (arguments.empty()) throw InvalidArgument("evaluate needs at least one argument");
    const auto& first = arguments.begin()->second;
    const RingPtr& target = first.ring_ptr();
    const std::size_t n = first.length();
    for (const auto& [name, w] : arguments) {
        require_same_ring(target, w.ring_ptr());
        if (w.length() != n) throw LengthMismatch("evaluation arguments of different lengths");
    }
    auto result = WittVector::zero(target, n);
    for (const auto& [m, c] : f.terms()) {
        auto term = teichmuller(Poly::constant(target, c), n);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            auto it = arguments.find(f.ring().variable(i));
            if (it == arguments.end()) throw InvalidArgument("no Witt value for variable " + f.ring().variable(i));
            term = term * pow(it->second, m[i]);
        }
        result = result + term;
    }
    return result;
}

GhostVector ghost_components(const WittVector& w) {
    const std::uint32_t p = w.ring().p();
    GhostVector out;
    std::vector<IntPoly> lifts;
    for (const auto& c : w.components()) lifts.push_back(lift(c));
    for (std::size_t k = 0; k < w.length(); ++k) {
        IntPoly acc(w.ring_ptr());
        for (std::size_t i = 0; i <= k; ++i) {
            if (lifts[i].is_zero()) continue;
            acc += pow(lifts[i], checked_pow(p, k - i)).scaled(prime_power(p, i));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

bool ghost_congruent(const GhostVector& a, const GhostVector& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        require_same_ring(a[k].ring_ptr(), b[k].ring_ptr());
        const mpz_class m = prime_power(a[k].ring().p(), k + 1);
        if (!reduce_mod(a[k] - b[k], m).is_zero()) return false;
    }
    return true;
}

std::string to_string(const WittVector& w) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.length(); ++i) {
        if (i) out += "; ";
        out += to_string(w[i]);
    }
    return out + ")";
}

}  // namespace qfs
