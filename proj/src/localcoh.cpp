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

#include "qfsplit/localcoh.hpp"

#include <algorithm>

namespace qfs {

namespace {

// Adds c * z^eps * f / (x^a y^b) to out, f in the base ring.
void distribute(H2Class& out, unsigned eps, const Poly& f, std::uint64_t a, std::uint64_t b, std::uint32_t c = 1) {
    const std::uint32_t p = out.p();
    for (const auto& [m, v] : f.terms()) {
        if (m[0] >= a || m[1] >= b) continue;
        out.add({eps, a - m[0], b - m[1]}, static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * c % p));
    }
}

// z^p = z^(p mod 2) * (-g)^(p div 2)
Poly frobenius_numerator(const DoubleCover& cover) { return pow(-cover.g(), cover.p() / 2); }

std::string denominator(const H2Key& k, const DoubleCover& cover) {
    const auto& vars = cover.base_ring()->variables();
    auto factor = [](const std::string& v, std::uint64_t e) { return e == 1 ? v : v + "^" + std::to_string(e); };
    return "(" + factor(vars[0], k.i) + "*" + factor(vars[1], k.j) + ")";
}

}  // namespace

DoubleCover::DoubleCover(Poly g) : g_(std::move(g)) {
    const Ring& r = g_.ring();
    if (r.nvars() != 2) throw InvalidArgument("double cover needs g in exactly two variables");
    if (r.index_of("z")) throw InvalidArgument("variable name z is reserved for the cover");
    if (g_.is_zero()) throw ZeroInput();
    if (g_.coeff(Monomial(2)) != 0) throw InvalidArgument("g must have no constant term");
    total_ = make_ring(r.p(), {r.variable(0), r.variable(1), "z"});
}

Poly DoubleCover::g_total() const { return embed(g_, total_); }

Poly DoubleCover::equation() const { return Poly::monomial(total_, Monomial(std::vector<std::uint64_t>{0, 0, 2}), 1) + g_total(); }

H2Class H2Class::basis(std::uint32_t p, H2Key key, std::uint32_t c) {
    H2Class out(p);
    out.add(key, c);
    return out;
}

std::uint32_t H2Class::coefficient(const H2Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? 0 : it->second;
}

void H2Class::add(const H2Key& k, std::uint32_t c) {
    if (k.eps > 1 || k.i == 0 || k.j == 0) throw InvalidArgument("not a basis class of H^2");
    c %= p_;
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second = (it->second + c) % p_;
        if (it->second == 0) terms_.erase(it);
    }
}

H2Class& H2Class::operator+=(const H2Class& b) {
    if (b.p_ != p_) throw RingMismatch("H^2 classes over different primes");
    for (const auto& [k, c] : b.terms_) add(k, c);
    return *this;
}

H2Class H2Class::scaled(std::uint32_t c) const {
    H2Class out(p_);
    for (const auto& [k, v] : terms_) out.add(k, static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * (c % p_) % p_));
    return out;
}

H2Class normal_form(const Poly& numerator, std::uint64_t a, std::uint64_t b, const DoubleCover& cover) {
    require_same_ring(numerator.ring_ptr(), cover.total_ring());
    const Poly neg_g = -cover.g();
    std::vector<Poly> neg_g_pow{Poly::one(cover.base_ring())};
    Poly split[2] = {Poly(cover.base_ring()), Poly(cover.base_ring())};
    for (const auto& [m, c] : numerator.terms()) {
        const std::uint64_t half = m[2] / 2;
        while (neg_g_pow.size() <= half) neg_g_pow.push_back(neg_g_pow.back() * neg_g);
        Monomial xy(std::vector<std::uint64_t>{m[0], m[1]});
        split[m[2] % 2] += neg_g_pow[half].shifted(xy).scaled(c);
    }
    H2Class out(cover.p());
    for (unsigned eps = 0; eps < 2; ++eps) distribute(out, eps, split[eps], a, b);
    return out;
}

H2Class frobenius_h2(const H2Class& xi, const DoubleCover& cover) {
    const std::uint32_t p = cover.p();
    if (xi.p() != p) throw RingMismatch("H^2 class over a different prime");
    const Poly one = Poly::one(cover.base_ring());
    const Poly n = frobenius_numerator(cover);
    H2Class out(p);
    for (const auto& [k, c] : xi.terms()) {
        const std::uint64_t a = checked_mul(p, k.i), b = checked_mul(p, k.j);
        if (k.eps == 0) distribute(out, 0, one, a, b, c);
        else distribute(out, p % 2, n, a, b, c);
    }
    return out;
}

H2Class socle(const DoubleCover& cover) { return H2Class::basis(cover.p(), {1, 1, 1}); }

CarryResult witt_carry(const DoubleCover& cover, SplitStrategy strategy) {
    if (!frobenius_h2(socle(cover), cover).is_zero()) throw SocleSurvives();
    const std::uint32_t p = cover.p();
    CarryResult r{p % 2, frobenius_numerator(cover), Poly(cover.base_ring()), Poly(cover.base_ring()),
                  Poly(cover.base_ring()), H2Class(p)};
    std::vector<Poly::Term> xs, ys;
    for (const auto& [m, c] : r.n.terms()) {
        const bool x_ok = m[0] >= p, y_ok = m[1] >= p;
        if (!x_ok && !y_ok) throw SplitNotFound();
        const bool to_x = strategy == SplitStrategy::XFirst ? x_ok : !y_ok;
        (to_x ? xs : ys).emplace_back(m, c);
    }
    r.x_part = Poly::from_terms(cover.base_ring(), std::move(xs));
    r.y_part = Poly::from_terms(cover.base_ring(), std::move(ys));

    const mpz_class p2 = mpz_class(p) * p;
    const IntPoly x = lift(r.x_part), y = lift(r.y_part);
    IntPoly diff = pow_mod(x + y, p, p2) - pow_mod(x, p, p2) - pow_mod(y, p, p2);
    r.carry = reduce(divide_exact(reduce_mod(diff, p2), mpz_class(p)));

    const Poly zp = Poly::monomial(cover.total_ring(), Monomial(std::vector<std::uint64_t>{0, 0, p * r.eps}), 1);
    const std::uint64_t q = static_cast<std::uint64_t>(p) * p;
    r.eta = normal_form(zp * embed(r.carry, cover.total_ring()), q, q, cover);
    return r;
}

H2Class witt_carry_class(const DoubleCover& cover, SplitStrategy strategy) { return witt_carry(cover, strategy).eta; }

MembershipResult frobenius_image_membership(const H2Class& eta, const DoubleCover& cover, std::uint64_t slack) {
    const std::uint32_t p = cover.p();
    MembershipResult result;
    if (eta.is_zero()) {
        result.member = true;
        return result;
    }
    std::uint64_t largest = static_cast<std::uint64_t>(p) * p;
    for (const auto& [k, c] : eta.terms()) largest = std::max({largest, k.i, k.j});
    const std::uint64_t deg_n = (p / 2) * cover.g().total_degree();
    std::uint64_t bound = (largest + deg_n + slack + p - 1) / p;
    const Poly one = Poly::one(cover.base_ring());
    const Poly n = frobenius_numerator(cover);

    for (unsigned attempt = 0;; ++attempt) {
        std::map<H2Key, std::size_t> row_of;
        std::vector<H2Key> row_keys;
        auto row = [&](const H2Key& k) {
            auto [it, inserted] = row_of.try_emplace(k, row_keys.size());
            if (inserted) row_keys.push_back(k);
            return it->second;
        };
        linalg::LinearSystem sys;
        sys.p = p;
        for (const auto& [k, c] : eta.terms()) sys.rhs.emplace_back(row(k), c);
        std::vector<H2Key> candidates;
        for (unsigned eps = 0; eps < 2; ++eps)
            for (std::uint64_t i = 1; i <= bound; ++i)
                for (std::uint64_t j = 1; j <= bound; ++j) candidates.push_back({eps, i, j});
        for (const auto& cand : candidates) {
            H2Class image(p);
            if (cand.eps == 0) distribute(image, 0, one, p * cand.i, p * cand.j);
            else distribute(image, p % 2, n, p * cand.i, p * cand.j);
            linalg::SparseVector col;
            for (const auto& [k, c] : image.terms()) col.emplace_back(row(k), c);
            std::sort(col.begin(), col.end());
            sys.columns.push_back(std::move(col));
        }
        sys.rows = row_keys.size();
        const auto solved = linalg::solve(sys);
        result.bound = bound;
        result.escalations = attempt;
        if (solved.feasible) {
            if (!linalg::check_solution(sys, solved.solution)) throw InternalError("Frobenius preimage fails to verify");
            result.member = true;
            for (std::size_t c = 0; c < candidates.size(); ++c)
                if (solved.solution[c] != 0) result.preimage.emplace_back(candidates[c], solved.solution[c]);
            return result;
        }
        if (attempt == kMaxBoundEscalations) {
            if (!linalg::check_witness(sys, solved.witness)) throw InternalError("non-membership witness fails to verify");
            result.member = false;
            for (const auto& [r, v] : solved.witness) result.witness.emplace_back(row_keys[r], v);
            std::sort(result.witness.begin(), result.witness.end());
            return result;
        }
        bound *= 2;
    }
}

bool in_frobenius_image(const H2Class& eta, const DoubleCover& cover) {
    return frobenius_image_membership(eta, cover, cover.p()).member;
}

DoubleCoverAnalysis analyze_doublecover(const DoubleCover& cover, const DoubleCoverOptions& options) {
    DoubleCoverAnalysis a;
    a.verdict.add_flag(flags::kAssumedDomain);
    a.verdict.add_flag(flags::kSocleCriterion);
    a.frobenius_socle = frobenius_h2(socle(cover), cover);
    if (!a.frobenius_socle.is_zero()) {
        a.verdict.f_split = true;
        a.verdict.quasi2 = true;
        a.verdict.height = Height::One;
        return a;
    }
    a.carry = witt_carry(cover, options.strategy);
    const std::uint64_t slack = options.candidate_slack ? options.candidate_slack : cover.p();
    a.membership = frobenius_image_membership(a.carry->eta, cover, slack);
    a.verdict.quasi2 = !a.membership->member;
    a.verdict.height = a.verdict.quasi2 ? Height::Two : Height::Unknown;
    return a;
}

Verdict quasi2_doublecover(const DoubleCover& cover) { return analyze_doublecover(cover).verdict; }

std::string to_string(const H2Key& key, const DoubleCover& cover) {
    return std::string(key.eps ? "z" : "1") + "/" + denominator(key, cover);
}

std::string to_string(const H2Class& xi, const DoubleCover& cover) {
    if (xi.is_zero()) return "0";
    std::string out;
    for (auto it = xi.terms().rbegin(); it != xi.terms().rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (it->second == 1) out += to_string(it->first, cover);
        else if (it->first.eps == 0) out += std::to_string(it->second) + "/" + denominator(it->first, cover);
        else out += std::to_string(it->second) + "*" + to_string(it->first, cover);
    }
    return out;
}

}  // namespace qfs
