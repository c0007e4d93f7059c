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

#include "qfsplit/splitting_oracle.hpp"

#include <array>
#include <map>
#include <numeric>

#include "qfsplit/gf_linalg.hpp"
#include "qfsplit/witt.hpp"

namespace qfs {

namespace {

using Key = std::array<std::uint64_t, 3>;  // (eps, i, j) for z^eps / (x^i y^j)
using Class = std::map<Key, std::uint32_t>;

Monomial mono(std::uint64_t u, std::uint64_t v, std::uint64_t e) { return Monomial(std::vector<std::uint64_t>{u, v, e}); }

// Remainder of h modulo z^2 + g by repeated substitution z^2 -> -g.
Poly reduce_by_equation(Poly h, const Poly& g_total) {
    const Poly minus_g = -g_total;
    while (true) {
        bool changed = false;
        for (const auto& [m, c] : h.terms()) {
            if (m[2] < 2) continue;
            const Poly term = Poly::monomial(h.ring_ptr(), m, c);
            const Poly rest = Poly::monomial(h.ring_ptr(), mono(m[0], m[1], m[2] - 2), c);
            h = h - term + rest * minus_g;
            changed = true;
            break;
        }
        if (!changed) return h;
    }
}

// Class of h / (x^a y^b) for h already reduced (z-degree at most 1).
void add_fraction(Class& out, const Poly& h, std::uint64_t a, std::uint64_t b, std::uint32_t scale, std::uint32_t p) {
    for (const auto& [m, c] : h.terms()) {
        if (m[2] > 1) throw InternalError("oracle: unreduced numerator");
        if (m[0] >= a || m[1] >= b) continue;
        auto& slot = out[{m[2], a - m[0], b - m[1]}];
        slot = static_cast<std::uint32_t>((slot + static_cast<std::uint64_t>(c) * scale) % p);
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
}

std::int64_t degree_of(const Key& k, const Weights& w) {
    return static_cast<std::int64_t>(k[0] * w.wz) - static_cast<std::int64_t>(k[1] * w.wx + k[2] * w.wy);
}

// Left kernel of the rows x cols matrix m (dense, row-major) over F_p.
std::vector<std::vector<std::uint32_t>> left_kernel(const std::vector<std::vector<std::uint32_t>>& m, std::size_t rows,
                                                    std::size_t cols, std::uint32_t p) {
    // Row-reduce the transpose: alpha^T m = 0  <=>  m^T alpha = 0.
    std::vector<std::vector<std::uint32_t>> t(cols, std::vector<std::uint32_t>(rows));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < rows && rank < cols; ++c) {
        std::size_t sel = rank;
        while (sel < cols && t[sel][c] == 0) ++sel;
        if (sel == cols) continue;
        std::swap(t[sel], t[rank]);
        const std::uint64_t inv = linalg::inverse_mod(t[rank][c], p);
        for (auto& v : t[rank]) v = static_cast<std::uint32_t>(v * inv % p);
        for (std::size_t r = 0; r < cols; ++r) {
            if (r == rank || t[r][c] == 0) continue;
            const std::uint64_t f = t[r][c];
            for (std::size_t k = 0; k < rows; ++k)
                t[r][k] = static_cast<std::uint32_t>((t[r][k] + (p - f) * t[rank][k]) % p);
        }
        pivot_cols.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(rows, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < rows; ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> v(rows, 0);
        v[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k)
            v[pivot_cols[k]] = (p - t[k][free]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace

std::optional<Weights> quasi_homogeneous_weights(const Poly& g) {
    if (g.ring().nvars() != 2 || g.is_zero()) return std::nullopt;
    const auto terms = g.terms();
    std::int64_t wx = 1, wy = 1, d = 0;
    const auto u1 = static_cast<std::int64_t>(terms[0].first[0]), v1 = static_cast<std::int64_t>(terms[0].first[1]);
    if (terms.size() == 1) {
        d = u1 + v1;
    } else {
        const auto u2 = static_cast<std::int64_t>(terms[1].first[0]), v2 = static_cast<std::int64_t>(terms[1].first[1]);
        d = u1 * v2 - u2 * v1;
        wx = v2 - v1;
        wy = u1 - u2;
        if (d < 0) {
            d = -d;
            wx = -wx;
            wy = -wy;
        }
        if (d == 0 || wx <= 0 || wy <= 0) return std::nullopt;
        const std::int64_t common = std::gcd(std::gcd(wx, wy), d);
        wx /= common;
        wy /= common;
        d /= common;
    }
    if (d <= 0) return std::nullopt;
    for (const auto& [m, c] : terms)
        if (static_cast<std::int64_t>(m[0]) * wx + static_cast<std::int64_t>(m[1]) * wy != d) return std::nullopt;
    if (d % 2 != 0) {
        wx *= 2;
        wy *= 2;
        d *= 2;
    }
    return Weights{static_cast<std::uint64_t>(wx), static_cast<std::uint64_t>(wy), static_cast<std::uint64_t>(d / 2)};
}

OracleResult splitting_search_oracle(const Poly& g, std::uint64_t truncation) {
    auto weights = quasi_homogeneous_weights(g);
    if (!weights) throw InvalidArgument("splitting oracle needs a quasi-homogeneous g");
    if (g.coeff(Monomial(2)) != 0) throw InvalidArgument("g must have no constant term");
    const std::uint32_t p = g.ring().p();
    const std::uint64_t q = static_cast<std::uint64_t>(p) * p;
    if (truncation == 0) truncation = 4 * q;
    OracleResult out;
    out.weights = *weights;

    const RingPtr xyz = make_ring(p, {g.ring().variable(0), g.ring().variable(1), "z"});
    const Poly g3 = embed(g, xyz);
    const Poly f = Poly::monomial(xyz, mono(0, 0, 2), 1) + g3;

    // 1. Fedder with the untruncated power
    if (!in_frobenius_power_ideal(pow(f, p - 1), 1)) {
        out.f_split = out.quasi2 = true;
        out.height = Height::One;
        return out;
    }

    // 2. carry of [z]^p / [xy]^p in W_2
    const Poly rep = reduce_by_equation(Poly::monomial(xyz, mono(0, 0, p), 1), g3);
    std::vector<Poly::Term> u_terms, v_terms;
    for (const auto& [m, c] : rep.terms()) {
        if (m[0] >= p) u_terms.emplace_back(m, c);
        else if (m[1] >= p) v_terms.emplace_back(m, c);
        else throw InternalError("oracle: Frobenius of the socle survives although Fedder fails");
    }
    const Poly u = Poly::from_terms(xyz, std::move(u_terms));
    const Poly v = Poly::from_terms(xyz, std::move(v_terms));
    const WittVector w = teichmuller(rep, 2) - teichmuller(u, 2) - teichmuller(v, 2);
    if (!w[0].is_zero()) throw InternalError("oracle: first Witt coordinate does not vanish");
    Class eta;
    add_fraction(eta, reduce_by_equation(w[1], g3), q, q, 1, p);

    // 3. graded splitting search
    const std::int64_t s = static_cast<std::int64_t>(weights->wz) -
                           static_cast<std::int64_t>(weights->wx + weights->wy);
    const std::int64_t target_degree = s * static_cast<std::int64_t>(q);
    const std::int64_t source_degree = s * static_cast<std::int64_t>(p);
    for (const auto& [k, c] : eta)
        if (degree_of(k, *weights) != target_degree) throw InternalError("oracle: carry class is not homogeneous");

    std::vector<Key> source;
    for (std::uint64_t eps = 0; eps < 2; ++eps) {
        for (std::uint64_t i = 1;; ++i) {
            const std::int64_t rest = static_cast<std::int64_t>(eps * weights->wz) - source_degree -
                                      static_cast<std::int64_t>(i * weights->wx);
            if (rest < static_cast<std::int64_t>(weights->wy)) break;
            if (rest % static_cast<std::int64_t>(weights->wy) != 0) continue;
            const auto j = static_cast<std::uint64_t>(rest) / weights->wy;
            if (i > truncation || j > truncation) {
                out.truncated = true;
                continue;
            }
            source.push_back({eps, i, j});
        }
    }

    std::vector<Class> images;
    std::map<Key, std::size_t> target_index;
    for (const auto& [k, c] : eta) target_index.try_emplace(k, 0);
    for (const auto& k : source) {
        const Poly num = reduce_by_equation(Poly::monomial(xyz, mono(0, 0, p * k[0]), 1), g3);
        Class img;
        add_fraction(img, num, p * k[1], p * k[2], 1, p);
        for (const auto& [key, c] : img) target_index.try_emplace(key, 0);
        images.push_back(std::move(img));
    }
    std::size_t next = 0;
    for (auto& [k, idx] : target_index) idx = next++;
    out.source_dim = source.size();
    out.target_dim = target_index.size();

    std::vector<std::vector<std::uint32_t>> matrix(out.target_dim, std::vector<std::uint32_t>(out.source_dim, 0));
    for (std::size_t c = 0; c < images.size(); ++c)
        for (const auto& [k, v] : images[c]) matrix[target_index.at(k)][c] = v;
    std::vector<std::uint32_t> eta_vec(out.target_dim, 0);
    for (const auto& [k, v] : eta) eta_vec[target_index.at(k)] = v;

    for (auto& alpha : left_kernel(matrix, out.target_dim, out.source_dim, p)) {
        std::uint64_t value = 0;
        for (std::size_t r = 0; r < alpha.size(); ++r) value = (value + static_cast<std::uint64_t>(alpha[r]) * eta_vec[r]) % p;
        if (value == 0) continue;
        const std::uint64_t inv = linalg::inverse_mod(static_cast<std::uint32_t>(value), p);
        for (auto& a : alpha) a = static_cast<std::uint32_t>(a * inv % p);
        out.functional = std::move(alpha);
        out.quasi2 = true;
        out.height = Height::Two;
        return out;
    }
    out.quasi2 = false;
    out.height = Height::Unknown;
    return out;
}

}  // namespace qfs
