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

#include "qfsplit/gf_linalg.hpp"

#include <deque>
#include <map>
#include <optional>
#include <tuple>

#include "qfsplit/error.hpp"

namespace qfs::linalg {

namespace {

using Map = std::map<std::size_t, std::uint32_t>;

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

// target -= factor * source
void axpy(Map& target, const Map& source, std::uint32_t factor, std::uint32_t p) {
    for (const auto& [k, v] : source) {
        auto prod = mulm(v, factor, p);
        auto it = target.find(k);
        if (it == target.end()) {
            target.emplace(k, subm(0, prod, p));
        } else {
            it->second = subm(it->second, prod, p);
            if (it->second == 0) target.erase(it);
        }
    }
}

struct Row {
    Map coeffs;
    std::uint32_t rhs = 0;
    Map combo;  // combination of original rows producing this row
};

void validate(const LinearSystem& s) {
    auto check = [&](const SparseVector& v) {
        for (const auto& [r, val] : v)
            if (r >= s.rows || val >= s.p) throw InvalidArgument("malformed sparse vector");
    };
    for (const auto& c : s.columns) check(c);
    check(s.rhs);
}

}  // namespace

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
    if (a % p == 0) throw InvalidArgument("zero has no inverse");
    std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
        std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

SolveResult solve(const LinearSystem& s) {
    validate(s);
    const std::uint32_t p = s.p;
    const std::size_t ncols = s.columns.size();

    std::vector<Map> rows(s.rows);
    for (std::size_t c = 0; c < ncols; ++c)
        for (const auto& [r, v] : s.columns[c])
            if (v != 0) rows[r][c] = v;
    std::vector<std::uint32_t> rhs(s.rows, 0);
    for (const auto& [r, v] : s.rhs) rhs[r] = v;

    // Peeling: a homogeneous row with a single active column forces it to 0.
    std::vector<bool> active(ncols, true);
    std::vector<std::size_t> active_count(s.rows);
    for (std::size_t r = 0; r < s.rows; ++r) active_count[r] = rows[r].size();
    std::deque<std::size_t> queue;
    for (std::size_t r = 0; r < s.rows; ++r)
        if (active_count[r] == 1 && rhs[r] == 0) queue.push_back(r);
    std::vector<std::pair<std::size_t, std::size_t>> peel_order;  // (column, row)
    while (!queue.empty()) {
        const std::size_t r = queue.front();
        queue.pop_front();
        if (active_count[r] != 1) continue;
        std::size_t col = ncols;
        for (const auto& [c, v] : rows[r])
            if (active[c]) col = c;
        active[col] = false;
        peel_order.emplace_back(col, r);
        for (const auto& [r2, v] : s.columns[col]) {
            if (--active_count[r2] == 1 && rhs[r2] == 0) queue.push_back(r2);
        }
    }

    SolveResult result;
    result.peeled_columns = peel_order.size();

    std::vector<Row> pivots;
    std::map<std::size_t, std::size_t> pivot_of_column;  // column -> index into pivots
    std::vector<std::size_t> pivot_col_of;
    std::optional<Row> contradiction;
    for (std::size_t r = 0; r < s.rows; ++r) {
        if (active_count[r] == 0 && rhs[r] == 0) continue;
        Row row;
        for (const auto& [c, v] : rows[r])
            if (active[c]) row.coeffs.emplace(c, v);
        row.rhs = rhs[r];
        row.combo.emplace(r, 1);
        while (true) {
            std::size_t best = pivots.size();
            for (const auto& [c, v] : row.coeffs) {
                auto it = pivot_of_column.find(c);
                if (it != pivot_of_column.end() && it->second < best) best = it->second;
            }
            if (best == pivots.size()) break;
            const Row& piv = pivots[best];
            const std::uint32_t factor = row.coeffs.at(pivot_col_of[best]);
            axpy(row.coeffs, piv.coeffs, factor, p);
            axpy(row.combo, piv.combo, factor, p);
            row.rhs = subm(row.rhs, mulm(piv.rhs, factor, p), p);
        }
        if (row.coeffs.empty()) {
            if (row.rhs != 0 && !contradiction) contradiction = std::move(row);
            continue;
        }
        const std::size_t col = row.coeffs.begin()->first;
        const std::uint32_t inv = inverse_mod(row.coeffs.begin()->second, p);
        for (auto& [c, v] : row.coeffs) v = mulm(v, inv, p);
        for (auto& [c, v] : row.combo) v = mulm(v, inv, p);
        row.rhs = mulm(row.rhs, inv, p);
        pivot_of_column.emplace(col, pivots.size());
        pivot_col_of.push_back(col);
        pivots.push_back(std::move(row));
    }
    result.rank = pivots.size() + peel_order.size();

    if (contradiction) {
        Map y = contradiction->combo;
        // make y orthogonal to the peeled columns as well, latest first
        for (auto it = peel_order.rbegin(); it != peel_order.rend(); ++it) {
            const auto [col, prow] = *it;
            std::uint32_t dot = 0;
            for (const auto& [r, v] : s.columns[col]) {
                auto yr = y.find(r);
                if (yr != y.end()) dot = (dot + mulm(yr->second, v, p)) % p;
            }
            if (dot == 0) continue;
            const std::uint32_t a = rows[prow].at(col);
            const std::uint32_t factor = mulm(dot, inverse_mod(a, p), p);
            Map unit{{prow, 1}};
            axpy(y, unit, factor, p);
        }
        result.feasible = false;
        result.witness.assign(y.begin(), y.end());
        return result;
    }

    result.feasible = true;
    result.solution.assign(ncols, 0);
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const Row& row = pivots[k];
        std::uint32_t value = row.rhs;
        for (const auto& [c, v] : row.coeffs)
            if (c != pivot_col_of[k]) value = subm(value, mulm(v, result.solution[c], p), p);
        result.solution[pivot_col_of[k]] = value;
    }
    return result;
}

bool check_solution(const LinearSystem& s, const std::vector<std::uint32_t>& x) {
    if (x.size() != s.columns.size()) return false;
    std::vector<std::uint32_t> acc(s.rows, 0);
    for (std::size_t c = 0; c < s.columns.size(); ++c)
        for (const auto& [r, v] : s.columns[c]) acc[r] = (acc[r] + mulm(v, x[c], s.p)) % s.p;
    std::vector<std::uint32_t> b(s.rows, 0);
    for (const auto& [r, v] : s.rhs) b[r] = v;
    return acc == b;
}

bool check_witness(const LinearSystem& s, const SparseVector& y) {
    std::vector<std::uint32_t> dense(s.rows, 0);
    for (const auto& [r, v] : y) {
        if (r >= s.rows) return false;
        dense[r] = v % s.p;
    }
    for (const auto& col : s.columns) {
        std::uint32_t dot = 0;
        for (const auto& [r, v] : col) dot = (dot + mulm(dense[r], v, s.p)) % s.p;
        if (dot != 0) return false;
    }
    std::uint32_t rb = 0;
    for (const auto& [r, v] : s.rhs) rb = (rb + mulm(dense[r], v, s.p)) % s.p;
    return rb != 0;
}

}  // namespace qfs::linalg
