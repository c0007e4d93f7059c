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

#ifndef QFSPLIT_GF_LINALG_HPP
#define QFSPLIT_GF_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace qfs::linalg {

/// (row index, value) pairs; values in [0, p), no zeros, indices unique.
using SparseVector = std::vector<std::pair<std::size_t, std::uint32_t>>;

/// A x = b over F_p with A given column by column.
struct LinearSystem {
    std::uint32_t p = 2;
    std::size_t rows = 0;
    std::vector<SparseVector> columns;
    SparseVector rhs;
};

struct SolveResult {
    bool feasible = false;
    /// One value per column when feasible.
    std::vector<std::uint32_t> solution;
    /// When infeasible: a row combination y with y^T A = 0 and y^T b != 0.
    SparseVector witness;
    std::size_t peeled_columns = 0;
    /// Rank of the coefficient matrix, peeled columns included.
    std::size_t rank = 0;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

/// Exact solve by sparse Gaussian elimination. Columns that are the only
/// support of a homogeneous equation are forced to zero and removed before
/// elimination; the infeasibility witness is corrected for them afterwards,
/// so it certifies the full system.
SolveResult solve(const LinearSystem& system);

bool check_solution(const LinearSystem& system, const std::vector<std::uint32_t>& x);
bool check_witness(const LinearSystem& system, const SparseVector& y);

}  // namespace qfs::linalg

#endif
