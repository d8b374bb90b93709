/**
 * Copyright 2026 bunchkit contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "bunchkit/numkit/permanent.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bunchkit {

namespace {

void require_square(const ComplexMatrix& a, const char* where) {
    if (!a.square()) throw std::invalid_argument(std::string(where) + ": matrix not square");
}

}  // namespace

Complex permanent_ryser(const ComplexMatrix& a, const NumericPolicy& policy,
                        std::uint64_t* work_units) {
    require_square(a, "permanent_ryser");
    const int n = static_cast<int>(a.rows());
    if (n > policy.caps.permanent_ryser_max)
        throw std::runtime_error("permanent_ryser: dimension " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(policy.caps.permanent_ryser_max));

    // Ryser with Gray-code subset iteration:
    //   per(A) = (-1)^N sum_{S != {}} (-1)^{|S|} prod_i sum_{j in S} A_{ij}.
    // Each Gray step toggles one column in the running row sums.
    std::vector<Complex> row_sum(n, Complex(0.0, 0.0));
    Complex total(0.0, 0.0);
    const std::uint64_t steps = (std::uint64_t(1) << n) - 1;
    std::uint64_t gray = 0;
    int popcount = 0;
    for (std::uint64_t k = 1; k <= steps; ++k) {
        const std::uint64_t next_gray = k ^ (k >> 1);
        const std::uint64_t changed = gray ^ next_gray;
        int col = 0;
        while (!((changed >> col) & 1)) ++col;
        const bool added = (next_gray & changed) != 0;
        popcount += added ? 1 : -1;
        gray = next_gray;

        Complex prod(1.0, 0.0);
        if (added) {
            for (int i = 0; i < n; ++i) {
                row_sum[i] += a(i, col);
                prod *= row_sum[i];
            }
        } else {
            for (int i = 0; i < n; ++i) {
                row_sum[i] -= a(i, col);
                prod *= row_sum[i];
            }
        }
        total += ((n - popcount) % 2 == 0) ? prod : -prod;
    }
    if (work_units) *work_units += steps * static_cast<std::uint64_t>(n);
    return total;
}

Complex permanent_naive(const ComplexMatrix& a, const NumericPolicy& policy) {
    require_square(a, "permanent_naive");
    const int n = static_cast<int>(a.rows());
    if (n > policy.caps.permanent_naive_max)
        throw std::runtime_error("permanent_naive: dimension " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(policy.caps.permanent_naive_max));

    std::vector<int> cols(n);
    std::vector<bool> used(n, false);
    Complex total(0.0, 0.0);
    // Depth-first over all column assignments, pruning nothing: the point of
    // this routine is to be an unmistakable oracle.
    auto recurse = [&](auto&& self, int row, Complex partial) -> void {
        if (row == n) {
            total += partial;
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c]) continue;
            used[c] = true;
            self(self, row + 1, partial * a(row, c));
            used[c] = false;
        }
    };
    recurse(recurse, 0, Complex(1.0, 0.0));
    return total;
}

}  // namespace bunchkit
