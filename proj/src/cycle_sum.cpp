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

#include "bunchkit/symgroup/cycle_sum.hpp"

#include <stdexcept>
#include <string>

namespace bunchkit {

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        emit_partitions(remaining - part, part, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> partitions(int n) {
    if (n < 0) throw std::invalid_argument("partitions: n must be >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    emit_partitions(n, n, current, out);
    return out;
}

std::complex<double> cycle_sum_zn(int n, const std::vector<std::complex<double>>& t,
                                  const NumericPolicy& policy) {
    if (n < 1) throw std::invalid_argument("cycle_sum_zn: n must be >= 1");
    if (n > policy.caps.cycle_sum_max)
        throw std::runtime_error("cycle_sum_zn: n " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(policy.caps.cycle_sum_max));
    if (static_cast<int>(t.size()) != n)
        throw std::invalid_argument("cycle_sum_zn: t must have n entries");

    // Z_N = sum over partitions lambda of prod_s t_s^{c_s} / (s^{c_s} c_s!),
    // the 1/N! already absorbed into the class-size weight.
    std::complex<double> total(0.0, 0.0);
    for (const auto& part : partitions(n)) {
        std::vector<int> counts(n, 0);
        for (int p : part) ++counts[p - 1];
        std::complex<double> term(1.0, 0.0);
        for (int s = 1; s <= n; ++s) {
            const int c = counts[s - 1];
            if (c == 0) continue;
            for (int rep = 0; rep < c; ++rep)
                term *= t[s - 1] / static_cast<double>(s);
            for (int k = 2; k <= c; ++k) term /= static_cast<double>(k);
        }
        total += term;
    }
    return total;
}

}  // namespace bunchkit
