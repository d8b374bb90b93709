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

#include "bunchkit/symgroup/weingarten.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bunchkit/numkit/linalg.hpp"

namespace bunchkit {

WeingartenTable::WeingartenTable(int m, int n, const NumericPolicy& policy) : m_(m), n_(n) {
    if (n < 1) throw std::invalid_argument("WeingartenTable: n must be >= 1");
    if (n > policy.caps.weingarten_max)
        throw std::runtime_error("WeingartenTable: n " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(policy.caps.weingarten_max));
    if (m < n)
        throw std::runtime_error("WeingartenTable: m < n makes the Gram matrix rank-deficient");

    const auto group = enumerate_group(n, policy);
    const std::size_t order = group.size();

    // Precompute m^k for k = 0..n cycles.
    std::vector<double> mpow(n + 1, 1.0);
    for (int k = 1; k <= n; ++k) mpow[k] = mpow[k - 1] * static_cast<double>(m);

    ComplexMatrix gram(order, order);
    for (std::size_t i = 0; i < order; ++i) {
        const Permutation inv = group[i].inverse();
        for (std::size_t j = 0; j < order; ++j) {
            const int cycles = cycle_type(inv.compose(group[j])).total_cycles();
            gram(i, j) = mpow[cycles];
        }
    }

    std::vector<Complex> rhs(order, Complex(0.0, 0.0));
    rhs[0] = 1.0;  // rank 0 is the identity
    const std::vector<Complex> w = solve_linear(gram, rhs);

    for (std::size_t i = 0; i < order; ++i) {
        const CycleType type = cycle_type(group[i]);
        const double val = w[i].real();
        auto it = table_.find(type);
        if (it == table_.end())
            table_.emplace(type, val);
        else if (std::abs(it->second - val) > 1e-8 * std::max(1.0, std::abs(val)))
            throw std::runtime_error("WeingartenTable: solution is not a class function");
    }

    // Residual of the solved system, reported for the invariant checks.
    for (std::size_t i = 0; i < order; ++i) {
        Complex acc(0.0, 0.0);
        for (std::size_t j = 0; j < order; ++j) acc += gram(i, j) * w[j];
        const double expect = (i == 0) ? 1.0 : 0.0;
        gram_residual_ = std::max(gram_residual_, std::abs(acc - expect));
    }
}

double WeingartenTable::value(const CycleType& type) const {
    auto it = table_.find(type);
    if (it == table_.end()) throw std::invalid_argument("WeingartenTable: unknown cycle type");
    return it->second;
}

double WeingartenTable::plain_sum() const {
    double acc = 0.0;
    for (const auto& [type, w] : table_) {
        // Conjugacy class size: n! / prod_s (s^{c_s} c_s!).
        double cls = static_cast<double>(factorial(n_));
        for (std::size_t s = 0; s < type.counts.size(); ++s)
            for (int rep = 0; rep < type.counts[s]; ++rep)
                cls /= static_cast<double>(s + 1);
        for (int c : type.counts) cls /= static_cast<double>(factorial(c));
        acc += cls * w;
    }
    return acc;
}

double WeingartenTable::signed_sum() const {
    double acc = 0.0;
    for (const auto& [type, w] : table_) {
        double cls = static_cast<double>(factorial(n_));
        int transpositions = 0;
        for (std::size_t s = 0; s < type.counts.size(); ++s) {
            for (int rep = 0; rep < type.counts[s]; ++rep) cls /= static_cast<double>(s + 1);
            transpositions += static_cast<int>(s) * type.counts[s];
        }
        for (int c : type.counts) cls /= static_cast<double>(factorial(c));
        const double sign = (transpositions % 2 == 0) ? 1.0 : -1.0;
        acc += sign * cls * w;
    }
    return acc;
}

}  // namespace bunchkit
