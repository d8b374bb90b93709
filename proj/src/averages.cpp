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

#include "bunchkit/haarstats/averages.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bunchkit/symgroup/weingarten.hpp"

namespace bunchkit {

void AverageSpec::validate() const {
    if (n < 1) throw std::invalid_argument("AverageSpec: n must be >= 1");
    if (k < 1 || k > m) throw std::invalid_argument("AverageSpec: need 1 <= k <= m");
}

double avg_quantum(const AverageSpec& spec) {
    spec.validate();
    if (spec.kind == ParticleKind::Classical)
        throw std::invalid_argument("avg_quantum: species must be boson or fermion");
    const int sign = (spec.kind == ParticleKind::Boson) ? +1 : -1;
    if (sign < 0 && spec.k < spec.n) return 0.0;  // Pauli exclusion, zero by the l = K factor
    double p = 1.0;
    for (int l = 0; l < spec.n; ++l)
        p *= static_cast<double>(spec.k + sign * l) / static_cast<double>(spec.m + sign * l);
    return p;
}

ClassicalApprox avg_classical_approx(const AverageSpec& spec) {
    spec.validate();
    ClassicalApprox out{};
    out.value = std::pow(static_cast<double>(spec.k) / static_cast<double>(spec.m), spec.n);
    out.correction_scale = static_cast<double>(spec.n) * static_cast<double>(spec.n) /
                           (static_cast<double>(spec.k) * static_cast<double>(spec.m));
    return out;
}

double avg_classical_exact(int n, int m, int k, const NumericPolicy& policy) {
    if (n < 1 || k < 1 || k > m) throw std::invalid_argument("avg_classical_exact: bad spec");
    if (n > policy.caps.weingarten_max - 1)
        throw std::runtime_error("avg_classical_exact: n " + std::to_string(n) +
                                 " exceeds Weingarten cap");
    const WeingartenTable table(m, n, policy);
    double acc = 0.0;
    for (const auto& [type, w] : table.table()) {
        // class size * W * K^{#cycles}
        double cls = static_cast<double>(factorial(n));
        for (std::size_t s = 0; s < type.counts.size(); ++s)
            for (int rep = 0; rep < type.counts[s]; ++rep) cls /= static_cast<double>(s + 1);
        for (int c : type.counts) cls /= static_cast<double>(factorial(c));
        acc += cls * w * std::pow(static_cast<double>(k), type.total_cycles());
    }
    return acc;
}

RatioResult avg_ratio(const AverageSpec& spec) {
    spec.validate();
    if (spec.kind == ParticleKind::Classical)
        throw std::invalid_argument("avg_ratio: species must be boson or fermion");
    const int sign = (spec.kind == ParticleKind::Boson) ? +1 : -1;
    RatioResult out{};
    out.value = 1.0;
    for (int l = 1; l < spec.n; ++l)
        out.value *= (1.0 + sign * static_cast<double>(l) / spec.k) /
                     (1.0 + sign * static_cast<double>(l) / spec.m);
    out.correction_scale = static_cast<double>(spec.n) * static_cast<double>(spec.n) /
                           (static_cast<double>(spec.k) * static_cast<double>(spec.m));
    return out;
}

Table1Row select_k(int n, double min_avg) {
    if (n < 3) throw std::invalid_argument("select_k: n must be >= 3");
    Table1Row row;
    row.n = n;
    // Half-integer sizes round up (N odd gives M = (N^2+1)/2).
    row.m = (n * n + 1) / 2;

    double best_ratio = -1.0;
    int best_k = -1;
    for (int k = n; k <= row.m; ++k) {
        const AverageSpec spec{n, row.m, k, ParticleKind::Boson};
        if (avg_quantum(spec) < min_avg) continue;
        const double ratio = avg_ratio(spec).value;
        // Strictly decreasing in k; ties (impossible here) would keep the
        // smaller L, i.e. the larger k.
        if (ratio > best_ratio) {
            best_ratio = ratio;
            best_k = k;
        }
    }
    if (best_k < 0)
        throw std::runtime_error("select_k: no feasible subset size for n = " + std::to_string(n));
    row.k = best_k;
    row.l = row.m - best_k;
    return row;
}

std::vector<Table1Row> protocol_geometry_table(int n_min, int n_max, double min_avg) {
    std::vector<Table1Row> rows;
    for (int n = n_min; n <= n_max; ++n) rows.push_back(select_k(n, min_avg));
    return rows;
}

}  // namespace bunchkit
