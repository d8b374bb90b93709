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

#include "bunchkit/protocol/fourier.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace bunchkit {

UnitaryMatrix fourier_network(int m, const NumericPolicy& policy) {
    if (m < 1) throw std::invalid_argument("fourier_network: m must be >= 1");
    ComplexMatrix f(m, m);
    const double base = 2.0 * std::numbers::pi / static_cast<double>(m);
    const double norm = 1.0 / std::sqrt(static_cast<double>(m));
    for (int k = 1; k <= m; ++k)
        for (int l = 1; l <= m; ++l) {
            // k*l mod m keeps the phase argument small and exact.
            const double phase = base * static_cast<double>((k * l) % m);
            f(k - 1, l - 1) = Complex(norm * std::cos(phase), norm * std::sin(phase));
        }
    return UnitaryMatrix(std::move(f), policy);
}

std::vector<int> cyclic_input_modes(int n, int p_exponent, int k1) {
    if (n < 2 || p_exponent < 2)
        throw std::invalid_argument("cyclic_input_modes: need n >= 2, p >= 2");
    int step = 1;
    for (int i = 0; i < p_exponent - 1; ++i) step *= n;  // N^{p-1}
    if (k1 < 1 || k1 > step)
        throw std::invalid_argument("cyclic_input_modes: need 1 <= k1 <= N^(p-1)");
    std::vector<int> modes(n);
    for (int a = 0; a < n; ++a) modes[a] = k1 + a * step;
    return modes;
}

bool configuration_allowed(const std::vector<int>& config, int n) {
    long long sum = 0;
    for (std::size_t l = 0; l < config.size(); ++l)
        sum += static_cast<long long>(l + 1) * config[l];
    return sum % n == 0;
}

SuppressionReport suppression_check(int n, int p_exponent, int k1, const JFunction* j,
                                    const NumericPolicy& policy) {
    SuppressionReport rep;
    rep.n = n;
    int m = 1;
    for (int i = 0; i < p_exponent; ++i) m *= n;
    rep.m = m;
    rep.input_modes = cyclic_input_modes(n, p_exponent, k1);

    const UnitaryMatrix network = fourier_network(m, policy);
    const JFunction j_ideal = j_indistinguishable(n, Species::Boson);
    const JFunction& j_used = j ? *j : j_ideal;
    rep.distribution =
        full_output_distribution(network.matrix(), rep.input_modes, j_used, policy,
                                 /*override_caps=*/true);

    for (std::size_t ci = 0; ci < rep.distribution.configurations.size(); ++ci) {
        const auto& config = rep.distribution.configurations[ci];
        const double p = rep.distribution.probabilities[ci];
        if (configuration_allowed(config, n)) {
            rep.allowed.push_back(config);
            rep.allowed_total_prob += p;
        } else {
            rep.forbidden_max_prob = std::max(rep.forbidden_max_prob, p);
        }
    }
    rep.allowed_fraction = static_cast<double>(rep.allowed.size()) /
                           static_cast<double>(rep.distribution.configurations.size());
    return rep;
}

ComplexMatrix loophole_adversary_network(int n1, const NumericPolicy& policy) {
    if (n1 < 2) throw std::invalid_argument("loophole_adversary_network: n1 must be >= 2");
    const int m1 = n1 * n1;
    const int block = 2 * m1;          // one parity-interleaved double Fourier
    const int m = 2 * block;           // = (2 n1)^2 total modes
    const ComplexMatrix f = fourier_network(m1, policy).matrix();

    // Global index g (1-based) inside a block maps to copy (g odd: first,
    // g even: second) and local Fourier index ceil(g/2); both rows and
    // columns use the same interleaving, so each parity class sees one
    // whole F^{(M1)}.
    ComplexMatrix u(m, m);
    auto fill_block = [&](int offset) {
        for (int g1 = 1; g1 <= block; ++g1) {
            for (int g2 = 1; g2 <= block; ++g2) {
                if ((g1 % 2) != (g2 % 2)) continue;  // different copies never mix
                const int l1 = (g1 + 1) / 2;
                const int l2 = (g2 + 1) / 2;
                u(offset + g1 - 1, offset + g2 - 1) = f(l1 - 1, l2 - 1);
            }
        }
    };
    fill_block(0);
    fill_block(block);
    return u;
}

LoopholeReport loophole_demo(int n1, int k1, const NumericPolicy& policy) {
    if (n1 != 2)
        throw std::runtime_error("loophole_demo: exact enumeration supports n1 = 2 only (N = 4, "
                                 "M = 16)");
    const int n = 2 * n1;
    const int m1 = n1 * n1;
    LoopholeReport rep;
    rep.adversary_network = loophole_adversary_network(n1, policy);
    UnitaryMatrix checked(rep.adversary_network, policy);  // unitarity guard
    rep.input_modes = cyclic_input_modes(n, 2, k1);

    // Two groups of n1 indistinguishable bosons, groups mutually
    // distinguishable: block Gram over the particle slots.
    ComplexMatrix gram(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) gram(a, b) = (a / n1 == b / n1) ? 1.0 : 0.0;
    const JFunction j = j_classically_correlated(PureProductState{gram}, policy);

    rep.distribution = full_output_distribution(rep.adversary_network, rep.input_modes, j,
                                                policy, /*override_caps=*/true);

    const double tol = 1e-10;
    bool all_allowed = true;
    bool block_laws = true;
    for (std::size_t ci = 0; ci < rep.distribution.configurations.size(); ++ci) {
        const auto& config = rep.distribution.configurations[ci];
        const double p = rep.distribution.probabilities[ci];
        if (p <= tol) continue;
        ++rep.nonzero_configs;
        if (!configuration_allowed(config, n)) {
            all_allowed = false;
            rep.max_forbidden_prob = std::max(rep.max_forbidden_prob, p);
        }
        // Per-block law: within each 2 M1 block, the local Fourier indices
        // ceil(g/2) of the detected particles must sum to 0 mod n1.
        for (int blk = 0; blk < 2; ++blk) {
            long long local_sum = 0;
            int particles = 0;
            for (int g = 1; g <= 2 * m1; ++g) {
                const int mode = blk * 2 * m1 + g;  // 1-based global
                const int count = config[mode - 1];
                local_sum += static_cast<long long>((g + 1) / 2) * count;
                particles += count;
            }
            if (particles != n1 || local_sum % n1 != 0) block_laws = false;
        }
    }
    rep.all_outputs_in_allowed_set = all_allowed;
    rep.per_block_laws_hold = block_laws;
    return rep;
}

}  // namespace bunchkit
