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

#include "bunchkit/bunching/output_distribution.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include "bunchkit/symgroup/young.hpp"

namespace bunchkit {

namespace {

void emit_configs_colex(int mode, int remaining, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
    // Colex ascending: the LAST coordinate is the outermost (slowest) digit,
    // so recurse from the back of the vector with small values first.
    if (mode < 0) {
        if (remaining == 0) out.push_back(current);
        return;
    }
    if (mode == 0) {
        current[0] = remaining;
        out.push_back(current);
        current[0] = 0;
        return;
    }
    for (int v = 0; v <= remaining; ++v) {
        current[mode] = v;
        emit_configs_colex(mode - 1, remaining - v, current, out);
        current[mode] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> enumerate_configurations(int m, int n) {
    if (m < 1 || n < 0) throw std::invalid_argument("enumerate_configurations: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> current(m, 0);
    emit_configs_colex(m - 1, n, current, out);
    return out;
}

double OutputDistribution::probability_of(const std::vector<int>& config) const {
    for (std::size_t i = 0; i < configurations.size(); ++i)
        if (configurations[i] == config) return probabilities[i];
    throw std::invalid_argument("OutputDistribution: unknown configuration");
}

double OutputDistribution::bunched_sum(const std::vector<int>& subset) const {
    std::set<int> inside(subset.begin(), subset.end());
    double acc = 0.0;
    for (std::size_t i = 0; i < configurations.size(); ++i) {
        bool bunched = true;
        for (int l = 0; l < modes; ++l) {
            if (configurations[i][l] > 0 && !inside.count(l + 1)) {
                bunched = false;
                break;
            }
        }
        if (bunched) acc += probabilities[i];
    }
    return acc;
}

OutputDistribution full_output_distribution(const ComplexMatrix& network,
                                            const std::vector<int>& input_modes,
                                            const JFunction& j, const NumericPolicy& policy,
                                            bool override_caps) {
    if (!network.square()) throw std::invalid_argument("full_output_distribution: network square");
    const int m = static_cast<int>(network.rows());
    const int n = static_cast<int>(input_modes.size());
    if (j.n() != n) throw std::invalid_argument("full_output_distribution: J dimension mismatch");
    for (int k : input_modes)
        if (k < 1 || k > m)
            throw std::out_of_range("full_output_distribution: input mode out of range");
    if (!override_caps) {
        if (n > policy.caps.distribution_particles_max || m > policy.caps.distribution_modes_max)
            throw std::runtime_error("full_output_distribution: size (N=" + std::to_string(n) +
                                     ", M=" + std::to_string(m) + ") exceeds caps");
    }

    OutputDistribution dist;
    dist.modes = m;
    dist.particles = n;
    dist.configurations = enumerate_configurations(m, n);
    if (static_cast<long long>(dist.configurations.size()) > policy.caps.distribution_configs_max)
        throw std::runtime_error("full_output_distribution: configuration count exceeds hard cap");
    dist.probabilities.resize(dist.configurations.size());

    const auto group = enumerate_group(n, policy);
    const std::uint64_t order = group.size();
    const double mu_n = static_cast<double>(labels_mu(input_modes));

    // Cache one row pointer per particle slot.
    std::vector<int> rows(n);
    for (int a = 0; a < n; ++a) rows[a] = input_modes[a] - 1;

    // J(tau sigma^-1) looked up once per (tau, sigma) pair, shared by every
    // output configuration.
    std::vector<Complex> jrel(order * order);
    {
        std::vector<std::uint64_t> inv_rank(order);
        for (std::uint64_t r = 0; r < order; ++r) inv_rank[r] = group[r].inverse().rank();
        for (std::uint64_t rt = 0; rt < order; ++rt)
            for (std::uint64_t rs = 0; rs < order; ++rs)
                jrel[rt * order + rs] =
                    j.value(group[rt].compose(group[inv_rank[rs]]).rank());
    }

    std::vector<int> outs(n);  // 0-based output mode of each detected particle
    std::vector<Complex> amp(order);
    for (std::size_t ci = 0; ci < dist.configurations.size(); ++ci) {
        const auto& config = dist.configurations[ci];
        int slot = 0;
        double mu_m = 1.0;
        for (int l = 0; l < m; ++l) {
            mu_m *= static_cast<double>(factorial(config[l]));
            for (int rep = 0; rep < config[l]; ++rep) outs[slot++] = l;
        }

        // amp[sigma] = prod_alpha U_{k_sigma(alpha), l_alpha}; the double sum
        // over (tau, sigma) then weighs pairs by J(tau sigma^-1).
        for (std::uint64_t r = 0; r < order; ++r) {
            Complex prod(1.0, 0.0);
            const Permutation& sigma = group[r];
            for (int a = 0; a < n; ++a) prod *= network(rows[sigma(a)], outs[a]);
            amp[r] = prod;
        }

        Complex acc(0.0, 0.0);
        for (std::uint64_t rt = 0; rt < order; ++rt) {
            const Complex conj_amp = std::conj(amp[rt]);
            const Complex* jrow = jrel.data() + rt * order;
            for (std::uint64_t rs = 0; rs < order; ++rs) {
                if (jrow[rs] == Complex(0.0, 0.0)) continue;
                acc += jrow[rs] * conj_amp * amp[rs];
            }
        }
        const double p = acc.real() / (mu_m * mu_n);
        if (std::abs(acc.imag()) > policy.tol.probability_imag * std::max(1.0, std::abs(acc.real())))
            throw std::runtime_error("full_output_distribution: imaginary residue");
        dist.probabilities[ci] = p;
        dist.total += p;
    }

    dist.normalized = std::abs(dist.total - 1.0) <= 1e-8;
    if (!dist.normalized && dist.total > 1.0 + 1e-8)
        throw std::runtime_error("full_output_distribution: total probability " +
                                 std::to_string(dist.total) + " exceeds 1");
    return dist;
}

}  // namespace bunchkit
