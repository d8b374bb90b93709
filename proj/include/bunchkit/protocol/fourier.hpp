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

#ifndef BUNCHKIT_PROTOCOL_FOURIER_HPP
#define BUNCHKIT_PROTOCOL_FOURIER_HPP

#include "bunchkit/bunching/output_distribution.hpp"
#include "bunchkit/numkit/complex_matrix.hpp"

namespace bunchkit {

/// F_{k,l} = exp(i 2 pi k l / M)/sqrt(M) with 1-based k, l.
UnitaryMatrix fourier_network(int m, const NumericPolicy& policy = NumericPolicy::defaults());

/// Cyclic input modes k_alpha = k1 + (alpha-1) N^{p-1}, 1 <= k1 <= N^{p-1}.
std::vector<int> cyclic_input_modes(int n, int p_exponent, int k1);

struct SuppressionReport {
    int n = 0;
    int m = 0;
    std::vector<int> input_modes;
    OutputDistribution distribution;
    std::vector<std::vector<int>> allowed;  ///< configurations with mode-index sum divisible by N
    double allowed_fraction = 0.0;          ///< |allowed| / #configurations
    double forbidden_max_prob = 0.0;        ///< largest probability of a forbidden configuration
    double allowed_total_prob = 0.0;
};

/**
 * @brief Zero-transmission law check on the Fourier network with M = N^p
 * modes and a cyclic input: outputs whose 1-based mode-index sum is not
 * divisible by N are forbidden for completely indistinguishable bosons.
 *
 * `j` defaults to ideal bosons; passing a different J (e.g. distinguishable
 * particles) shows the suppression disappear.
 */
SuppressionReport suppression_check(int n, int p_exponent, int k1, const JFunction* j = nullptr,
                                    const NumericPolicy& policy = NumericPolicy::defaults());

/// Σ_l l * m_l ≡ 0 (mod n) with 1-based mode indices.
bool configuration_allowed(const std::vector<int>& config, int n);

struct LoopholeReport {
    ComplexMatrix adversary_network;  ///< parity-interleaved block-Fourier unitary
    std::vector<int> input_modes;
    OutputDistribution distribution;
    bool all_outputs_in_allowed_set = false;  ///< adversary passes the suppression test
    double max_forbidden_prob = 0.0;
    bool per_block_laws_hold = false;  ///< block-local sums divisible by N/2
    int nonzero_configs = 0;
};

/**
 * @brief Adversarial network + partially distinguishable input that passes
 * the Fourier suppression test: two parity-interleaved block-Fourier copies
 * fed with two mutually distinguishable groups of n1 indistinguishable
 * bosons on a cyclic input. Exact enumeration pins n1 = 2 (N = 4, M = 16).
 */
LoopholeReport loophole_demo(int n1, int k1 = 1,
                             const NumericPolicy& policy = NumericPolicy::defaults());

/// The adversary network of loophole_demo as a matrix (any even N = 2 n1).
ComplexMatrix loophole_adversary_network(int n1,
                                         const NumericPolicy& policy =
                                             NumericPolicy::defaults());

}  // namespace bunchkit

#endif
