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

#ifndef BUNCHKIT_BUNCHING_OUTPUT_DISTRIBUTION_HPP
#define BUNCHKIT_BUNCHING_OUTPUT_DISTRIBUTION_HPP

#include <vector>

#include "bunchkit/indist/jfunction.hpp"
#include "bunchkit/numkit/complex_matrix.hpp"

namespace bunchkit {

/**
 * @brief Exact output distribution over occupation configurations
 * m = (m_1..m_M), enumerated in colexicographic order (stable file output).
 */
struct OutputDistribution {
    int modes = 0;
    int particles = 0;
    std::vector<std::vector<int>> configurations;  ///< colex order
    std::vector<double> probabilities;             ///< aligned with configurations
    double total = 0.0;
    bool normalized = false;  ///< false for passive (lossy) networks, total <= 1

    double probability_of(const std::vector<int>& config) const;
    /// Sum of probabilities over configurations supported inside the 1-based subset.
    double bunched_sum(const std::vector<int>& subset) const;
};

/**
 * @brief Full output distribution of N particles with internal state J in a
 * linear network (exact double sum over S_N x S_N per configuration).
 *
 * input_modes are 1-based with repetitions allowed; the enumeration is
 * capped by caps.distribution_* unless `override_caps` lifts the per-axis
 * limits (the hard configuration-count cap always applies). Non-unitary
 * passive networks are allowed: probabilities then sum to <= 1 and the
 * result is flagged unnormalized.
 */
OutputDistribution full_output_distribution(const ComplexMatrix& network,
                                            const std::vector<int>& input_modes,
                                            const JFunction& j,
                                            const NumericPolicy& policy = NumericPolicy::defaults(),
                                            bool override_caps = false);

/// All occupation vectors of n particles in m modes, colexicographic order.
std::vector<std::vector<int>> enumerate_configurations(int m, int n);

}  // namespace bunchkit

#endif
