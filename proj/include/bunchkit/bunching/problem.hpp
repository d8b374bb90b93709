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

#ifndef BUNCHKIT_BUNCHING_PROBLEM_HPP
#define BUNCHKIT_BUNCHING_PROBLEM_HPP

#include <json.hpp>

#include "bunchkit/indist/jfunction.hpp"
#include "bunchkit/numkit/complex_matrix.hpp"

namespace bunchkit {

/**
 * @brief A network, an input mode list (repetitions allowed), and an output
 * subset; owns the derived bunching matrix H.
 *
 * Mode indices are 1-based, matching the network file conventions.
 */
struct BunchingProblem {
    ComplexMatrix network;          ///< M x M, unitary or passive contraction
    std::vector<int> input_modes;   ///< k_1..k_N, 1-based, repetitions allowed
    std::vector<int> output_subset; ///< distinct 1-based mode indices

    int particles() const { return static_cast<int>(input_modes.size()); }
    int modes() const { return static_cast<int>(network.rows()); }
    int subset_size() const { return static_cast<int>(output_subset.size()); }
    /// mu(n) = prod n_k! over the input occupation.
    std::uint64_t mu() const;

    void validate() const;

    nlohmann::json to_json() const;
    /// Accepts the network inline or as a path string to a matrix file.
    static BunchingProblem from_json(const nlohmann::json& j);
};

/// H_{alpha,beta} = sum_{l in subset} U_{k_alpha,l} U*_{k_beta,l} (NxN Hermitian p.s.d.).
ComplexMatrix build_h(const BunchingProblem& problem);

/// Complement route H = I - Phi with Phi summed over the L left-out columns;
/// equals build_h exactly for unitary networks.
ComplexMatrix build_h_complement(const BunchingProblem& problem);

/// Phi_{alpha,beta} = sum_{l not in subset} U_{k_alpha,l} U*_{k_beta,l}.
ComplexMatrix build_phi(const BunchingProblem& problem);

struct LimitProbabilities {
    double boson;           ///< per(H) / mu(n)
    double fermion;         ///< det(H) when mu(n) = 1, 0 otherwise (Pauli)
    double distinguishable; ///< prod_alpha H_{alpha,alpha}
};

/// Limit-case probabilities for the particle labels (input modes) of H's rows.
LimitProbabilities limit_probabilities(const ComplexMatrix& h, const std::vector<int>& labels,
                                       const NumericPolicy& policy = NumericPolicy::defaults());
LimitProbabilities limit_probabilities(const BunchingProblem& problem,
                                       const NumericPolicy& policy = NumericPolicy::defaults());

/**
 * @brief p_N(J) = (1/mu(n)) sum_sigma J(sigma) prod_alpha H_{alpha,sigma(alpha)}.
 *
 * Throws a numerical-inconsistency error when the imaginary residue of the
 * sum exceeds tolerance.
 */
double prob_all_in_subset(const JFunction& j, const ComplexMatrix& h,
                          const std::vector<int>& labels,
                          const NumericPolicy& policy = NumericPolicy::defaults());
double prob_all_in_subset(const JFunction& j, const BunchingProblem& problem,
                          const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
