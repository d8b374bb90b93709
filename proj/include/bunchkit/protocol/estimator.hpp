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

#ifndef BUNCHKIT_PROTOCOL_ESTIMATOR_HPP
#define BUNCHKIT_PROTOCOL_ESTIMATOR_HPP

#include "bunchkit/bunching/problem.hpp"

namespace bunchkit {

/**
 * @brief Accuracy/dilution exponents of the truncated permanent estimator.
 *
 * Target error epsilon = N^-kappa in the dilute regime M = b N^(2+delta);
 * the truncation order s = ceil((kappa+1)/delta) does not grow with N.
 */
struct EstimatorConfig {
    double kappa = 2.0;
    double delta = 0.5;
    int truncation_order = 6;

    static EstimatorConfig from_exponents(double kappa, double delta);
};

struct ApproxPermanentResult {
    double estimate = 0.0;
    int truncation_order = 0;
    bool exact_fallback = false;     ///< s > N: full Ryser permanent was used
    double flop_estimate = 0.0;      ///< nominal cost C(N,s) s 2^s of the top order
    std::uint64_t work_units = 0;    ///< measured Gray-step work, r-per-step units
    double ts_empirical = 0.0;       ///< T_s = sum over s-subsets of per(Phi[s])
    double ts_mean_analytic = 0.0;   ///< Haar mean of T_s
    double epsilon = 0.0;            ///< target error N^-kappa
    double cheb_bound = 0.0;         ///< Chebyshev tail bound <T_s>/epsilon
    bool ts_ok = false;              ///< empirical T_s <= epsilon
};

/**
 * @brief Truncated inclusion-exclusion estimate of per(H) for H = I - Phi,
 * Phi built from the complement output columns:
 *
 *   per(H) ~ 1 + sum_{r=1}^{s} (-1)^r sum_{|alpha|=r} per(Phi[alpha,alpha]).
 *
 * Subsets iterate lexicographically; each principal permanent runs through
 * Gray-code Ryser, so the top order costs C(N,s) s 2^s with strictly smaller
 * lower orders. When the derived s exceeds N the routine falls back to the
 * exact permanent and flags it.
 */
ApproxPermanentResult approx_permanent(const BunchingProblem& problem, const EstimatorConfig& cfg,
                                       const NumericPolicy& policy = NumericPolicy::defaults());

/// Same estimator on a precomputed Phi; big_m and l_modes (= M, M - K) feed
/// the analytic <T_s> used for the Chebyshev flag (pass 0 to skip it).
ApproxPermanentResult approx_permanent_from_phi(const ComplexMatrix& phi, int big_m, int l_modes,
                                                const EstimatorConfig& cfg,
                                                const NumericPolicy& policy =
                                                    NumericPolicy::defaults());

}  // namespace bunchkit

#endif
