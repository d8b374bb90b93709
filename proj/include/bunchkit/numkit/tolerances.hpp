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

#ifndef BUNCHKIT_NUMKIT_TOLERANCES_HPP
#define BUNCHKIT_NUMKIT_TOLERANCES_HPP

#include <cstdint>

namespace bunchkit {

/**
 * @brief Central numeric tolerances shared by all modules.
 */
struct Tolerances {
    double unitarity = 1e-10;        ///< max-norm bound on ||U^dag U - I||
    double hermiticity = 1e-8;       ///< max-norm bound on ||A - A^dag||
    double eig_residual = 1e-8;      ///< eigenpair residual relative to ||A||
    double psd_relative = 1e-8;      ///< negative eigenvalues clipped below -tol*lambda_max
    double polar_residual = 1e-10;   ///< ||sqrtA * W - U||_max after polar split
    double singular_value_slack = 1e-10;  ///< passivity: singular values <= 1 + slack
    double probability_imag = 1e-8;  ///< imaginary residue allowed in probability sums
    double normalization = 1e-10;    ///< sum rules (theta norm, J(I)=1, ...)
};

/**
 * @brief Size caps guarding the exact (exponential-cost) code paths.
 */
struct Caps {
    int permanent_ryser_max = 24;    ///< Gray-code Ryser permanent
    int permanent_naive_max = 9;     ///< brute-force permanent oracle
    int group_enumeration_max = 8;   ///< full S_N tables (8! = 40320)
    int weingarten_max = 6;          ///< n!-dimensional Gram inversion
    int cycle_sum_max = 20;          ///< partition-based cycle sums
    int schur_matrix_max = 6;        ///< N!xN! Schur power matrix (N=7 opt-in)
    int schur_matrix_hard_max = 7;
    int distribution_particles_max = 5;
    int distribution_modes_max = 12;
    long long distribution_configs_max = 200000;  ///< hard cap on enumerated outputs
};

struct NumericPolicy {
    Tolerances tol;
    Caps caps;

    static const NumericPolicy& defaults();
};

}  // namespace bunchkit

#endif
