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

#ifndef BUNCHKIT_HAARSTATS_FIRST_ORDER_HPP
#define BUNCHKIT_HAARSTATS_FIRST_ORDER_HPP

#include "bunchkit/numkit/complex_matrix.hpp"
#include "bunchkit/numkit/tolerances.hpp"

namespace bunchkit {

/**
 * @brief d/dx per{H(x)} at x = 1 with H(x) = H + (x-1) diag(H).
 *
 * per{H(x)} is a degree-N polynomial; it is sampled at the integer nodes
 * x = 0..N and differentiated in barycentric form (exact for the degree,
 * well-conditioned for N within the permanent cap).
 */
double per_diagonal_derivative(const ComplexMatrix& h,
                               const NumericPolicy& policy = NumericPolicy::defaults());

/**
 * @brief First-order distinguishability law:
 * p_N ~ per(H) - (1-F) [ N per(H) - d/dx per{H(x)}|_{x=1} ].
 */
double first_order_prob(const ComplexMatrix& h, double fidelity,
                        const NumericPolicy& policy = NumericPolicy::defaults());

struct ShiftPrediction {
    double value;    ///< (1-F)(N-1) * (N/M) * <p^B_{N-1}>
    bool dilute_ok;  ///< law derived for M >> N^2; false flags usage outside
};

/// Predicted Haar-average drop <p^B> - <p_N(J)> for mean fidelity F.
ShiftPrediction avg_distinguishability_shift(int n, int m, int k, double fidelity);

struct CycleSumResult {
    double exact;    ///< Z_N with t_s = -K M g_s, g_s = (2s-2)!/(s!(s-1)!)
    double leading;  ///< (-K M)^N / N!
};

/// Generating-function cycle sum behind the classical-average asymptotics.
CycleSumResult generating_function_zn(int n, int k, int m,
                                      const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
