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

#ifndef BUNCHKIT_INDIST_THETA_HPP
#define BUNCHKIT_INDIST_THETA_HPP

#include "bunchkit/indist/jfunction.hpp"

namespace bunchkit {

/**
 * @brief Factorizing function theta with sum_sigma |theta|^2 = 1.
 */
struct ThetaFunction {
    int n = 0;
    std::vector<Complex> values;  ///< lexicographic rank order

    double norm_defect() const;
};

/**
 * @brief Canonical factorization J(sigma) = sum_tau theta*(tau) theta(tau sigma).
 *
 * theta is the identity row of the principal Hermitian square root of the
 * group matrix J_{nu,tau} = J(nu^-1 tau); for that canonical choice the left
 * and right factorization conventions coincide and theta(I) >= 0. The square
 * root is taken block-wise in the Fourier domain of S_N, so the cost is some
 * small multiple of n! rather than (n!)^3. Throws not-a-physical-state when
 * the group matrix is indefinite beyond tolerance.
 */
ThetaFunction factorize_theta(const JFunction& j,
                              const NumericPolicy& policy = NumericPolicy::defaults());

/// J(sigma) = sum_tau theta*(tau) theta(tau sigma) from a normalized theta.
JFunction reconstruct_j(const ThetaFunction& theta, Species species,
                        const NumericPolicy& policy = NumericPolicy::defaults());

/**
 * @brief Internal-state density matrix on the group-span basis:
 * rho_{a,b} = eps * J(b a^-1) / N!, an N! x N! p.s.d. matrix with unit trace
 * satisfying Tr(rho P_sigma) = eps(sigma) J(sigma).
 */
ComplexMatrix reconstruct_internal_state(const JFunction& j,
                                         const NumericPolicy& policy = NumericPolicy::defaults());

/// Tr(rho P_sigma) with P_sigma acting on basis labels, P_sigma |a> = |sigma a>.
Complex internal_state_trace(const ComplexMatrix& rho, const Permutation& sigma,
                             const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
