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

#ifndef BUNCHKIT_BUNCHING_SCHUR_HPP
#define BUNCHKIT_BUNCHING_SCHUR_HPP

#include "bunchkit/indist/theta.hpp"
#include "bunchkit/numkit/complex_matrix.hpp"
#include "bunchkit/numkit/rng.hpp"

namespace bunchkit {

/**
 * @brief N!-dimensional Schur power matrix Pi_{sigma,tau} = prod_alpha
 * H_{sigma(alpha),tau(alpha)}, lexicographic rank order. It is the group
 * matrix of f(rho) = prod_alpha H_{alpha,rho(alpha)}: Pi_{sigma,tau} =
 * f(tau sigma^-1), which is what makes its spectrum block-computable.
 */
struct SchurPowerMatrix {
    int n = 0;
    ComplexMatrix entries;                 ///< N! x N!
    std::vector<Complex> diagonal_function; ///< f(rho) by rank
};

/// Memory-capped at N <= caps.schur_matrix_max; N = 7 only with opt_in_n7.
SchurPowerMatrix schur_power_matrix(const ComplexMatrix& h,
                                    const NumericPolicy& policy = NumericPolicy::defaults(),
                                    bool opt_in_n7 = false);

/// theta^dag Pi theta; equals p_N(J) for theta = factorize_theta(J) (mu = 1).
double schur_quadratic_form(const SchurPowerMatrix& pi, const ThetaFunction& theta,
                            const NumericPolicy& policy = NumericPolicy::defaults());

struct SpectralReport {
    double min_eig = 0.0;
    double max_eig = 0.0;
    double det_h = 0.0;
    double per_h = 0.0;
    double spectral_norm = 0.0;       ///< ||Pi|| = max |eigenvalue|
    double sym_residual = 0.0;        ///< ||Pi u - per(H) u||_2, u uniform unit vector
    bool sym_vector_is_eigen = false;
    bool per_is_max = false;          ///< per(H) >= max_eig within tolerance
    double per_margin = 0.0;          ///< max_eig - per(H) (positive = violation)
    int per_multiplicity_on_sym = 0;  ///< eigenvalues within tolerance of per(H)
    bool min_is_det = false;          ///< |min_eig - det(H)| <= 1e-8 ||Pi||
};

/**
 * @brief Spectral checks on Pi(H): Schur's theorem (min eigenvalue det(H)),
 * the uniform vector as per(H)-eigenvector, and the permanent-on-top
 * comparison. Eigenvalues come from the S_N Fourier blocks of Pi's
 * generating function, not from an (N!)^3 dense solve.
 */
SpectralReport spectral_claims(const SchurPowerMatrix& pi, const ComplexMatrix& h,
                               const NumericPolicy& policy = NumericPolicy::defaults());

struct PotSearchResult {
    int trials = 0;
    double worst_margin = -1.0;   ///< max over trials of (max_eig - per)/per
    bool violation_found = false;
    ComplexMatrix worst_h;
};

/**
 * @brief Random search for permanent-on-top violations: draws Haar networks
 * on m modes, builds H on the first n rows and a random k-subset of columns,
 * and compares per(H) against the top of spec(Pi(H)).
 */
PotSearchResult search_pot_violation(int n, int m, int k, int trials, RngStream& rng,
                                     const NumericPolicy& policy = NumericPolicy::defaults());

struct HadamardCheck {
    double lhs;  ///< per(H . G), elementwise product
    double rhs;  ///< per(H)
    bool holds;  ///< lhs <= rhs + tolerance
};

/// Permanental Oppenheim-style comparison per(H o G) <= per(H) for p.s.d. H
/// and unit-diagonal p.s.d. G.
HadamardCheck hadamard_permanent_check(const ComplexMatrix& h, const ComplexMatrix& g,
                                       const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
