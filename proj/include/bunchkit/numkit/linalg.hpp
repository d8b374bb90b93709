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

#ifndef BUNCHKIT_NUMKIT_LINALG_HPP
#define BUNCHKIT_NUMKIT_LINALG_HPP

#include <vector>

#include "bunchkit/numkit/complex_matrix.hpp"
#include "bunchkit/numkit/tolerances.hpp"

namespace bunchkit {

/// LU (partial pivoting) determinant. Singular input gives 0.
Complex determinant(const ComplexMatrix& a);

/// Solve A x = b by LU with partial pivoting; throws on (numerically) singular A.
std::vector<Complex> solve_linear(const ComplexMatrix& a, const std::vector<Complex>& b);

struct EigResult {
    std::vector<double> values;  ///< ascending
    ComplexMatrix vectors;       ///< columns are eigenvectors, matching order
};

/**
 * @brief Dense Hermitian eigendecomposition by cyclic complex Jacobi rotations.
 *
 * Input must satisfy ||A - A^dag||_max <= policy.tol.hermiticity (contract
 * error otherwise). Residuals ||A v - lambda v|| stay below
 * policy.tol.eig_residual * ||A||.
 */
EigResult hermitian_eig(const ComplexMatrix& a,
                        const NumericPolicy& policy = NumericPolicy::defaults());

/// Eigenvalues only (same algorithm, no eigenvector accumulation).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a,
                                          const NumericPolicy& policy = NumericPolicy::defaults());

/// Hermitian p.s.d. principal square root. Eigenvalues slightly below zero
/// (within -tol.psd_relative * lambda_max) are clipped; beyond that throws.
ComplexMatrix hermitian_sqrt_psd(const ComplexMatrix& a,
                                 const NumericPolicy& policy = NumericPolicy::defaults());

struct PolarResult {
    ComplexMatrix sqrtA;                 ///< Hermitian p.s.d. factor, U = sqrtA * W
    ComplexMatrix unitary_factor;        ///< W, exactly unitary up to tolerance
    std::vector<double> singular_values; ///< descending
};

/**
 * @brief Polar decomposition U = sqrt(A) W of a square passive matrix.
 *
 * All singular values must satisfy s <= 1 + tol.singular_value_slack
 * (not-a-passive-network error otherwise).
 */
PolarResult polar_and_svd(const ComplexMatrix& u,
                          const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
