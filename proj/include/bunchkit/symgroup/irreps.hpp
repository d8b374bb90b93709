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

#ifndef BUNCHKIT_SYMGROUP_IRREPS_HPP
#define BUNCHKIT_SYMGROUP_IRREPS_HPP

#include <complex>
#include <vector>

#include "bunchkit/symgroup/permutation.hpp"

namespace bunchkit {

/**
 * @brief One irreducible representation of S_n in Young's orthogonal form.
 *
 * Matrices for the adjacent transpositions s_k = (k, k+1) are stored in
 * structured sparse form (each row holds a diagonal entry and at most one
 * off-diagonal partner); arbitrary elements are products along an adjacent
 * transposition word.
 */
struct Irrep {
    std::vector<int> partition;
    int dim = 0;
    // adjacent[k] describes Gamma(s_k): diag[t], partner[t] (-1 when the
    // swapped tableau is not standard), off[t].
    struct AdjacentAction {
        std::vector<double> diag;
        std::vector<int> partner;
        std::vector<double> off;
    };
    std::vector<AdjacentAction> adjacent;

    /// Dense Gamma(p), row-major dim x dim.
    std::vector<double> matrix(const Permutation& p) const;
};

/// All irreps of S_n, partitions in descending lexicographic order.
const std::vector<Irrep>& symmetric_group_irreps(int n);

/**
 * @brief Spectrum of the n! x n! group matrix C_{sigma,tau} = f(tau sigma^-1).
 *
 * f is indexed by lexicographic rank and must generate a Hermitian matrix,
 * i.e. f(rho^-1) = conj(f(rho)). The spectrum is the union over irreps of
 * the eigenvalues of f_hat(lambda) = sum_rho f(rho) Gamma_lambda(rho), each
 * with multiplicity dim(lambda); this reduces a 720x720 problem (n = 6) to
 * blocks of dimension at most 16.
 */
std::vector<double> group_function_spectrum(
    int n, const std::vector<std::complex<double>>& f,
    const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
