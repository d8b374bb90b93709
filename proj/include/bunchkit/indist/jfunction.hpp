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

#ifndef BUNCHKIT_INDIST_JFUNCTION_HPP
#define BUNCHKIT_INDIST_JFUNCTION_HPP

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "bunchkit/numkit/complex_matrix.hpp"
#include "bunchkit/symgroup/permutation.hpp"

namespace bunchkit {

enum class Species { Boson, Fermion };

const char* species_name(Species s);
Species species_from_name(const std::string& name);

/**
 * @brief Complex-valued function on S_N encoding partial distinguishability.
 *
 * Values are stored in lexicographic rank order. A physical J satisfies
 * J(I) = 1, |J| <= 1, J(sigma^-1) = conj(J(sigma)) and generates a p.s.d.
 * group matrix J_{nu,tau} = J(nu^-1 tau). Construction verifies the cheap
 * conditions always and the spectral one up to n = 6 (beyond that the
 * block-diagonalization cost grows with n! and callers are expected to pass
 * J built by the library's own constructors).
 */
class JFunction {
  public:
    JFunction(int n, Species species, std::vector<Complex> values,
              const NumericPolicy& policy = NumericPolicy::defaults());

    int n() const { return n_; }
    Species species() const { return species_; }
    const std::vector<Complex>& values() const { return values_; }
    Complex value(std::uint64_t rank) const { return values_[rank]; }
    Complex value(const Permutation& p) const { return values_[p.rank()]; }

    /// Smallest eigenvalue of the group matrix (computed during validation;
    /// NaN when the size made the spectral check unaffordable).
    double min_group_eigenvalue() const { return min_eig_; }

    nlohmann::json to_json() const;
    static JFunction from_json(const nlohmann::json& j,
                               const NumericPolicy& policy = NumericPolicy::defaults());

  private:
    friend JFunction trusted_jfunction(int, Species, std::vector<Complex>);
    JFunction() = default;
    int n_ = 0;
    Species species_ = Species::Boson;
    std::vector<Complex> values_;
    double min_eig_ = 0.0;
};

/// J for completely indistinguishable particles: 1 (bosons) or sgn (fermions).
JFunction j_indistinguishable(int n, Species species);

/// Block-structured classical-limit J: 1 on the Young subgroup of the
/// occupation, 0 elsewhere. Single particles reduce to delta_{sigma,I}.
JFunction j_distinguishable(const std::vector<int>& occupation);

/// Same as j_distinguishable but with blocks given by per-slot labels.
JFunction j_distinguishable_labels(const std::vector<int>& labels);

struct PureProductState {
    ComplexMatrix gram;  ///< N x N Gram matrix of single-particle internal states
};

struct ConvexMixtureState {
    std::vector<double> weights;
    std::vector<PureProductState> components;
};

/// J(sigma) = sum_j nu_j prod_alpha G^{(j)}_{alpha, sigma(alpha)} (classically
/// correlated input); Gram matrices must be Hermitian p.s.d. with unit diagonal.
JFunction j_classically_correlated(const ConvexMixtureState& model,
                                   const NumericPolicy& policy = NumericPolicy::defaults());
JFunction j_classically_correlated(const PureProductState& model,
                                   const NumericPolicy& policy = NumericPolicy::defaults());

struct FirstOrderJ {
    JFunction j;
    bool within_validity;  ///< (1-F) * n <= 0.5 linearization guard
    std::string warning;   ///< non-empty when the guard was exceeded
};

/// First-order small-distinguishability law J = 1 - (1-F)[N - c_1(sigma)].
FirstOrderJ j_first_order(int n, double fidelity,
                          const NumericPolicy& policy = NumericPolicy::defaults());

/// Exact J of independent sources with mean fidelity F and mutually
/// orthogonal noise states: J(sigma) = F^(N - c_1(sigma)).
JFunction j_fidelity_exact(int n, double fidelity);

/// d(J) = (1/N!) sum_sigma eps(sigma) J(sigma), in [0, 1].
double indistinguishability_measure(const JFunction& j,
                                    const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
