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

#ifndef BUNCHKIT_HAARSTATS_AVERAGES_HPP
#define BUNCHKIT_HAARSTATS_AVERAGES_HPP

#include "bunchkit/indist/jfunction.hpp"

namespace bunchkit {

enum class ParticleKind { Boson, Fermion, Classical };

struct AverageSpec {
    int n = 0;  ///< particles
    int m = 0;  ///< modes
    int k = 0;  ///< output subset size
    ParticleKind kind = ParticleKind::Boson;

    void validate() const;
};

/**
 * @brief Haar average of the bunching probability for ideal bosons/fermions:
 * prod_{l=0}^{N-1} (K +- l)/(M +- l), upper signs bosons. A fermionic spec
 * with k < n returns 0 (Pauli), not an error.
 */
double avg_quantum(const AverageSpec& spec);

struct ClassicalApprox {
    double value;             ///< (K/M)^N leading order
    double correction_scale;  ///< relative size N^2/(K M) of the next order
};

/// Large-M approximation of the classical average.
ClassicalApprox avg_classical_approx(const AverageSpec& spec);

/**
 * @brief Exact Haar average for distinguishable single-particle inputs via
 * the Weingarten table: sum_sigma W(M, sigma) K^{#sigma}.
 */
double avg_classical_exact(int n, int m, int k,
                           const NumericPolicy& policy = NumericPolicy::defaults());

struct RatioResult {
    double value;             ///< prod_{l=1}^{N-1} (1 +- l/K)/(1 +- l/M)
    double correction_scale;  ///< N^2/(K M)
};

/// Quantum-to-classical average probability ratio (the protocol's witness).
RatioResult avg_ratio(const AverageSpec& spec);

struct Table1Row {
    int n = 0;
    int l = 0;  ///< M - K
    int m = 0;
    int k = 0;
};

/**
 * @brief Protocol geometry: M = round(N^2/2) and the K >= N maximizing the
 * boson/classical ratio subject to avg_quantum >= min_avg. The ratio is
 * strictly decreasing in K, so the maximizer is the smallest feasible K.
 * Throws when no K is feasible.
 */
Table1Row select_k(int n, double min_avg = 0.25);

/// select_k rows for n = 3..20 (the protocol's reference table).
std::vector<Table1Row> protocol_geometry_table(int n_min = 3, int n_max = 20,
                                               double min_avg = 0.25);

}  // namespace bunchkit

#endif
