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

#include "bunchkit/bunching/schur.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "bunchkit/numkit/haar.hpp"
#include "bunchkit/numkit/linalg.hpp"
#include "bunchkit/numkit/permanent.hpp"
#include "bunchkit/symgroup/irreps.hpp"

namespace bunchkit {

SchurPowerMatrix schur_power_matrix(const ComplexMatrix& h, const NumericPolicy& policy,
                                    bool opt_in_n7) {
    if (!h.square()) throw std::invalid_argument("schur_power_matrix: H must be square");
    const int n = static_cast<int>(h.rows());
    const int cap = opt_in_n7 ? policy.caps.schur_matrix_hard_max : policy.caps.schur_matrix_max;
    if (n > cap)
        throw std::runtime_error("schur_power_matrix: N " + std::to_string(n) +
                                 " exceeds memory cap " + std::to_string(cap));
    const double defect = h.hermiticity_defect();
    if (defect > policy.tol.hermiticity * std::max(1.0, h.max_abs()))
        throw std::invalid_argument("schur_power_matrix: H not Hermitian");

    const auto group = enumerate_group(n, policy);
    const std::uint64_t order = group.size();

    SchurPowerMatrix out;
    out.n = n;
    out.diagonal_function.resize(order);
    for (std::uint64_t r = 0; r < order; ++r) {
        Complex prod(1.0, 0.0);
        for (int a = 0; a < n; ++a) prod *= h(a, group[r](a));
        out.diagonal_function[r] = prod;
    }

    // Pi_{sigma,tau} = f(tau sigma^-1).
    out.entries = ComplexMatrix(order, order);
    for (std::uint64_t s = 0; s < order; ++s) {
        const Permutation inv_s = group[s].inverse();
        for (std::uint64_t t = 0; t < order; ++t)
            out.entries(s, t) = out.diagonal_function[group[t].compose(inv_s).rank()];
    }
    return out;
}

double schur_quadratic_form(const SchurPowerMatrix& pi, const ThetaFunction& theta,
                            const NumericPolicy& policy) {
    if (theta.n != pi.n) throw std::invalid_argument("schur_quadratic_form: size mismatch");
    const std::vector<Complex> y = pi.entries.apply(theta.values);
    Complex acc(0.0, 0.0);
    for (std::size_t i = 0; i < y.size(); ++i) acc += std::conj(theta.values[i]) * y[i];
    if (std::abs(acc.imag()) > policy.tol.probability_imag * std::max(1.0, std::abs(acc.real())))
        throw std::runtime_error("schur_quadratic_form: imaginary residue");
    return acc.real();
}

SpectralReport spectral_claims(const SchurPowerMatrix& pi, const ComplexMatrix& h,
                               const NumericPolicy& policy) {
    if (static_cast<int>(h.rows()) != pi.n)
        throw std::invalid_argument("spectral_claims: H does not match Pi");
    const int n = pi.n;
    SpectralReport rep;
    rep.det_h = determinant(h).real();
    rep.per_h = permanent_ryser(h, policy).real();

    const std::vector<double> spectrum = group_function_spectrum(n, pi.diagonal_function, policy);
    rep.min_eig = spectrum.front();
    rep.max_eig = spectrum.back();
    rep.spectral_norm = std::max(std::abs(rep.min_eig), std::abs(rep.max_eig));

    const double scale = std::max(rep.spectral_norm, 1e-300);
    rep.min_is_det = std::abs(rep.min_eig - rep.det_h) <= 1e-8 * scale;

    // Uniform vector residual: Pi u = per(H) u holds exactly in arithmetic,
    // checked here numerically on the materialized table.
    const std::uint64_t order = factorial(n);
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(order));
    std::vector<Complex> u(order, Complex(inv_sqrt, 0.0));
    const std::vector<Complex> pu = pi.entries.apply(u);
    double res2 = 0.0;
    for (std::uint64_t i = 0; i < order; ++i) res2 += std::norm(pu[i] - rep.per_h * u[i]);
    rep.sym_residual = std::sqrt(res2);
    rep.sym_vector_is_eigen = rep.sym_residual <= 1e-8 * std::max(1.0, scale);

    rep.per_margin = rep.max_eig - rep.per_h;
    rep.per_is_max = rep.per_margin <= 1e-9 * std::max(1.0, std::abs(rep.per_h));
    int mult = 0;
    for (double e : spectrum)
        if (std::abs(e - rep.per_h) <= 1e-9 * std::max(1.0, std::abs(rep.per_h))) ++mult;
    rep.per_multiplicity_on_sym = mult;
    return rep;
}

PotSearchResult search_pot_violation(int n, int m, int k, int trials, RngStream& rng,
                                     const NumericPolicy& policy) {
    if (k < 1 || k > m || n < 1 || n > m)
        throw std::invalid_argument("search_pot_violation: need 1 <= n,k <= m");
    PotSearchResult out;
    out.trials = trials;
    for (int t = 0; t < trials; ++t) {
        RngStream trial_rng = rng.substream(t);
        const ComplexMatrix rows = haar_isometry_rows(n, m, trial_rng);
        const std::vector<int> cols = trial_rng.sample_subset(m, k);
        ComplexMatrix h(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Complex acc(0.0, 0.0);
                for (int l : cols) acc += rows(a, l) * std::conj(rows(b, l));
                h(a, b) = acc;
            }
        const double per = permanent_ryser(h, policy).real();
        const auto pi = schur_power_matrix(h, policy);
        const auto spectrum = group_function_spectrum(n, pi.diagonal_function, policy);
        const double margin = (spectrum.back() - per) / std::max(per, 1e-300);
        if (margin > out.worst_margin) {
            out.worst_margin = margin;
            out.worst_h = h;
        }
    }
    out.violation_found = out.worst_margin > 1e-9;
    return out;
}

HadamardCheck hadamard_permanent_check(const ComplexMatrix& h, const ComplexMatrix& g,
                                       const NumericPolicy& policy) {
    if (!h.square() || !g.square() || h.rows() != g.rows())
        throw std::invalid_argument("hadamard_permanent_check: dimension mismatch");
    const int n = static_cast<int>(h.rows());
    for (int i = 0; i < n; ++i)
        if (std::abs(g(i, i) - Complex(1.0, 0.0)) > 1e-8)
            throw std::invalid_argument("hadamard_permanent_check: G must have unit diagonal");
    ComplexMatrix prod(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod(i, j) = h(i, j) * g(i, j);
    HadamardCheck out{};
    out.lhs = permanent_ryser(prod, policy).real();
    out.rhs = permanent_ryser(h, policy).real();
    out.holds = out.lhs <= out.rhs + 1e-10 * std::max(1.0, std::abs(out.rhs));
    return out;
}

}  // namespace bunchkit
