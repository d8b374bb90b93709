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

#include "bunchkit/indist/theta.hpp"

#include <cmath>
#include <stdexcept>

#include "bunchkit/numkit/linalg.hpp"
#include "bunchkit/symgroup/irreps.hpp"

namespace bunchkit {

JFunction trusted_jfunction(int n, Species species, std::vector<Complex> values);

double ThetaFunction::norm_defect() const {
    double norm2 = 0.0;
    for (const auto& v : values) norm2 += std::norm(v);
    return std::abs(norm2 - 1.0);
}

ThetaFunction factorize_theta(const JFunction& j, const NumericPolicy& policy) {
    const int n = j.n();
    const auto group = enumerate_group(n, policy);
    const std::uint64_t order = group.size();
    const auto& irreps = symmetric_group_irreps(n);

    // Fourier blocks J_hat(lambda) = sum_rho J(rho) Gamma_lambda(rho).
    std::vector<ComplexMatrix> blocks;
    blocks.reserve(irreps.size());
    for (const auto& irrep : irreps) {
        const int d = irrep.dim;
        ComplexMatrix fhat(d, d);
        for (std::uint64_t r = 0; r < order; ++r) {
            const Complex coeff = j.value(r);
            if (coeff == Complex(0.0, 0.0)) continue;
            const std::vector<double> gamma = irrep.matrix(group[r]);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    fhat(a, b) += coeff * gamma[static_cast<std::size_t>(a) * d + b];
        }
        blocks.push_back(std::move(fhat));
    }

    // Block spectra decide physicality; clip tiny negatives before the root.
    double lambda_max = 0.0;
    double lambda_min = 0.0;
    std::vector<EigResult> eigs;
    eigs.reserve(blocks.size());
    for (const auto& b : blocks) {
        eigs.push_back(hermitian_eig(b, policy));
        lambda_max = std::max(lambda_max, eigs.back().values.back());
        lambda_min = std::min(lambda_min, eigs.back().values.front());
    }
    if (lambda_min < -policy.tol.psd_relative * std::max(lambda_max, 1.0))
        throw std::runtime_error(
            "factorize_theta: J is not a physical state (group matrix eigenvalue " +
            std::to_string(lambda_min) + ")");

    std::vector<ComplexMatrix> roots;
    roots.reserve(blocks.size());
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const int d = static_cast<int>(blocks[bi].rows());
        ComplexMatrix root(d, d);
        for (int k = 0; k < d; ++k) {
            const double lam = std::sqrt(std::max(eigs[bi].values[k], 0.0));
            for (int a = 0; a < d; ++a) {
                const Complex va = eigs[bi].vectors(a, k) * lam;
                for (int b = 0; b < d; ++b) root(a, b) += va * std::conj(eigs[bi].vectors(b, k));
            }
        }
        roots.push_back(std::move(root));
    }

    // theta(tau) is the identity row of the principal square root of the
    // group matrix, recovered by Fourier inversion:
    //   theta(tau) = (1/N!) sum_lambda d_lambda Tr[ R_hat(lambda) Gamma_lambda(tau^-1) ].
    ThetaFunction theta;
    theta.n = n;
    theta.values.assign(order, Complex(0.0, 0.0));
    for (std::uint64_t r = 0; r < order; ++r) {
        const Permutation inv = group[r].inverse();
        Complex acc(0.0, 0.0);
        for (std::size_t bi = 0; bi < irreps.size(); ++bi) {
            const int d = irreps[bi].dim;
            const std::vector<double> gamma = irreps[bi].matrix(inv);
            Complex tr(0.0, 0.0);
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b)
                    tr += roots[bi](a, b) * gamma[static_cast<std::size_t>(b) * d + a];
            acc += static_cast<double>(d) * tr;
        }
        theta.values[r] = acc / static_cast<double>(order);
    }

    double norm2 = 0.0;
    for (const auto& v : theta.values) norm2 += std::norm(v);
    if (std::abs(norm2 - 1.0) > 1e-6)
        throw std::runtime_error("factorize_theta: theta normalization defect " +
                                 std::to_string(std::abs(norm2 - 1.0)));
    const double inv_norm = 1.0 / std::sqrt(norm2);
    for (auto& v : theta.values) v *= inv_norm;
    return theta;
}

JFunction reconstruct_j(const ThetaFunction& theta, Species species,
                        const NumericPolicy& policy) {
    const int n = theta.n;
    if (theta.values.size() != factorial(n))
        throw std::invalid_argument("reconstruct_j: theta table must have n! entries");
    if (theta.norm_defect() > 1e-8)
        throw std::invalid_argument("reconstruct_j: theta is not normalized");

    const auto group = enumerate_group(n, policy);
    const std::uint64_t order = group.size();
    std::vector<Complex> values(order, Complex(0.0, 0.0));
    // J(sigma) = sum_tau theta*(tau) theta(tau sigma)
    for (std::uint64_t rt = 0; rt < order; ++rt) {
        const Complex conj_t = std::conj(theta.values[rt]);
        if (conj_t == Complex(0.0, 0.0)) continue;
        const Permutation& tau = group[rt];
        for (std::uint64_t rs = 0; rs < order; ++rs)
            values[rs] += conj_t * theta.values[tau.compose(group[rs]).rank()];
    }
    values[0] = 1.0;  // sum |theta|^2, exact after normalization
    return JFunction(n, species, std::move(values), policy);
}

ComplexMatrix reconstruct_internal_state(const JFunction& j, const NumericPolicy& policy) {
    const int n = j.n();
    const auto group = enumerate_group(n, policy);
    const std::uint64_t order = group.size();

    // rho_{a,b} = eps(b a^-1) J(b a^-1) / N!; the sign folds fermionic J back
    // to the bosonic one so rho is p.s.d. for both species.
    ComplexMatrix rho(order, order);
    for (std::uint64_t a = 0; a < order; ++a) {
        const Permutation inv_a = group[a].inverse();
        for (std::uint64_t b = 0; b < order; ++b) {
            const Permutation rel = group[b].compose(inv_a);
            const double eps =
                (j.species() == Species::Boson) ? 1.0 : static_cast<double>(rel.sign());
            rho(a, b) = eps * j.value(rel.rank()) / static_cast<double>(order);
        }
    }

    if (order <= 120) {
        const auto eigvals = hermitian_eigenvalues(rho, policy);
        if (eigvals.front() < -policy.tol.psd_relative * std::max(eigvals.back(), 1.0))
            throw std::runtime_error("reconstruct_internal_state: not a physical state");
    }
    return rho;
}

Complex internal_state_trace(const ComplexMatrix& rho, const Permutation& sigma,
                             const NumericPolicy& policy) {
    const auto group = enumerate_group(sigma.n(), policy);
    if (rho.rows() != group.size() || rho.cols() != group.size())
        throw std::invalid_argument("internal_state_trace: size mismatch");
    Complex acc(0.0, 0.0);
    for (std::uint64_t a = 0; a < group.size(); ++a)
        acc += rho(a, sigma.compose(group[a]).rank());
    return acc;
}

}  // namespace bunchkit
