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

#include "bunchkit/symgroup/irreps.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "bunchkit/numkit/linalg.hpp"
#include "bunchkit/symgroup/cycle_sum.hpp"

namespace bunchkit {

namespace {

// A standard Young tableau encoded as the row index of each value 0..n-1.
using Tableau = std::vector<int>;

void enumerate_syt(const std::vector<int>& shape, std::vector<int>& row_fill, Tableau& current,
                   int value, int n, std::vector<Tableau>& out) {
    if (value == n) {
        out.push_back(current);
        return;
    }
    for (std::size_t r = 0; r < shape.size(); ++r) {
        const int c = row_fill[r];
        if (c >= shape[r]) continue;
        if (r > 0 && row_fill[r - 1] <= c) continue;  // column must grow downward
        ++row_fill[r];
        current[value] = static_cast<int>(r);
        enumerate_syt(shape, row_fill, current, value + 1, n, out);
        --row_fill[r];
    }
}

Irrep build_irrep(const std::vector<int>& shape, int n) {
    Irrep irrep;
    irrep.partition = shape;

    std::vector<Tableau> tableaux;
    std::vector<int> row_fill(shape.size(), 0);
    Tableau current(n, -1);
    enumerate_syt(shape, row_fill, current, 0, n, tableaux);
    irrep.dim = static_cast<int>(tableaux.size());

    std::map<Tableau, int> index;
    for (std::size_t t = 0; t < tableaux.size(); ++t) index[tableaux[t]] = static_cast<int>(t);

    // Column of each value in a tableau follows from the row occupancy order.
    auto column_of = [&](const Tableau& tab, int value) {
        int col = 0;
        for (int v = 0; v < value; ++v)
            if (tab[v] == tab[value]) ++col;
        return col;
    };

    irrep.adjacent.resize(n - 1);
    for (int k = 0; k < n - 1; ++k) {
        auto& action = irrep.adjacent[k];
        action.diag.assign(irrep.dim, 0.0);
        action.partner.assign(irrep.dim, -1);
        action.off.assign(irrep.dim, 0.0);
        for (int t = 0; t < irrep.dim; ++t) {
            const Tableau& tab = tableaux[t];
            const int r1 = tab[k], c1 = column_of(tab, k);
            const int r2 = tab[k + 1], c2 = column_of(tab, k + 1);
            if (r1 == r2) {
                action.diag[t] = 1.0;  // same row: axial distance 1
            } else if (c1 == c2) {
                action.diag[t] = -1.0;  // same column: axial distance -1
            } else {
                const int dist = (c2 - r2) - (c1 - r1);
                const double rho = 1.0 / static_cast<double>(dist);
                Tableau swapped = tab;
                std::swap(swapped[k], swapped[k + 1]);
                action.diag[t] = rho;
                action.partner[t] = index.at(swapped);
                action.off[t] = std::sqrt(1.0 - rho * rho);
            }
        }
    }
    return irrep;
}

// Adjacent transposition word: p = s_{k_L} o ... o s_{k_1} with the k_i
// recorded by repeatedly clearing the leftmost descent.
std::vector<int> descent_word(const Permutation& p) {
    std::vector<int> img = p.images();
    std::vector<int> word;
    bool done = false;
    while (!done) {
        done = true;
        for (std::size_t k = 0; k + 1 < img.size(); ++k) {
            if (img[k] > img[k + 1]) {
                std::swap(img[k], img[k + 1]);
                word.push_back(static_cast<int>(k));
                done = false;
                break;
            }
        }
    }
    return word;
}

}  // namespace

std::vector<double> Irrep::matrix(const Permutation& p) const {
    const int d = dim;
    std::vector<double> m(static_cast<std::size_t>(d) * d, 0.0);
    for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i) * d + i] = 1.0;
    std::vector<double> next(m.size());
    for (int k : descent_word(p)) {
        const auto& act = adjacent[k];
        for (int t = 0; t < d; ++t) {
            double* dst = next.data() + static_cast<std::size_t>(t) * d;
            const double* src_t = m.data() + static_cast<std::size_t>(t) * d;
            for (int j = 0; j < d; ++j) dst[j] = act.diag[t] * src_t[j];
            if (act.partner[t] >= 0) {
                const double* src_u = m.data() + static_cast<std::size_t>(act.partner[t]) * d;
                for (int j = 0; j < d; ++j) dst[j] += act.off[t] * src_u[j];
            }
        }
        m.swap(next);
    }
    return m;
}

const std::vector<Irrep>& symmetric_group_irreps(int n) {
    if (n < 1 || n > 10) throw std::invalid_argument("symmetric_group_irreps: need 1 <= n <= 10");
    static std::map<int, std::vector<Irrep>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<Irrep> irreps;
    for (const auto& shape : partitions(n)) irreps.push_back(build_irrep(shape, n));

    std::uint64_t dim_check = 0;
    for (const auto& irrep : irreps)
        dim_check += static_cast<std::uint64_t>(irrep.dim) * static_cast<std::uint64_t>(irrep.dim);
    if (dim_check != factorial(n))
        throw std::runtime_error("symmetric_group_irreps: dimension sum check failed");

    return cache.emplace(n, std::move(irreps)).first->second;
}

std::vector<double> group_function_spectrum(int n, const std::vector<std::complex<double>>& f,
                                            const NumericPolicy& policy) {
    const std::uint64_t order = factorial(n);
    if (f.size() != order)
        throw std::invalid_argument("group_function_spectrum: table must have n! entries");

    const auto group = enumerate_group(n, policy);
    // Hermitian generator required: f(rho^-1) = conj(f(rho)).
    double herm_defect = 0.0;
    for (const auto& p : group) {
        const std::uint64_t ri = p.inverse().rank();
        herm_defect = std::max(herm_defect, std::abs(f[ri] - std::conj(f[p.rank()])));
    }
    const double scale = [&] {
        double s = 0.0;
        for (const auto& v : f) s = std::max(s, std::abs(v));
        return std::max(s, 1.0);
    }();
    if (herm_defect > policy.tol.hermiticity * scale)
        throw std::invalid_argument("group_function_spectrum: f does not generate a Hermitian matrix");

    // Words shared across irreps.
    std::vector<std::vector<int>> words(order);
    for (std::uint64_t r = 0; r < order; ++r) words[r] = descent_word(group[r]);

    std::vector<double> spectrum;
    spectrum.reserve(order);
    for (const auto& irrep : symmetric_group_irreps(n)) {
        const int d = irrep.dim;
        std::vector<Complex> fhat(static_cast<std::size_t>(d) * d, Complex(0.0, 0.0));
        std::vector<double> gamma(static_cast<std::size_t>(d) * d, 0.0);
        std::vector<double> next(gamma.size());
        for (std::uint64_t r = 0; r < order; ++r) {
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    gamma[static_cast<std::size_t>(i) * d + j] = (i == j) ? 1.0 : 0.0;
            for (int k : words[r]) {
                const auto& act = irrep.adjacent[k];
                for (int t = 0; t < d; ++t) {
                    double* dst = next.data() + static_cast<std::size_t>(t) * d;
                    const double* src_t = gamma.data() + static_cast<std::size_t>(t) * d;
                    for (int j = 0; j < d; ++j) dst[j] = act.diag[t] * src_t[j];
                    if (act.partner[t] >= 0) {
                        const double* src_u =
                            gamma.data() + static_cast<std::size_t>(act.partner[t]) * d;
                        for (int j = 0; j < d; ++j) dst[j] += act.off[t] * src_u[j];
                    }
                }
                gamma.swap(next);
            }
            const Complex coeff = f[r];
            if (coeff == Complex(0.0, 0.0)) continue;
            for (std::size_t idx = 0; idx < fhat.size(); ++idx) fhat[idx] += coeff * gamma[idx];
        }

        ComplexMatrix block(d, d);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) block(i, j) = fhat[static_cast<std::size_t>(i) * d + j];
        const std::vector<double> eigs = hermitian_eigenvalues(block, policy);
        for (double e : eigs)
            for (int copy = 0; copy < d; ++copy) spectrum.push_back(e);
    }
    std::sort(spectrum.begin(), spectrum.end());
    return spectrum;
}

}  // namespace bunchkit
