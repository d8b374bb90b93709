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

#include "bunchkit/haarstats/first_order.hpp"

#include <cmath>
#include <stdexcept>

#include "bunchkit/haarstats/averages.hpp"
#include "bunchkit/numkit/permanent.hpp"
#include "bunchkit/symgroup/cycle_sum.hpp"

namespace bunchkit {

double per_diagonal_derivative(const ComplexMatrix& h, const NumericPolicy& policy) {
    if (!h.square()) throw std::invalid_argument("per_diagonal_derivative: H must be square");
    const int n = static_cast<int>(h.rows());

    // Sample per{H(x)} at x = 0..N.
    std::vector<double> f(n + 1);
    for (int node = 0; node <= n; ++node) {
        ComplexMatrix hx = h;
        for (int i = 0; i < n; ++i) hx(i, i) *= static_cast<double>(node);
        f[node] = permanent_ryser(hx, policy).real();
    }

    // Barycentric differentiation at the node x = 1 (index 1):
    // p'(x_k) = sum_{j != k} (w_j / w_k) (f_j - f_k) / (x_k - x_j),
    // with w_j proportional to (-1)^j C(n, j) on equispaced nodes.
    const int k = 1;
    if (n == 0) return 0.0;
    std::vector<double> log_binom(n + 1, 0.0);
    for (int j = 1; j <= n; ++j)
        log_binom[j] = log_binom[j - 1] + std::log(static_cast<double>(n - j + 1) / j);
    double deriv = 0.0;
    for (int j = 0; j <= n; ++j) {
        if (j == k) continue;
        const double ratio = ((j - k) % 2 == 0 ? 1.0 : -1.0) *
                             std::exp(log_binom[j] - log_binom[k]);
        deriv += ratio * (f[j] - f[k]) / static_cast<double>(k - j);
    }
    return deriv;
}

double first_order_prob(const ComplexMatrix& h, double fidelity, const NumericPolicy& policy) {
    if (fidelity < 0.0 || fidelity > 1.0)
        throw std::invalid_argument("first_order_prob: fidelity must be in [0, 1]");
    const int n = static_cast<int>(h.rows());
    const double per = permanent_ryser(h, policy).real();
    if (fidelity == 1.0) return per;
    const double deriv = per_diagonal_derivative(h, policy);
    return per - (1.0 - fidelity) * (static_cast<double>(n) * per - deriv);
}

ShiftPrediction avg_distinguishability_shift(int n, int m, int k, double fidelity) {
    if (n < 2) throw std::invalid_argument("avg_distinguishability_shift: n must be >= 2");
    ShiftPrediction out{};
    const AverageSpec lower{n - 1, m, k, ParticleKind::Boson};
    out.value = (1.0 - fidelity) * static_cast<double>(n - 1) * static_cast<double>(n) /
                static_cast<double>(m) * avg_quantum(lower);
    out.dilute_ok = m >= n * n;
    return out;
}

CycleSumResult generating_function_zn(int n, int k, int m, const NumericPolicy& policy) {
    if (n < 1) throw std::invalid_argument("generating_function_zn: n must be >= 1");
    const double km = static_cast<double>(k) * static_cast<double>(m);

    // g_s = (2s-2)!/(s!(s-1)!), built by ratio to stay exact in double.
    std::vector<std::complex<double>> t(n);
    double g = 1.0;
    for (int s = 1; s <= n; ++s) {
        if (s > 1)
            g *= static_cast<double>((2 * s - 2) * (2 * s - 3)) /
                 static_cast<double>(s * (s - 1));
        t[s - 1] = -km * g;
    }

    CycleSumResult out{};
    out.exact = cycle_sum_zn(n, t, policy).real();
    double leading = 1.0;
    for (int i = 1; i <= n; ++i) leading *= -km / static_cast<double>(i);
    out.leading = leading;
    return out;
}

}  // namespace bunchkit
