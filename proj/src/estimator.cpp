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

#include "bunchkit/protocol/estimator.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "bunchkit/numkit/permanent.hpp"

namespace bunchkit {

namespace {

double binomial(int n, int r) {
    double acc = 1.0;
    for (int i = 1; i <= r; ++i)
        acc *= static_cast<double>(n - r + i) / static_cast<double>(i);
    return acc;
}

// Advance a lexicographic r-combination over {0..n-1}; false at the end.
bool next_combination(std::vector<int>& idx, int n) {
    const int r = static_cast<int>(idx.size());
    for (int i = r - 1; i >= 0; --i) {
        if (idx[i] < n - r + i) {
            ++idx[i];
            for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

EstimatorConfig EstimatorConfig::from_exponents(double kappa, double delta) {
    if (kappa <= 0.0 || delta <= 0.0)
        throw std::invalid_argument("EstimatorConfig: kappa and delta must be positive");
    EstimatorConfig cfg;
    cfg.kappa = kappa;
    cfg.delta = delta;
    cfg.truncation_order = std::max(1, static_cast<int>(std::ceil((kappa + 1.0) / delta)));
    return cfg;
}

ApproxPermanentResult approx_permanent_from_phi(const ComplexMatrix& phi, int big_m, int l_modes,
                                                const EstimatorConfig& cfg,
                                                const NumericPolicy& policy) {
    if (!phi.square()) throw std::invalid_argument("approx_permanent: Phi must be square");
    const int n = static_cast<int>(phi.rows());
    const int s = cfg.truncation_order;
    if (s < 1) throw std::invalid_argument("approx_permanent: truncation order must be >= 1");

    ApproxPermanentResult out;
    out.truncation_order = std::min(s, n);
    out.epsilon = std::pow(static_cast<double>(n), -cfg.kappa);

    if (s > n) {
        // Untruncated estimator is just the exact permanent of I - Phi.
        out.exact_fallback = true;
        ComplexMatrix h = ComplexMatrix::identity(n) - phi;
        out.estimate = permanent_ryser(h, policy, &out.work_units).real();
        out.flop_estimate = static_cast<double>(n) * std::pow(2.0, n);
        out.ts_ok = true;
        return out;
    }

    // Truncated inclusion-exclusion, one Ryser call per subset, orders r <= s.
    double estimate = 1.0;
    double ts = 0.0;
    for (int r = 1; r <= s; ++r) {
        std::vector<int> idx(r);
        std::iota(idx.begin(), idx.end(), 0);
        double order_sum = 0.0;
        do {
            const ComplexMatrix sub = phi.submatrix(idx, idx);
            order_sum += permanent_ryser(sub, policy, &out.work_units).real();
        } while (next_combination(idx, n));
        estimate += (r % 2 == 0 ? 1.0 : -1.0) * order_sum;
        if (r == s) ts = order_sum;
    }
    out.estimate = estimate;
    out.ts_empirical = ts;

    out.flop_estimate = binomial(n, s) * static_cast<double>(s) * std::pow(2.0, s);
    if (big_m > 0) {
        // <per(Phi[r-subset])> = prod_{l<r} (L+l)/(M+l) over Haar networks.
        double mean = binomial(n, s);
        for (int l = 0; l < s; ++l)
            mean *= static_cast<double>(l_modes + l) / static_cast<double>(big_m + l);
        out.ts_mean_analytic = mean;
        out.cheb_bound = out.ts_mean_analytic / out.epsilon;
    }
    out.ts_ok = out.ts_empirical <= out.epsilon;
    return out;
}

ApproxPermanentResult approx_permanent(const BunchingProblem& problem, const EstimatorConfig& cfg,
                                       const NumericPolicy& policy) {
    problem.validate();
    const ComplexMatrix phi = build_phi(problem);
    return approx_permanent_from_phi(phi, problem.modes(),
                                     problem.modes() - problem.subset_size(), cfg, policy);
}

}  // namespace bunchkit
