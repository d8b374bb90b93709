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

#include "bunchkit/haarstats/monte_carlo.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "bunchkit/bunching/problem.hpp"
#include "bunchkit/numkit/haar.hpp"

namespace bunchkit {

double pairwise_sum(const std::vector<double>& values) {
    if (values.empty()) return 0.0;
    std::vector<double> buf = values;
    std::size_t len = buf.size();
    while (len > 1) {
        const std::size_t half = len / 2;
        for (std::size_t i = 0; i < half; ++i) buf[i] = buf[2 * i] + buf[2 * i + 1];
        if (len % 2 == 1) {
            buf[half] = buf[len - 1];
            len = half + 1;
        } else {
            len = half;
        }
    }
    return buf[0];
}

McEstimate monte_carlo_map(int trials, RngStream& rng,
                           const std::function<double(RngStream&)>& trial_fn, int threads) {
    if (trials < 2) throw std::invalid_argument("monte_carlo_map: need at least 2 trials");
    std::vector<double> values(trials);

    auto run_range = [&](int begin, int end) {
        for (int t = begin; t < end; ++t) {
            RngStream trial_rng = rng.substream(static_cast<std::uint64_t>(t));
            values[t] = trial_fn(trial_rng);
        }
    };
    if (threads <= 1) {
        run_range(0, trials);
    } else {
        std::vector<std::thread> pool;
        const int chunk = (trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            const int begin = w * chunk;
            const int end = std::min(trials, begin + chunk);
            if (begin >= end) break;
            pool.emplace_back(run_range, begin, end);
        }
        for (auto& th : pool) th.join();
    }

    McEstimate est;
    est.trials = trials;
    est.mean = pairwise_sum(values) / trials;
    std::vector<double> sq(trials);
    for (int t = 0; t < trials; ++t) {
        const double d = values[t] - est.mean;
        sq[t] = d * d;
    }
    est.std_error = std::sqrt(pairwise_sum(sq) / (static_cast<double>(trials) * (trials - 1)));
    return est;
}

McEstimate monte_carlo_avg(const AverageSpec& spec, const JFunction* j, int trials,
                           RngStream& rng, int threads, const NumericPolicy& policy) {
    spec.validate();
    if (j && j->n() != spec.n)
        throw std::invalid_argument("monte_carlo_avg: J dimension mismatch");
    std::vector<int> labels(spec.n);
    std::iota(labels.begin(), labels.end(), 1);

    auto trial_fn = [&](RngStream& trial_rng) -> double {
        const ComplexMatrix rows = haar_isometry_rows(spec.n, spec.m, trial_rng);
        ComplexMatrix h(spec.n, spec.n);
        for (int a = 0; a < spec.n; ++a)
            for (int b = 0; b < spec.n; ++b) {
                Complex acc(0.0, 0.0);
                for (int l = 0; l < spec.k; ++l) acc += rows(a, l) * std::conj(rows(b, l));
                h(a, b) = acc;
            }
        if (j) return prob_all_in_subset(*j, h, labels, policy);
        const LimitProbabilities lim = limit_probabilities(h, labels, policy);
        switch (spec.kind) {
            case ParticleKind::Boson: return lim.boson;
            case ParticleKind::Fermion: return lim.fermion;
            case ParticleKind::Classical: return lim.distinguishable;
        }
        return 0.0;
    };
    return monte_carlo_map(trials, rng, trial_fn, threads);
}

}  // namespace bunchkit
