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

#ifndef BUNCHKIT_HAARSTATS_MONTE_CARLO_HPP
#define BUNCHKIT_HAARSTATS_MONTE_CARLO_HPP

#include <functional>

#include "bunchkit/haarstats/averages.hpp"
#include "bunchkit/numkit/rng.hpp"

namespace bunchkit {

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    int trials = 0;
};

/**
 * @brief Mean and standard error of per-trial values, each trial drawn from
 * its own substream so the estimate is independent of evaluation order and
 * thread count; aggregation uses pairwise summation for the same reason.
 */
McEstimate monte_carlo_map(int trials, RngStream& rng,
                           const std::function<double(RngStream&)>& trial_fn, int threads = 1);

/**
 * @brief Haar-averaged bunching probability over random networks with single
 * particles in the first n modes and the first k output modes counted.
 *
 * The per-network observable is per(H), det(H), prod H_aa, or p_N(J) when a
 * J-function table is supplied (then `kind` is ignored).
 */
McEstimate monte_carlo_avg(const AverageSpec& spec, const JFunction* j, int trials,
                           RngStream& rng, int threads = 1,
                           const NumericPolicy& policy = NumericPolicy::defaults());

/// Deterministic pairwise sum of a value vector.
double pairwise_sum(const std::vector<double>& values);

}  // namespace bunchkit

#endif
