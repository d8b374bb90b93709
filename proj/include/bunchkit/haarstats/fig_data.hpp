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

#ifndef BUNCHKIT_HAARSTATS_FIG_DATA_HPP
#define BUNCHKIT_HAARSTATS_FIG_DATA_HPP

#include <ostream>
#include <vector>

namespace bunchkit {

/**
 * @brief One row of the average-probability comparison data set (analytic
 * laws vs Monte Carlo vs scattershot sampling at protocol geometry).
 */
struct AverageComparisonRow {
    int n = 0, m = 0, k = 0, l = 0;
    double analytic_boson = 0.0;
    double analytic_classical = 0.0;
    double mc_boson_mean = 0.0, mc_boson_se = 0.0;
    double mc_classical_mean = 0.0, mc_classical_se = 0.0;
    double scattershot_boson = 0.0;
    double scattershot_classical = 0.0;
};

/// CSV with fixed header, '.' decimal point, locale-independent.
void write_average_comparison_csv(const std::vector<AverageComparisonRow>& rows,
                                  std::ostream& out);

}  // namespace bunchkit

#endif
