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

#include "bunchkit/haarstats/fig_data.hpp"

#include <iomanip>

namespace bunchkit {

void write_average_comparison_csv(const std::vector<AverageComparisonRow>& rows,
                                  std::ostream& out) {
    out << "N,M,K,L,analytic_boson,analytic_classical,mc_boson_mean,mc_boson_se,"
           "mc_classical_mean,mc_classical_se,scattershot_boson,scattershot_classical\n";
    out << std::setprecision(12);
    for (const auto& r : rows) {
        out << r.n << ',' << r.m << ',' << r.k << ',' << r.l << ',' << r.analytic_boson << ','
            << r.analytic_classical << ',' << r.mc_boson_mean << ',' << r.mc_boson_se << ','
            << r.mc_classical_mean << ',' << r.mc_classical_se << ',' << r.scattershot_boson
            << ',' << r.scattershot_classical << '\n';
    }
}

}  // namespace bunchkit
