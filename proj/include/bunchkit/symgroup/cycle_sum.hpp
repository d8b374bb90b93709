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

#ifndef BUNCHKIT_SYMGROUP_CYCLE_SUM_HPP
#define BUNCHKIT_SYMGROUP_CYCLE_SUM_HPP

#include <complex>
#include <vector>

#include "bunchkit/numkit/tolerances.hpp"

namespace bunchkit {

/// Integer partitions of n as non-increasing part lists, descending
/// lexicographic order ((n), (n-1,1), ..., (1^n)).
std::vector<std::vector<int>> partitions(int n);

/**
 * @brief Z_N = (1/N!) sum_{sigma in S_N} prod_s t_s^{c_s(sigma)}.
 *
 * Evaluated over integer partitions with the conjugacy-class size formula,
 * so no N! enumeration is needed; t must have n entries (t_1..t_n).
 */
std::complex<double> cycle_sum_zn(int n, const std::vector<std::complex<double>>& t,
                                  const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
