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

#ifndef BUNCHKIT_NUMKIT_PERMANENT_HPP
#define BUNCHKIT_NUMKIT_PERMANENT_HPP

#include <cstdint>

#include "bunchkit/numkit/complex_matrix.hpp"
#include "bunchkit/numkit/tolerances.hpp"

namespace bunchkit {

/**
 * @brief per(A) by Ryser's formula with Gray-code subset iteration.
 *
 * Runs in O(N 2^N); dimension capped at policy.caps.permanent_ryser_max
 * (capacity error beyond). The optional counter accumulates inner-loop work
 * in units of one complex multiply-add, (2^N - 1) * N per call, so callers
 * can account flops against the r 2^r cost model.
 */
Complex permanent_ryser(const ComplexMatrix& a,
                        const NumericPolicy& policy = NumericPolicy::defaults(),
                        std::uint64_t* work_units = nullptr);

/// Brute-force permanent over all N! permutations (oracle, N <= 9).
Complex permanent_naive(const ComplexMatrix& a,
                        const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
