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

#ifndef BUNCHKIT_NUMKIT_HAAR_HPP
#define BUNCHKIT_NUMKIT_HAAR_HPP

#include "bunchkit/numkit/complex_matrix.hpp"
#include "bunchkit/numkit/rng.hpp"
#include "bunchkit/numkit/tolerances.hpp"

namespace bunchkit {

/**
 * @brief m x m unitary distributed exactly per the Haar measure.
 *
 * A complex Ginibre matrix is orthonormalized column by column with the
 * diagonal of the implied R factor kept real positive; this is the unique QR
 * normalization whose Q factor is exactly Haar (plain LAPACK-style QR is
 * biased by arbitrary R phases).
 */
UnitaryMatrix haar_unitary(int m, RngStream& rng,
                           const NumericPolicy& policy = NumericPolicy::defaults());

/**
 * @brief n x m matrix distributed as the first n rows of a Haar unitary.
 *
 * Cheap substitute when only a submatrix of a large network enters the
 * computation; rows are exactly orthonormal.
 */
ComplexMatrix haar_isometry_rows(int n, int m, RngStream& rng);

}  // namespace bunchkit

#endif
