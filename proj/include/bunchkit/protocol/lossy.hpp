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

#ifndef BUNCHKIT_PROTOCOL_LOSSY_HPP
#define BUNCHKIT_PROTOCOL_LOSSY_HPP

#include "bunchkit/numkit/complex_matrix.hpp"
#include "bunchkit/numkit/linalg.hpp"

namespace bunchkit {

struct LossyEmbedding {
    UnitaryMatrix embedded;  ///< 2M x 2M unitary, top-left block = U
    PolarResult polar;       ///< U = sqrtA * W with singular values <= 1
};

/**
 * @brief Embed a passive M-mode network into a 2M-mode unitary:
 *
 *   U_hat = [ U        V ]   with D = diag(singular values of U),
 *           [ -V^dag W  D ]   Q = sqrt(I - D^2), V = S Q,
 *
 * where sqrtA = S D S^dag and W is the polar unitary factor. Modes M+1..2M
 * are vacuum-input loss channels. Throws when a singular value exceeds 1.
 */
LossyEmbedding lossy_embedding(const ComplexMatrix& u,
                               const NumericPolicy& policy = NumericPolicy::defaults());

/// The four-factor product form of the same embedding (block rotation
/// sandwiched by S and the polar unitary); equals embedded up to rounding.
ComplexMatrix lossy_embedding_product_form(const ComplexMatrix& u,
                                           const NumericPolicy& policy =
                                               NumericPolicy::defaults());

}  // namespace bunchkit

#endif
