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

#include "bunchkit/numkit/haar.hpp"

#include <cmath>
#include <stdexcept>

namespace bunchkit {

namespace {

// Modified Gram-Schmidt with one reorthogonalization pass over the leading
// `count` vectors of length `len`, vectors laid out with stride `stride` and
// step `step` (so the same code orthonormalizes rows or columns). The implied
// triangular factor has a real positive diagonal, which is exactly the QR
// normalization that makes Ginibre input land on the Haar measure.
void orthonormalize(std::vector<Complex>& data, int count, int len, int stride, int step,
                    RngStream& rng) {
    for (int j = 0; j < count; ++j) {
        Complex* vj = data.data() + j * stride;
        for (int attempt = 0;; ++attempt) {
            for (int pass = 0; pass < 2; ++pass) {
                for (int i = 0; i < j; ++i) {
                    const Complex* vi = data.data() + i * stride;
                    Complex proj(0.0, 0.0);
                    for (int t = 0; t < len; ++t)
                        proj += std::conj(vi[t * step]) * vj[t * step];
                    for (int t = 0; t < len; ++t) vj[t * step] -= proj * vi[t * step];
                }
            }
            double norm2 = 0.0;
            for (int t = 0; t < len; ++t) norm2 += std::norm(vj[t * step]);
            if (norm2 > 1e-280) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (int t = 0; t < len; ++t) vj[t * step] *= inv;
                break;
            }
            // Degenerate draw (measure zero); refresh this vector and retry.
            if (attempt > 8) throw std::runtime_error("haar: orthonormalization degenerate");
            for (int t = 0; t < len; ++t) vj[t * step] = rng.next_complex_gaussian();
        }
    }
}

}  // namespace

UnitaryMatrix haar_unitary(int m, RngStream& rng, const NumericPolicy& policy) {
    if (m < 1) throw std::invalid_argument("haar_unitary: dimension must be >= 1");
    ComplexMatrix g(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = rng.next_complex_gaussian();
    // Columns: vector j starts at offset j with stride 1, element step m.
    orthonormalize(g.data(), m, m, /*stride=*/1, /*step=*/m, rng);
    return UnitaryMatrix(std::move(g), policy);
}

ComplexMatrix haar_isometry_rows(int n, int m, RngStream& rng) {
    if (n < 1 || m < n) throw std::invalid_argument("haar_isometry_rows: need 1 <= n <= m");
    ComplexMatrix g(n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) g(i, j) = rng.next_complex_gaussian();
    // Rows: vector i starts at offset i*m with stride m, element step 1.
    orthonormalize(g.data(), n, m, /*stride=*/m, /*step=*/1, rng);
    return g;
}

}  // namespace bunchkit
