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

#include "bunchkit/protocol/lossy.hpp"

#include <algorithm>
#include <cmath>

namespace bunchkit {

namespace {

// S carries the left singular vectors, sqrtA = S D S^dag: the eigenbasis of
// sqrtA reordered to descending eigenvalue (stably, so diagonal input keeps
// the coordinate basis).
ComplexMatrix left_vectors_from_polar(const PolarResult& polar) {
    EigResult eig = hermitian_eig(polar.sqrtA);
    const int n = static_cast<int>(polar.sqrtA.rows());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return eig.values[a] > eig.values[b]; });
    ComplexMatrix s(n, n);
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) s(i, k) = eig.vectors(i, order[k]);
    return s;
}

}  // namespace

LossyEmbedding lossy_embedding(const ComplexMatrix& u, const NumericPolicy& policy) {
    if (!u.square()) throw std::invalid_argument("lossy_embedding: matrix must be square");
    const int m = static_cast<int>(u.rows());
    PolarResult polar = polar_and_svd(u, policy);

    const ComplexMatrix s = left_vectors_from_polar(polar);
    std::vector<double> d(m), q(m);
    for (int i = 0; i < m; ++i) {
        d[i] = std::min(polar.singular_values[i], 1.0);
        q[i] = std::sqrt(std::max(0.0, 1.0 - d[i] * d[i]));
    }

    // V = S Q, computed columnwise since Q is diagonal.
    ComplexMatrix v(m, m);
    for (int i = 0; i < m; ++i)
        for (int k = 0; k < m; ++k) v(i, k) = s(i, k) * q[k];
    // -V^dag W and D = diag(d) in the S eigenbasis: D block = S D S^dag only
    // through the product form; the closed form uses diag(d) directly in the
    // singular basis, i.e. lower-right block = D (diagonal in that basis).
    const ComplexMatrix vw = v.adjoint() * polar.unitary_factor;

    ComplexMatrix out(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            out(i, j) = u(i, j);
            out(i, m + j) = v(i, j);
            out(m + i, j) = -vw(i, j);
            out(m + i, m + j) = (i == j) ? Complex(d[i], 0.0) : Complex(0.0, 0.0);
        }

    LossyEmbedding emb{UnitaryMatrix(std::move(out), policy), std::move(polar)};
    // Top-left block recovery is exact by construction; the unitarity check
    // happened in the UnitaryMatrix constructor.
    return emb;
}

ComplexMatrix lossy_embedding_product_form(const ComplexMatrix& u, const NumericPolicy& policy) {
    const int m = static_cast<int>(u.rows());
    PolarResult polar = polar_and_svd(u, policy);
    const ComplexMatrix s = left_vectors_from_polar(polar);

    ComplexMatrix s_big = ComplexMatrix::identity(2 * m);
    ComplexMatrix rot(2 * m, 2 * m);
    ComplexMatrix s_big_dag = ComplexMatrix::identity(2 * m);
    ComplexMatrix w_big = ComplexMatrix::identity(2 * m);
    for (int i = 0; i < m; ++i) {
        const double d = std::min(polar.singular_values[i], 1.0);
        const double q = std::sqrt(std::max(0.0, 1.0 - d * d));
        rot(i, i) = d;
        rot(i, m + i) = q;
        rot(m + i, i) = -q;
        rot(m + i, m + i) = d;
        for (int j = 0; j < m; ++j) {
            s_big(i, j) = s(i, j);
            s_big_dag(i, j) = std::conj(s(j, i));
            w_big(i, j) = polar.unitary_factor(i, j);
        }
    }
    return s_big * rot * s_big_dag * w_big;
}

}  // namespace bunchkit
