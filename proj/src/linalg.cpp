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

#include "bunchkit/numkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bunchkit {

namespace {

struct LuFactors {
    ComplexMatrix lu;
    std::vector<int> pivot;
    int swaps = 0;
    bool singular = false;
};

LuFactors lu_decompose(const ComplexMatrix& a) {
    if (!a.square()) throw std::invalid_argument("LU: matrix not square");
    const int n = static_cast<int>(a.rows());
    LuFactors f{a, std::vector<int>(n), 0, false};
    std::iota(f.pivot.begin(), f.pivot.end(), 0);
    for (int k = 0; k < n; ++k) {
        int best = k;
        double best_abs = std::abs(f.lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(f.lu(i, k));
            if (v > best_abs) {
                best = i;
                best_abs = v;
            }
        }
        if (best_abs == 0.0) {
            f.singular = true;
            continue;
        }
        if (best != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(best, j));
            std::swap(f.pivot[k], f.pivot[best]);
            ++f.swaps;
        }
        const Complex inv_piv = 1.0 / f.lu(k, k);
        for (int i = k + 1; i < n; ++i) {
            const Complex m = f.lu(i, k) * inv_piv;
            f.lu(i, k) = m;
            if (m == Complex(0.0, 0.0)) continue;
            for (int j = k + 1; j < n; ++j) f.lu(i, j) -= m * f.lu(k, j);
        }
    }
    return f;
}

}  // namespace

Complex determinant(const ComplexMatrix& a) {
    LuFactors f = lu_decompose(a);
    if (f.singular) return Complex(0.0, 0.0);
    Complex det = (f.swaps % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
    for (std::size_t k = 0; k < a.rows(); ++k) det *= f.lu(k, k);
    return det;
}

std::vector<Complex> solve_linear(const ComplexMatrix& a, const std::vector<Complex>& b) {
    const int n = static_cast<int>(a.rows());
    if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: shape mismatch");
    LuFactors f = lu_decompose(a);
    if (f.singular) throw std::runtime_error("solve_linear: singular matrix");
    std::vector<Complex> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.pivot[i]];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) x[i] -= f.lu(i, j) * x[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= f.lu(i, j) * x[j];
        x[i] /= f.lu(i, i);
    }
    return x;
}

namespace {

// One cyclic complex Jacobi pass; returns remaining off-diagonal Frobenius^2.
// `vectors` may be null when only eigenvalues are requested.
double jacobi_sweep(ComplexMatrix& a, ComplexMatrix* vectors) {
    const int n = static_cast<int>(a.rows());
    for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
            const Complex apq = a(p, q);
            const double r = std::abs(apq);
            if (r == 0.0) continue;
            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const Complex phase = apq / r;  // e^{i phi}

            const double tau = (aqq - app) / (2.0 * r);
            const double t =
                (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const double s = t * c;

            // Rotation columns: R(:,p) = (c, -s e^{-i phi}), R(:,q) = (s, c e^{-i phi}).
            const Complex rqp = -s * std::conj(phase);
            const Complex rqq = c * std::conj(phase);
            for (int i = 0; i < n; ++i) {
                const Complex aip = a(i, p);
                const Complex aiq = a(i, q);
                a(i, p) = c * aip + rqp * aiq;
                a(i, q) = s * aip + rqq * aiq;
            }
            for (int j = 0; j < n; ++j) {
                const Complex apj = a(p, j);
                const Complex aqj = a(q, j);
                a(p, j) = c * apj + std::conj(rqp) * aqj;
                a(q, j) = s * apj + std::conj(rqq) * aqj;
            }
            a(p, q) = 0.0;
            a(q, p) = 0.0;
            a(p, p) = Complex(a(p, p).real(), 0.0);
            a(q, q) = Complex(a(q, q).real(), 0.0);
            if (vectors) {
                for (int i = 0; i < n; ++i) {
                    const Complex vip = (*vectors)(i, p);
                    const Complex viq = (*vectors)(i, q);
                    (*vectors)(i, p) = c * vip + rqp * viq;
                    (*vectors)(i, q) = s * vip + rqq * viq;
                }
            }
        }
    }
    double off2 = 0.0;
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) off2 += std::norm(a(p, q));
    return 2.0 * off2;
}

EigResult hermitian_eig_impl(const ComplexMatrix& input, bool want_vectors,
                             const NumericPolicy& policy) {
    if (!input.square()) throw std::invalid_argument("hermitian_eig: matrix not square");
    input.check_finite("hermitian_eig");
    const double defect = input.hermiticity_defect();
    const double scale = std::max(1.0, input.max_abs());
    if (defect > policy.tol.hermiticity * scale)
        throw std::invalid_argument("hermitian_eig: input not Hermitian (defect " +
                                    std::to_string(defect) + ")");

    const int n = static_cast<int>(input.rows());
    ComplexMatrix a = input;
    // Symmetrize exactly so rounding in the caller cannot bias the iteration.
    for (int i = 0; i < n; ++i) {
        a(i, i) = Complex(a(i, i).real(), 0.0);
        for (int j = i + 1; j < n; ++j) {
            const Complex avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = avg;
            a(j, i) = std::conj(avg);
        }
    }

    EigResult out;
    ComplexMatrix vectors = ComplexMatrix::identity(n);
    ComplexMatrix* vec_ptr = want_vectors ? &vectors : nullptr;

    double frob2 = 0.0;
    for (const auto& v : a.data()) frob2 += std::norm(v);
    const double stop = std::max(frob2, 1.0) * 1e-30;

    const int max_sweeps = 64;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (jacobi_sweep(a, vec_ptr) <= stop) break;
    }
    if (sweep == max_sweeps)
        throw std::runtime_error("hermitian_eig: Jacobi iteration failed to converge");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a(order[i], order[i]).real();
    if (want_vectors) {
        out.vectors = ComplexMatrix(n, n);
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) out.vectors(i, j) = vectors(i, order[j]);
    }
    return out;
}

}  // namespace

EigResult hermitian_eig(const ComplexMatrix& a, const NumericPolicy& policy) {
    return hermitian_eig_impl(a, true, policy);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a, const NumericPolicy& policy) {
    return hermitian_eig_impl(a, false, policy).values;
}

ComplexMatrix hermitian_sqrt_psd(const ComplexMatrix& a, const NumericPolicy& policy) {
    EigResult eig = hermitian_eig(a, policy);
    const int n = static_cast<int>(a.rows());
    const double lambda_max = std::max(eig.values.empty() ? 0.0 : eig.values.back(), 0.0);
    const double floor = -policy.tol.psd_relative * std::max(lambda_max, 1.0);
    ComplexMatrix out(n, n);
    for (int k = 0; k < n; ++k) {
        double lambda = eig.values[k];
        if (lambda < floor)
            throw std::runtime_error("hermitian_sqrt_psd: matrix not p.s.d. (eigenvalue " +
                                     std::to_string(lambda) + ")");
        lambda = std::max(lambda, 0.0);
        const double root = std::sqrt(lambda);
        for (int i = 0; i < n; ++i) {
            const Complex vi = eig.vectors(i, k) * root;
            for (int j = 0; j < n; ++j) out(i, j) += vi * std::conj(eig.vectors(j, k));
        }
    }
    return out;
}

PolarResult polar_and_svd(const ComplexMatrix& u, const NumericPolicy& policy) {
    if (!u.square()) throw std::invalid_argument("polar_and_svd: matrix not square");
    u.check_finite("polar_and_svd");
    const int n = static_cast<int>(u.rows());

    // Right singular vectors from u^dag u, then left vectors by mapping
    // through u; null directions are completed to an orthonormal frame.
    EigResult eig = hermitian_eig(u.adjoint() * u, policy);

    PolarResult res;
    res.singular_values.resize(n);
    // Descending singular values; a stable reordering keeps degenerate
    // eigenspaces in their original basis (diagonal input stays diagonal).
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return eig.values[i] > eig.values[j]; });
    ComplexMatrix right(n, n);
    for (int k = 0; k < n; ++k) {
        res.singular_values[k] = std::sqrt(std::max(eig.values[order[k]], 0.0));
        for (int i = 0; i < n; ++i) right(i, k) = eig.vectors(i, order[k]);
    }
    if (!res.singular_values.empty() &&
        res.singular_values.front() > 1.0 + policy.tol.singular_value_slack)
        throw std::runtime_error("polar_and_svd: singular value " +
                                 std::to_string(res.singular_values.front()) +
                                 " > 1, not a passive network");

    const double rank_cut = std::max(res.singular_values.front(), 1.0) * 1e-12;
    ComplexMatrix left(n, n);
    std::vector<bool> filled(n, false);
    for (int k = 0; k < n; ++k) {
        if (res.singular_values[k] <= rank_cut) continue;
        for (int i = 0; i < n; ++i) {
            Complex acc(0.0, 0.0);
            for (int j = 0; j < n; ++j) acc += u(i, j) * right(j, k);
            left(i, k) = acc / res.singular_values[k];
        }
        filled[k] = true;
    }
    // Complete null space columns by Gram-Schmidt against the filled ones.
    for (int k = 0; k < n; ++k) {
        if (filled[k]) continue;
        for (int cand = 0; cand < n; ++cand) {
            std::vector<Complex> v(n, Complex(0.0, 0.0));
            v[cand] = 1.0;
            for (int pass = 0; pass < 2; ++pass) {
                for (int j = 0; j < n; ++j) {
                    if (!filled[j]) continue;
                    Complex proj(0.0, 0.0);
                    for (int i = 0; i < n; ++i) proj += std::conj(left(i, j)) * v[i];
                    for (int i = 0; i < n; ++i) v[i] -= proj * left(i, j);
                }
            }
            double norm2 = 0.0;
            for (const auto& x : v) norm2 += std::norm(x);
            if (norm2 > 0.25) {
                const double inv = 1.0 / std::sqrt(norm2);
                for (int i = 0; i < n; ++i) left(i, k) = v[i] * inv;
                filled[k] = true;
                break;
            }
        }
        if (!filled[k]) throw std::runtime_error("polar_and_svd: basis completion failed");
    }

    // sqrtA = W S W^dag, unitary factor = W X^dag.
    res.sqrtA = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        const double s = res.singular_values[k];
        if (s == 0.0) continue;
        for (int i = 0; i < n; ++i) {
            const Complex lis = left(i, k) * s;
            for (int j = 0; j < n; ++j) res.sqrtA(i, j) += lis * std::conj(left(j, k));
        }
    }
    res.unitary_factor = left * right.adjoint();
    return res;
}

}  // namespace bunchkit
