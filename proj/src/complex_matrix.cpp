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

#include "bunchkit/numkit/complex_matrix.hpp"

#include <cmath>
#include <string>

namespace bunchkit {

const NumericPolicy& NumericPolicy::defaults() {
    static const NumericPolicy policy{};
    return policy;
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = std::conj(data_[i]);
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Complex a = (*this)(i, k);
            if (a == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference: shape mismatch");
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
    return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
    ComplexMatrix out = *this;
    for (auto& v : out.data_) v *= factor;
    return out;
}

ComplexMatrix ComplexMatrix::submatrix(const std::vector<int>& row_idx,
                                       const std::vector<int>& col_idx) const {
    ComplexMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t r = 0; r < row_idx.size(); ++r) {
        if (row_idx[r] < 0 || static_cast<std::size_t>(row_idx[r]) >= rows_)
            throw std::out_of_range("submatrix: row index out of range");
        for (std::size_t c = 0; c < col_idx.size(); ++c) {
            if (col_idx[c] < 0 || static_cast<std::size_t>(col_idx[c]) >= cols_)
                throw std::out_of_range("submatrix: column index out of range");
            out(r, c) = (*this)(row_idx[r], col_idx[c]);
        }
    }
    return out;
}

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
    std::vector<Complex> y(rows_, Complex(0.0, 0.0));
    for (std::size_t i = 0; i < rows_; ++i) {
        Complex acc(0.0, 0.0);
        const Complex* row = data_.data() + i * cols_;
        for (std::size_t j = 0; j < cols_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
        m = std::max(m, std::abs(data_[i] - other.data_[i]));
    return m;
}

double ComplexMatrix::hermiticity_defect() const {
    if (!square()) throw std::invalid_argument("hermiticity_defect: matrix not square");
    double m = 0.0;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r; c < cols_; ++c)
            m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return m;
}

double ComplexMatrix::unitarity_defect() const {
    ComplexMatrix g = adjoint() * (*this);
    double m = 0.0;
    for (std::size_t r = 0; r < g.rows(); ++r)
        for (std::size_t c = 0; c < g.cols(); ++c) {
            Complex expect = (r == c) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            m = std::max(m, std::abs(g(r, c) - expect));
        }
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const auto& v : data_)
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
}

void ComplexMatrix::check_finite(const char* where) const {
    if (!all_finite())
        throw std::runtime_error(std::string(where) + ": non-finite matrix entry");
}

UnitaryMatrix::UnitaryMatrix(ComplexMatrix m, const NumericPolicy& policy) : inner_(std::move(m)) {
    if (!inner_.square()) throw std::invalid_argument("UnitaryMatrix: matrix not square");
    inner_.check_finite("UnitaryMatrix");
    const double defect = inner_.unitarity_defect();
    if (defect > policy.tol.unitarity)
        throw std::invalid_argument("UnitaryMatrix: unitarity defect " + std::to_string(defect));
}

}  // namespace bunchkit
