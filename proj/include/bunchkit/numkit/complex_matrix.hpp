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

#ifndef BUNCHKIT_NUMKIT_COMPLEX_MATRIX_HPP
#define BUNCHKIT_NUMKIT_COMPLEX_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "bunchkit/numkit/tolerances.hpp"

namespace bunchkit {

using Complex = std::complex<double>;

/**
 * @brief Dense complex matrix, row-major storage.
 *
 * Values are immutable in spirit: every library operation returns a fresh
 * matrix instead of mutating shared state, so instances can be shared across
 * threads freely.
 */
class ComplexMatrix {
  public:
    ComplexMatrix() = default;

    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("ComplexMatrix: dimensions must be >= 1");
    }

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix scaled(Complex factor) const;

    /// Submatrix on the given (0-based) row and column index lists.
    ComplexMatrix submatrix(const std::vector<int>& row_idx,
                            const std::vector<int>& col_idx) const;

    std::vector<Complex> apply(const std::vector<Complex>& x) const;

    double max_abs() const;
    /// ||A - B||_max
    double max_abs_diff(const ComplexMatrix& other) const;
    /// ||A - A^dag||_max (square matrices)
    double hermiticity_defect() const;
    /// ||A^dag A - I||_max (columns orthonormal)
    double unitarity_defect() const;
    bool all_finite() const;

    void check_finite(const char* where) const;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

/**
 * @brief Square matrix checked to be unitary at construction.
 */
class UnitaryMatrix {
  public:
    explicit UnitaryMatrix(ComplexMatrix m,
                           const NumericPolicy& policy = NumericPolicy::defaults());

    const ComplexMatrix& matrix() const { return inner_; }
    std::size_t dim() const { return inner_.rows(); }

  private:
    ComplexMatrix inner_;
};

}  // namespace bunchkit

#endif
