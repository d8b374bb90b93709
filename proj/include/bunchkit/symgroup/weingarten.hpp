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

#ifndef BUNCHKIT_SYMGROUP_WEINGARTEN_HPP
#define BUNCHKIT_SYMGROUP_WEINGARTEN_HPP

#include <map>

#include "bunchkit/symgroup/permutation.hpp"

namespace bunchkit {

/**
 * @brief Weingarten function of U(m) on S_n, stored per cycle type.
 *
 * Computed by solving G w = e_id with the n! x n! Gram matrix
 * G_{sigma,tau} = m^{#(sigma^-1 tau)}; the function depends only on the
 * cycle structure, so the table is keyed by cycle type. Requires m >= n so
 * the Gram matrix is invertible (rank-deficiency error otherwise).
 */
class WeingartenTable {
  public:
    WeingartenTable(int m, int n, const NumericPolicy& policy = NumericPolicy::defaults());

    int m() const { return m_; }
    int n() const { return n_; }

    double value(const CycleType& type) const;
    double value(const Permutation& p) const { return value(cycle_type(p)); }

    const std::map<CycleType, double>& table() const { return table_; }

    /// sum_sigma W(m, sigma); closed form (m-1)!/(m+n-1)!.
    double plain_sum() const;
    /// sum_sigma sgn(sigma) W(m, sigma); closed form (m-n)!/m!.
    double signed_sum() const;
    /// max-norm residual of G * w - e_id on the solved system.
    double gram_residual() const { return gram_residual_; }

  private:
    int m_;
    int n_;
    std::map<CycleType, double> table_;
    double gram_residual_ = 0.0;
};

}  // namespace bunchkit

#endif
