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

#ifndef BUNCHKIT_SYMGROUP_PERMUTATION_HPP
#define BUNCHKIT_SYMGROUP_PERMUTATION_HPP

#include <cstdint>
#include <vector>

#include "bunchkit/numkit/tolerances.hpp"

namespace bunchkit {

/**
 * @brief Element of S_n in one-line notation (0-based images).
 *
 * The canonical index of a permutation everywhere in this library is its
 * lexicographic rank in 0 .. n!-1 (identity has rank 0); J-function tables
 * and Schur power matrices are laid out in that order.
 */
class Permutation {
  public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation from_rank(int n, std::uint64_t rank);

    int n() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    std::uint64_t rank() const;

    /// (this o rhs)(i) = this(rhs(i)).
    Permutation compose(const Permutation& rhs) const;
    Permutation inverse() const;
    int sign() const;
    /// Number of fixed points, c_1.
    int fixed_points() const;

    bool is_identity() const;
    bool operator==(const Permutation& rhs) const { return images_ == rhs.images_; }

  private:
    std::vector<int> images_;
};

/**
 * @brief Cycle statistics of a permutation: counts[s-1] = c_s, number of
 * cycles of length s. Satisfies sum_s s*c_s = n.
 */
struct CycleType {
    std::vector<int> counts;
    int total_cycles() const;
    int n() const;
    bool operator==(const CycleType& rhs) const { return counts == rhs.counts; }
    bool operator<(const CycleType& rhs) const { return counts < rhs.counts; }
};

CycleType cycle_type(const Permutation& p);

std::uint64_t factorial(int n);

/// All n! permutations in lexicographic-rank order (cap: n <= 8 by default).
std::vector<Permutation> enumerate_group(int n,
                                         const NumericPolicy& policy = NumericPolicy::defaults());

}  // namespace bunchkit

#endif
