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

#ifndef BUNCHKIT_SYMGROUP_YOUNG_HPP
#define BUNCHKIT_SYMGROUP_YOUNG_HPP

#include <cstdint>
#include <vector>

#include "bunchkit/symgroup/permutation.hpp"

namespace bunchkit {

/**
 * @brief Young subgroup S_{n_1} x ... x S_{n_M} of S_N for an occupation
 * vector (n_1,...,n_M), sum n_k = N. Particle slots are grouped by their
 * block labels: slot alpha belongs to block k iff its label equals k.
 */
class YoungSubgroup {
  public:
    /// Blocks from an occupation list (consecutive slots per block).
    explicit YoungSubgroup(const std::vector<int>& occupation);
    /// Blocks from per-slot labels (e.g. input mode of each particle).
    static YoungSubgroup from_labels(const std::vector<int>& labels);

    int n() const { return static_cast<int>(labels_.size()); }
    /// mu(n) = prod n_k!, the subgroup order.
    std::uint64_t order() const;
    bool contains(const Permutation& p) const;

    /// Sorted lexicographic ranks of all members (requires n <= enumeration cap).
    std::vector<std::uint64_t> member_ranks(
        const NumericPolicy& policy = NumericPolicy::defaults()) const;

    const std::vector<int>& labels() const { return labels_; }

  private:
    explicit YoungSubgroup(std::vector<int> labels, bool);
    std::vector<int> labels_;
};

/// mu(n) = prod_k n_k! for an occupation vector.
std::uint64_t occupation_mu(const std::vector<int>& occupation);

/// Occupation multiplicities of a label list (e.g. input modes with repeats).
std::uint64_t labels_mu(const std::vector<int>& labels);

}  // namespace bunchkit

#endif
