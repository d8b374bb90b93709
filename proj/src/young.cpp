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

#include "bunchkit/symgroup/young.hpp"

#include <map>
#include <stdexcept>

namespace bunchkit {

YoungSubgroup::YoungSubgroup(std::vector<int> labels, bool) : labels_(std::move(labels)) {}

YoungSubgroup::YoungSubgroup(const std::vector<int>& occupation) {
    if (occupation.empty()) throw std::invalid_argument("YoungSubgroup: empty occupation");
    for (std::size_t k = 0; k < occupation.size(); ++k) {
        if (occupation[k] < 0) throw std::invalid_argument("YoungSubgroup: negative occupation");
        for (int t = 0; t < occupation[k]; ++t) labels_.push_back(static_cast<int>(k));
    }
    if (labels_.empty()) throw std::invalid_argument("YoungSubgroup: zero total occupation");
}

YoungSubgroup YoungSubgroup::from_labels(const std::vector<int>& labels) {
    if (labels.empty()) throw std::invalid_argument("YoungSubgroup: empty label list");
    return YoungSubgroup(labels, true);
}

std::uint64_t YoungSubgroup::order() const { return labels_mu(labels_); }

bool YoungSubgroup::contains(const Permutation& p) const {
    if (p.n() != n()) throw std::invalid_argument("YoungSubgroup::contains: size mismatch");
    for (int i = 0; i < p.n(); ++i)
        if (labels_[p(i)] != labels_[i]) return false;
    return true;
}

std::vector<std::uint64_t> YoungSubgroup::member_ranks(const NumericPolicy& policy) const {
    std::vector<std::uint64_t> ranks;
    const auto group = enumerate_group(n(), policy);
    for (const auto& p : group)
        if (contains(p)) ranks.push_back(p.rank());
    return ranks;  // enumeration order is rank order, so already sorted
}

std::uint64_t occupation_mu(const std::vector<int>& occupation) {
    std::uint64_t mu = 1;
    for (int nk : occupation) {
        if (nk < 0) throw std::invalid_argument("occupation_mu: negative occupation");
        mu *= factorial(nk);
    }
    return mu;
}

std::uint64_t labels_mu(const std::vector<int>& labels) {
    std::map<int, int> counts;
    for (int l : labels) ++counts[l];
    std::uint64_t mu = 1;
    for (const auto& [label, c] : counts) mu *= factorial(c);
    return mu;
}

}  // namespace bunchkit
