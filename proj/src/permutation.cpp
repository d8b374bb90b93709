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

#include "bunchkit/symgroup/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace bunchkit {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    if (images_.empty()) throw std::invalid_argument("Permutation: empty image list");
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 0 || v >= static_cast<int>(images_.size()) || seen[v])
            throw std::invalid_argument("Permutation: images are not a bijection");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

std::uint64_t factorial(int n) {
    if (n < 0 || n > 20) throw std::invalid_argument("factorial: need 0 <= n <= 20");
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

Permutation Permutation::from_rank(int n, std::uint64_t rank) {
    if (n < 1 || n > 20) throw std::invalid_argument("Permutation::from_rank: need 1 <= n <= 20");
    if (rank >= factorial(n)) throw std::invalid_argument("Permutation::from_rank: rank too large");
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<int> img(n);
    std::uint64_t base = factorial(n - 1);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t digit = (base > 0) ? rank / base : 0;
        rank -= digit * base;
        img[i] = pool[digit];
        pool.erase(pool.begin() + static_cast<long>(digit));
        if (i + 1 < n) base /= static_cast<std::uint64_t>(n - 1 - i);
    }
    return Permutation(std::move(img));
}

std::uint64_t Permutation::rank() const {
    // Lehmer code: digit i counts remaining smaller values to the right.
    const int sz = n();
    std::uint64_t r = 0;
    std::uint64_t base = factorial(sz - 1);
    std::vector<bool> used(sz, false);
    for (int i = 0; i < sz; ++i) {
        int smaller = 0;
        for (int v = 0; v < images_[i]; ++v)
            if (!used[v]) ++smaller;
        used[images_[i]] = true;
        r += static_cast<std::uint64_t>(smaller) * base;
        if (i + 1 < sz) base /= static_cast<std::uint64_t>(sz - 1 - i);
    }
    return r;
}

Permutation Permutation::compose(const Permutation& rhs) const {
    if (n() != rhs.n()) throw std::invalid_argument("Permutation::compose: size mismatch");
    std::vector<int> img(n());
    for (int i = 0; i < n(); ++i) img[i] = images_[rhs.images_[i]];
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> img(n());
    for (int i = 0; i < n(); ++i) img[images_[i]] = i;
    return Permutation(std::move(img));
}

int Permutation::sign() const {
    std::vector<bool> seen(n(), false);
    int transpositions = 0;
    for (int i = 0; i < n(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        transpositions += len - 1;
    }
    return (transpositions % 2 == 0) ? 1 : -1;
}

int Permutation::fixed_points() const {
    int c = 0;
    for (int i = 0; i < n(); ++i)
        if (images_[i] == i) ++c;
    return c;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < n(); ++i)
        if (images_[i] != i) return false;
    return true;
}

int CycleType::total_cycles() const {
    int t = 0;
    for (int c : counts) t += c;
    return t;
}

int CycleType::n() const {
    int s = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) s += static_cast<int>(i + 1) * counts[i];
    return s;
}

CycleType cycle_type(const Permutation& p) {
    CycleType ct;
    ct.counts.assign(p.n(), 0);
    std::vector<bool> seen(p.n(), false);
    for (int i = 0; i < p.n(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = p(j)) {
            seen[j] = true;
            ++len;
        }
        ++ct.counts[len - 1];
    }
    return ct;
}

std::vector<Permutation> enumerate_group(int n, const NumericPolicy& policy) {
    if (n < 1) throw std::invalid_argument("enumerate_group: n must be >= 1");
    if (n > policy.caps.group_enumeration_max)
        throw std::runtime_error("enumerate_group: n " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(policy.caps.group_enumeration_max));
    const std::uint64_t count = factorial(n);
    std::vector<Permutation> out;
    out.reserve(count);
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    // std::next_permutation walks exactly the lexicographic-rank order.
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace bunchkit
