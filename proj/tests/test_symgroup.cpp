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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "bunchkit/numkit/linalg.hpp"
#include "bunchkit/numkit/rng.hpp"
#include "bunchkit/symgroup/cycle_sum.hpp"
#include "bunchkit/symgroup/irreps.hpp"
#include "bunchkit/symgroup/permutation.hpp"
#include "bunchkit/symgroup/weingarten.hpp"
#include "bunchkit/symgroup/young.hpp"
#include "support/oracles.hpp"
#include "support/test_support.hpp"

using namespace bunchkit;
using namespace bunchkit::testsupport;

namespace {

Permutation random_permutation(int n, RngStream& rng) {
    return Permutation::from_rank(n, rng.next_below(factorial(n)));
}

}  // namespace

TEST_CASE("enumerate_group: order, identity first, rank round-trip") {
    CHECK(enumerate_group(1).size() == 1);
    CHECK(enumerate_group(1)[0].is_identity());

    const auto s3 = enumerate_group(3);
    CHECK(s3.size() == 6);
    CHECK(s3[0].is_identity());

    const auto s5 = enumerate_group(5);
    CHECK(s5.size() == 120);
    for (std::uint64_t r = 0; r < s5.size(); ++r) {
        CHECK(s5[r].rank() == r);
        CHECK(Permutation::from_rank(5, r) == s5[r]);
    }
    CHECK_THROWS(enumerate_group(9));
}

TEST_CASE("compose / inverse / sign") {
    CHECK(Permutation::identity(4).sign() == 1);
    CHECK(Permutation({1, 0, 2, 3}).sign() == -1);

    RngStream rng(101, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const Permutation a = random_permutation(6, rng);
        const Permutation b = random_permutation(6, rng);
        CHECK(a.compose(b).sign() == a.sign() * b.sign());
        CHECK(a.compose(a.inverse()).is_identity());
        CHECK(a.inverse().compose(a).is_identity());
        // associativity spot check
        const Permutation c = random_permutation(6, rng);
        CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
    }
    CHECK_THROWS(Permutation::identity(3).compose(Permutation::identity(4)));
}

TEST_CASE("group closure: composition tables are Latin squares up to S_5") {
    for (int n : {3, 4, 5}) {
        const auto group = enumerate_group(n);
        const std::uint64_t order = group.size();
        bool latin = true;
        for (std::uint64_t i = 0; i < order; ++i) {
            std::set<std::uint64_t> row, col;
            for (std::uint64_t j = 0; j < order; ++j) {
                row.insert(group[i].compose(group[j]).rank());
                col.insert(group[j].compose(group[i]).rank());
            }
            if (row.size() != order || col.size() != order) latin = false;
        }
        CHECK(latin);
    }
}

TEST_CASE("cycle_type: pinned and orbit-following oracle") {
    const Permutation id5 = Permutation::identity(5);
    const CycleType ct_id = cycle_type(id5);
    CHECK(ct_id.counts[0] == 5);
    CHECK(ct_id.total_cycles() == 5);
    CHECK(id5.fixed_points() == 5);

    const Permutation five_cycle({1, 2, 3, 4, 0});
    const CycleType ct5 = cycle_type(five_cycle);
    CHECK(ct5.counts[4] == 1);
    CHECK(ct5.total_cycles() == 1);

    RngStream rng(103, 0);
    for (int trial = 0; trial < 50; ++trial) {
        const Permutation p = random_permutation(7, rng);
        const CycleType ct = cycle_type(p);
        CHECK(ct.counts == oracle::cycle_counts_by_orbits(p));
        CHECK(ct.n() == 7);
        CHECK(ct.counts[0] == p.fixed_points());
    }
}

TEST_CASE("young subgroup: order, membership, symmetry of block J") {
    const YoungSubgroup y({2, 1});
    CHECK(y.order() == 2);
    CHECK(y.member_ranks().size() == 2);
    CHECK(y.contains(Permutation::identity(3)));
    CHECK(y.contains(Permutation({1, 0, 2})));
    CHECK(!y.contains(Permutation({0, 2, 1})));

    const YoungSubgroup full({3});
    CHECK(full.order() == 6);
    CHECK(full.member_ranks().size() == 6);

    CHECK(occupation_mu({2, 1}) == 2);
    CHECK(occupation_mu({3, 2}) == 12);
    CHECK(labels_mu({5, 5, 7}) == 2);
}

TEST_CASE("weingarten: closed-form n = 2 and identities") {
    const double m = 10.0;
    const WeingartenTable table(10, 2);
    const CycleType id2{{2, 0}};    // two fixed points
    const CycleType swap2{{0, 1}};  // one 2-cycle
    CHECK(table.value(id2) == doctest::Approx(1.0 / (m * m - 1.0)).epsilon(1e-12));
    CHECK(table.value(swap2) == doctest::Approx(-1.0 / (m * (m * m - 1.0))).epsilon(1e-12));
    CHECK(table.plain_sum() == doctest::Approx(1.0 / 110.0).epsilon(1e-12));  // (M-1)!/(M+1)!

    // signed sum for n = 3, m = 12: 9!/12!
    const WeingartenTable t3(12, 3);
    CHECK(t3.signed_sum() == doctest::Approx(1.0 / (12.0 * 11.0 * 10.0)).epsilon(1e-10));

    CHECK_THROWS(WeingartenTable(2, 3));  // m < n is rank-deficient
}

TEST_CASE("weingarten: Gram residual and both identities, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
        for (int m : {n, n + 3, 2 * n}) {
            const WeingartenTable table(m, n);
            CHECK(table.gram_residual() <= 1e-8);

            double plain_expect = 1.0;  // (m-1)!/(m+n-1)! = 1/(m (m+1) ... (m+n-1))
            for (int i = 0; i < n; ++i) plain_expect /= static_cast<double>(m + i);
            CHECK(std::abs(table.plain_sum() - plain_expect) <= 1e-8 * plain_expect);

            double signed_expect = 1.0;  // (m-n)!/m! = 1/(m (m-1) ... (m-n+1))
            for (int i = 0; i < n; ++i) signed_expect /= static_cast<double>(m - i);
            CHECK(std::abs(table.signed_sum() - signed_expect) <= 1e-8 * signed_expect);
        }
    }
}

TEST_CASE("cycle_sum_zn: pinned limits and group-enumeration oracle") {
    // all t_s = 1: the class sizes sum to n!.
    std::vector<Complex> ones(6, Complex(1.0, 0.0));
    CHECK(cycle_sum_zn(6, ones).real() == doctest::Approx(1.0).epsilon(1e-12));

    // only t_1 nonzero: identity class alone contributes t^n/n!.
    std::vector<Complex> t1(5, Complex(0.0, 0.0));
    t1[0] = Complex(2.0, 0.0);
    CHECK(cycle_sum_zn(5, t1).real() == doctest::Approx(std::pow(2.0, 5) / 120.0).epsilon(1e-12));

    // brute-force group enumeration oracle, n <= 7.
    RngStream rng(107, 0);
    for (int n : {2, 3, 4, 5, 6, 7}) {
        std::vector<Complex> t(n);
        for (int s = 0; s < n; ++s) t[s] = Complex(rng.next_double() * 2.0 - 1.0,
                                                   rng.next_double() - 0.5);
        Complex brute(0.0, 0.0);
        for (const auto& p : enumerate_group(n)) {
            const CycleType ct = cycle_type(p);
            Complex prod(1.0, 0.0);
            for (int s = 0; s < n; ++s)
                for (int rep = 0; rep < ct.counts[s]; ++rep) prod *= t[s];
            brute += prod;
        }
        brute /= static_cast<double>(factorial(n));
        const Complex fast = cycle_sum_zn(n, t);
        CHECK(std::abs(fast - brute) <= 1e-10 * std::max(1.0, std::abs(brute)));
    }

    // the Weingarten-asymptotics instance from the classical average path
    const double km = 10.0 * 100.0;
    std::vector<Complex> t(5);
    double g = 1.0;
    for (int s = 1; s <= 5; ++s) {
        if (s > 1) g *= static_cast<double>((2 * s - 2) * (2 * s - 3)) / (s * (s - 1));
        t[s - 1] = -km * g;
    }
    Complex brute(0.0, 0.0);
    for (const auto& p : enumerate_group(5)) {
        const CycleType ct = cycle_type(p);
        Complex prod(1.0, 0.0);
        for (int s = 0; s < 5; ++s)
            for (int rep = 0; rep < ct.counts[s]; ++rep) prod *= t[s];
        brute += prod;
    }
    brute /= 120.0;
    CHECK(std::abs(cycle_sum_zn(5, t) - brute) <= 1e-10 * std::abs(brute));
}

TEST_CASE("partitions: count and descending-lex order") {
    CHECK(partitions(1).size() == 1);
    CHECK(partitions(5).size() == 7);
    CHECK(partitions(10).size() == 42);
    const auto p4 = partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == std::vector<int>{4});
    CHECK(p4[1] == std::vector<int>{3, 1});
    CHECK(p4[2] == std::vector<int>{2, 2});
    CHECK(p4[3] == std::vector<int>{2, 1, 1});
    CHECK(p4[4] == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("irreps: dimensions, orthogonality, homomorphism") {
    for (int n = 2; n <= 6; ++n) {
        const auto& irreps = symmetric_group_irreps(n);
        std::uint64_t total = 0;
        for (const auto& ir : irreps) total += static_cast<std::uint64_t>(ir.dim) * ir.dim;
        CHECK(total == factorial(n));
    }

    // Matrices are orthogonal and multiplicative.
    RngStream rng(109, 0);
    const int n = 5;
    const auto& irreps = symmetric_group_irreps(n);
    for (const auto& ir : irreps) {
        for (int trial = 0; trial < 10; ++trial) {
            const Permutation a = random_permutation(n, rng);
            const Permutation b = random_permutation(n, rng);
            const auto ga = ir.matrix(a);
            const auto gb = ir.matrix(b);
            const auto gab = ir.matrix(a.compose(b));
            const int d = ir.dim;
            double defect = 0.0, ortho = 0.0;
            for (int i = 0; i < d; ++i) {
                for (int j = 0; j < d; ++j) {
                    double prod = 0.0, gram = 0.0;
                    for (int k = 0; k < d; ++k) {
                        prod += ga[i * d + k] * gb[k * d + j];
                        gram += ga[k * d + i] * ga[k * d + j];
                    }
                    defect = std::max(defect, std::abs(prod - gab[i * d + j]));
                    ortho = std::max(ortho, std::abs(gram - (i == j ? 1.0 : 0.0)));
                }
            }
            CHECK(defect < 1e-12);
            CHECK(ortho < 1e-12);
        }
    }
}

TEST_CASE("group_function_spectrum agrees with a dense eigensolve") {
    RngStream rng(113, 0);
    for (int n : {2, 3, 4}) {
        const std::uint64_t order = factorial(n);
        const auto group = enumerate_group(n);
        // Hermitian-generating random function: f(rho^-1) = conj f(rho).
        std::vector<Complex> f(order);
        for (std::uint64_t r = 0; r < order; ++r) {
            const std::uint64_t ri = group[r].inverse().rank();
            if (ri < r) continue;
            const Complex v = rng.next_complex_gaussian();
            if (ri == r)
                f[r] = Complex(v.real(), 0.0);
            else {
                f[r] = v;
                f[ri] = std::conj(v);
            }
        }
        const auto fast = group_function_spectrum(n, f);

        ComplexMatrix c(order, order);
        for (std::uint64_t s = 0; s < order; ++s) {
            const Permutation inv_s = group[s].inverse();
            for (std::uint64_t t = 0; t < order; ++t)
                c(s, t) = f[group[t].compose(inv_s).rank()];
        }
        const auto dense = hermitian_eigenvalues(c);
        REQUIRE(fast.size() == dense.size());
        for (std::size_t i = 0; i < fast.size(); ++i)
            CHECK(std::abs(fast[i] - dense[i]) < 1e-8 * std::max(1.0, std::abs(dense[i])));
    }
}
