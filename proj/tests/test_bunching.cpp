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
#include <numeric>

#include "bunchkit/bunching/output_distribution.hpp"
#include "bunchkit/bunching/problem.hpp"
#include "bunchkit/bunching/schur.hpp"
#include "bunchkit/indist/theta.hpp"
#include "bunchkit/numkit/haar.hpp"
#include "bunchkit/numkit/permanent.hpp"
#include "support/test_support.hpp"

using namespace bunchkit;
using namespace bunchkit::testsupport;

namespace {

ComplexMatrix beamsplitter_50_50() {
    ComplexMatrix u(2, 2);
    const double s = 1.0 / std::sqrt(2.0);
    u(0, 0) = s;
    u(0, 1) = s;
    u(1, 0) = s;
    u(1, 1) = -s;
    return u;
}

BunchingProblem random_problem(int n, int m, int k, RngStream& rng, bool allow_repeats = false) {
    BunchingProblem p;
    p.network = haar_unitary(m, rng).matrix();
    if (allow_repeats) {
        p.input_modes.resize(n);
        for (int i = 0; i < n; ++i)
            p.input_modes[i] = 1 + static_cast<int>(rng.next_below(m));
    } else {
        const auto subset0 = rng.sample_subset(m, n);
        for (int v : subset0) p.input_modes.push_back(v + 1);
    }
    const auto cols0 = rng.sample_subset(m, k);
    for (int v : cols0) p.output_subset.push_back(v + 1);
    return p;
}

JFunction random_theta_j(int n, RngStream& rng) {
    ThetaFunction theta;
    theta.n = n;
    theta.values.resize(factorial(n));
    double norm2 = 0.0;
    for (auto& v : theta.values) {
        v = rng.next_complex_gaussian();
        norm2 += std::norm(v);
    }
    for (auto& v : theta.values) v /= std::sqrt(norm2);
    return reconstruct_j(theta, Species::Boson);
}

}  // namespace

TEST_CASE("build_h: full subset of a unitary gives identity") {
    RngStream rng(301, 0);
    const BunchingProblem p{haar_unitary(5, rng).matrix(), {1, 3, 4}, {1, 2, 3, 4, 5}};
    CHECK(build_h(p).max_abs_diff(ComplexMatrix::identity(3)) < 1e-12);
}

TEST_CASE("build_h: Hong-Ou-Mandel beamsplitter block") {
    const BunchingProblem p{beamsplitter_50_50(), {1, 2}, {1}};
    const ComplexMatrix h = build_h(p);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(std::abs(h(a, b) - Complex(0.5, 0.0)) < 1e-14);
}

TEST_CASE("build_h equals the complement route for unitary networks") {
    RngStream rng(303, 0);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = 4 + static_cast<int>(rng.next_below(5));
        const int n = 2 + static_cast<int>(rng.next_below(3));
        const int k = 1 + static_cast<int>(rng.next_below(m));
        const BunchingProblem p = random_problem(n, m, k, rng);
        CHECK(build_h(p).max_abs_diff(build_h_complement(p)) < 1e-12);
    }
}

TEST_CASE("limit_probabilities: pinned values") {
    const BunchingProblem hom{beamsplitter_50_50(), {1, 2}, {1}};
    const LimitProbabilities lims = limit_probabilities(hom);
    CHECK(lims.boson == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(lims.fermion == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(lims.distinguishable == doctest::Approx(0.25).epsilon(1e-12));

    const LimitProbabilities ident =
        limit_probabilities(ComplexMatrix::identity(4), {1, 2, 3, 4});
    CHECK(ident.boson == doctest::Approx(1.0));
    CHECK(ident.fermion == doctest::Approx(1.0));
    CHECK(ident.distinguishable == doctest::Approx(1.0));

    ComplexMatrix diag(3, 3);
    diag(0, 0) = 0.3;
    diag(1, 1) = 0.7;
    diag(2, 2) = 0.5;
    const LimitProbabilities d = limit_probabilities(diag, {1, 2, 3});
    CHECK(d.boson == doctest::Approx(0.105));
    CHECK(d.fermion == doctest::Approx(0.105));
    CHECK(d.distinguishable == doctest::Approx(0.105));

    // fermionic multi-occupancy is Pauli-blocked
    ComplexMatrix h2(2, 2);
    h2(0, 0) = 0.5;
    h2(0, 1) = 0.5;
    h2(1, 0) = 0.5;
    h2(1, 1) = 0.5;
    const LimitProbabilities rep = limit_probabilities(h2, {1, 1});
    CHECK(rep.fermion == 0.0);
    CHECK(rep.boson == doctest::Approx(0.25));  // per(H)/2!
}

TEST_CASE("ordering det <= diag <= per over random Haar problems") {
    RngStream rng(307, 0);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(5));  // 2..6
        const int m = n + static_cast<int>(rng.next_below(7));
        const int k = 1 + static_cast<int>(rng.next_below(m));
        const ComplexMatrix h = random_bunching_h(n, m, k, rng);
        std::vector<int> labels(n);
        std::iota(labels.begin(), labels.end(), 1);
        const LimitProbabilities lim = limit_probabilities(h, labels);
        CHECK(lim.fermion <= lim.distinguishable + 1e-10);
        CHECK(lim.distinguishable <= lim.boson + 1e-10);
    }
}

TEST_CASE("prob_all_in_subset: reductions to the limit formulas") {
    RngStream rng(311, 0);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(3));
        const BunchingProblem p = random_problem(n, n + 3, 2 + trial % (n + 2), rng);
        const LimitProbabilities lim = limit_probabilities(p);
        CHECK(prob_all_in_subset(j_indistinguishable(n, Species::Boson), p) ==
              doctest::Approx(lim.boson).epsilon(1e-10));
        CHECK(prob_all_in_subset(j_indistinguishable(n, Species::Fermion), p) ==
              doctest::Approx(lim.fermion).epsilon(1e-9));
        CHECK(prob_all_in_subset(j_distinguishable_labels(p.input_modes), p) ==
              doctest::Approx(lim.distinguishable).epsilon(1e-10));
    }
}

TEST_CASE("prob_all_in_subset handles multi-occupancy inputs") {
    // two particles in the same mode of a beamsplitter behave as bunched
    // bosons whatever species label the source carries
    const BunchingProblem p{beamsplitter_50_50(), {1, 1}, {1}};
    const LimitProbabilities lim = limit_probabilities(p);
    CHECK(lim.boson == doctest::Approx(0.25));  // per([[.5,.5],[.5,.5]])/2
    CHECK(prob_all_in_subset(j_distinguishable_labels({1, 1}), p) ==
          doctest::Approx(lim.boson).epsilon(1e-12));
}

TEST_CASE("K = 1 factorization: p = d(J) N! prod |U_{k,1}|^2") {
    RngStream rng(313, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(3));
        const int m = n + 2;
        const BunchingProblem p = random_problem(n, m, 1, rng);
        const JFunction j = random_theta_j(n, rng);
        const double lhs = prob_all_in_subset(j, p);
        double prod = 1.0;
        for (int a = 0; a < n; ++a)
            prod *= std::norm(p.network(p.input_modes[a] - 1, p.output_subset[0] - 1));
        const double rhs =
            indistinguishability_measure(j) * static_cast<double>(factorial(n)) * prod;
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("schur_power_matrix: structure and pinned cases") {
    ComplexMatrix h1(1, 1);
    h1(0, 0) = 0.42;
    const SchurPowerMatrix pi1 = schur_power_matrix(h1);
    CHECK(pi1.entries.rows() == 1);
    CHECK(pi1.entries(0, 0).real() == doctest::Approx(0.42));

    ComplexMatrix diag(3, 3);
    diag(0, 0) = 0.2;
    diag(1, 1) = 0.5;
    diag(2, 2) = 0.8;
    const SchurPowerMatrix pid = schur_power_matrix(diag);
    const double prod = 0.2 * 0.5 * 0.8;
    for (std::uint64_t s = 0; s < 6; ++s)
        for (std::uint64_t t = 0; t < 6; ++t) {
            const double expect = (s == t) ? prod : 0.0;
            CHECK(std::abs(pid.entries(s, t) - Complex(expect, 0.0)) < 1e-14);
        }

    RngStream rng(317, 0);
    const ComplexMatrix h = random_bunching_h(4, 9, 5, rng);
    const SchurPowerMatrix pi = schur_power_matrix(h);
    CHECK(pi.entries.hermiticity_defect() < 1e-12);
    const auto group = enumerate_group(4);
    for (int checks = 0; checks < 50; ++checks) {
        const std::uint64_t s = rng.next_below(24);
        const std::uint64_t t = rng.next_below(24);
        Complex expect(1.0, 0.0);
        for (int a = 0; a < 4; ++a) expect *= h(group[s](a), group[t](a));
        CHECK(std::abs(pi.entries(s, t) - expect) < 1e-13);
    }

    ComplexMatrix h7 = ComplexMatrix::identity(7);
    CHECK_THROWS(schur_power_matrix(h7));  // N = 7 needs opt-in
    CHECK_NOTHROW(schur_power_matrix(h7, NumericPolicy::defaults(), true));
}

TEST_CASE("quadratic form: theta^dag Pi theta = p_N(J)") {
    RngStream rng(331, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(3));  // 2..4
        const int m = n + 3;
        const int k = 1 + static_cast<int>(rng.next_below(m));
        const ComplexMatrix h = random_bunching_h(n, m, k, rng);
        const JFunction j = random_theta_j(n, rng);
        const ThetaFunction theta = factorize_theta(j);
        const SchurPowerMatrix pi = schur_power_matrix(h);
        std::vector<int> labels(n);
        std::iota(labels.begin(), labels.end(), 1);
        CHECK(schur_quadratic_form(pi, theta) ==
              doctest::Approx(prob_all_in_subset(j, h, labels)).epsilon(1e-9));
    }
}

TEST_CASE("spectral_claims: diagonal H collapses the spectrum") {
    ComplexMatrix diag(3, 3);
    diag(0, 0) = 0.4;
    diag(1, 1) = 0.6;
    diag(2, 2) = 0.9;
    const SchurPowerMatrix pi = schur_power_matrix(diag);
    const SpectralReport rep = spectral_claims(pi, diag);
    const double prod = 0.4 * 0.6 * 0.9;
    CHECK(rep.min_eig == doctest::Approx(prod).epsilon(1e-10));
    CHECK(rep.max_eig == doctest::Approx(prod).epsilon(1e-10));
    CHECK(rep.det_h == doctest::Approx(prod).epsilon(1e-10));
    CHECK(rep.per_h == doctest::Approx(prod).epsilon(1e-10));
    CHECK(rep.min_is_det);
    CHECK(rep.sym_vector_is_eigen);
    CHECK(rep.per_is_max);
}

TEST_CASE("spectral_claims: Schur bound and uniform eigenvector on random H") {
    RngStream rng(337, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(4));  // 2..5
        const int m = n + static_cast<int>(rng.next_below(6));
        const int k = 1 + static_cast<int>(rng.next_below(m));
        const ComplexMatrix h = random_bunching_h(n, m, k, rng);
        const SchurPowerMatrix pi = schur_power_matrix(h);
        const SpectralReport rep = spectral_claims(pi, h);
        CHECK(rep.min_is_det);
        CHECK(rep.sym_vector_is_eigen);
        if (n <= 4 && k >= n) {
            CHECK(rep.per_is_max);  // permanent-on-top holds through N = 4
        }
    }
}

TEST_CASE("pot search: no violations at N = 3") {
    RngStream rng(347, 0);
    const PotSearchResult res = search_pot_violation(3, 6, 2, 20, rng);
    CHECK(res.trials == 20);
    CHECK(!res.violation_found);
    CHECK(res.worst_margin <= 1e-9);
}

TEST_CASE("hadamard_permanent_check: limits and 500-trial stress") {
    RngStream rng(349, 0);
    const ComplexMatrix h = random_bunching_h(4, 8, 5, rng);
    ComplexMatrix ones(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) ones(i, j) = 1.0;
    const HadamardCheck equal = hadamard_permanent_check(h, ones);
    CHECK(equal.lhs == doctest::Approx(equal.rhs).epsilon(1e-12));
    CHECK(equal.holds);

    const HadamardCheck diag = hadamard_permanent_check(h, ComplexMatrix::identity(4));
    double prod = 1.0;
    for (int i = 0; i < 4; ++i) prod *= h(i, i).real();
    CHECK(diag.lhs == doctest::Approx(prod).epsilon(1e-12));
    CHECK(diag.holds);

    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(5));  // 2..6
        const int m = n + static_cast<int>(rng.next_below(6));
        const int k = 1 + static_cast<int>(rng.next_below(m));
        const ComplexMatrix hh = random_bunching_h(n, m, k, rng);
        const ComplexMatrix g = random_gram(n, 1 + static_cast<int>(rng.next_below(n + 1)), rng);
        CHECK(hadamard_permanent_check(hh, g).holds);
    }
}

TEST_CASE("full_output_distribution: Hong-Ou-Mandel pinned values") {
    const ComplexMatrix bs = beamsplitter_50_50();
    const auto ideal =
        full_output_distribution(bs, {1, 2}, j_indistinguishable(2, Species::Boson));
    CHECK(ideal.configurations.size() == 3);
    // colex order: (2,0), (1,1), (0,2)
    CHECK(ideal.configurations[0] == std::vector<int>{2, 0});
    CHECK(ideal.configurations[1] == std::vector<int>{1, 1});
    CHECK(ideal.configurations[2] == std::vector<int>{0, 2});
    CHECK(ideal.probabilities[0] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(ideal.probabilities[1]) < 1e-12);
    CHECK(ideal.probabilities[2] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ideal.normalized);

    const auto classical = full_output_distribution(bs, {1, 2}, j_distinguishable({1, 1}));
    CHECK(classical.probabilities[0] == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(classical.probabilities[1] == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(classical.probabilities[2] == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("full_output_distribution: completeness and bunched-sum oracle") {
    RngStream rng(353, 0);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(3));         // 2..4
        const int m = n + 1 + static_cast<int>(rng.next_below(8 - n)); // <= 8
        const int k = 1 + static_cast<int>(rng.next_below(m));
        const bool repeats = trial % 4 == 0;
        BunchingProblem p = random_problem(n, m, k, rng, repeats);

        JFunction j = [&]() {
            switch (trial % 3) {
                case 0: return j_indistinguishable(n, Species::Boson);
                case 1: return j_distinguishable_labels(p.input_modes);
                default:
                    if (repeats) return j_indistinguishable(n, Species::Boson);
                    return random_theta_j(n, rng);
            }
        }();

        const auto dist = full_output_distribution(p.network, p.input_modes, j);
        CHECK(std::abs(dist.total - 1.0) < 1e-8);
        const double via_sum = dist.bunched_sum(p.output_subset);
        const double direct = prob_all_in_subset(j, p);
        CHECK(std::abs(via_sum - direct) < 1e-8);
    }
}

TEST_CASE("full_output_distribution: passive network leaks probability") {
    ComplexMatrix damp = beamsplitter_50_50().scaled(0.9);
    const auto dist =
        full_output_distribution(damp, {1, 2}, j_indistinguishable(2, Species::Boson));
    CHECK(!dist.normalized);
    CHECK(dist.total < 1.0);
    CHECK(dist.total > 0.0);
}

TEST_CASE("sandwich: det(H) <= p_N(J) <= per(H) for K >= N") {
    RngStream rng(359, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(4));  // 2..5
        const int m = n + 2 + static_cast<int>(rng.next_below(4));
        const int k = n + static_cast<int>(rng.next_below(m - n + 1));
        const ComplexMatrix h = random_bunching_h(n, m, k, rng);
        std::vector<int> labels(n);
        std::iota(labels.begin(), labels.end(), 1);
        const JFunction j = random_theta_j(n, rng);
        const double p = prob_all_in_subset(j, h, labels);
        const LimitProbabilities lim = limit_probabilities(h, labels);
        CHECK(p >= lim.fermion - 1e-9);
        CHECK(p <= lim.boson + 1e-9);
    }
}

TEST_CASE("bunching problem json round-trip") {
    RngStream rng(367, 0);
    const BunchingProblem p = random_problem(3, 6, 4, rng);
    const BunchingProblem back = BunchingProblem::from_json(p.to_json());
    CHECK(back.network.max_abs_diff(p.network) == 0.0);
    CHECK(back.input_modes == p.input_modes);
    CHECK(back.output_subset == p.output_subset);

    BunchingProblem bad = p;
    bad.input_modes.push_back(99);
    CHECK_THROWS(bad.validate());
}
