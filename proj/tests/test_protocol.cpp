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

#include "bunchkit/haarstats/monte_carlo.hpp"
#include "bunchkit/numkit/haar.hpp"
#include "bunchkit/numkit/permanent.hpp"
#include "bunchkit/protocol/assess.hpp"
#include "bunchkit/protocol/estimator.hpp"
#include "bunchkit/protocol/fourier.hpp"
#include "bunchkit/protocol/lossy.hpp"
#include "support/test_support.hpp"

using namespace bunchkit;
using namespace bunchkit::testsupport;

TEST_CASE("estimator: exact limits") {
    RngStream rng(501, 0);
    // K = M: Phi = 0 and the estimate is 1 at any order.
    BunchingProblem full{haar_unitary(6, rng).matrix(), {1, 2, 3}, {1, 2, 3, 4, 5, 6}};
    for (int s : {1, 2, 3}) {
        EstimatorConfig cfg{2.0, 0.5, s};
        const auto res = approx_permanent(full, cfg);
        CHECK(res.estimate == doctest::Approx(1.0).epsilon(1e-12));
    }

    // s = N reproduces the exact permanent (untruncated inclusion-exclusion).
    BunchingProblem p{haar_unitary(8, rng).matrix(), {1, 2, 3, 4}, {1, 2, 3, 5, 7}};
    EstimatorConfig cfg{2.0, 0.5, 4};
    const auto res = approx_permanent(p, cfg);
    const double exact = limit_probabilities(p).boson;
    CHECK(res.estimate == doctest::Approx(exact).epsilon(1e-10));
    CHECK(!res.exact_fallback);

    // s > N falls back to plain Ryser with a notice flag.
    EstimatorConfig big{2.0, 0.5, 9};
    const auto fb = approx_permanent(p, big);
    CHECK(fb.exact_fallback);
    CHECK(fb.estimate == doctest::Approx(exact).epsilon(1e-10));
}

TEST_CASE("estimator: s = N exact for N up to 10") {
    RngStream rng(503, 0);
    for (int n : {5, 7, 10}) {
        const int m = 2 * n + 3;
        const int l = n / 2 + 1;
        BunchingProblem p;
        p.network = haar_unitary(m, rng).matrix();
        for (int i = 0; i < n; ++i) p.input_modes.push_back(i + 1);
        for (int i = 0; i < m - l; ++i) p.output_subset.push_back(i + 1);
        EstimatorConfig cfg{2.0, 0.5, n};
        const auto res = approx_permanent(p, cfg);
        const double exact = permanent_ryser(build_h(p)).real();
        CHECK(std::abs(res.estimate - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
    }
}

TEST_CASE("estimator: monotone refinement in the dilute regime") {
    RngStream rng(509, 0);
    const int n = 12;
    const int m = static_cast<int>(std::llround(2.0 * std::pow(12.0, 2.5)));
    const int l = n;
    int improved = 0, total = 0;
    for (int trial = 0; trial < 25; ++trial) {
        RngStream trial_rng = rng.substream(trial);
        const ComplexMatrix rows = haar_isometry_rows(n, m, trial_rng);
        // Phi over the last l columns; H = I - Phi.
        ComplexMatrix phi(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Complex acc(0.0, 0.0);
                for (int c = m - l; c < m; ++c) acc += rows(a, c) * std::conj(rows(b, c));
                phi(a, b) = acc;
            }
        const double exact =
            permanent_ryser(ComplexMatrix::identity(n) - phi).real();
        EstimatorConfig cfg3{2.0, 0.5, 3};
        EstimatorConfig cfg4{2.0, 0.5, 4};
        const double e3 =
            std::abs(approx_permanent_from_phi(phi, m, l, cfg3).estimate - exact);
        const double e4 =
            std::abs(approx_permanent_from_phi(phi, m, l, cfg4).estimate - exact);
        ++total;
        if (e4 <= e3) ++improved;
    }
    CHECK(improved * 10 >= total * 9);  // >= 90%
}

TEST_CASE("estimator: work accounting stays within the nominal cost model") {
    RngStream rng(521, 0);
    BunchingProblem p;
    p.network = haar_unitary(20, rng).matrix();
    for (int i = 0; i < 10; ++i) p.input_modes.push_back(i + 1);
    for (int i = 0; i < 15; ++i) p.output_subset.push_back(i + 1);
    EstimatorConfig cfg = EstimatorConfig::from_exponents(2.0, 1.0);  // s = 3
    const auto res = approx_permanent(p, cfg);
    // measured Gray-step work <= sum_{r<=s} C(N,r) r (2^r - 1) <= C(N,s) s 2^s + lower orders
    double bound = 0.0;
    for (int r = 1; r <= cfg.truncation_order; ++r) {
        double binom = 1.0;
        for (int i = 1; i <= r; ++i) binom *= static_cast<double>(10 - r + i) / i;
        bound += binom * r * (std::pow(2.0, r) - 1.0);
    }
    CHECK(static_cast<double>(res.work_units) <= bound + 1.0);
    CHECK(res.flop_estimate == doctest::Approx(120.0 * 3.0 * 8.0));  // C(10,3) s 2^s
}

TEST_CASE("model_jfunction and model_bunching_probability specializations") {
    RngStream rng(523, 0);
    BunchingProblem p{haar_unitary(6, rng).matrix(), {1, 2, 3}, {1, 2, 4, 5}};
    const LimitProbabilities lim = limit_probabilities(p);

    CHECK(model_bunching_probability(IdealIndistinguishable{Species::Boson}, p) ==
          doctest::Approx(lim.boson).epsilon(1e-12));
    CHECK(model_bunching_probability(IdealIndistinguishable{Species::Fermion}, p) ==
          doctest::Approx(lim.fermion).epsilon(1e-12));
    CHECK(model_bunching_probability(IdealDistinguishable{}, p) ==
          doctest::Approx(lim.distinguishable).epsilon(1e-12));

    const double pf = model_bunching_probability(FirstOrderFidelityModel{0.99}, p);
    CHECK(pf < lim.boson);
    CHECK(pf > lim.distinguishable);

    // explicit J tables route through the generic path
    const double pj =
        model_bunching_probability(ExplicitJModel{j_indistinguishable(3, Species::Boson)}, p);
    CHECK(pj == doctest::Approx(lim.boson).epsilon(1e-12));
    CHECK_THROWS(model_bunching_probability(
        ExplicitJModel{j_indistinguishable(2, Species::Boson)}, p));
}

TEST_CASE("run_standard_protocol: ideal device passes, verdicts deterministic") {
    RngStream net_rng(541, 0);
    const Table1Row geo = select_k(4);  // N=4, M=8, K=6
    DeviceModel device;
    device.network = haar_unitary(geo.m, net_rng).matrix();
    device.input_modes = {1, 2, 3, 4};
    device.source = IdealIndistinguishable{Species::Boson};
    std::vector<int> subset(geo.k);
    std::iota(subset.begin(), subset.end(), 1);

    RngStream rng(541, 1);
    const AssessmentReport rep = run_standard_protocol(device, subset, 10000, rng);
    CHECK(rep.verdict == Verdict::Pass);
    CHECK(rep.record.runs == 10000);
    CHECK(std::abs(rep.empirical - rep.predicted) <= rep.band_hi - rep.predicted);

    RngStream rng2(541, 1);
    const AssessmentReport rep2 = run_standard_protocol(device, subset, 10000, rng2);
    CHECK(rep.record.bunched_count == rep2.record.bunched_count);
    CHECK(rep.verdict == rep2.verdict);

    // runs = 0 is inconclusive
    RngStream rng3(541, 2);
    CHECK(run_standard_protocol(device, subset, 0, rng3).verdict == Verdict::Inconclusive);
}

TEST_CASE("run_standard_protocol: distinguishable device fails") {
    RngStream net_rng(547, 0);
    const Table1Row geo = select_k(4);
    DeviceModel device;
    device.network = haar_unitary(geo.m, net_rng).matrix();
    device.input_modes = {1, 2, 3, 4};
    device.source = IdealDistinguishable{};
    std::vector<int> subset(geo.k);
    std::iota(subset.begin(), subset.end(), 1);

    RngStream rng(547, 1);
    const AssessmentReport rep = run_standard_protocol(device, subset, 10000, rng);
    CHECK(rep.verdict == Verdict::Fail);
    CHECK(rep.empirical < rep.band_lo);  // falls below, not above

    const auto j = rep.to_json("standard");
    CHECK(j.at("verdict") == "FAIL");
    CHECK(j.at("runs") == 10000);
    CHECK(j.at("band").size() == 2);
}

TEST_CASE("run_scattershot: record shape and ideal mean near the law") {
    RngStream net_rng(557, 0);
    const Table1Row geo = select_k(6);
    const UnitaryMatrix network = haar_unitary(geo.m, net_rng);
    std::vector<int> subset(geo.k);
    std::iota(subset.begin(), subset.end(), 1);

    RngStream one_rng(557, 1);
    const ScattershotResult one = run_scattershot(network.matrix(), 6, subset, 1,
                                                  IdealIndistinguishable{Species::Boson}, one_rng);
    REQUIRE(one.record.per_run_inputs.size() == 1);
    CHECK(one.record.per_run_inputs[0].size() == 6);

    RngStream rng(557, 2);
    const ScattershotResult res = run_scattershot(network.matrix(), 6, subset, 500,
                                                  IdealIndistinguishable{Species::Boson}, rng);
    CHECK(std::abs(res.mean_prob - res.analytic_boson) < 3.0 * res.std_error);

    RngStream rng2(557, 3);
    const ScattershotResult cls =
        run_scattershot(network.matrix(), 6, subset, 500, IdealDistinguishable{}, rng2);
    const double se = std::max(cls.std_error, 1e-6);
    CHECK(std::abs(cls.mean_prob - cls.analytic_classical) <
          3.0 * se + cls.analytic_classical * 0.1);
}

TEST_CASE("stage1_check: pinned adversary values") {
    CHECK(stage1_check(IdealSinglesSource{}, 5).collision_free_prob == 1.0);
    CHECK(stage1_check(IdealSinglesSource{}, 5).verdict == Verdict::Pass);

    const auto multinomial = stage1_check(UniformMultinomialSource{}, 3);
    CHECK(multinomial.collision_free_prob == doctest::Approx(6.0 / 27.0).epsilon(1e-12));
    CHECK(multinomial.verdict == Verdict::Fail);

    const auto random_phase = stage1_check(RandomPhaseSource{3}, 3);
    CHECK(random_phase.collision_free_prob == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(random_phase.verdict == Verdict::Fail);

    // the 4^-N scaling law of the random-phase source with S = N
    const double p10 = stage1_check(RandomPhaseSource{10}, 10).collision_free_prob;
    const double p11 = stage1_check(RandomPhaseSource{11}, 11).collision_free_prob;
    CHECK(p11 / p10 == doctest::Approx(0.25).epsilon(0.15));

    ExplicitFockMixture mix;
    mix.weights = {0.5, 0.5};
    mix.occupations = {{1, 1, 1}, {3, 0, 0}};
    CHECK(stage1_check(mix, 3).collision_free_prob == doctest::Approx(0.5));
    CHECK(stage1_check(mix, 3).verdict == Verdict::Fail);
}

TEST_CASE("haar_average_of_fock_mixture: weight independence and MC check") {
    ExplicitFockMixture a;
    a.weights = {1.0};
    a.occupations = {{1, 1, 1, 1, 0, 0}};
    ExplicitFockMixture b;
    b.weights = {0.3, 0.7};
    b.occupations = {{4, 0, 0, 0, 0, 0}, {2, 2, 0, 0, 0, 0}};
    const double va = haar_average_of_fock_mixture(a, 4, 6, 3);
    const double vb = haar_average_of_fock_mixture(b, 4, 6, 3);
    CHECK(va == vb);
    CHECK(va == doctest::Approx(avg_quantum({4, 6, 3, ParticleKind::Boson})));

    // all-in-one-mode occupation, n = 2, m = 2, k = 1: <per(H)/2> = 1/3.
    RngStream rng(563, 0);
    auto fn = [&](RngStream& trial_rng) {
        const ComplexMatrix u = haar_unitary(2, trial_rng).matrix();
        BunchingProblem p{u, {1, 1}, {1}};
        return limit_probabilities(p).boson;
    };
    const McEstimate mc = monte_carlo_map(20000, rng, fn);
    CHECK(std::abs(mc.mean - 1.0 / 3.0) < 3.0 * mc.std_error);
}

TEST_CASE("fourier_network: pinned and unitary") {
    const UnitaryMatrix f1 = fourier_network(1);
    CHECK(std::abs(f1.matrix()(0, 0) - Complex(1.0, 0.0)) < 1e-12);

    const UnitaryMatrix f2 = fourier_network(2);
    Complex dot(0.0, 0.0);
    for (int l = 0; l < 2; ++l) dot += f2.matrix()(0, l) * std::conj(f2.matrix()(1, l));
    CHECK(std::abs(dot) < 1e-12);

    CHECK(fourier_network(9).matrix().unitarity_defect() < 1e-12);
}

TEST_CASE("suppression_check: zero-transmission law and its breakdown") {
    // N = 2, M = 4: forbidden outputs are dark to 1e-12.
    const SuppressionReport r2 = suppression_check(2, 2, 1);
    CHECK(r2.m == 4);
    CHECK(r2.forbidden_max_prob < 1e-12);
    CHECK(r2.allowed_total_prob == doctest::Approx(1.0).epsilon(1e-8));

    // N = 3, M = 9: law holds and the allowed set is about 1/N of all configs.
    const SuppressionReport r3 = suppression_check(3, 2, 1);
    CHECK(r3.m == 9);
    CHECK(r3.forbidden_max_prob < 1e-10);
    CHECK(r3.allowed_fraction == doctest::Approx(1.0 / 3.0).epsilon(0.05));

    // distinguishable input: suppression disappears somewhere
    const JFunction jd = j_distinguishable({1, 1, 1});
    const SuppressionReport rd = suppression_check(3, 2, 1, &jd);
    CHECK(rd.forbidden_max_prob > 1e-4);

    // every k1 respects the cyclic-law premise
    for (int k1 = 1; k1 <= 3; ++k1)
        CHECK(suppression_check(3, 2, k1).forbidden_max_prob < 1e-10);
}

TEST_CASE("loophole_demo: adversary passes the suppression test") {
    const LoopholeReport rep = loophole_demo(2);
    CHECK(rep.all_outputs_in_allowed_set);
    CHECK(rep.max_forbidden_prob == 0.0);
    CHECK(rep.per_block_laws_hold);
    CHECK(rep.nonzero_configs > 0);
    CHECK(rep.adversary_network.unitarity_defect() < 1e-10);

    // both parities of the cyclic offset work
    const LoopholeReport rep2 = loophole_demo(2, 2);
    CHECK(rep2.all_outputs_in_allowed_set);

    // same input through the honest Fourier network populates forbidden
    // configurations: the loophole is in the network, not the source.
    ComplexMatrix gram(4, 4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) gram(a, b) = (a / 2 == b / 2) ? 1.0 : 0.0;
    const JFunction j = j_classically_correlated(PureProductState{gram});
    const SuppressionReport honest = suppression_check(4, 2, 1, &j);
    CHECK(honest.forbidden_max_prob > 1e-4);

    CHECK_THROWS(loophole_demo(3));  // enumeration cap
}

TEST_CASE("lossy_embedding: pinned cases") {
    RngStream rng(569, 0);
    // unitary input: trivial embedding
    const UnitaryMatrix u = haar_unitary(3, rng);
    const LossyEmbedding emb = lossy_embedding(u.matrix());
    ComplexMatrix expect_top = u.matrix();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            CHECK(std::abs(emb.embedded.matrix()(i, j) - expect_top(i, j)) < 1e-10);
            CHECK(std::abs(emb.embedded.matrix()(i, 3 + j)) < 1e-7);
            const double expect_d = (i == j) ? 1.0 : 0.0;
            CHECK(std::abs(emb.embedded.matrix()(3 + i, 3 + j) - Complex(expect_d, 0.0)) < 1e-7);
        }

    // uniform loss: beamsplitter-to-loss-channel form
    ComplexMatrix eta = ComplexMatrix::identity(2).scaled(0.6);
    const LossyEmbedding le = lossy_embedding(eta);
    const double q = std::sqrt(1.0 - 0.36);
    CHECK(std::abs(le.embedded.matrix()(0, 0) - Complex(0.6, 0.0)) < 1e-12);
    CHECK(std::abs(le.embedded.matrix()(0, 2) - Complex(q, 0.0)) < 1e-12);
    CHECK(std::abs(le.embedded.matrix()(2, 0) - Complex(-q, 0.0)) < 1e-12);
    CHECK(std::abs(le.embedded.matrix()(2, 2) - Complex(0.6, 0.0)) < 1e-12);
}

TEST_CASE("lossy_embedding: random contractions embed exactly") {
    RngStream rng(571, 0);
    for (int trial = 0; trial < 40; ++trial) {
        const int m = (trial % 2 == 0) ? 3 : 4;
        const ComplexMatrix c = random_contraction(m, rng);
        const LossyEmbedding emb = lossy_embedding(c);
        CHECK(emb.embedded.matrix().unitarity_defect() < 1e-10);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                CHECK(std::abs(emb.embedded.matrix()(i, j) - c(i, j)) < 1e-10);

        // product form agrees
        const ComplexMatrix prod = lossy_embedding_product_form(c);
        CHECK(prod.max_abs_diff(emb.embedded.matrix()) < 1e-9);
    }
    CHECK_THROWS(lossy_embedding(ComplexMatrix::identity(3).scaled(1.2)));
}

TEST_CASE("device model validation") {
    RngStream rng(577, 0);
    DeviceModel dev;
    dev.network = random_contraction(3, rng);
    dev.input_modes = {1, 2};
    dev.source = IdealIndistinguishable{Species::Boson};
    dev.lossy = false;
    CHECK_THROWS(dev.validate());  // contraction but lossy flag unset
    dev.lossy = true;
    CHECK_NOTHROW(dev.validate());
}

TEST_CASE("run_standard_protocol on a passive (lossy) network") {
    RngStream rng(587, 0);
    DeviceModel dev;
    dev.network = random_contraction(4, rng, 0.8);
    dev.input_modes = {1, 2};
    dev.source = IdealIndistinguishable{Species::Boson};
    dev.lossy = true;

    RngStream run_rng(587, 1);
    const AssessmentReport rep = run_standard_protocol(dev, {1, 2, 3}, 20000, run_rng);
    CHECK(rep.predicted > 0.0);
    CHECK(rep.predicted < 1.0);  // losses push the bunching probability below 1
    CHECK(rep.device_prob == doctest::Approx(rep.predicted).epsilon(1e-12));
    CHECK(rep.verdict == Verdict::Pass);
}
