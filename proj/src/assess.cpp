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

#include "bunchkit/protocol/assess.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bunchkit/numkit/linalg.hpp"
#include "bunchkit/symgroup/young.hpp"

namespace bunchkit {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "INCONCLUSIVE";
}

JFunction model_jfunction(const InternalStateModel& model, const std::vector<int>& input_modes,
                          const NumericPolicy& policy) {
    const int n = static_cast<int>(input_modes.size());
    return std::visit(
        [&](const auto& m) -> JFunction {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, IdealIndistinguishable>) {
                return j_indistinguishable(n, m.species);
            } else if constexpr (std::is_same_v<T, IdealDistinguishable>) {
                return j_distinguishable_labels(input_modes);
            } else if constexpr (std::is_same_v<T, PureProductState>) {
                return j_classically_correlated(m, policy);
            } else if constexpr (std::is_same_v<T, ConvexMixtureState>) {
                return j_classically_correlated(m, policy);
            } else if constexpr (std::is_same_v<T, ExplicitJModel>) {
                if (m.j.n() != n)
                    throw std::invalid_argument("model_jfunction: J table size does not match "
                                                "the particle count");
                return m.j;
            } else {
                return j_first_order(n, m.fidelity, policy).j;
            }
        },
        model);
}

double model_bunching_probability(const InternalStateModel& model, const BunchingProblem& problem,
                                  const NumericPolicy& policy) {
    // Ideal sources reduce to closed forms; everything else goes through the
    // n!-table path.
    if (const auto* ideal = std::get_if<IdealIndistinguishable>(&model)) {
        const LimitProbabilities lim = limit_probabilities(problem, policy);
        return ideal->species == Species::Boson ? lim.boson : lim.fermion;
    }
    if (std::holds_alternative<IdealDistinguishable>(model)) {
        return limit_probabilities(problem, policy).distinguishable;
    }
    const JFunction j = model_jfunction(model, problem.input_modes, policy);
    return prob_all_in_subset(j, problem, policy);
}

void DeviceModel::validate(const NumericPolicy& policy) const {
    if (!network.square()) throw std::invalid_argument("DeviceModel: network must be square");
    network.check_finite("DeviceModel");
    for (int k : input_modes)
        if (k < 1 || k > static_cast<int>(network.rows()))
            throw std::out_of_range("DeviceModel: input mode out of range");
    if (lossy) {
        polar_and_svd(network, policy);  // throws if not passive
    } else {
        const double defect = network.unitarity_defect();
        if (defect > policy.tol.unitarity)
            throw std::invalid_argument("DeviceModel: network not unitary; set lossy=true for "
                                        "passive networks");
    }
}

nlohmann::json AssessmentReport::to_json(const std::string& protocol_name) const {
    nlohmann::json j;
    j["protocol"] = protocol_name;
    j["runs"] = record.runs;
    j["bunched"] = record.bunched_count;
    j["predicted"] = predicted;
    j["band"] = {band_lo, band_hi};
    j["verdict"] = verdict_name(verdict);
    j["seed"] = record.master_seed;
    return j;
}

AssessmentReport run_standard_protocol(const DeviceModel& device,
                                       const std::vector<int>& output_subset, std::uint64_t runs,
                                       RngStream& rng, const NumericPolicy& policy) {
    device.validate(policy);
    if (output_subset.empty())
        throw std::invalid_argument("run_standard_protocol: output subset must not be empty");

    BunchingProblem problem{device.network, device.input_modes, output_subset};
    std::sort(problem.output_subset.begin(), problem.output_subset.end());
    problem.validate();

    AssessmentReport rep;
    rep.record.master_seed = rng.master_seed();
    rep.record.stream_index = rng.stream_index();
    rep.record.runs = runs;
    rep.predicted = limit_probabilities(problem, policy).boson;
    rep.device_prob = model_bunching_probability(device.source, problem, policy);

    if (runs == 0) {
        rep.verdict = Verdict::Inconclusive;
        return rep;
    }

    // Device simulation: the protocol observes only the bunched/not-bunched
    // bit, drawn from the device's exact probability.
    std::uint64_t bunched = 0;
    for (std::uint64_t r = 0; r < runs; ++r) {
        RngStream run_rng = rng.substream(r);
        if (run_rng.next_double() < rep.device_prob) ++bunched;
    }
    rep.record.bunched_count = bunched;
    rep.empirical = static_cast<double>(bunched) / static_cast<double>(runs);

    const double band =
        3.0 * std::sqrt(std::max(rep.predicted * (1.0 - rep.predicted), 0.0) /
                        static_cast<double>(runs));
    rep.band_lo = rep.predicted - band;
    rep.band_hi = rep.predicted + band;
    rep.verdict = (rep.empirical >= rep.band_lo && rep.empirical <= rep.band_hi)
                      ? Verdict::Pass
                      : Verdict::Fail;
    return rep;
}

ScattershotResult run_scattershot(const ComplexMatrix& network, int n,
                                  const std::vector<int>& output_subset, std::uint64_t runs,
                                  const InternalStateModel& model, RngStream& rng,
                                  const NumericPolicy& policy) {
    if (!network.square()) throw std::invalid_argument("run_scattershot: network must be square");
    const int m = static_cast<int>(network.rows());
    if (n < 1 || n > m) throw std::invalid_argument("run_scattershot: need 1 <= n <= m");
    if (runs < 1) throw std::invalid_argument("run_scattershot: need runs >= 1");

    ScattershotResult out;
    out.record.master_seed = rng.master_seed();
    out.record.stream_index = rng.stream_index();
    out.record.runs = runs;
    out.record.per_run_inputs.reserve(runs);

    std::vector<double> exact_probs;
    exact_probs.reserve(runs);
    for (std::uint64_t r = 0; r < runs; ++r) {
        RngStream run_rng = rng.substream(r);
        std::vector<int> subset0 = run_rng.sample_subset(m, n);
        std::vector<int> inputs(subset0.size());
        for (std::size_t i = 0; i < subset0.size(); ++i) inputs[i] = subset0[i] + 1;

        BunchingProblem problem{network, inputs, output_subset};
        const double p = model_bunching_probability(model, problem, policy);
        exact_probs.push_back(p);
        if (run_rng.next_double() < p) ++out.record.bunched_count;
        out.record.per_run_inputs.push_back(std::move(inputs));
    }

    out.mean_prob =
        static_cast<double>(out.record.bunched_count) / static_cast<double>(runs);
    out.std_error = std::sqrt(std::max(out.mean_prob * (1.0 - out.mean_prob), 0.0) /
                              static_cast<double>(runs));
    double acc = 0.0;
    for (double p : exact_probs) acc += p;
    out.mean_exact_prob = acc / static_cast<double>(runs);

    const int k = static_cast<int>(output_subset.size());
    out.analytic_boson = avg_quantum({n, m, k, ParticleKind::Boson});
    out.analytic_classical = avg_classical_approx({n, m, k, ParticleKind::Classical}).value;
    return out;
}

namespace {

double log_factorial(int n) {
    double acc = 0.0;
    for (int i = 2; i <= n; ++i) acc += std::log(static_cast<double>(i));
    return acc;
}

}  // namespace

Stage1Report stage1_check(const AdversarySource& source, int n) {
    if (n < 1) throw std::invalid_argument("stage1_check: n must be >= 1");
    Stage1Report rep;
    rep.collision_free_prob = std::visit(
        [&](const auto& src) -> double {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, IdealSinglesSource>) {
                return 1.0;
            } else if constexpr (std::is_same_v<T, RandomPhaseSource>) {
                // Flat mixture over occupations of s modes: collision-free
                // weight = C(s, n) * n!(s-1)!/(s+n-1)!.
                const int s = src.s;
                if (s < 1) throw std::invalid_argument("stage1_check: random-phase s must be >= 1");
                if (s < n) return 0.0;
                const double log_p = log_factorial(s) - log_factorial(s - n) +
                                     log_factorial(s - 1) - log_factorial(s + n - 1);
                return std::exp(log_p);
            } else if constexpr (std::is_same_v<T, UniformMultinomialSource>) {
                // N!/N^N: every particle must pick a distinct mode.
                return std::exp(log_factorial(n) - n * std::log(static_cast<double>(n)));
            } else {
                double weight_sum = 0.0;
                double collision_free = 0.0;
                for (std::size_t i = 0; i < src.weights.size(); ++i) {
                    const auto& occ = src.occupations.at(i);
                    int total = 0;
                    bool singles = true;
                    for (int c : occ) {
                        total += c;
                        if (c > 1) singles = false;
                    }
                    if (total != n)
                        throw std::invalid_argument("stage1_check: occupation does not sum to n");
                    weight_sum += src.weights[i];
                    if (singles) collision_free += src.weights[i];
                }
                if (std::abs(weight_sum - 1.0) > 1e-8)
                    throw std::invalid_argument("stage1_check: weights must sum to 1");
                return collision_free;
            }
        },
        source);
    rep.verdict = rep.collision_free_prob >= 1.0 - 1e-12 ? Verdict::Pass : Verdict::Fail;
    return rep;
}

double haar_average_of_fock_mixture(const ExplicitFockMixture& source, int n, int m, int k) {
    double weight_sum = 0.0;
    for (std::size_t i = 0; i < source.weights.size(); ++i) {
        if (source.weights[i] < -1e-12)
            throw std::invalid_argument("haar_average_of_fock_mixture: negative weight");
        int total = 0;
        for (int c : source.occupations.at(i)) total += c;
        if (total != n)
            throw std::invalid_argument("haar_average_of_fock_mixture: occupation sum mismatch");
        weight_sum += source.weights[i];
    }
    if (std::abs(weight_sum - 1.0) > 1e-8)
        throw std::invalid_argument("haar_average_of_fock_mixture: weights must sum to 1");
    // The Haar average of per(H)/mu(n) does not depend on the occupation, so
    // the mixture weights drop out entirely.
    return avg_quantum({n, m, k, ParticleKind::Boson});
}

}  // namespace bunchkit
