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

#ifndef BUNCHKIT_PROTOCOL_ASSESS_HPP
#define BUNCHKIT_PROTOCOL_ASSESS_HPP

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "bunchkit/bunching/problem.hpp"
#include "bunchkit/haarstats/averages.hpp"
#include "bunchkit/numkit/rng.hpp"

namespace bunchkit {

// ---------------------------------------------------------------------------
// Internal-state models of the simulated source.
// ---------------------------------------------------------------------------

struct IdealIndistinguishable {
    Species species = Species::Boson;
};
struct IdealDistinguishable {};
struct FirstOrderFidelityModel {
    double fidelity = 1.0;
};
/// A J-function table supplied directly (e.g. loaded from its JSON format).
struct ExplicitJModel {
    JFunction j;
};
using InternalStateModel = std::variant<IdealIndistinguishable, IdealDistinguishable,
                                        PureProductState, ConvexMixtureState,
                                        FirstOrderFidelityModel, ExplicitJModel>;

/// J-function of a model for particles with the given input-mode labels.
JFunction model_jfunction(const InternalStateModel& model, const std::vector<int>& input_modes,
                          const NumericPolicy& policy = NumericPolicy::defaults());

/// Exact p_N of a model on a bunching problem; ideal models bypass the n!
/// table through the permanent/determinant/diagonal formulas.
double model_bunching_probability(const InternalStateModel& model, const BunchingProblem& problem,
                                  const NumericPolicy& policy = NumericPolicy::defaults());

/**
 * @brief A simulated BS device: network, fixed inputs, and a source model.
 * Lossy devices carry a passive (non-unitary) network; the passivity
 * condition is checked at validation.
 */
struct DeviceModel {
    ComplexMatrix network;
    std::vector<int> input_modes;  ///< 1-based
    InternalStateModel source;
    bool lossy = false;

    void validate(const NumericPolicy& policy = NumericPolicy::defaults()) const;
};

// ---------------------------------------------------------------------------
// Protocol runs.
// ---------------------------------------------------------------------------

enum class Verdict { Pass, Fail, Inconclusive };
const char* verdict_name(Verdict v);

struct ExperimentRecord {
    std::uint64_t runs = 0;
    std::uint64_t bunched_count = 0;
    std::vector<std::vector<int>> per_run_inputs;  ///< scattershot only
    std::uint64_t master_seed = 0;
    std::uint64_t stream_index = 0;
};

struct AssessmentReport {
    ExperimentRecord record;
    double predicted = 0.0;   ///< per(H)/mu(n), the ideal-boson benchmark
    double band_lo = 0.0;     ///< predicted - 3 sqrt(p(1-p)/R)
    double band_hi = 0.0;
    double empirical = 0.0;   ///< bunched fraction
    double device_prob = 0.0; ///< exact p_N(J) the device was simulated from
    Verdict verdict = Verdict::Inconclusive;

    nlohmann::json to_json(const std::string& protocol_name) const;
};

/**
 * @brief Standard assessment (stage II): Bernoulli runs on the exact bunching
 * probability of the device's J, compared against per(H)/mu with a 3-sigma
 * binomial acceptance band. Only the bunched/not-bunched bit is observed,
 * matching on-off detectors on the complementary modes.
 */
AssessmentReport run_standard_protocol(const DeviceModel& device,
                                       const std::vector<int>& output_subset, std::uint64_t runs,
                                       RngStream& rng,
                                       const NumericPolicy& policy = NumericPolicy::defaults());

struct ScattershotResult {
    ExperimentRecord record;
    double mean_prob = 0.0;       ///< empirical bunched fraction
    double std_error = 0.0;       ///< binomial standard error of mean_prob
    double mean_exact_prob = 0.0; ///< mean of the per-run exact probabilities
    double analytic_boson = 0.0;  ///< Haar-average law (no computation needed)
    double analytic_classical = 0.0;
};

/**
 * @brief Scattershot variant: each run places single particles in a fresh
 * uniformly random N-subset of input modes of the fixed network.
 */
ScattershotResult run_scattershot(const ComplexMatrix& network, int n,
                                  const std::vector<int>& output_subset, std::uint64_t runs,
                                  const InternalStateModel& model, RngStream& rng,
                                  const NumericPolicy& policy = NumericPolicy::defaults());

// ---------------------------------------------------------------------------
// Stage (I): input checks and adversarial sources.
// ---------------------------------------------------------------------------

struct IdealSinglesSource {};
/// Each particle in a random-phase coherent spread over s modes.
struct RandomPhaseSource {
    int s = 0;
};
/// N uncorrelated distinguishable particles dropped uniformly on N modes.
struct UniformMultinomialSource {};
/// Arbitrary mixture of indistinguishable-boson Fock occupations.
struct ExplicitFockMixture {
    std::vector<double> weights;
    std::vector<std::vector<int>> occupations;
};
using AdversarySource = std::variant<IdealSinglesSource, RandomPhaseSource,
                                     UniformMultinomialSource, ExplicitFockMixture>;

struct Stage1Report {
    double collision_free_prob = 0.0;
    Verdict verdict = Verdict::Inconclusive;  ///< Pass iff the source always emits singles
};

/// Exact probability that the input carries at most one particle per mode.
Stage1Report stage1_check(const AdversarySource& source, int n);

/**
 * @brief Haar-average bunching probability of any Fock mixture of
 * indistinguishable bosons: the mixture weights drop out and the value is
 * the ideal-boson average law for (n, m, k).
 */
double haar_average_of_fock_mixture(const ExplicitFockMixture& source, int n, int m, int k);

}  // namespace bunchkit

#endif
