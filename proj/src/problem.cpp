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

#include "bunchkit/bunching/problem.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "bunchkit/numkit/linalg.hpp"
#include "bunchkit/numkit/matrix_io.hpp"
#include "bunchkit/numkit/permanent.hpp"
#include "bunchkit/symgroup/young.hpp"

namespace bunchkit {

std::uint64_t BunchingProblem::mu() const { return labels_mu(input_modes); }

void BunchingProblem::validate() const {
    if (!network.square()) throw std::invalid_argument("BunchingProblem: network must be square");
    network.check_finite("BunchingProblem");
    const int m = modes();
    if (input_modes.empty()) throw std::invalid_argument("BunchingProblem: no input modes");
    for (int k : input_modes)
        if (k < 1 || k > m) throw std::out_of_range("BunchingProblem: input mode out of range");
    if (output_subset.empty()) throw std::invalid_argument("BunchingProblem: empty output subset");
    std::set<int> seen;
    for (int l : output_subset) {
        if (l < 1 || l > m) throw std::out_of_range("BunchingProblem: output mode out of range");
        if (!seen.insert(l).second)
            throw std::invalid_argument("BunchingProblem: duplicate output mode");
    }
}

nlohmann::json BunchingProblem::to_json() const {
    nlohmann::json j;
    j["network"] = matrix_to_json(network);
    j["input_modes"] = input_modes;
    j["output_subset"] = output_subset;
    return j;
}

BunchingProblem BunchingProblem::from_json(const nlohmann::json& j) {
    BunchingProblem p;
    const auto& net = j.at("network");
    p.network = net.is_string() ? load_matrix(net.get<std::string>()) : matrix_from_json(net);
    p.input_modes = j.at("input_modes").get<std::vector<int>>();
    p.output_subset = j.at("output_subset").get<std::vector<int>>();
    std::sort(p.output_subset.begin(), p.output_subset.end());
    p.validate();
    return p;
}

ComplexMatrix build_h(const BunchingProblem& problem) {
    problem.validate();
    const int n = problem.particles();
    ComplexMatrix h(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Complex acc(0.0, 0.0);
            for (int l : problem.output_subset)
                acc += problem.network(problem.input_modes[a] - 1, l - 1) *
                       std::conj(problem.network(problem.input_modes[b] - 1, l - 1));
            h(a, b) = acc;
        }
    }
    return h;
}

ComplexMatrix build_phi(const BunchingProblem& problem) {
    problem.validate();
    std::set<int> subset(problem.output_subset.begin(), problem.output_subset.end());
    const int n = problem.particles();
    ComplexMatrix phi(n, n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            Complex acc(0.0, 0.0);
            for (int l = 1; l <= problem.modes(); ++l) {
                if (subset.count(l)) continue;
                acc += problem.network(problem.input_modes[a] - 1, l - 1) *
                       std::conj(problem.network(problem.input_modes[b] - 1, l - 1));
            }
            phi(a, b) = acc;
        }
    }
    return phi;
}

ComplexMatrix build_h_complement(const BunchingProblem& problem) {
    return ComplexMatrix::identity(problem.particles()) - build_phi(problem);
}

LimitProbabilities limit_probabilities(const ComplexMatrix& h, const std::vector<int>& labels,
                                       const NumericPolicy& policy) {
    if (!h.square() || h.rows() != labels.size())
        throw std::invalid_argument("limit_probabilities: H / label size mismatch");
    const std::uint64_t mu = labels_mu(labels);
    LimitProbabilities out{};
    const Complex per = permanent_ryser(h, policy);
    out.boson = per.real() / static_cast<double>(mu);
    out.fermion = (mu == 1) ? determinant(h).real() : 0.0;
    double diag = 1.0;
    for (std::size_t a = 0; a < h.rows(); ++a) diag *= h(a, a).real();
    out.distinguishable = diag;
    return out;
}

LimitProbabilities limit_probabilities(const BunchingProblem& problem,
                                       const NumericPolicy& policy) {
    return limit_probabilities(build_h(problem), problem.input_modes, policy);
}

double prob_all_in_subset(const JFunction& j, const ComplexMatrix& h,
                          const std::vector<int>& labels, const NumericPolicy& policy) {
    const int n = j.n();
    if (!h.square() || static_cast<int>(h.rows()) != n || static_cast<int>(labels.size()) != n)
        throw std::invalid_argument("prob_all_in_subset: dimension mismatch");
    const auto group = enumerate_group(n, policy);

    Complex acc(0.0, 0.0);
    for (const auto& sigma : group) {
        const Complex jv = j.value(sigma.rank());
        if (jv == Complex(0.0, 0.0)) continue;
        Complex prod(1.0, 0.0);
        for (int a = 0; a < n; ++a) prod *= h(a, sigma(a));
        acc += jv * prod;
    }
    acc /= static_cast<double>(labels_mu(labels));

    if (std::abs(acc.imag()) > policy.tol.probability_imag * std::max(1.0, std::abs(acc.real())))
        throw std::runtime_error("prob_all_in_subset: imaginary residue " +
                                 std::to_string(acc.imag()));
    return acc.real();
}

double prob_all_in_subset(const JFunction& j, const BunchingProblem& problem,
                          const NumericPolicy& policy) {
    return prob_all_in_subset(j, build_h(problem), problem.input_modes, policy);
}

}  // namespace bunchkit
