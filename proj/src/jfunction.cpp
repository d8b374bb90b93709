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

#include "bunchkit/indist/jfunction.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bunchkit/numkit/linalg.hpp"
#include "bunchkit/symgroup/irreps.hpp"
#include "bunchkit/symgroup/young.hpp"

namespace bunchkit {

const char* species_name(Species s) { return s == Species::Boson ? "boson" : "fermion"; }

Species species_from_name(const std::string& name) {
    if (name == "boson") return Species::Boson;
    if (name == "fermion") return Species::Fermion;
    throw std::invalid_argument("species must be \"boson\" or \"fermion\", got \"" + name + "\"");
}

JFunction trusted_jfunction(int n, Species species, std::vector<Complex> values) {
    JFunction j;
    j.n_ = n;
    j.species_ = species;
    j.values_ = std::move(values);
    j.min_eig_ = std::numeric_limits<double>::quiet_NaN();
    return j;
}

JFunction::JFunction(int n, Species species, std::vector<Complex> values,
                     const NumericPolicy& policy)
    : n_(n), species_(species), values_(std::move(values)) {
    if (n < 1) throw std::invalid_argument("JFunction: n must be >= 1");
    if (values_.size() != factorial(n))
        throw std::invalid_argument("JFunction: table must have n! entries");
    if (std::abs(values_[0] - Complex(1.0, 0.0)) > 1e-8)
        throw std::invalid_argument("JFunction: J(identity) must be 1");
    for (const auto& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw std::invalid_argument("JFunction: non-finite value");
        if (std::abs(v) > 1.0 + 1e-8)
            throw std::invalid_argument("JFunction: |J| must not exceed 1");
    }
    for (const auto& p : enumerate_group(n)) {
        if (std::abs(values_[p.inverse().rank()] - std::conj(values_[p.rank()])) > 1e-8)
            throw std::invalid_argument("JFunction: J(sigma^-1) != conj(J(sigma))");
    }
    if (n <= policy.caps.schur_matrix_max) {
        // Full physicality check: the group matrix J(nu^-1 tau) must be p.s.d.
        const auto spectrum = group_function_spectrum(n, values_, policy);
        min_eig_ = spectrum.front();
        const double lambda_max = std::max(spectrum.back(), 0.0);
        if (min_eig_ < -policy.tol.psd_relative * std::max(lambda_max, 1.0))
            throw std::invalid_argument("JFunction: group matrix is not p.s.d. (min eigenvalue " +
                                        std::to_string(min_eig_) + ")");
    } else {
        min_eig_ = std::numeric_limits<double>::quiet_NaN();
    }
}

nlohmann::json JFunction::to_json() const {
    nlohmann::json j;
    j["n"] = n_;
    j["species"] = species_name(species_);
    nlohmann::json vals = nlohmann::json::array();
    for (const auto& v : values_) vals.push_back({v.real(), v.imag()});
    j["values"] = std::move(vals);
    return j;
}

JFunction JFunction::from_json(const nlohmann::json& j, const NumericPolicy& policy) {
    const int n = j.at("n").get<int>();
    const Species sp = species_from_name(j.at("species").get<std::string>());
    std::vector<Complex> values;
    for (const auto& e : j.at("values"))
        values.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return JFunction(n, sp, std::move(values), policy);
}

JFunction j_indistinguishable(int n, Species species) {
    if (n < 1) throw std::invalid_argument("j_indistinguishable: n must be >= 1");
    const auto group = enumerate_group(n);
    std::vector<Complex> values(group.size());
    for (std::size_t r = 0; r < group.size(); ++r)
        values[r] = (species == Species::Boson) ? 1.0 : static_cast<double>(group[r].sign());
    return trusted_jfunction(n, species, std::move(values));
}

JFunction j_distinguishable_labels(const std::vector<int>& labels) {
    const YoungSubgroup subgroup = YoungSubgroup::from_labels(labels);
    const int n = subgroup.n();
    const auto group = enumerate_group(n);
    std::vector<Complex> values(group.size(), Complex(0.0, 0.0));
    for (std::size_t r = 0; r < group.size(); ++r)
        if (subgroup.contains(group[r])) values[r] = 1.0;
    return trusted_jfunction(n, Species::Boson, std::move(values));
}

JFunction j_distinguishable(const std::vector<int>& occupation) {
    const YoungSubgroup subgroup(occupation);
    return j_distinguishable_labels(subgroup.labels());
}

JFunction j_classically_correlated(const ConvexMixtureState& model, const NumericPolicy& policy) {
    if (model.components.empty())
        throw std::invalid_argument("j_classically_correlated: empty mixture");
    if (model.weights.size() != model.components.size())
        throw std::invalid_argument("j_classically_correlated: weights/components mismatch");
    double weight_sum = 0.0;
    for (double w : model.weights) {
        if (w < -1e-12) throw std::invalid_argument("j_classically_correlated: negative weight");
        weight_sum += w;
    }
    if (std::abs(weight_sum - 1.0) > 1e-8)
        throw std::invalid_argument("j_classically_correlated: weights must sum to 1");

    const int n = static_cast<int>(model.components.front().gram.rows());
    for (const auto& comp : model.components) {
        const ComplexMatrix& g = comp.gram;
        if (!g.square() || static_cast<int>(g.rows()) != n)
            throw std::invalid_argument("j_classically_correlated: Gram size mismatch");
        if (g.hermiticity_defect() > policy.tol.hermiticity)
            throw std::invalid_argument("j_classically_correlated: Gram not Hermitian");
        for (int i = 0; i < n; ++i)
            if (std::abs(g(i, i) - Complex(1.0, 0.0)) > 1e-8)
                throw std::invalid_argument("j_classically_correlated: Gram diagonal must be 1");
        const auto eigs = hermitian_eigenvalues(g, policy);
        if (eigs.front() < -policy.tol.psd_relative * std::max(eigs.back(), 1.0))
            throw std::invalid_argument("j_classically_correlated: Gram not p.s.d.");
    }

    const auto group = enumerate_group(n);
    std::vector<Complex> values(group.size(), Complex(0.0, 0.0));
    for (std::size_t c = 0; c < model.components.size(); ++c) {
        const ComplexMatrix& g = model.components[c].gram;
        const double w = model.weights[c];
        for (std::size_t r = 0; r < group.size(); ++r) {
            Complex prod(1.0, 0.0);
            for (int alpha = 0; alpha < n; ++alpha) prod *= g(alpha, group[r](alpha));
            values[r] += w * prod;
        }
    }
    values[0] = 1.0;  // exact by unit diagonals; pin against rounding
    return JFunction(n, Species::Boson, std::move(values), policy);
}

JFunction j_classically_correlated(const PureProductState& model, const NumericPolicy& policy) {
    ConvexMixtureState mixture;
    mixture.weights = {1.0};
    mixture.components = {model};
    return j_classically_correlated(mixture, policy);
}

FirstOrderJ j_first_order(int n, double fidelity, const NumericPolicy& policy) {
    if (n < 1) throw std::invalid_argument("j_first_order: n must be >= 1");
    if (fidelity < 0.0 || fidelity > 1.0)
        throw std::invalid_argument("j_first_order: fidelity must be in [0, 1]");
    const double eps = 1.0 - fidelity;
    const auto group = enumerate_group(n, policy);
    std::vector<Complex> values(group.size());
    for (std::size_t r = 0; r < group.size(); ++r)
        values[r] = 1.0 - eps * static_cast<double>(n - group[r].fixed_points());

    // Inside the guard the linearized table is provably physical and goes
    // through full validation; outside, it may leave the physical set, so the
    // result carries a warning instead of failing construction.
    if (eps * n <= 0.5)
        return FirstOrderJ{JFunction(n, Species::Boson, std::move(values), policy), true, ""};
    return FirstOrderJ{trusted_jfunction(n, Species::Boson, std::move(values)), false,
                       "first-order law used outside its validity guard: (1-F)*n = " +
                           std::to_string(eps * n) + " > 0.5"};
}

JFunction j_fidelity_exact(int n, double fidelity) {
    if (n < 1) throw std::invalid_argument("j_fidelity_exact: n must be >= 1");
    if (fidelity < 0.0 || fidelity > 1.0)
        throw std::invalid_argument("j_fidelity_exact: fidelity must be in [0, 1]");
    const auto group = enumerate_group(n);
    std::vector<Complex> values(group.size());
    for (std::size_t r = 0; r < group.size(); ++r)
        values[r] = std::pow(fidelity, n - group[r].fixed_points());
    return JFunction(n, Species::Boson, std::move(values));
}

double indistinguishability_measure(const JFunction& j, const NumericPolicy& policy) {
    const auto group = enumerate_group(j.n());
    Complex acc(0.0, 0.0);
    for (std::size_t r = 0; r < group.size(); ++r) {
        const double eps =
            (j.species() == Species::Boson) ? 1.0 : static_cast<double>(group[r].sign());
        acc += eps * j.value(r);
    }
    acc /= static_cast<double>(factorial(j.n()));
    if (std::abs(acc.imag()) > policy.tol.probability_imag)
        throw std::runtime_error("indistinguishability_measure: non-real result");
    double d = acc.real();
    if (d < -1e-10 || d > 1.0 + 1e-10)
        throw std::runtime_error("indistinguishability_measure: value outside [0,1]: " +
                                 std::to_string(d));
    return std::min(std::max(d, 0.0), 1.0);
}

}  // namespace bunchkit
