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

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bunchkit/bunching/schur.hpp"
#include "bunchkit/haarstats/fig_data.hpp"
#include "bunchkit/haarstats/monte_carlo.hpp"
#include "bunchkit/numkit/haar.hpp"
#include "bunchkit/numkit/matrix_io.hpp"
#include "bunchkit/protocol/assess.hpp"
#include "bunchkit/protocol/estimator.hpp"
#include "bunchkit/protocol/fourier.hpp"
#include "bunchkit/protocol/lossy.hpp"

namespace {

using nlohmann::json;
using namespace bunchkit;

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file " + path);
    json j;
    in >> j;
    return j;
}

InternalStateModel parse_source(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "ideal" || kind == "ideal_boson") return IdealIndistinguishable{Species::Boson};
    if (kind == "ideal_fermion") return IdealIndistinguishable{Species::Fermion};
    if (kind == "distinguishable") return IdealDistinguishable{};
    if (kind == "first_order") return FirstOrderFidelityModel{j.at("fidelity").get<double>()};
    if (kind == "pure_product") return PureProductState{matrix_from_json(j.at("gram"))};
    if (kind == "convex_mixture") {
        ConvexMixtureState mix;
        for (const auto& comp : j.at("components")) {
            mix.weights.push_back(comp.at("weight").get<double>());
            mix.components.push_back(PureProductState{matrix_from_json(comp.at("gram"))});
        }
        return mix;
    }
    if (kind == "jfunction") {
        const auto& table = j.at("table");
        if (table.is_string()) {
            std::ifstream in(table.get<std::string>());
            if (!in) throw std::runtime_error("cannot open J table " + table.get<std::string>());
            json parsed;
            in >> parsed;
            return ExplicitJModel{JFunction::from_json(parsed)};
        }
        return ExplicitJModel{JFunction::from_json(table)};
    }
    throw std::runtime_error("unknown source kind \"" + kind + "\"");
}

void log_config(const json& resolved) { std::cerr << "config: " << resolved.dump() << "\n"; }

// ---------------------------------------------------------------------------

int cmd_table1(const std::string& out_path) {
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << "N,L,M,K\n";
    for (const auto& row : protocol_geometry_table()) {
        out << row.n << ',' << row.l << ',' << row.m << ',' << row.k << '\n';
    }
    return 0;
}

int cmd_fig2(int n_min, int n_max, int trials, int runs, std::uint64_t seed,
             const std::string& out_path) {
    log_config({{"command", "fig2"},
                {"n_min", n_min},
                {"n_max", n_max},
                {"trials", trials},
                {"scattershot_runs", runs},
                {"seed", seed}});
    std::vector<AverageComparisonRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const NumericPolicy& policy = NumericPolicy::defaults();
        if (n > policy.caps.permanent_ryser_max) {
            std::cerr << "fig2: skipping N = " << n << " (beyond permanent cap)\n";
            continue;
        }
        const Table1Row geo = select_k(n);
        AverageComparisonRow row;
        row.n = n;
        row.m = geo.m;
        row.k = geo.k;
        row.l = geo.l;
        row.analytic_boson = avg_quantum({n, geo.m, geo.k, ParticleKind::Boson});
        row.analytic_classical =
            avg_classical_approx({n, geo.m, geo.k, ParticleKind::Classical}).value;

        RngStream mc_boson_rng(seed, 1000 + static_cast<std::uint64_t>(n));
        const McEstimate boson =
            monte_carlo_avg({n, geo.m, geo.k, ParticleKind::Boson}, nullptr, trials, mc_boson_rng);
        row.mc_boson_mean = boson.mean;
        row.mc_boson_se = boson.std_error;

        RngStream mc_cl_rng(seed, 2000 + static_cast<std::uint64_t>(n));
        const McEstimate classical = monte_carlo_avg({n, geo.m, geo.k, ParticleKind::Classical},
                                                     nullptr, trials, mc_cl_rng);
        row.mc_classical_mean = classical.mean;
        row.mc_classical_se = classical.std_error;

        // One randomly chosen network per N for the scattershot columns.
        RngStream net_rng(seed, 3000 + static_cast<std::uint64_t>(n));
        const UnitaryMatrix network = haar_unitary(geo.m, net_rng);
        std::vector<int> subset(geo.k);
        for (int i = 0; i < geo.k; ++i) subset[i] = i + 1;

        RngStream sc_boson_rng(seed, 4000 + static_cast<std::uint64_t>(n));
        row.scattershot_boson =
            run_scattershot(network.matrix(), n, subset, runs,
                            IdealIndistinguishable{Species::Boson}, sc_boson_rng)
                .mean_prob;
        RngStream sc_cl_rng(seed, 5000 + static_cast<std::uint64_t>(n));
        row.scattershot_classical =
            run_scattershot(network.matrix(), n, subset, runs, IdealDistinguishable{}, sc_cl_rng)
                .mean_prob;
        rows.push_back(row);
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    write_average_comparison_csv(rows, out);
    return 0;
}

int cmd_assess(const std::string& config_path, std::uint64_t runs, std::uint64_t seed,
               const std::string& out_path) {
    const json cfg = load_json_file(config_path);
    DeviceModel device;
    const auto& net = cfg.at("network");
    device.network =
        net.is_string() ? load_matrix(net.get<std::string>()) : matrix_from_json(net);
    device.input_modes = cfg.at("input_modes").get<std::vector<int>>();
    device.source = parse_source(cfg.at("source"));
    device.lossy = cfg.value("lossy", false);
    const std::vector<int> subset = cfg.at("output_subset").get<std::vector<int>>();
    if (cfg.contains("runs") && runs == 0) runs = cfg.at("runs").get<std::uint64_t>();
    if (cfg.contains("seed") && seed == 0) seed = cfg.at("seed").get<std::uint64_t>();

    log_config({{"command", "assess"},
                {"config", config_path},
                {"runs", runs},
                {"seed", seed}});

    RngStream rng(seed, 0);
    const AssessmentReport rep = run_standard_protocol(device, subset, runs, rng);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << rep.to_json("standard").dump(2) << "\n";
    if (rep.verdict == Verdict::Pass) return 0;
    return 1;
}

int cmd_scattershot(const std::string& config_path, std::uint64_t runs, std::uint64_t seed,
                    const std::string& out_path) {
    const json cfg = load_json_file(config_path);
    const auto& net = cfg.at("network");
    const ComplexMatrix network =
        net.is_string() ? load_matrix(net.get<std::string>()) : matrix_from_json(net);
    const int n = cfg.at("particles").get<int>();
    const std::vector<int> subset = cfg.at("output_subset").get<std::vector<int>>();
    const InternalStateModel source =
        cfg.contains("source") ? parse_source(cfg.at("source"))
                               : InternalStateModel(IdealIndistinguishable{Species::Boson});
    if (cfg.contains("runs") && runs == 0) runs = cfg.at("runs").get<std::uint64_t>();
    if (cfg.contains("seed") && seed == 0) seed = cfg.at("seed").get<std::uint64_t>();

    log_config({{"command", "scattershot"},
                {"config", config_path},
                {"runs", runs},
                {"seed", seed}});

    RngStream rng(seed, 0);
    const ScattershotResult res = run_scattershot(network, n, subset, runs, source, rng);
    json rep;
    rep["protocol"] = "scattershot";
    rep["runs"] = res.record.runs;
    rep["bunched"] = res.record.bunched_count;
    rep["predicted"] = res.analytic_boson;
    rep["band"] = {res.analytic_boson - 3.0 * res.std_error,
                   res.analytic_boson + 3.0 * res.std_error};
    const bool pass = std::abs(res.mean_prob - res.analytic_boson) <= 3.0 * res.std_error;
    rep["verdict"] = pass ? "PASS" : "FAIL";
    rep["seed"] = seed;
    rep["mean_prob"] = res.mean_prob;
    rep["mean_exact_prob"] = res.mean_exact_prob;
    rep["analytic_classical"] = res.analytic_classical;
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << rep.dump(2) << "\n";
    return pass ? 0 : 1;
}

int cmd_approx_per(const std::string& config_path, double kappa, double delta,
                   const std::string& out_path) {
    const json cfg = load_json_file(config_path);
    const BunchingProblem problem = BunchingProblem::from_json(cfg);
    if (cfg.contains("kappa")) kappa = cfg.at("kappa").get<double>();
    if (cfg.contains("delta")) delta = cfg.at("delta").get<double>();
    log_config({{"command", "approx-per"},
                {"config", config_path},
                {"kappa", kappa},
                {"delta", delta}});

    const EstimatorConfig ecfg = EstimatorConfig::from_exponents(kappa, delta);
    const ApproxPermanentResult res = approx_permanent(problem, ecfg);
    json rep;
    rep["estimate"] = res.estimate;
    rep["truncation_order"] = res.truncation_order;
    rep["exact_fallback"] = res.exact_fallback;
    rep["flop_estimate"] = res.flop_estimate;
    rep["work_units"] = res.work_units;
    rep["ts_empirical"] = res.ts_empirical;
    rep["ts_mean_analytic"] = res.ts_mean_analytic;
    rep["epsilon"] = res.epsilon;
    rep["chebyshev_bound"] = res.cheb_bound;
    rep["ts_ok"] = res.ts_ok;
    if (problem.particles() <= NumericPolicy::defaults().caps.permanent_ryser_max) {
        const double exact = limit_probabilities(problem).boson * problem.mu();
        rep["exact_permanent"] = exact;
        rep["relative_error"] = std::abs(res.estimate - exact) / std::max(std::abs(exact), 1e-300);
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << rep.dump(2) << "\n";
    return 0;
}

int cmd_loophole(int n1, int k1, const std::string& out_path) {
    log_config({{"command", "loophole"}, {"n1", n1}, {"k1", k1}});
    const LoopholeReport rep = loophole_demo(n1, k1);
    const Stage1Report stage1 = stage1_check(IdealSinglesSource{}, 2 * n1);
    json out_json;
    out_json["n"] = 2 * n1;
    out_json["modes"] = 4 * n1 * n1;
    out_json["input_modes"] = rep.input_modes;
    out_json["all_outputs_in_allowed_set"] = rep.all_outputs_in_allowed_set;
    out_json["max_forbidden_prob"] = rep.max_forbidden_prob;
    out_json["per_block_laws_hold"] = rep.per_block_laws_hold;
    out_json["nonzero_configs"] = rep.nonzero_configs;
    out_json["stage1_verdict"] = verdict_name(stage1.verdict);
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << out_json.dump(2) << "\n";
    return rep.all_outputs_in_allowed_set ? 0 : 1;
}

int cmd_lossy(const std::string& in_path, const std::string& out_path) {
    log_config({{"command", "lossy"}, {"in", in_path}});
    const ComplexMatrix u = load_matrix(in_path);
    const LossyEmbedding emb = lossy_embedding(u);
    json rep;
    rep["modes"] = u.rows();
    rep["embedded_modes"] = emb.embedded.dim();
    rep["unitarity_defect"] = emb.embedded.matrix().unitarity_defect();
    rep["singular_values"] = emb.polar.singular_values;
    if (!out_path.empty()) {
        save_matrix(emb.embedded.matrix(), out_path);
        rep["written"] = out_path;
    }
    std::cout << rep.dump(2) << "\n";
    return 0;
}

int cmd_spectra(const std::string& config_path, int n, int m, int k, std::uint64_t seed,
                int pot_trials, const std::string& out_path) {
    json rep;
    ComplexMatrix h;
    if (!config_path.empty()) {
        const BunchingProblem problem = BunchingProblem::from_json(load_json_file(config_path));
        h = build_h(problem);
        log_config({{"command", "spectra"}, {"config", config_path}});
    } else {
        log_config({{"command", "spectra"}, {"n", n}, {"m", m}, {"k", k}, {"seed", seed}});
        RngStream rng(seed, 0);
        const ComplexMatrix rows = haar_isometry_rows(n, m, rng);
        h = ComplexMatrix(n, n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                Complex acc(0.0, 0.0);
                for (int l = 0; l < k; ++l) acc += rows(a, l) * std::conj(rows(b, l));
                h(a, b) = acc;
            }
    }
    const SchurPowerMatrix pi = schur_power_matrix(h);
    const SpectralReport sr = spectral_claims(pi, h);
    rep["n"] = pi.n;
    rep["min_eig"] = sr.min_eig;
    rep["max_eig"] = sr.max_eig;
    rep["det_h"] = sr.det_h;
    rep["per_h"] = sr.per_h;
    rep["min_is_det"] = sr.min_is_det;
    rep["sym_vector_is_eigen"] = sr.sym_vector_is_eigen;
    rep["sym_residual"] = sr.sym_residual;
    rep["per_is_max"] = sr.per_is_max;
    rep["per_margin"] = sr.per_margin;
    rep["per_multiplicity_on_sym"] = sr.per_multiplicity_on_sym;

    if (pot_trials > 0) {
        RngStream rng(seed, 77);
        const PotSearchResult pot = search_pot_violation(pi.n, std::max(m, pi.n), k, pot_trials,
                                                         rng);
        rep["pot_search"] = {{"trials", pot.trials},
                             {"worst_margin", pot.worst_margin},
                             {"violation_found", pot.violation_found}};
    }
    std::ofstream file;
    std::ostream& out = open_output(out_path, file);
    out << rep.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized bunching toolkit: averages, spectra, and the assessment protocol"};
    app.require_subcommand(1);

    std::string out_path;
    std::string config_path;
    std::uint64_t seed = 0;
    std::uint64_t runs = 0;
    int trials = 1000;

    auto* table1 = app.add_subcommand("table1", "protocol geometry table (N, L, M, K)");
    table1->add_option("--out", out_path, "output CSV path (default stdout)");

    auto* fig2 = app.add_subcommand("fig2", "average-probability data set (analytic/MC/scattershot)");
    int n_min = 3, n_max = 7;
    int sc_runs = 500;
    fig2->add_option("--n-min", n_min);
    fig2->add_option("--n-max", n_max);
    fig2->add_option("--trials", trials, "Haar networks per point");
    fig2->add_option("--runs", sc_runs, "scattershot runs per point");
    fig2->add_option("--seed", seed);
    fig2->add_option("--out", out_path);

    auto* assess = app.add_subcommand("assess", "standard two-stage assessment on a device config");
    assess->add_option("--config", config_path, "device JSON")->required();
    assess->add_option("--runs", runs);
    assess->add_option("--seed", seed);
    assess->add_option("--out", out_path);

    auto* scatter = app.add_subcommand("scattershot", "scattershot assessment on a network config");
    scatter->add_option("--config", config_path, "config JSON")->required();
    scatter->add_option("--runs", runs);
    scatter->add_option("--seed", seed);
    scatter->add_option("--out", out_path);

    auto* approx = app.add_subcommand("approx-per", "truncated permanent estimator on a problem");
    double kappa = 2.0, delta = 0.5;
    approx->add_option("--config", config_path, "bunching problem JSON")->required();
    approx->add_option("--kappa", kappa);
    approx->add_option("--delta", delta);
    approx->add_option("--out", out_path);

    auto* loophole = app.add_subcommand("loophole", "block-Fourier adversary demonstration");
    int n1 = 2, k1 = 1;
    loophole->add_option("--n1", n1, "group size (2 for exact enumeration)");
    loophole->add_option("--k1", k1, "cyclic input offset");
    loophole->add_option("--out", out_path);

    auto* lossy = app.add_subcommand("lossy", "embed a passive network into a 2M-mode unitary");
    std::string in_path;
    lossy->add_option("--in", in_path, "matrix JSON file")->required();
    lossy->add_option("--out", out_path, "write the embedding here");

    auto* spectra = app.add_subcommand("spectra", "Schur power matrix spectral report");
    int sn = 4, sm = 8, sk = 4, pot_trials = 0;
    spectra->add_option("--config", config_path, "bunching problem JSON");
    spectra->add_option("--n", sn);
    spectra->add_option("--m", sm);
    spectra->add_option("--k", sk);
    spectra->add_option("--seed", seed);
    spectra->add_option("--pot-trials", pot_trials, "random search for permanent-on-top violations");
    spectra->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, --help exits 0
    }

    try {
        if (table1->parsed()) return cmd_table1(out_path);
        if (fig2->parsed()) return cmd_fig2(n_min, n_max, trials, sc_runs, seed, out_path);
        if (assess->parsed()) return cmd_assess(config_path, runs, seed, out_path);
        if (scatter->parsed()) return cmd_scattershot(config_path, runs, seed, out_path);
        if (approx->parsed()) return cmd_approx_per(config_path, kappa, delta, out_path);
        if (loophole->parsed()) return cmd_loophole(n1, k1, out_path);
        if (lossy->parsed()) return cmd_lossy(in_path, out_path);
        if (spectra->parsed()) return cmd_spectra(config_path, sn, sm, sk, seed, pot_trials,
                                                  out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
