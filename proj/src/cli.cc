// Copyright 2026 The qcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qcorr/cli.h"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcorr/channels.h"
#include "qcorr/correlator.h"
#include "qcorr/dilation.h"
#include "qcorr/errors.h"
#include "qcorr/instances.h"
#include "qcorr/matrix_io.h"
#include "qcorr/random_stream.h"
#include "qcorr/simulate.h"
#include "qcorr/validate.h"

namespace qcorr::cli {

namespace {

using nlohmann::json;

struct RunConfig {
    std::string command;
    std::string state;
    std::string obs_a;
    std::string obs_b;
    std::string map;
    std::string out;
    std::string mode = "exact";
    std::string path = "instrument";
    std::size_t shots = 100000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    double real_fraction = 0.5;
    std::vector<std::size_t> dims{2, 3};
    std::size_t instances = 100;
    std::size_t probes = 20;
    double tolerance_scale = 1.0;
};

json complex_json(Complex z) {
    return {{"re", z.real()}, {"im", z.imag()}};
}

ComplexMatrix load_square(const std::string &path, const char *what) {
    if (path.empty()) {
        throw InvalidInput(std::string("missing --") + what);
    }
    MatrixFile file = read_matrix_file(path);
    if (file.dim_out) {
        throw InvalidInput(path + ": " + what + " file must not declare dim_out");
    }
    return file.matrix;
}

LinearMap load_map(const std::string &path) {
    if (path.empty()) {
        throw InvalidInput("missing --map");
    }
    MatrixFile file = read_matrix_file(path);
    if (!file.dim_out) {
        throw InvalidInput(path + ": map file must declare dim_out");
    }
    return map_from_file(file);
}

json estimator_json(const EstimatorResult &r) {
    json per = json::array();
    for (const auto &o : r.per_outcome) {
        per.push_back({{"outcome", o.outcome}, {"count", o.count}, {"mean_eigenvalue", o.mean_eigenvalue}});
    }
    return {{"shots", r.shots},
            {"seed", r.seed},
            {"estimate", r.estimate},
            {"std_error", r.std_error},
            {"sample_variance", r.sample_variance},
            {"per_outcome", per}};
}

SamplingOptions sampling(const RunConfig &cfg) {
    return {cfg.threads};
}

json cmd_correlate(const RunConfig &cfg) {
    const ComplexMatrix rho = load_square(cfg.state, "state");
    const ComplexMatrix a = load_square(cfg.obs_a, "obsA");
    const ComplexMatrix b = load_square(cfg.obs_b, "obsB");
    const Complex exact = exact_correlation(rho, a, b);
    json doc = {{"command", "correlate"}, {"mode", cfg.mode}, {"dim", rho.rows()}};
    if (cfg.mode == "exact") {
        const CorrelatorPair pair = correlator_pair(rho.rows());
        doc["re"] = exact.real();
        doc["im"] = exact.imag();
        doc["l1_cost_real"] = statistical_decomposition(pair.t_real).l1_cost;
        doc["l1_cost_imag"] = statistical_decomposition(pair.t_imag).l1_cost;
        return doc;
    }
    CorrelationOptions opts;
    opts.real_fraction = cfg.real_fraction;
    opts.sampling = sampling(cfg);
    const auto est = estimate_correlation(rho, a, b, cfg.shots, cfg.seed, opts);
    doc["shots"] = cfg.shots;
    doc["seed"] = cfg.seed;
    doc["re"] = est.estimate.real();
    doc["im"] = est.estimate.imag();
    doc["std_error_re"] = est.std_error_real;
    doc["std_error_im"] = est.std_error_imag;
    doc["l1_cost_real"] = est.l1_cost_real;
    doc["l1_cost_imag"] = est.l1_cost_imag;
    doc["real_part"] = estimator_json(est.real);
    doc["imag_part"] = estimator_json(est.imag);
    doc["exact"] = complex_json(exact);
    return doc;
}

json cmd_decompose(const RunConfig &cfg) {
    const LinearMap map = load_map(cfg.map);
    const auto dec = statistical_decomposition(map);
    const auto res = decomposition_residuals(dec, map);
    json parts = json::array();
    json min_eigs = json::array();
    for (std::size_t i = 0; i < dec.parts.size(); i++) {
        parts.push_back({{"lambda", dec.coefficients[i]}, {"choi", to_json(matrix_file_for(dec.parts[i]))}});
        min_eigs.push_back(min_choi_eigenvalue(dec.parts[i]));
    }
    return {{"command", "decompose"},
            {"dim_in", map.dim_in()},
            {"dim_out", map.dim_out()},
            {"coefficients", dec.coefficients},
            {"l1_cost", dec.l1_cost},
            {"max_abs_coefficient", dec.empty() ? 0.0 : std::abs(dec.coefficients.front())},
            {"parts", parts},
            {"residuals",
             {{"reconstruction", res.reconstruction},
              {"trace_preserving", dec.empty() ? 0.0 : res.trace_preserving},
              {"min_part_eigenvalues", min_eigs}}}};
}

json cmd_dilate(const RunConfig &cfg) {
    const LinearMap map = load_map(cfg.map);
    const auto dec = statistical_decomposition(map);
    const Dilation dil = dilate(dec);

    instances::Rng rng(cfg.seed);
    double identity = 0;
    for (std::size_t k = 0; k < cfg.probes; k++) {
        const ComplexMatrix rho = instances::random_state(map.dim_in(), rng);
        const ComplexMatrix a = instances::random_hermitian(map.dim_out(), rng);
        const double oracle = trace_of_product(apply_map(map, rho), a).real();
        identity = std::max(identity, std::abs(partial_expectation(dil, rho, a) - oracle));
    }
    std::vector<double> z_diag;
    for (std::size_t k = 0; k < dil.ancilla_dim; k++) {
        z_diag.push_back(dil.z(k, k).real());
    }
    return {{"command", "dilate"},
            {"dim_in", dil.dim_in},
            {"dim_out", dil.dim_out},
            {"ancilla_dim", dil.ancilla_dim},
            {"coefficients", dil.coefficients},
            {"outcome_index", dil.outcome_index},
            {"z_diagonal", z_diag},
            {"v", matrix_to_json(dil.v)},
            {"u", matrix_to_json(dil.u)},
            {"residuals",
             {{"isometry", isometry_residual(dil.v)},
              {"unitarity", max_abs(dil.u.adjoint() * dil.u - ComplexMatrix::identity(dil.u.rows()))},
              {"reduced_map", max_abs(reduced_map(dil).choi() - map.choi())},
              {"partial_expectation", identity},
              {"probes", cfg.probes}}}};
}

json cmd_simulate(const RunConfig &cfg) {
    const LinearMap map = load_map(cfg.map);
    const ComplexMatrix rho = load_square(cfg.state, "state");
    const ComplexMatrix a = load_square(cfg.obs_a, "obsA");
    require_state(rho);
    require_observable(a);
    if (rho.rows() != map.dim_in() || a.rows() != map.dim_out()) {
        throw InvalidInput("state or observable dimension does not match the map");
    }
    const auto dec = statistical_decomposition(map);
    if (dec.empty()) {
        throw InvalidInput("map is zero; nothing to sample");
    }
    EstimatorResult res;
    if (cfg.path == "instrument") {
        res = estimate_hp_expectation(dec, rho, a, cfg.shots, cfg.seed, sampling(cfg));
    } else {
        const Dilation dil = dilate(dec);
        const auto reading = cfg.path == "joint" ? DilationReading::joint : DilationReading::ancilla_first;
        res = estimate_partial_expectation(dil, rho, a, cfg.shots, cfg.seed, reading, sampling(cfg));
    }
    json doc = estimator_json(res);
    doc["command"] = "simulate";
    doc["path"] = cfg.path;
    doc["dim_in"] = map.dim_in();
    doc["dim_out"] = map.dim_out();
    doc["coefficients"] = dec.coefficients;
    doc["l1_cost"] = dec.l1_cost;
    doc["exact"] = trace_of_product(apply_map(map, rho), a).real();
    doc["analytic_variance"] = analytic_estimator_variance(dec, rho, a);
    return doc;
}

json cmd_uncertainty(const RunConfig &cfg) {
    const ComplexMatrix rho = load_square(cfg.state, "state");
    const ComplexMatrix a = load_square(cfg.obs_a, "obsA");
    const ComplexMatrix b = load_square(cfg.obs_b, "obsB");
    const auto rep = uncertainty_check(rho, a, b, cfg.shots, cfg.seed, sampling(cfg));
    return {{"command", "uncertainty"},
            {"dim", rho.rows()},
            {"shots", cfg.shots},
            {"seed", cfg.seed},
            {"commutator", complex_json(rep.commutator)},
            {"commutator_std_error", {{"re", rep.commutator_std_error_real}, {"im", rep.commutator_std_error_imag}}},
            {"bound", rep.bound},
            {"bound_std_error", rep.bound_std_error},
            {"delta_a", rep.delta_a},
            {"delta_a_std_error", rep.delta_a_std_error},
            {"delta_b", rep.delta_b},
            {"delta_b_std_error", rep.delta_b_std_error},
            {"product", rep.product},
            {"product_std_error", rep.product_std_error},
            {"combined_std_error", rep.combined_std_error},
            {"verdict", to_string(rep.verdict)}};
}

json cmd_validate(const RunConfig &cfg, std::ostream &err, bool &passed) {
    const auto report = run_validation(cfg.dims, cfg.instances, cfg.seed, cfg.tolerance_scale);
    passed = report.passed();
    json checks = json::array();
    err << std::left << std::setw(42) << "invariant" << std::setw(5) << "dim" << std::setw(14) << "worst"
        << std::setw(12) << "bound" << "status\n";
    for (const auto &c : report.checks) {
        checks.push_back({{"name", c.name},
                          {"dim", c.dim},
                          {"instances", c.instances},
                          {"worst", c.worst},
                          {"threshold", c.threshold},
                          {"kind", c.lower_bound ? "min" : "max"},
                          {"passed", c.passed}});
        err << std::left << std::setw(42) << c.name << std::setw(5) << c.dim << std::setw(14) << std::setprecision(3)
            << c.worst << std::setw(12) << c.threshold << (c.passed ? "ok" : "FAIL") << "\n";
    }
    return {{"command", "validate"},
            {"dims", cfg.dims},
            {"instances", cfg.instances},
            {"seed", cfg.seed},
            {"tolerance_scale", cfg.tolerance_scale},
            {"passed", passed},
            {"checks", checks}};
}

void add_sampling_options(CLI::App *cmd, RunConfig &cfg) {
    cmd->add_option("--shots", cfg.shots, "Number of shots")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "Random seed");
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    RunConfig cfg;
    CLI::App app{"Two-point quantum correlation functions via partial expectation values", "qcorr"};
    app.require_subcommand(1);

    auto *correlate = app.add_subcommand("correlate", "Tr[A rho B], exactly or by sampling");
    correlate->add_option("--state", cfg.state, "State file")->required();
    correlate->add_option("--obsA", cfg.obs_a, "Observable A file")->required();
    correlate->add_option("--obsB", cfg.obs_b, "Observable B file")->required();
    correlate->add_option("--mode", cfg.mode, "exact or simulate")->check(CLI::IsMember({"exact", "simulate"}));
    correlate->add_option("--real-fraction", cfg.real_fraction, "Share of shots for the real part")
        ->check(CLI::Range(0.0, 1.0));
    add_sampling_options(correlate, cfg);

    auto *decompose = app.add_subcommand("decompose", "Statistical decomposition of an HP map");
    decompose->add_option("--map", cfg.map, "Map file (Choi matrix)")->required();

    auto *dilate_cmd = app.add_subcommand("dilate", "Isometry, ancilla observable and unitary for an HP map");
    dilate_cmd->add_option("--map", cfg.map, "Map file (Choi matrix)")->required();
    dilate_cmd->add_option("--seed", cfg.seed, "Seed for the random verification probes");
    dilate_cmd->add_option("--probes", cfg.probes, "Number of random verification probes");

    auto *simulate = app.add_subcommand("simulate", "Sample Tr[L(rho) A] through the instrument protocol");
    simulate->add_option("--map", cfg.map, "Map file (Choi matrix)")->required();
    simulate->add_option("--state", cfg.state, "State file")->required();
    simulate->add_option("--obsA", cfg.obs_a, "Observable on the map output")->required();
    simulate->add_option("--path", cfg.path, "instrument, joint or ancilla-first")
        ->check(CLI::IsMember({"instrument", "joint", "ancilla-first"}));
    add_sampling_options(simulate, cfg);

    auto *uncertainty = app.add_subcommand("uncertainty", "Sampling test of the Robertson relation");
    uncertainty->add_option("--state", cfg.state, "State file")->required();
    uncertainty->add_option("--obsA", cfg.obs_a, "Observable A file")->required();
    uncertainty->add_option("--obsB", cfg.obs_b, "Observable B file")->required();
    add_sampling_options(uncertainty, cfg);

    auto *validate = app.add_subcommand("validate", "Run the invariant suites on random instances");
    validate->add_option("--dims", cfg.dims, "Dimensions to test (2, 3, 4)")->delimiter(',');
    validate->add_option("--instances", cfg.instances, "Random instances per dimension");
    validate->add_option("--seed", cfg.seed, "Random seed");
    validate->add_option("--tolerance-scale", cfg.tolerance_scale, "Multiplier applied to every threshold");

    for (auto *cmd : app.get_subcommands({})) {
        cmd->add_option("--out", cfg.out, "Write the result document here instead of stdout");
    }

    std::vector<std::string> argv_storage;
    argv_storage.push_back("qcorr");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidInput;
    }

    int exit_code = kSuccess;
    json doc;
    try {
        if (correlate->parsed()) {
            doc = cmd_correlate(cfg);
        } else if (decompose->parsed()) {
            doc = cmd_decompose(cfg);
        } else if (dilate_cmd->parsed()) {
            doc = cmd_dilate(cfg);
        } else if (simulate->parsed()) {
            doc = cmd_simulate(cfg);
        } else if (uncertainty->parsed()) {
            doc = cmd_uncertainty(cfg);
        } else {
            bool passed = false;
            doc = cmd_validate(cfg, err, passed);
            exit_code = passed ? kSuccess : kValidationFailure;
        }
    } catch (const InvalidInput &e) {
        err << "qcorr: invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const nlohmann::json::exception &e) {
        err << "qcorr: invalid input: " << e.what() << "\n";
        return kInvalidInput;
    } catch (const NumericalFailure &e) {
        err << "qcorr: numerical failure: " << e.what() << "\n";
        return kNumericalFailure;
    }

    const std::string text = doc.dump(2) + "\n";
    if (cfg.out.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out);
        if (!file || !(file << text)) {
            err << "qcorr: cannot write " << cfg.out << "\n";
            return kInvalidInput;
        }
    }
    return exit_code;
}

}  // namespace qcorr::cli
