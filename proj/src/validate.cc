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

#include "qcorr/validate.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcorr/channels.h"
#include "qcorr/correlator.h"
#include "qcorr/dilation.h"
#include "qcorr/errors.h"
#include "qcorr/instances.h"
#include "qcorr/random_stream.h"

namespace qcorr {

namespace {

class Tracker {
   public:
    Tracker(ValidationReport &report, std::size_t dim, double scale) : report_(report), dim_(dim), scale_(scale) {
    }

    // Records a residual that must stay at or below `threshold`.
    void upper(const std::string &name, double threshold, double value) {
        auto &c = find(name, threshold, false);
        c.worst = std::max(c.worst, value);
        c.instances++;
        c.passed = c.passed && std::isfinite(value) && value <= c.threshold;
    }

    // Records a value that must stay at or above `threshold`.
    void lower(const std::string &name, double threshold, double value) {
        auto &c = find(name, threshold, true);
        c.worst = c.instances == 0 ? value : std::min(c.worst, value);
        c.instances++;
        c.passed = c.passed && std::isfinite(value) && value >= c.threshold;
    }

    void flag(const std::string &name, bool ok) {
        upper(name, 0.0, ok ? 0.0 : 1.0);
    }

   private:
    InvariantCheck &find(const std::string &name, double threshold, bool lower_bound) {
        for (auto &c : report_.checks) {
            if (c.name == name && c.dim == dim_) {
                return c;
            }
        }
        InvariantCheck c;
        c.name = name;
        c.dim = dim_;
        c.threshold = threshold * scale_;
        c.lower_bound = lower_bound;
        report_.checks.push_back(c);
        return report_.checks.back();
    }

    ValidationReport &report_;
    std::size_t dim_;
    double scale_;
};

void check_correlator(Tracker &t, std::size_t d, std::size_t n, instances::Rng &rng) {
    const LinearMap corr = ideal_correlator(d);
    const CorrelatorPair pair = hermitian_split(corr);
    t.flag("correlator_not_hp", !is_hp(corr));
    t.flag("correlator_parts_hp", is_hp(pair.t_real) && is_hp(pair.t_imag));
    const auto dec_real = statistical_decomposition(pair.t_real);
    const auto dec_imag = statistical_decomposition(pair.t_imag);
    for (const auto *dec : {&dec_real, &dec_imag}) {
        const auto &map = dec == &dec_real ? pair.t_real : pair.t_imag;
        const auto res = decomposition_residuals(*dec, map);
        t.upper("correlator_decomposition_reconstruction", 1e-9, res.reconstruction);
        t.upper("correlator_decomposition_tp", 1e-9, res.trace_preserving);
        t.lower("correlator_decomposition_min_eigenvalue", -1e-10, res.min_part_eigenvalue);
    }
    for (std::size_t k = 0; k < n; k++) {
        const ComplexMatrix rho = instances::random_state(d, rng);
        const ComplexMatrix a = instances::random_hermitian(d, rng);
        const ComplexMatrix b = instances::random_hermitian(d, rng);
        const Complex oracle = exact_correlation(rho, a, b);
        const ComplexMatrix ab = kron(a, b);
        const Complex via_map = trace_of_product(apply_map(corr, rho), ab);
        t.upper("correlator_identity", 1e-9, std::abs(via_map - oracle));
        const double re = trace_of_product(apply_map(pair.t_real, rho), ab).real();
        const double im = trace_of_product(apply_map(pair.t_imag, rho), ab).real();
        t.upper("correlator_split", 1e-9, std::max(std::abs(re - oracle.real()), std::abs(im - oracle.imag())));
        t.upper("correlator_conjugate_symmetry", 1e-9, std::abs(oracle - std::conj(exact_correlation(rho, b, a))));
    }
}

void check_map(Tracker &t, const LinearMap &map, instances::Rng &rng) {
    const std::size_t d_in = map.dim_in();
    const std::size_t d_out = map.dim_out();

    auto [plus, minus] = jordan_parts(map);
    t.upper("jordan_exactness", 1e-10, max_abs(plus.choi() - minus.choi() - map.choi()));

    const auto dec = statistical_decomposition(map);
    const auto res = decomposition_residuals(dec, map);
    t.upper("decomposition_reconstruction", 1e-9, res.reconstruction);
    t.upper("decomposition_tp", 1e-9, res.trace_preserving);
    t.lower("decomposition_min_eigenvalue", -1e-10, res.min_part_eigenvalue);

    for (const auto &part : dec.parts) {
        const KrausSet kraus = kraus_from_choi(part);
        double worst = 0;
        for (std::size_t i = 0; i < d_in; i++) {
            for (std::size_t j = 0; j < d_in; j++) {
                ComplexMatrix unit(d_in, d_in);
                unit(i, j) = 1.0;
                worst = std::max(worst, max_abs(apply_kraus(kraus, unit) - apply_map(part, unit)));
            }
        }
        t.upper("kraus_action", 1e-9, worst);
    }

    const Dilation dil = dilate(dec);
    t.upper("dilation_isometry", 1e-9, isometry_residual(dil.v));
    t.upper("dilation_reduced_map", 1e-9, max_abs(reduced_map(dil).choi() - map.choi()));
    t.upper("unitary_completion", 1e-9, max_abs(dil.u.adjoint() * dil.u - ComplexMatrix::identity(dil.u.rows())));
    const ComplexVector psi = instances::random_vector(d_in, rng);
    const ComplexVector lhs = dil.u * std::span<const Complex>(embed_input(dil, psi));
    const ComplexVector rhs = dil.v * std::span<const Complex>(psi);
    double emb = 0;
    for (std::size_t r = 0; r < lhs.size(); r++) {
        emb = std::max(emb, std::abs(lhs[r] - rhs[r]));
    }
    t.upper("unitary_embedding", 1e-9, emb);

    const ComplexMatrix rho = instances::random_state(d_in, rng);
    const ComplexMatrix a = instances::random_hermitian(d_out, rng);
    const double oracle = trace_of_product(apply_map(map, rho), a).real();
    double instrument = 0;
    double p_sum = 0;
    double p_min = std::numeric_limits<double>::infinity();
    std::vector<double> p;
    for (std::size_t i = 0; i < dec.parts.size(); i++) {
        const ComplexMatrix out = apply_map(dec.parts[i], rho);
        instrument += dec.coefficients[i] * trace_of_product(out, a).real();
        p.push_back(trace(out).real());
        p_sum += p.back();
        p_min = std::min(p_min, p.back());
    }
    t.upper("instrument_identity", 1e-8, std::abs(instrument - oracle));
    t.lower("instrument_probability_min", -1e-10, p_min);
    t.upper("instrument_probability_sum", 1e-9, std::abs(p_sum - 1));
    t.upper("partial_expectation_identity", 1e-8, std::abs(partial_expectation(dil, rho, a) - oracle));
    const auto anc_p = ancilla_outcome_probabilities(dil, rho);
    double p_gap = 0;
    for (std::size_t i = 0; i < p.size(); i++) {
        p_gap = std::max(p_gap, std::abs(anc_p[i] - p[i]));
    }
    t.upper("ancilla_probabilities", 1e-9, p_gap);
}

}  // namespace

bool ValidationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const InvariantCheck &c) { return c.passed; });
}

ValidationReport run_validation(const std::vector<std::size_t> &dims, std::size_t instances, std::uint64_t seed,
                                double tolerance_scale) {
    if (instances == 0) {
        throw InvalidInput("nothing to validate: instances must be at least 1");
    }
    if (dims.empty()) {
        throw InvalidInput("nothing to validate: no dimensions given");
    }
    for (std::size_t d : dims) {
        if (d < 2 || d > 4) {
            throw InvalidInput("validation dimensions must be 2, 3 or 4, got " + std::to_string(d));
        }
    }
    if (!(tolerance_scale > 0)) {
        throw InvalidInput("tolerance scale must be positive");
    }

    ValidationReport report;
    for (std::size_t d : dims) {
        instances::Rng rng(derive_seed(seed, d));
        Tracker t(report, d, tolerance_scale);
        check_correlator(t, d, instances, rng);
        for (std::size_t k = 0; k < instances; k++) {
            check_map(t, instances::random_hp_map(d, d, rng), rng);
            const LinearMap cptp = instances::random_cptp_map(d, d, 1 + k % (d * d), rng);
            const auto dec = statistical_decomposition(cptp);
            t.flag("cptp_single_part", dec.parts.size() == 1 && dec.coefficients[0] == 1.0 && dec.l1_cost == 1.0);
            check_map(t, cptp, rng);
        }
    }
    return report;
}

}  // namespace qcorr
