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

#include "qcorr/simulate.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "qcorr/correlator.h"
#include "qcorr/errors.h"

namespace qcorr {

namespace {

constexpr double kNegativeProbabilityTolerance = 1e-10;
constexpr double kDegeneracyTolerance = 1e-9;
// Shots are reduced in fixed blocks so the summation order never depends on
// the number of worker threads.
constexpr std::size_t kChunkShots = 8192;

// Two-stage categorical sampler: stage one picks an outcome i, stage two an
// eigenvalue index k, and the shot value is weights[i] * values[i][k].
struct SamplingPlan {
    std::vector<double> first;
    std::vector<double> weights;
    std::vector<std::vector<double>> second;
    std::vector<std::vector<double>> values;
};

std::size_t draw(const std::vector<double> &p, double u) {
    double acc = 0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < p.size(); k++) {
        if (p[k] <= 0) {
            continue;
        }
        acc += p[k];
        last_positive = k;
        if (u < acc) {
            return k;
        }
    }
    return last_positive;
}

std::vector<double> born_probabilities(const SpectralMeasurement &meas, const ComplexMatrix &unnormalized) {
    std::vector<double> q(meas.values.size());
    for (std::size_t k = 0; k < q.size(); k++) {
        q[k] = trace_of_product(unnormalized, meas.projectors[k]).real();
    }
    double total = 0;
    for (double &x : q) {
        if (x < 0 && x >= -kNegativeProbabilityTolerance) {
            x = 0;
        }
        total += std::max(x, 0.0);
    }
    if (total <= 0) {
        // Only reachable for outcomes whose own probability is at round-off
        // level; any distribution is then as good as another.
        return std::vector<double>(q.size(), 1.0 / static_cast<double>(q.size()));
    }
    return clip_probabilities(std::move(q));
}

struct ChunkAccumulator {
    double sum = 0;
    double sum_sq = 0;
    std::vector<std::size_t> counts;
    std::vector<double> eigen_sums;
};

ChunkAccumulator run_chunk(const SamplingPlan &plan, std::uint64_t seed, std::size_t begin, std::size_t end) {
    ChunkAccumulator acc;
    acc.counts.assign(plan.first.size(), 0);
    acc.eigen_sums.assign(plan.first.size(), 0.0);
    for (std::size_t shot = begin; shot < end; shot++) {
        RandomStream stream(seed, shot);
        ShotRecord rec;
        rec.outcome = draw(plan.first, stream.uniform());
        std::size_t k = draw(plan.second[rec.outcome], stream.uniform());
        rec.eigenvalue = plan.values[rec.outcome][k];
        rec.weight = plan.weights[rec.outcome];
        const double x = rec.value();
        acc.sum += x;
        acc.sum_sq += x * x;
        acc.counts[rec.outcome]++;
        acc.eigen_sums[rec.outcome] += rec.eigenvalue;
    }
    return acc;
}

EstimatorResult run_plan(const SamplingPlan &plan, std::size_t shots, std::uint64_t seed, SamplingOptions options) {
    if (shots == 0) {
        throw InvalidInput("shot count must be at least 1");
    }
    const std::size_t chunks = (shots + kChunkShots - 1) / kChunkShots;
    std::vector<ChunkAccumulator> partial(chunks);

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.threads;
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, chunks));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t c = next++; c < chunks; c = next++) {
            partial[c] = run_chunk(plan, seed, c * kChunkShots, std::min(shots, (c + 1) * kChunkShots));
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; t++) {
            pool.emplace_back(worker);
        }
        for (auto &th : pool) {
            th.join();
        }
    }

    ChunkAccumulator total;
    total.counts.assign(plan.first.size(), 0);
    total.eigen_sums.assign(plan.first.size(), 0.0);
    for (const auto &c : partial) {
        total.sum += c.sum;
        total.sum_sq += c.sum_sq;
        for (std::size_t i = 0; i < c.counts.size(); i++) {
            total.counts[i] += c.counts[i];
            total.eigen_sums[i] += c.eigen_sums[i];
        }
    }

    EstimatorResult res;
    res.shots = shots;
    res.seed = seed;
    const double n = static_cast<double>(shots);
    res.estimate = total.sum / n;
    if (shots > 1) {
        res.sample_variance = std::max(0.0, (total.sum_sq - total.sum * res.estimate) / (n - 1));
    }
    res.std_error = std::sqrt(res.sample_variance / n);
    for (std::size_t i = 0; i < total.counts.size(); i++) {
        OutcomeStats st;
        st.outcome = i;
        st.count = total.counts[i];
        st.mean_eigenvalue = st.count == 0 ? 0.0 : total.eigen_sums[i] / static_cast<double>(st.count);
        res.per_outcome.push_back(st);
    }
    return res;
}

void require_square_of(const ComplexMatrix &m, std::size_t dim, const char *what) {
    if (!m.is_square() || m.rows() != dim) {
        throw InvalidInput(std::string(what) + " must be " + std::to_string(dim) + "x" + std::to_string(dim) +
                           ", got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
}

void require_decomposition(const StatisticalDecomposition &dec) {
    if (dec.empty()) {
        throw InvalidInput("decomposition has no parts");
    }
    if (dec.coefficients.size() != dec.parts.size()) {
        throw InvalidInput("decomposition coefficient and part counts differ");
    }
}

}  // namespace

SpectralMeasurement spectral_measurement(const ComplexMatrix &observable) {
    require_observable(observable);
    auto eig = eig_hermitian(observable);
    SpectralMeasurement out;
    std::vector<std::size_t> members;
    double group_start = 0;
    for (std::size_t k = 0; k < eig.values.size(); k++) {
        ComplexVector v = eig.vectors.col(k);
        const double value = eig.values[k];
        if (!out.values.empty() && value - group_start <= kDegeneracyTolerance) {
            out.projectors.back() += outer(v, v);
            out.values.back() += value;
            members.back()++;
            continue;
        }
        group_start = value;
        out.values.push_back(value);
        out.projectors.push_back(outer(v, v));
        members.push_back(1);
    }
    // A merged group reports the mean of its members.
    for (std::size_t g = 0; g < out.values.size(); g++) {
        out.values[g] /= static_cast<double>(members[g]);
    }
    return out;
}

std::vector<double> clip_probabilities(std::vector<double> p) {
    double total = 0;
    for (double &x : p) {
        if (x < -kNegativeProbabilityTolerance) {
            throw NumericalFailure("probability " + std::to_string(x) + " is below the clipping tolerance");
        }
        if (x < 0) {
            x = 0;
        }
        total += x;
    }
    if (!(total > 0)) {
        throw NumericalFailure("all outcome probabilities vanish");
    }
    for (double &x : p) {
        x /= total;
    }
    return p;
}

std::vector<double> outcome_probabilities(const StatisticalDecomposition &dec, const ComplexMatrix &rho) {
    require_decomposition(dec);
    std::vector<double> p;
    p.reserve(dec.parts.size());
    for (const auto &part : dec.parts) {
        p.push_back(trace(apply_map(part, rho)).real());
    }
    return clip_probabilities(std::move(p));
}

InstrumentSample sample_instrument(const StatisticalDecomposition &dec, const ComplexMatrix &rho,
                                   RandomStream &stream) {
    require_state(rho);
    const auto p = outcome_probabilities(dec, rho);
    const std::size_t i = draw(p, stream.uniform());
    ComplexMatrix out = apply_map(dec.parts[i], rho);
    const double weight = trace(out).real();
    out *= 1.0 / weight;
    return {i, std::move(out)};
}

double measure_observable(const ComplexMatrix &observable, const ComplexMatrix &rho, RandomStream &stream) {
    require_square_of(observable, rho.rows(), "observable");
    const auto meas = spectral_measurement(observable);
    const auto q = born_probabilities(meas, rho);
    return meas.values[draw(q, stream.uniform())];
}

EstimatorResult estimate_hp_expectation(const StatisticalDecomposition &dec, const ComplexMatrix &rho,
                                        const ComplexMatrix &a, std::size_t shots, std::uint64_t seed,
                                        SamplingOptions options) {
    require_decomposition(dec);
    require_state(rho);
    require_square_of(rho, dec.parts.front().dim_in(), "state");
    require_square_of(a, dec.parts.front().dim_out(), "observable");
    const auto meas = spectral_measurement(a);

    SamplingPlan plan;
    plan.weights = dec.coefficients;
    std::vector<double> raw;
    std::vector<ComplexMatrix> outputs;
    for (const auto &part : dec.parts) {
        outputs.push_back(apply_map(part, rho));
        raw.push_back(trace(outputs.back()).real());
    }
    plan.first = clip_probabilities(raw);
    for (std::size_t i = 0; i < dec.parts.size(); i++) {
        plan.second.push_back(born_probabilities(meas, outputs[i]));
        plan.values.push_back(meas.values);
    }
    return run_plan(plan, shots, seed, options);
}

double analytic_estimator_variance(const StatisticalDecomposition &dec, const ComplexMatrix &rho,
                                   const ComplexMatrix &a) {
    require_decomposition(dec);
    const ComplexMatrix a2 = a * a;
    double second = 0;
    double mean = 0;
    for (std::size_t i = 0; i < dec.parts.size(); i++) {
        const ComplexMatrix out = apply_map(dec.parts[i], rho);
        const double lambda = dec.coefficients[i];
        second += lambda * lambda * trace_of_product(out, a2).real();
        mean += lambda * trace_of_product(out, a).real();
    }
    return second - mean * mean;
}

EstimatorResult estimate_partial_expectation(const Dilation &dil, const ComplexMatrix &rho, const ComplexMatrix &a,
                                             std::size_t shots, std::uint64_t seed, DilationReading reading,
                                             SamplingOptions options) {
    require_state(rho);
    require_square_of(a, dil.dim_out, "observable");
    const ComplexMatrix joint = dilated_state(dil, rho);

    SamplingPlan plan;
    if (reading == DilationReading::joint) {
        const auto meas = spectral_measurement(kron(a, dil.z));
        plan.first = {1.0};
        plan.weights = {1.0};
        plan.second.push_back(born_probabilities(meas, joint));
        plan.values.push_back(meas.values);
        return run_plan(plan, shots, seed, options);
    }

    const auto meas = spectral_measurement(a);
    const ComplexMatrix id_out = ComplexMatrix::identity(dil.dim_out);
    std::vector<double> raw;
    for (std::size_t i = 0; i < dil.projectors.size(); i++) {
        ComplexMatrix conditional =
            partial_trace(joint * kron(id_out, dil.projectors[i]), {dil.dim_out, dil.ancilla_dim}, Subsystem::second);
        raw.push_back(trace(conditional).real());
        plan.second.push_back(born_probabilities(meas, conditional));
        plan.values.push_back(meas.values);
    }
    plan.first = clip_probabilities(raw);
    plan.weights = dil.coefficients;
    return run_plan(plan, shots, seed, options);
}

CorrelationEstimate estimate_correlation(const ComplexMatrix &rho, const ComplexMatrix &a, const ComplexMatrix &b,
                                         std::size_t shots, std::uint64_t seed, CorrelationOptions options) {
    require_state(rho);
    require_observable(a);
    require_observable(b);
    const std::size_t d = rho.rows();
    require_square_of(a, d, "observable A");
    require_square_of(b, d, "observable B");
    if (!(options.real_fraction > 0 && options.real_fraction < 1)) {
        throw InvalidInput("real_fraction must lie strictly between 0 and 1");
    }
    if (shots < 2) {
        throw InvalidInput("a complex estimate needs at least 2 shots");
    }
    std::size_t shots_real = static_cast<std::size_t>(std::llround(static_cast<double>(shots) * options.real_fraction));
    shots_real = std::clamp<std::size_t>(shots_real, 1, shots - 1);
    const std::size_t shots_imag = shots - shots_real;

    const CorrelatorPair pair = correlator_pair(d);
    const auto dec_real = statistical_decomposition(pair.t_real);
    const auto dec_imag = statistical_decomposition(pair.t_imag);
    const ComplexMatrix ab = kron(a, b);

    CorrelationEstimate out;
    out.real = estimate_hp_expectation(dec_real, rho, ab, shots_real, derive_seed(seed, 0), options.sampling);
    out.imag = estimate_hp_expectation(dec_imag, rho, ab, shots_imag, derive_seed(seed, 1), options.sampling);
    out.estimate = {out.real.estimate, out.imag.estimate};
    out.std_error_real = out.real.std_error;
    out.std_error_imag = out.imag.std_error;
    out.l1_cost_real = dec_real.l1_cost;
    out.l1_cost_imag = dec_imag.l1_cost;
    return out;
}

std::string to_string(UncertaintyVerdict verdict) {
    switch (verdict) {
        case UncertaintyVerdict::holds:
            return "holds";
        case UncertaintyVerdict::saturated:
            return "holds (saturated)";
        case UncertaintyVerdict::violated:
            return "violated";
    }
    return "unknown";
}

namespace {

struct SpreadEstimate {
    double delta = 0;
    double std_error = 0;
};

// Standard deviation of the Born outcomes of `obs`, with the delta-method
// error of the sample standard deviation.
SpreadEstimate estimate_spread(const ComplexMatrix &obs, const ComplexMatrix &rho, std::size_t shots,
                               std::uint64_t seed, SamplingOptions options) {
    // Stage one draws the eigenvalue directly so the per-outcome counts are
    // the empirical spectrum.
    const auto meas = spectral_measurement(obs);
    SamplingPlan plan;
    plan.first = born_probabilities(meas, rho);
    plan.weights = meas.values;
    plan.second.assign(meas.values.size(), {1.0});
    plan.values.assign(meas.values.size(), {1.0});
    const auto res = run_plan(plan, shots, seed, options);

    const double n = static_cast<double>(shots);
    double m4 = 0;
    for (const auto &st : res.per_outcome) {
        const double dev = meas.values[st.outcome] - res.estimate;
        m4 += static_cast<double>(st.count) * dev * dev * dev * dev;
    }
    m4 /= n;
    const double var = res.sample_variance;
    const double var_err = std::sqrt(std::max(0.0, m4 - var * var) / n);

    SpreadEstimate out;
    out.delta = std::sqrt(var);
    out.std_error = out.delta > 0 ? var_err / (2 * out.delta) : std::sqrt(var_err);
    return out;
}

}  // namespace

UncertaintyReport uncertainty_check(const ComplexMatrix &rho, const ComplexMatrix &a, const ComplexMatrix &b,
                                    std::size_t shots, std::uint64_t seed, SamplingOptions options) {
    CorrelationOptions corr_opts;
    corr_opts.sampling = options;
    const auto ab = estimate_correlation(rho, a, b, shots, derive_seed(seed, 10), corr_opts);
    const auto ba = estimate_correlation(rho, b, a, shots, derive_seed(seed, 11), corr_opts);

    UncertaintyReport rep;
    rep.commutator = ba.estimate - ab.estimate;
    rep.commutator_std_error_real = std::hypot(ab.std_error_real, ba.std_error_real);
    rep.commutator_std_error_imag = std::hypot(ab.std_error_imag, ba.std_error_imag);
    const double mag = std::abs(rep.commutator);
    rep.bound = mag / 2;
    if (mag > 0) {
        rep.bound_std_error = std::hypot(rep.commutator.real() * rep.commutator_std_error_real,
                                         rep.commutator.imag() * rep.commutator_std_error_imag) /
                              mag / 2;
    } else {
        rep.bound_std_error = std::hypot(rep.commutator_std_error_real, rep.commutator_std_error_imag) / 2;
    }

    const auto spread_a = estimate_spread(a, rho, shots, derive_seed(seed, 12), options);
    const auto spread_b = estimate_spread(b, rho, shots, derive_seed(seed, 13), options);
    rep.delta_a = spread_a.delta;
    rep.delta_a_std_error = spread_a.std_error;
    rep.delta_b = spread_b.delta;
    rep.delta_b_std_error = spread_b.std_error;
    rep.product = rep.delta_a * rep.delta_b;
    rep.product_std_error = std::hypot(rep.delta_b * rep.delta_a_std_error, rep.delta_a * rep.delta_b_std_error);
    rep.combined_std_error = std::hypot(rep.bound_std_error, rep.product_std_error);

    const double gap = rep.product - rep.bound;
    const double slack = 5 * rep.combined_std_error;
    if (std::abs(gap) <= slack) {
        rep.verdict = UncertaintyVerdict::saturated;
    } else if (gap > 0) {
        rep.verdict = UncertaintyVerdict::holds;
    } else {
        rep.verdict = UncertaintyVerdict::violated;
    }
    return rep;
}

}  // namespace qcorr
