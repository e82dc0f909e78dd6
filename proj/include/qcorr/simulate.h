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

#ifndef QCORR_SIMULATE_H
#define QCORR_SIMULATE_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qcorr/channels.h"
#include "qcorr/dilation.h"
#include "qcorr/linalg.h"
#include "qcorr/random_stream.h"

namespace qcorr {

/// One shot of the instrument protocol: outcome i, measured eigenvalue a and
/// the weight lambda_i. The shot's contribution to the estimator is
/// weight * eigenvalue.
struct ShotRecord {
    std::size_t outcome = 0;
    double eigenvalue = 0;
    double weight = 0;

    double value() const {
        return weight * eigenvalue;
    }
};

struct OutcomeStats {
    std::size_t outcome = 0;
    std::size_t count = 0;
    double mean_eigenvalue = 0;

    bool operator==(const OutcomeStats &) const = default;
};

struct EstimatorResult {
    std::size_t shots = 0;
    double estimate = 0;
    /// sqrt(sample_variance / shots)
    double std_error = 0;
    /// Unbiased sample variance of the per-shot values.
    double sample_variance = 0;
    std::vector<OutcomeStats> per_outcome;
    std::uint64_t seed = 0;

    bool operator==(const EstimatorResult &) const = default;
};

/// Eigenvalues of an observable with degenerate ones (within 1e-9) merged,
/// together with the matching spectral projectors.
struct SpectralMeasurement {
    std::vector<double> values;
    std::vector<ComplexMatrix> projectors;
};
SpectralMeasurement spectral_measurement(const ComplexMatrix &observable);

/// Normalizes a vector of (possibly slightly negative) probabilities:
/// entries in [-1e-10, 0) are clipped to zero, anything lower or a
/// non-positive total raises NumericalFailure.
std::vector<double> clip_probabilities(std::vector<double> p);

/// p(i) = Tr[E_i(rho)], clipped and normalized.
std::vector<double> outcome_probabilities(const StatisticalDecomposition &dec, const ComplexMatrix &rho);

struct InstrumentSample {
    std::size_t outcome;
    /// E_i(rho) / p(i)
    ComplexMatrix state;
};
InstrumentSample sample_instrument(const StatisticalDecomposition &dec, const ComplexMatrix &rho,
                                   RandomStream &stream);

/// Born-rule measurement of `observable` on `rho`; returns the eigenvalue.
double measure_observable(const ComplexMatrix &observable, const ComplexMatrix &rho, RandomStream &stream);

struct SamplingOptions {
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Monte Carlo estimate of Tr[L(rho) A] for L = sum_i lambda_i E_i: each
/// shot draws outcome i with probability p(i), measures A on E_i(rho)/p(i)
/// and records lambda_i * a.
EstimatorResult estimate_hp_expectation(const StatisticalDecomposition &dec, const ComplexMatrix &rho,
                                        const ComplexMatrix &a, std::size_t shots, std::uint64_t seed,
                                        SamplingOptions options = {});

/// sum_i lambda_i^2 Tr[E_i(rho) A^2] - (sum_i lambda_i Tr[E_i(rho) A])^2, the
/// exact single-shot variance of estimate_hp_expectation.
double analytic_estimator_variance(const StatisticalDecomposition &dec, const ComplexMatrix &rho,
                                   const ComplexMatrix &a);

/// Two ways to read out a dilation.
enum class DilationReading {
    /// Measure the observable A (x) Z on V rho V^dagger in one go.
    joint,
    /// Measure the ancilla projectors P^i first, then A on the output.
    ancilla_first,
};

/// Sampling estimate of Tr[V rho V^dagger (A (x) Z)].
EstimatorResult estimate_partial_expectation(const Dilation &dil, const ComplexMatrix &rho, const ComplexMatrix &a,
                                             std::size_t shots, std::uint64_t seed, DilationReading reading,
                                             SamplingOptions options = {});

struct CorrelationOptions {
    /// Share of shots given to the real-part pipeline.
    double real_fraction = 0.5;
    SamplingOptions sampling;
};

struct CorrelationEstimate {
    Complex estimate;
    double std_error_real = 0;
    double std_error_imag = 0;
    EstimatorResult real;
    EstimatorResult imag;
    double l1_cost_real = 0;
    double l1_cost_imag = 0;
};

/// Estimates Tr[A rho B] by running the Hermitian and anti-Hermitian parts
/// of the ideal correlator through estimate_hp_expectation with A (x) B.
CorrelationEstimate estimate_correlation(const ComplexMatrix &rho, const ComplexMatrix &a, const ComplexMatrix &b,
                                         std::size_t shots, std::uint64_t seed, CorrelationOptions options = {});

enum class UncertaintyVerdict { holds, saturated, violated };
std::string to_string(UncertaintyVerdict verdict);

/// Sampling test of Robertson's relation dA dB >= |<[A,B]>| / 2.
struct UncertaintyReport {
    /// <[A,B]> = Tr[rho (AB - BA)] = Tr[B rho A] - Tr[A rho B].
    Complex commutator;
    double commutator_std_error_real = 0;
    double commutator_std_error_imag = 0;
    /// |<[A,B]>| / 2
    double bound = 0;
    double bound_std_error = 0;
    double delta_a = 0;
    double delta_a_std_error = 0;
    double delta_b = 0;
    double delta_b_std_error = 0;
    double product = 0;
    double product_std_error = 0;
    /// sqrt(bound_std_error^2 + product_std_error^2)
    double combined_std_error = 0;
    UncertaintyVerdict verdict = UncertaintyVerdict::holds;
};

/// Each of the two correlation runs and the two spread estimates uses
/// `shots` shots. The relation holds when product >= bound - 5 sigma and is
/// reported saturated when |product - bound| <= 5 sigma.
UncertaintyReport uncertainty_check(const ComplexMatrix &rho, const ComplexMatrix &a, const ComplexMatrix &b,
                                    std::size_t shots, std::uint64_t seed, SamplingOptions options = {});

}  // namespace qcorr

#endif
