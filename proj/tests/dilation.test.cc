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

#include "qcorr/dilation.h"

#include <cmath>

#include "gtest/gtest.h"
#include "qcorr/correlator.h"
#include "qcorr/errors.h"
#include "qcorr/instances.h"
#include "test_util.h"

using namespace qcorr;
using namespace qcorr::testing;

TEST(dilate, identity_channel_is_trivial) {
    StatisticalDecomposition dec{{1.0}, {LinearMap::identity_channel(2)}, 1.0};
    auto dil = dilate(dec);
    EXPECT_EQ(dil.ancilla_dim, 1u);
    EXPECT_EQ(dil.z, ComplexMatrix{{1}});
    // V = 1 (x) |0>, up to the global phase of the single Kraus operator.
    Complex phase = dil.v(0, 0);
    EXPECT_NEAR(std::abs(phase), 1, 1e-14);
    EXPECT_LT(distance(dil.v, phase * ComplexMatrix::identity(2)), 1e-14);
}

TEST(dilate, transpose_map) {
    auto dil = dilate(statistical_decomposition(LinearMap::transpose_map(2)));
    EXPECT_EQ(dil.ancilla_dim, 4u);
    ASSERT_EQ(dil.projectors.size(), 2u);
    std::vector<double> expected{2, 2, 2, -2};
    EXPECT_LT(distance(dil.z, ComplexMatrix::diagonal(expected)), 1e-13);
    EXPECT_EQ(dil.outcome_index, (std::vector<std::size_t>{0, 0, 0, 1}));
}

TEST(dilate, stinespring_reconstruction_for_channels) {
    instances::Rng rng(1);
    for (int trial = 0; trial < 10; trial++) {
        auto map = instances::random_cptp_map(2, 2, 1 + trial % 4, rng);
        auto dil = dilate(statistical_decomposition(map));
        auto rho = instances::random_state(2, rng);
        auto reduced = partial_trace(dilated_state(dil, rho), {dil.dim_out, dil.ancilla_dim}, Subsystem::second);
        EXPECT_LT(distance(reduced, apply_map(map, rho)), 1e-9);
    }
}

TEST(dilate, projector_and_observable_structure) {
    instances::Rng rng(2);
    auto dec = statistical_decomposition(instances::random_hp_map(3, 2, rng));
    auto dil = dilate(dec);
    ComplexMatrix sum(dil.ancilla_dim, dil.ancilla_dim);
    ComplexMatrix z(dil.ancilla_dim, dil.ancilla_dim);
    for (std::size_t i = 0; i < dil.projectors.size(); i++) {
        sum += dil.projectors[i];
        z += Complex(dec.coefficients[i]) * dil.projectors[i];
        for (std::size_t j = 0; j < dil.projectors.size(); j++) {
            auto prod = dil.projectors[i] * dil.projectors[j];
            EXPECT_EQ(prod, i == j ? dil.projectors[i] : ComplexMatrix(dil.ancilla_dim, dil.ancilla_dim));
        }
    }
    EXPECT_EQ(sum, ComplexMatrix::identity(dil.ancilla_dim));
    EXPECT_EQ(z, dil.z);
    EXPECT_LE(isometry_residual(dil.v), 1e-9);
    for (std::size_t c = 0; c < dil.dim_in; c++) {
        EXPECT_EQ(dil.u.col(c), dil.v.col(c));
    }
}

TEST(dilate, rejects_bad_decompositions) {
    EXPECT_THROW(dilate(StatisticalDecomposition{}), InvalidInput);
    StatisticalDecomposition not_tp{{1.0}, {0.5 * LinearMap::identity_channel(2)}, 1.0};
    EXPECT_THROW(dilate(not_tp), InvalidInput);
}

TEST(partial_expectation, known_values) {
    instances::Rng rng(3);
    auto id_dil = dilate(StatisticalDecomposition{{1.0}, {LinearMap::identity_channel(3)}, 1.0});
    auto rho = instances::random_state(3, rng);
    auto a = instances::random_hermitian(3, rng);
    EXPECT_NEAR(partial_expectation(id_dil, rho, a), trace(rho * a).real(), 1e-13);

    auto swap_dil = dilate(statistical_decomposition(LinearMap::transpose_map(2)));
    EXPECT_NEAR(partial_expectation(swap_dil, ket0_state(), pauli_z()), 1.0, 1e-13);

    auto imag_dil = dilate(statistical_decomposition(correlator_pair(2).t_imag));
    EXPECT_NEAR(partial_expectation(imag_dil, ket0_state(), kron(pauli_x(), pauli_y())), -1.0, 1e-13);

    EXPECT_THROW(partial_expectation(swap_dil, ket0_state(), ComplexMatrix::identity(3)), InvalidInput);
    EXPECT_THROW(partial_expectation(swap_dil, ComplexMatrix::identity(3), pauli_z()), InvalidInput);
}

TEST(reduced_map, round_trips) {
    auto id = LinearMap::identity_channel(2);
    EXPECT_LT(distance(reduced_map(dilate(statistical_decomposition(id))).choi(), id.choi()), 1e-13);
    auto swap = LinearMap::transpose_map(2);
    EXPECT_LT(distance(reduced_map(dilate(statistical_decomposition(swap))).choi(), swap.choi()), 1e-9);
    auto t_real = correlator_pair(2).t_real;
    EXPECT_LT(distance(reduced_map(dilate(statistical_decomposition(t_real))).choi(), t_real.choi()), 1e-9);
}

TEST(partial_expectation, identity_holds_on_random_instances) {
    instances::Rng rng(4);
    for (int map_trial = 0; map_trial < 10; map_trial++) {
        const std::size_t d = 2 + map_trial % 2;
        auto map = instances::random_hp_map(d, d, rng);
        auto dil = dilate(statistical_decomposition(map));
        for (int probe = 0; probe < 10; probe++) {
            auto rho = instances::random_state(d, rng);
            auto a = instances::random_hermitian(d, rng);
            EXPECT_NEAR(partial_expectation(dil, rho, a), trace(apply_map(map, rho) * a).real(), 1e-8);
        }
    }
}

TEST(dilate, unitary_realizes_isometry) {
    instances::Rng rng(5);
    for (int trial = 0; trial < 10; trial++) {
        auto map = instances::random_hp_map(2, 2 + trial % 2, rng);
        auto dil = dilate(statistical_decomposition(map));
        EXPECT_LE(max_abs(dil.u.adjoint() * dil.u - ComplexMatrix::identity(dil.u.rows())), 1e-9);
        auto psi = instances::random_vector(2, rng);
        auto lhs = dil.u * std::span<const Complex>(embed_input(dil, psi));
        auto rhs = dil.v * std::span<const Complex>(psi);
        EXPECT_LE(distance(lhs, rhs), 1e-9);
    }
}

TEST(dilate, ancilla_dimension_bound) {
    instances::Rng rng(6);
    for (int trial = 0; trial < 10; trial++) {
        auto map = instances::random_hp_map(2, 3, rng);
        auto dec = statistical_decomposition(map);
        auto dil = dilate(dec);
        std::size_t rank_sum = 0;
        for (const auto &part : dec.parts) {
            rank_sum += kraus_from_choi(part).operators.size();
        }
        EXPECT_LE(dil.ancilla_dim, rank_sum);
        EXPECT_LE(rank_sum, 2u * 3u * dec.parts.size());
    }
}

TEST(dilate, ancilla_probabilities_match_instrument) {
    instances::Rng rng(7);
    for (int trial = 0; trial < 20; trial++) {
        auto map = instances::random_hp_map(2, 2, rng);
        auto dec = statistical_decomposition(map);
        auto dil = dilate(dec);
        auto rho = instances::random_state(2, rng);
        auto p = ancilla_outcome_probabilities(dil, rho);
        ASSERT_EQ(p.size(), dec.parts.size());
        for (std::size_t i = 0; i < p.size(); i++) {
            EXPECT_NEAR(p[i], trace(apply_map(dec.parts[i], rho)).real(), 1e-9);
        }
    }
}
