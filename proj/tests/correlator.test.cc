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

#include "qcorr/correlator.h"

#include <cmath>

#include "gtest/gtest.h"
#include "qcorr/errors.h"
#include "qcorr/instances.h"
#include "test_util.h"

using namespace qcorr;
using namespace qcorr::testing;

namespace {

Complex via_map(const LinearMap &map, const ComplexMatrix &rho, const ComplexMatrix &a, const ComplexMatrix &b) {
    return trace(apply_map(map, rho) * kron(a, b));
}

}  // namespace

TEST(ideal_correlator, qubit_examples) {
    const auto t = ideal_correlator(2);
    EXPECT_EQ(t.dim_in(), 2u);
    EXPECT_EQ(t.dim_out(), 4u);
    const auto id = ComplexMatrix::identity(2);
    EXPECT_LT(std::abs(via_map(t, ket0_state(), id, id) - 1.0), 1e-15);
    EXPECT_LT(std::abs(via_map(t, ket0_state(), pauli_x(), pauli_y()) - Complex(0, -1)), 1e-15);
    EXPECT_LT(std::abs(via_map(t, ket0_state(), pauli_z(), pauli_z()) - 1.0), 1e-15);
}

TEST(ideal_correlator, is_not_hp_and_needs_dim_two) {
    EXPECT_FALSE(is_hp(ideal_correlator(2)));
    EXPECT_FALSE(is_hp(ideal_correlator(3)));
    EXPECT_THROW(ideal_correlator(1), InvalidInput);
    EXPECT_THROW(ideal_correlator(0), InvalidInput);
}

TEST(ideal_correlator, reproduces_correlation_functions) {
    instances::Rng rng(1);
    for (std::size_t d : {2u, 3u}) {
        const auto t = ideal_correlator(d);
        for (int trial = 0; trial < 200; trial++) {
            auto rho = trial % 3 == 0 ? instances::random_pure_state(d, rng) : instances::random_state(d, rng);
            auto a = instances::random_hermitian(d, rng);
            auto b = instances::random_hermitian(d, rng);
            EXPECT_LT(std::abs(via_map(t, rho, a, b) - trace(a * rho * b)), 1e-9);
        }
    }
}

TEST(hermitian_split, hp_map_has_zero_imaginary_part) {
    instances::Rng rng(2);
    auto map = instances::random_hp_map(2, 2, rng);
    auto pair = hermitian_split(map);
    EXPECT_LT(max_abs(pair.t_imag.choi()), 1e-15);
    EXPECT_LT(distance(pair.t_real.choi(), map.choi()), 1e-15);
}

TEST(hermitian_split, real_part_is_anticommutator) {
    instances::Rng rng(3);
    auto pair = correlator_pair(2);
    EXPECT_TRUE(is_hp(pair.t_real));
    EXPECT_TRUE(is_hp(pair.t_imag));
    for (int trial = 0; trial < 50; trial++) {
        auto rho = instances::random_state(2, rng);
        auto a = instances::random_hermitian(2, rng);
        auto b = instances::random_hermitian(2, rng);
        Complex anti = 0.5 * trace(rho * (a * b + b * a));
        Complex comm = trace(rho * (b * a - a * b)) / Complex(0, 2);
        Complex re = via_map(pair.t_real, rho, a, b);
        Complex im = via_map(pair.t_imag, rho, a, b);
        EXPECT_LT(std::abs(re - anti), 1e-12);
        EXPECT_LT(std::abs(im - comm), 1e-12);
        EXPECT_LT(std::abs(re.imag()), 1e-12);
        EXPECT_LT(std::abs(im.imag()), 1e-12);
    }
}

TEST(hermitian_split, sign_convention_on_known_value) {
    auto pair = correlator_pair(2);
    EXPECT_LT(std::abs(via_map(pair.t_imag, ket0_state(), pauli_x(), pauli_y()) - (-1.0)), 1e-15);
    EXPECT_LT(std::abs(via_map(pair.t_real, ket0_state(), pauli_x(), pauli_y())), 1e-15);
}

TEST(hermitian_split, parts_decompose_cleanly) {
    for (std::size_t d : {2u, 3u}) {
        auto pair = correlator_pair(d);
        for (const auto *part : {&pair.t_real, &pair.t_imag}) {
            auto dec = statistical_decomposition(*part);
            auto res = decomposition_residuals(dec, *part);
            EXPECT_LT(res.reconstruction, 1e-9);
            EXPECT_LT(res.trace_preserving, 1e-9);
            EXPECT_GE(res.min_part_eigenvalue, -1e-10);
        }
    }
}

TEST(exact_correlation, examples) {
    instances::Rng rng(4);
    auto id = ComplexMatrix::identity(3);
    EXPECT_LT(std::abs(exact_correlation(instances::random_state(3, rng), id, id) - 1.0), 1e-14);
    EXPECT_EQ(exact_correlation(ket0_state(), pauli_x(), pauli_z()), Complex(0));
    EXPECT_EQ(exact_correlation(ket0_state(), pauli_x(), pauli_y()), Complex(0, -1));
}

TEST(exact_correlation, conjugate_symmetry) {
    instances::Rng rng(5);
    for (int trial = 0; trial < 50; trial++) {
        auto rho = instances::random_state(3, rng);
        auto a = instances::random_hermitian(3, rng);
        auto b = instances::random_hermitian(3, rng);
        EXPECT_LT(std::abs(exact_correlation(rho, a, b) - std::conj(exact_correlation(rho, b, a))), 1e-12);
    }
}

TEST(exact_correlation, rejects_invalid_inputs) {
    auto id = ComplexMatrix::identity(2);
    EXPECT_THROW(exact_correlation(ComplexMatrix::identity(2), id, id), InvalidInput);  // trace 2
    EXPECT_THROW(exact_correlation(ComplexMatrix{{1.5, 0}, {0, -0.5}}, id, id), InvalidInput);
    EXPECT_THROW(exact_correlation(ket0_state(), ComplexMatrix{{0, 1}, {0, 0}}, id), InvalidInput);
    EXPECT_THROW(exact_correlation(ket0_state(), id, ComplexMatrix::identity(3)), InvalidInput);
}
