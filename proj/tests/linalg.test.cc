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

#include "qcorr/linalg.h"

#include <cmath>
#include <cstring>
#include <limits>

#include "gtest/gtest.h"
#include "qcorr/errors.h"
#include "qcorr/instances.h"
#include "test_util.h"

using namespace qcorr;
using namespace qcorr::testing;

TEST(ComplexMatrix, rejects_empty_and_non_finite) {
    EXPECT_THROW(ComplexMatrix(0, 2), InvalidInput);
    EXPECT_THROW(ComplexMatrix(2, 0), InvalidInput);
    EXPECT_THROW(ComplexMatrix(1, 2, {1.0}), InvalidInput);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(ComplexMatrix(1, 1, {Complex(nan, 0)}), InvalidInput);
    EXPECT_THROW((ComplexMatrix{{1, 2}, {3}}), InvalidInput);
}

TEST(ComplexMatrix, arithmetic_shape_checks) {
    EXPECT_THROW(ComplexMatrix(2, 2) + ComplexMatrix(3, 3), InvalidInput);
    EXPECT_THROW(ComplexMatrix(2, 3) * ComplexMatrix(2, 3), InvalidInput);
    EXPECT_EQ(pauli_x() * pauli_x(), ComplexMatrix::identity(2));
    EXPECT_EQ(pauli_x() * pauli_y(), Complex(0, 1) * pauli_z());
}

TEST(kron, identity_and_diagonal) {
    EXPECT_EQ(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)), ComplexMatrix::identity(4));
    std::vector<double> diag{1, -1, -1, 1};
    EXPECT_EQ(kron(pauli_z(), pauli_z()), ComplexMatrix::diagonal(diag));
}

TEST(kron, acts_on_product_vectors) {
    instances::Rng rng(1);
    const ComplexMatrix k = kron(pauli_x(), pauli_y());
    EXPECT_EQ(k.rows(), 4u);
    for (int trial = 0; trial < 10; trial++) {
        ComplexVector u = instances::random_vector(2, rng);
        ComplexVector v = instances::random_vector(2, rng);
        // (u (x) v)_{2 i + j} = u_i v_j written out by hand.
        ComplexVector uv{u[0] * v[0], u[0] * v[1], u[1] * v[0], u[1] * v[1]};
        ComplexVector xu = pauli_x() * std::span<const Complex>(u);
        ComplexVector yv = pauli_y() * std::span<const Complex>(v);
        ComplexVector expected{xu[0] * yv[0], xu[0] * yv[1], xu[1] * yv[0], xu[1] * yv[1]};
        EXPECT_LT(distance(k * std::span<const Complex>(uv), expected), 1e-14);
    }
}

TEST(kron, mixed_product_and_associativity) {
    instances::Rng rng(2);
    for (int trial = 0; trial < 20; trial++) {
        auto a = instances::random_matrix(2, 3, rng);
        auto b = instances::random_matrix(3, 2, rng);
        auto c = instances::random_matrix(3, 2, rng);
        auto d = instances::random_matrix(2, 2, rng);
        EXPECT_LT(distance(kron(a, b) * kron(c, d), kron(a * c, b * d)), 1e-10);
        EXPECT_LT(distance(kron(kron(a, b), d), kron(a, kron(b, d))), 1e-10);
    }
}

TEST(partial_trace, product_state_factorizes) {
    instances::Rng rng(3);
    auto rho = instances::random_state(3, rng);
    auto sigma = instances::random_matrix(3, 3, rng);
    EXPECT_LT(distance(partial_trace(kron(rho, sigma), {3, 3}, Subsystem::second), trace(sigma) * rho), 1e-12);
    EXPECT_LT(distance(partial_trace(kron(rho, sigma), {3, 3}, Subsystem::first), trace(rho) * sigma), 1e-12);
}

TEST(partial_trace, identity_and_omega) {
    ComplexMatrix two_id = ComplexMatrix::identity(2);
    two_id *= 2.0;
    EXPECT_EQ(partial_trace(ComplexMatrix::identity(4), {2, 2}, Subsystem::first), two_id);

    ComplexVector omega{1, 0, 0, 1};
    EXPECT_EQ(partial_trace(outer(omega, omega), {2, 2}, Subsystem::second), ComplexMatrix::identity(2));
}

TEST(partial_trace, matches_basis_sum_oracle) {
    instances::Rng rng(4);
    const std::size_t d1 = 2, d2 = 3;
    auto m = instances::random_matrix(d1 * d2, d1 * d2, rng);
    auto reduced = partial_trace(m, {d1, d2}, Subsystem::second);
    for (std::size_t i = 0; i < d1; i++) {
        for (std::size_t j = 0; j < d1; j++) {
            Complex acc{};
            for (std::size_t k = 0; k < d2; k++) {
                auto bra = basis_vector(d1 * d2, i * d2 + k);
                auto ket = basis_vector(d1 * d2, j * d2 + k);
                acc += inner(bra, m * std::span<const Complex>(ket));
            }
            EXPECT_LT(std::abs(reduced(i, j) - acc), 1e-12);
        }
    }
    EXPECT_LT(std::abs(trace(partial_trace(m, {d1, d2}, Subsystem::first)) - trace(m)), 1e-12);
}

TEST(partial_trace, dimension_mismatch) {
    EXPECT_THROW(partial_trace(ComplexMatrix::identity(4), {2, 3}, Subsystem::first), InvalidInput);
    EXPECT_THROW(partial_trace(ComplexMatrix(4, 2), {2, 2}, Subsystem::first), InvalidInput);
    EXPECT_THROW(partial_transpose(ComplexMatrix::identity(5), {2, 2}, Subsystem::first), InvalidInput);
}

TEST(partial_transpose, factorized_and_involutive) {
    instances::Rng rng(5);
    auto a = instances::random_matrix(3, 3, rng);
    auto b = instances::random_matrix(3, 3, rng);
    EXPECT_EQ(partial_transpose(kron(a, b), {3, 3}, Subsystem::second), kron(a, b.transpose()));
    EXPECT_EQ(partial_transpose(kron(a, b), {3, 3}, Subsystem::first), kron(a.transpose(), b));
    auto x = instances::random_matrix(6, 6, rng);
    EXPECT_EQ(partial_transpose(partial_transpose(x, {2, 3}, Subsystem::second), {2, 3}, Subsystem::second), x);
    EXPECT_EQ(partial_transpose(partial_transpose(x, {2, 3}, Subsystem::first), {2, 3}, Subsystem::first), x);
}

TEST(partial_transpose, trace_identity) {
    instances::Rng rng(6);
    for (int trial = 0; trial < 20; trial++) {
        auto x = instances::random_matrix(4, 4, rng);
        auto a = instances::random_matrix(2, 2, rng);
        auto b = instances::random_matrix(2, 2, rng);
        Complex lhs = trace(partial_transpose(x, {2, 2}, Subsystem::second) * kron(a, b));
        Complex rhs = trace(x * kron(a, b.transpose()));
        EXPECT_LT(std::abs(lhs - rhs), 1e-12);
    }
}

TEST(eig_hermitian, pauli_and_diagonal) {
    auto ex = eig_hermitian(pauli_x());
    ASSERT_EQ(ex.values.size(), 2u);
    EXPECT_NEAR(ex.values[0], -1, 1e-14);
    EXPECT_NEAR(ex.values[1], 1, 1e-14);

    std::vector<double> d{3, 1, 2};
    auto ed = eig_hermitian(ComplexMatrix::diagonal(d));
    EXPECT_EQ(ed.values, (std::vector<double>{1, 2, 3}));
    EXPECT_NEAR(std::abs(ed.vectors(1, 0)), 1, 1e-15);
    EXPECT_NEAR(std::abs(ed.vectors(2, 1)), 1, 1e-15);
    EXPECT_NEAR(std::abs(ed.vectors(0, 2)), 1, 1e-15);
}

TEST(eig_hermitian, random_reconstruction) {
    instances::Rng rng(7);
    for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 16u, 27u}) {
        for (int trial = 0; trial < 5; trial++) {
            auto m = instances::random_hermitian(n, rng);
            auto eig = eig_hermitian(m);
            EXPECT_TRUE(std::is_sorted(eig.values.begin(), eig.values.end()));
            EXPECT_LT(distance(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::identity(n)), 1e-9);
            ComplexMatrix rebuilt(n, n);
            for (std::size_t k = 0; k < n; k++) {
                auto v = eig.vectors.col(k);
                rebuilt += Complex(eig.values[k]) * outer(v, v);
                auto mv = m * std::span<const Complex>(v);
                for (auto &z : v) {
                    z *= eig.values[k];
                }
                EXPECT_LT(distance(mv, v), 1e-9 * (1 + max_abs(m)));
            }
            EXPECT_LT(distance(rebuilt, m), 1e-9);
        }
    }
}

TEST(eig_hermitian, psd_spectrum_is_nonnegative) {
    instances::Rng rng(8);
    for (int trial = 0; trial < 20; trial++) {
        auto g = instances::random_matrix(6, 3, rng);
        auto eig = eig_hermitian(g * g.adjoint());  // rank 3
        EXPECT_GE(eig.values.front(), -1e-12 * eig.values.back());
    }
}

TEST(eig_hermitian, degenerate_and_errors) {
    auto eig = eig_hermitian(ComplexMatrix::identity(4));
    for (double v : eig.values) {
        EXPECT_EQ(v, 1.0);
    }
    EXPECT_THROW(eig_hermitian(ComplexMatrix{{0, 1}, {0, 0}}), InvalidInput);
    EXPECT_THROW(eig_hermitian(ComplexMatrix(2, 3)), InvalidInput);
    EXPECT_THROW(eig_hermitian(ComplexMatrix{{1e200, 1e200}, {1e200, 1e200}}), NumericalFailure);
}

TEST(complete_to_unitary, trivial_cases) {
    EXPECT_EQ(complete_to_unitary(ComplexMatrix::identity(3)), ComplexMatrix::identity(3));
    auto u = complete_to_unitary(ComplexMatrix::column(basis_vector(2, 0)));
    EXPECT_EQ(u(0, 0), Complex(1));
    EXPECT_EQ(u(1, 0), Complex(0));
    EXPECT_LT(distance(u.adjoint() * u, ComplexMatrix::identity(2)), 1e-15);
}

TEST(complete_to_unitary, random_isometry) {
    instances::Rng rng(9);
    for (int trial = 0; trial < 20; trial++) {
        auto v = instances::random_isometry(4, 2, rng);
        auto u = complete_to_unitary(v);
        EXPECT_LT(distance(u.adjoint() * u, ComplexMatrix::identity(4)), 1e-9);
        for (std::size_t j = 0; j < 2; j++) {
            auto uj = u * std::span<const Complex>(basis_vector(4, j));
            EXPECT_EQ(uj, v.col(j));
        }
    }
}

TEST(complete_to_unitary, deterministic_bytes) {
    instances::Rng rng(10);
    auto v = instances::random_isometry(9, 4, rng);
    auto u1 = complete_to_unitary(v);
    auto u2 = complete_to_unitary(v);
    ASSERT_EQ(u1.entries().size(), u2.entries().size());
    EXPECT_EQ(0, std::memcmp(u1.entries().data(), u2.entries().data(), u1.entries().size() * sizeof(Complex)));
}

TEST(complete_to_unitary, rejects_non_isometries) {
    ComplexMatrix v(3, 1);
    v(0, 0) = 2.0;
    EXPECT_THROW(complete_to_unitary(v), InvalidInput);
    EXPECT_THROW(complete_to_unitary(ComplexMatrix(2, 3)), InvalidInput);
}
