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

#include "qcorr/instances.h"

#include <cmath>

namespace qcorr::instances {

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    ComplexMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            double re = gauss(rng);
            double im = gauss(rng);
            m(r, c) = {re, im};
        }
    }
    return m;
}

ComplexMatrix random_hermitian(std::size_t dim, Rng &rng) {
    ComplexMatrix g = random_matrix(dim, dim, rng);
    ComplexMatrix h = g + g.adjoint();
    h *= 0.5;
    return h;
}

ComplexVector random_vector(std::size_t dim, Rng &rng) {
    ComplexVector v = random_matrix(dim, 1, rng).col(0);
    const double len = norm(v);
    for (auto &z : v) {
        z /= len;
    }
    return v;
}

ComplexMatrix random_state(std::size_t dim, Rng &rng) {
    ComplexMatrix g = random_matrix(dim, dim, rng);
    ComplexMatrix rho = g * g.adjoint();
    rho *= 1.0 / trace(rho).real();
    ComplexMatrix herm = rho + rho.adjoint();
    herm *= 0.5;
    return herm;
}

ComplexMatrix random_pure_state(std::size_t dim, Rng &rng) {
    ComplexVector v = random_vector(dim, rng);
    return outer(v, v);
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng &rng) {
    ComplexMatrix g = random_matrix(rows, cols, rng);
    std::vector<ComplexVector> basis;
    for (std::size_t c = 0; c < cols; c++) {
        ComplexVector v = g.col(c);
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                Complex proj = inner(b, v);
                for (std::size_t r = 0; r < rows; r++) {
                    v[r] -= proj * b[r];
                }
            }
        }
        const double len = norm(v);
        for (auto &z : v) {
            z /= len;
        }
        basis.push_back(std::move(v));
    }
    ComplexMatrix out(rows, cols);
    for (std::size_t c = 0; c < cols; c++) {
        for (std::size_t r = 0; r < rows; r++) {
            out(r, c) = basis[c][r];
        }
    }
    return out;
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
    return random_isometry(dim, dim, rng);
}

std::vector<ComplexMatrix> random_kraus(std::size_t dim_in, std::size_t dim_out, std::size_t count, Rng &rng) {
    ComplexMatrix w = random_isometry(dim_out * count, dim_in, rng);
    std::vector<ComplexMatrix> ops;
    for (std::size_t k = 0; k < count; k++) {
        ComplexMatrix op(dim_out, dim_in);
        for (std::size_t a = 0; a < dim_out; a++) {
            for (std::size_t i = 0; i < dim_in; i++) {
                op(a, i) = w(k * dim_out + a, i);
            }
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

LinearMap random_cptp_map(std::size_t dim_in, std::size_t dim_out, std::size_t kraus_count, Rng &rng) {
    KrausSet kraus{random_kraus(dim_in, dim_out, kraus_count, rng)};
    return map_from_action(dim_in, dim_out, [&](std::size_t i, std::size_t j) {
        ComplexMatrix unit(dim_in, dim_in);
        unit(i, j) = 1.0;
        return apply_kraus(kraus, unit);
    });
}

LinearMap random_hp_map(std::size_t dim_in, std::size_t dim_out, Rng &rng) {
    return LinearMap(dim_in, dim_out, random_hermitian(dim_in * dim_out, rng));
}

}  // namespace qcorr::instances
