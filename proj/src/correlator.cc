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
#include <string>

#include "qcorr/errors.h"

namespace qcorr {

LinearMap ideal_correlator(std::size_t dim) {
    if (dim < 2) {
        throw InvalidInput("ideal_correlator: dimension must be at least 2, got " + std::to_string(dim));
    }
    ComplexVector omega(dim * dim);
    for (std::size_t i = 0; i < dim; i++) {
        omega[i * dim + i] = 1.0;
    }
    const ComplexMatrix omega_proj = outer(omega, omega);
    const ComplexMatrix id = ComplexMatrix::identity(dim);
    return map_from_action(dim, dim * dim, [&](std::size_t i, std::size_t j) {
        ComplexMatrix unit(dim, dim);
        unit(i, j) = 1.0;
        return partial_transpose(kron(unit, id) * omega_proj, {dim, dim}, Subsystem::second);
    });
}

CorrelatorPair hermitian_split(const LinearMap &map) {
    const ComplexMatrix &c = map.choi();
    const ComplexMatrix c_dag = c.adjoint();
    ComplexMatrix re = c + c_dag;
    re *= 0.5;
    ComplexMatrix im = c - c_dag;
    im *= Complex(0, -0.5);  // 1/(2i)
    return {map.dim_in(), LinearMap(map.dim_in(), map.dim_out(), std::move(re)),
            LinearMap(map.dim_in(), map.dim_out(), std::move(im))};
}

CorrelatorPair correlator_pair(std::size_t dim) {
    return hermitian_split(ideal_correlator(dim));
}

void require_observable(const ComplexMatrix &obs) {
    if (!is_hermitian(obs, 1e-9)) {
        throw InvalidInput("observable is not Hermitian (residual " + std::to_string(max_abs(obs - obs.adjoint())) +
                           ")");
    }
}

void require_state(const ComplexMatrix &rho) {
    if (!rho.is_square()) {
        throw InvalidInput("state is not square");
    }
    if (!is_hermitian(rho, 1e-9)) {
        throw InvalidInput("state is not Hermitian");
    }
    Complex tr = trace(rho);
    if (std::abs(tr - 1.0) > 1e-9) {
        throw InvalidInput("state trace is " + std::to_string(tr.real()) + ", expected 1");
    }
    double lo = eig_hermitian(rho).values.front();
    if (lo < -1e-10) {
        throw InvalidInput("state is not positive semidefinite (min eigenvalue " + std::to_string(lo) + ")");
    }
}

Complex exact_correlation(const ComplexMatrix &rho, const ComplexMatrix &a, const ComplexMatrix &b) {
    require_state(rho);
    require_observable(a);
    require_observable(b);
    if (a.rows() != rho.rows() || b.rows() != rho.rows()) {
        throw InvalidInput("exact_correlation: state and observables have different dimensions");
    }
    return trace(a * rho * b);
}

}  // namespace qcorr
