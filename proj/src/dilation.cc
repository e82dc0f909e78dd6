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

#include <algorithm>
#include <string>

#include "qcorr/errors.h"

namespace qcorr {

namespace {

constexpr double kTraceTolerance = 1e-9;

void require_input_state(const Dilation &dil, const ComplexMatrix &rho) {
    if (!rho.is_square() || rho.rows() != dil.dim_in) {
        throw InvalidInput("dilation expects a " + std::to_string(dil.dim_in) + "x" + std::to_string(dil.dim_in) +
                           " input, got " + std::to_string(rho.rows()) + "x" + std::to_string(rho.cols()));
    }
}

}  // namespace

Dilation dilate(const StatisticalDecomposition &dec) {
    if (dec.empty()) {
        throw InvalidInput("dilate: empty decomposition");
    }
    const std::size_t d_in = dec.parts.front().dim_in();
    const std::size_t d_out = dec.parts.front().dim_out();
    LinearMap total = LinearMap::zero(d_in, d_out);
    for (const auto &part : dec.parts) {
        total = total + part;
    }
    const double tp = tp_residual(total);
    if (tp > kTraceTolerance) {
        throw InvalidInput("dilate: instrument is not trace preserving (residual " + std::to_string(tp) + ")");
    }

    std::vector<KrausSet> kraus;
    Dilation dil;
    dil.dim_in = d_in;
    dil.dim_out = d_out;
    dil.coefficients = dec.coefficients;
    for (std::size_t i = 0; i < dec.parts.size(); i++) {
        kraus.push_back(kraus_from_choi(dec.parts[i]));
        dil.outcome_index.insert(dil.outcome_index.end(), kraus.back().operators.size(), i);
    }
    const std::size_t anc = dil.outcome_index.size();
    if (anc == 0) {
        throw NumericalFailure("dilate: decomposition has no nonzero Kraus operators");
    }
    dil.ancilla_dim = anc;

    // V = sum_{i,k} K_ik (x) |(i,k)>, rows indexed by (output a, ancilla m).
    dil.v = ComplexMatrix(d_out * anc, d_in);
    std::size_t m = 0;
    for (const auto &set : kraus) {
        for (const auto &op : set.operators) {
            for (std::size_t a = 0; a < d_out; a++) {
                for (std::size_t i = 0; i < d_in; i++) {
                    dil.v(a * anc + m, i) = op(a, i);
                }
            }
            m++;
        }
    }

    std::vector<double> z_diag(anc);
    for (std::size_t i = 0; i < dec.parts.size(); i++) {
        ComplexMatrix proj(anc, anc);
        for (std::size_t k = 0; k < anc; k++) {
            if (dil.outcome_index[k] == i) {
                proj(k, k) = 1.0;
                z_diag[k] = dec.coefficients[i];
            }
        }
        dil.projectors.push_back(std::move(proj));
    }
    dil.z = ComplexMatrix::diagonal(z_diag);

    const double iso = isometry_residual(dil.v);
    if (iso > kTraceTolerance) {
        throw NumericalFailure("dilate: assembled V is not an isometry (residual " + std::to_string(iso) + ")");
    }
    dil.u = complete_to_unitary(dil.v);
    return dil;
}

ComplexMatrix dilated_state(const Dilation &dil, const ComplexMatrix &rho) {
    require_input_state(dil, rho);
    return dil.v * rho * dil.v.adjoint();
}

double partial_expectation(const Dilation &dil, const ComplexMatrix &rho, const ComplexMatrix &a) {
    if (!a.is_square() || a.rows() != dil.dim_out) {
        throw InvalidInput("partial_expectation: observable dimension " + std::to_string(a.rows()) +
                           " does not match output dimension " + std::to_string(dil.dim_out));
    }
    return trace_of_product(dilated_state(dil, rho), kron(a, dil.z)).real();
}

LinearMap reduced_map(const Dilation &dil) {
    const ComplexMatrix lift = kron(ComplexMatrix::identity(dil.dim_out), dil.z);
    return map_from_action(dil.dim_in, dil.dim_out, [&](std::size_t i, std::size_t j) {
        ComplexMatrix unit(dil.dim_in, dil.dim_in);
        unit(i, j) = 1.0;
        ComplexMatrix joint = dil.v * unit * dil.v.adjoint() * lift;
        return partial_trace(joint, {dil.dim_out, dil.ancilla_dim}, Subsystem::second);
    });
}

std::vector<double> ancilla_outcome_probabilities(const Dilation &dil, const ComplexMatrix &rho) {
    const ComplexMatrix anc_state =
        partial_trace(dilated_state(dil, rho), {dil.dim_out, dil.ancilla_dim}, Subsystem::first);
    std::vector<double> p(dil.projectors.size(), 0.0);
    for (std::size_t k = 0; k < dil.ancilla_dim; k++) {
        p[dil.outcome_index[k]] += anc_state(k, k).real();
    }
    return p;
}

ComplexVector embed_input(const Dilation &dil, std::span<const Complex> psi) {
    if (psi.size() != dil.dim_in) {
        throw InvalidInput("embed_input: vector has wrong dimension");
    }
    ComplexVector out(dil.u.rows());
    std::copy(psi.begin(), psi.end(), out.begin());
    return out;
}

}  // namespace qcorr
