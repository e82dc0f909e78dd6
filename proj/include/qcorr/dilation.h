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

#ifndef QCORR_DILATION_H
#define QCORR_DILATION_H

#include <cstddef>
#include <vector>

#include "qcorr/channels.h"
#include "qcorr/linalg.h"

namespace qcorr {

/// Partial-expectation-value realization of an HP map L:
///
///     L(rho) = Tr_anc[V rho V^dagger (1 (x) Z)]
///
/// V maps H_in into H_out (x) H_anc (output slow, ancilla fast). The ancilla
/// basis enumerates (outcome i, Kraus index k) lexicographically, so each
/// projector P^i is a contiguous diagonal block and Z = sum_i lambda_i P^i is
/// diagonal.
struct Dilation {
    std::size_t dim_in = 0;
    std::size_t dim_out = 0;
    std::size_t ancilla_dim = 0;
    ComplexMatrix v{1, 1};
    std::vector<double> coefficients;
    std::vector<ComplexMatrix> projectors;
    ComplexMatrix z{1, 1};
    /// Unitary on H_out (x) H_anc whose first dim_in columns are V.
    ComplexMatrix u{1, 1};
    /// Ancilla basis index -> instrument outcome.
    std::vector<std::size_t> outcome_index;
};

Dilation dilate(const StatisticalDecomposition &dec);

/// Tr[V rho V^dagger (A (x) Z)].
double partial_expectation(const Dilation &dil, const ComplexMatrix &rho, const ComplexMatrix &a);

/// rho -> Tr_anc[V rho V^dagger (1 (x) Z)].
LinearMap reduced_map(const Dilation &dil);

/// V rho V^dagger.
ComplexMatrix dilated_state(const Dilation &dil, const ComplexMatrix &rho);

/// Probabilities of the ancilla projectors P^i on V rho V^dagger.
std::vector<double> ancilla_outcome_probabilities(const Dilation &dil, const ComplexMatrix &rho);

/// Input vector psi prepared on the unitary's register: psi occupies the
/// first dim_in amplitudes and the remainder is in the reference state, so
/// that u * embed_input(dil, psi) == v * psi.
ComplexVector embed_input(const Dilation &dil, std::span<const Complex> psi);

}  // namespace qcorr

#endif
