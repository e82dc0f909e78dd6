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

#ifndef QCORR_CORRELATOR_H
#define QCORR_CORRELATOR_H

#include <cstddef>

#include "qcorr/channels.h"
#include "qcorr/linalg.h"

namespace qcorr {

/// The map T: L(H) -> L(H (x) H) with Tr[T(rho) (A (x) B)] = Tr[A rho B],
/// built as T(rho) = PT_2[(rho (x) 1) |Omega><Omega|] for the unnormalized
/// |Omega> = sum_i |ii>. T is not Hermiticity preserving.
LinearMap ideal_correlator(std::size_t dim);

/// Hermitian and anti-Hermitian parts of a map, each HP:
///   choi(real) = (C + C^dagger) / 2,   choi(imag) = (C - C^dagger) / (2i),
/// so Tr[real(rho) X] = Re Tr[T(rho) X] and Tr[imag(rho) X] = Im Tr[T(rho) X]
/// for Hermitian rho and X.
struct CorrelatorPair {
    std::size_t dim;
    LinearMap t_real;
    LinearMap t_imag;
};
CorrelatorPair hermitian_split(const LinearMap &map);

/// hermitian_split(ideal_correlator(dim)).
CorrelatorPair correlator_pair(std::size_t dim);

/// Tr[A rho B] by direct multiplication; the ground truth for every other
/// route. Requires a valid state and Hermitian observables.
Complex exact_correlation(const ComplexMatrix &rho, const ComplexMatrix &a, const ComplexMatrix &b);

/// Checks that rho is a density matrix: Hermitian, PSD within -1e-10 and
/// unit trace within 1e-9. Throws InvalidInput otherwise.
void require_state(const ComplexMatrix &rho);
void require_observable(const ComplexMatrix &obs);

}  // namespace qcorr

#endif
