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

#ifndef QCORR_INSTANCES_H
#define QCORR_INSTANCES_H

#include <cstddef>
#include <random>

#include "qcorr/channels.h"
#include "qcorr/linalg.h"

// Random test instances shared by the validation suite, the tests and the
// CLI's self-checks.
namespace qcorr::instances {

using Rng = std::mt19937_64;

ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng &rng);
/// Gaussian Hermitian matrix.
ComplexMatrix random_hermitian(std::size_t dim, Rng &rng);
/// Unit vector with Gaussian amplitudes.
ComplexVector random_vector(std::size_t dim, Rng &rng);
/// Full-rank density matrix G G^dagger / Tr[G G^dagger].
ComplexMatrix random_state(std::size_t dim, Rng &rng);
ComplexMatrix random_pure_state(std::size_t dim, Rng &rng);
/// Orthonormal columns from Gram-Schmidt on a Gaussian matrix.
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng &rng);
ComplexMatrix random_unitary(std::size_t dim, Rng &rng);
/// Kraus operators cut from a random isometry, so they sum to identity.
std::vector<ComplexMatrix> random_kraus(std::size_t dim_in, std::size_t dim_out, std::size_t count, Rng &rng);
LinearMap random_cptp_map(std::size_t dim_in, std::size_t dim_out, std::size_t kraus_count, Rng &rng);
/// Map with a random Hermitian Choi matrix.
LinearMap random_hp_map(std::size_t dim_in, std::size_t dim_out, Rng &rng);

}  // namespace qcorr::instances

#endif
