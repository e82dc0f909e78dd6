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

#ifndef QCORR_CHANNELS_H
#define QCORR_CHANNELS_H

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "qcorr/linalg.h"

namespace qcorr {

/// A linear map L(H_in) -> L(H_out) held as its Choi matrix
///
///     choi = sum_ij L(|i><j|) (x) |i><j|
///
/// with the output factor first (slow index). The Choi side is therefore
/// dim_out * dim_in and choi((a,i),(b,j)) = <a| L(|i><j|) |b>.
class LinearMap {
   public:
    LinearMap(std::size_t dim_in, std::size_t dim_out, ComplexMatrix choi);

    static LinearMap zero(std::size_t dim_in, std::size_t dim_out);
    static LinearMap identity_channel(std::size_t dim);
    static LinearMap transpose_map(std::size_t dim);

    std::size_t dim_in() const {
        return dim_in_;
    }
    std::size_t dim_out() const {
        return dim_out_;
    }
    const ComplexMatrix &choi() const {
        return choi_;
    }
    Bipartition choi_dims() const {
        return {dim_out_, dim_in_};
    }

   private:
    std::size_t dim_in_;
    std::size_t dim_out_;
    ComplexMatrix choi_;
};

LinearMap operator+(const LinearMap &a, const LinearMap &b);
LinearMap operator-(const LinearMap &a, const LinearMap &b);
LinearMap operator*(double s, const LinearMap &m);

/// L(X) = Tr_in[choi (1 (x) X^T)].
ComplexMatrix apply_map(const LinearMap &map, const ComplexMatrix &x);

/// Assembles a map from the images of the matrix units; `action(i, j)` must
/// return L(|i><j|) as a d_out x d_out matrix.
LinearMap map_from_action(std::size_t d_in, std::size_t d_out,
                          const std::function<ComplexMatrix(std::size_t, std::size_t)> &action);

/// Choi matrix Hermitian within 1e-9 relative.
bool is_hp(const LinearMap &map);
/// Choi matrix PSD: min eigenvalue >= -1e-10 * max|eigenvalue|.
bool is_cp(const LinearMap &map);

/// Tr_out[choi], transposed: the effect D with Tr[L(rho)] = Tr[rho D].
ComplexMatrix trace_effect(const LinearMap &map);
/// max_abs(trace_effect(map) - 1).
double tp_residual(const LinearMap &map);
/// Smallest eigenvalue of the (Hermitian part of the) Choi matrix.
double min_choi_eigenvalue(const LinearMap &map);

struct KrausSet {
    std::vector<ComplexMatrix> operators;  // each dim_out x dim_in
};

/// K_k = sqrt(mu_k) unvec(v_k) from the Choi spectral decomposition;
/// eigenvalues below 1e-12 * mu_max are dropped, so the Kraus count is the
/// numerical rank of the Choi matrix.
KrausSet kraus_from_choi(const LinearMap &map);
/// sum_k K_k X K_k^dagger
ComplexMatrix apply_kraus(const KrausSet &kraus, const ComplexMatrix &x);

/// Positive and negative parts of an HP map's Choi matrix, with orthogonal
/// supports: choi(L) = choi(plus) - choi(minus).
struct JordanParts {
    LinearMap plus;
    LinearMap minus;
};
JordanParts jordan_parts(const LinearMap &map);

/// L = sum_i coefficients[i] * parts[i] with every part CP and the sum of
/// the parts trace-preserving, i.e. a quantum instrument plus classical
/// post-processing weights.
struct StatisticalDecomposition {
    std::vector<double> coefficients;
    std::vector<LinearMap> parts;
    double l1_cost = 0;

    bool empty() const {
        return parts.empty();
    }
};

/// Instrument built from the Jordan parts L+ and L-. With D+- the trace
/// effects of L+- and gamma = lambda_max(D+ + D-):
///
///     E1 = L+ / gamma,  lambda1 = +gamma
///     E2 = L- / gamma,  lambda2 = -gamma
///     E0(rho) = Tr[rho (1 - (D+ + D-)/gamma)] 1/d_out,  lambda0 = 0
///
/// Parts that vanish are left out. CPTP input short-circuits to the single
/// part {1, L}; the zero map yields an empty decomposition.
StatisticalDecomposition statistical_decomposition(const LinearMap &map);

/// sum_i lambda_i E_i
LinearMap reconstruct(const StatisticalDecomposition &dec);

/// Residuals of the three decomposition invariants.
struct DecompositionResiduals {
    double reconstruction = 0;    // max_abs(choi(reconstruct(dec)) - choi(map))
    double trace_preserving = 0;  // tp_residual(sum_i E_i)
    double min_part_eigenvalue = 0;  // min over parts of min_choi_eigenvalue
};
DecompositionResiduals decomposition_residuals(const StatisticalDecomposition &dec, const LinearMap &map);

}  // namespace qcorr

#endif
