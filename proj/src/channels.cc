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

#include "qcorr/channels.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcorr/errors.h"

namespace qcorr {

namespace {

constexpr double kHermitianTolerance = 1e-9;
constexpr double kPsdTolerance = 1e-10;
constexpr double kRankCutoff = 1e-12;
constexpr double kTraceTolerance = 1e-9;
constexpr double kZeroGamma = 1e-12;

double max_abs_eigenvalue(const std::vector<double> &values) {
    double best = 0;
    for (double v : values) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

void require_same_dims(const LinearMap &a, const LinearMap &b) {
    if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
        throw InvalidInput("linear maps act between different spaces");
    }
}

void require_hp(const LinearMap &map, const char *op) {
    if (!is_hp(map)) {
        throw InvalidInput(std::string(op) + ": map is not Hermiticity preserving (Choi Hermiticity residual " +
                           std::to_string(max_abs(map.choi() - map.choi().adjoint())) + ")");
    }
}

}  // namespace

LinearMap::LinearMap(std::size_t dim_in, std::size_t dim_out, ComplexMatrix choi)
    : dim_in_(dim_in), dim_out_(dim_out), choi_(std::move(choi)) {
    if (dim_in == 0 || dim_out == 0) {
        throw InvalidInput("linear map dimensions must be positive");
    }
    if (!choi_.is_square() || choi_.rows() != dim_in * dim_out) {
        throw InvalidInput("Choi matrix is " + std::to_string(choi_.rows()) + "x" + std::to_string(choi_.cols()) +
                           " but dim_out*dim_in = " + std::to_string(dim_in * dim_out));
    }
}

LinearMap LinearMap::zero(std::size_t dim_in, std::size_t dim_out) {
    return LinearMap(dim_in, dim_out, ComplexMatrix(dim_in * dim_out, dim_in * dim_out));
}

LinearMap LinearMap::identity_channel(std::size_t dim) {
    ComplexVector omega(dim * dim);
    for (std::size_t i = 0; i < dim; i++) {
        omega[i * dim + i] = 1.0;
    }
    return LinearMap(dim, dim, outer(omega, omega));
}

LinearMap LinearMap::transpose_map(std::size_t dim) {
    // Choi of X -> X^T is the swap operator.
    ComplexMatrix swap(dim * dim, dim * dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            swap(i * dim + j, j * dim + i) = 1.0;
        }
    }
    return LinearMap(dim, dim, std::move(swap));
}

LinearMap operator+(const LinearMap &a, const LinearMap &b) {
    require_same_dims(a, b);
    return LinearMap(a.dim_in(), a.dim_out(), a.choi() + b.choi());
}

LinearMap operator-(const LinearMap &a, const LinearMap &b) {
    require_same_dims(a, b);
    return LinearMap(a.dim_in(), a.dim_out(), a.choi() - b.choi());
}

LinearMap operator*(double s, const LinearMap &m) {
    return LinearMap(m.dim_in(), m.dim_out(), Complex(s) * m.choi());
}

ComplexMatrix apply_map(const LinearMap &map, const ComplexMatrix &x) {
    if (!x.is_square() || x.rows() != map.dim_in()) {
        throw InvalidInput("apply_map: input is " + std::to_string(x.rows()) + "x" + std::to_string(x.cols()) +
                           ", map expects " + std::to_string(map.dim_in()) + "x" + std::to_string(map.dim_in()));
    }
    ComplexMatrix lifted = map.choi() * kron(ComplexMatrix::identity(map.dim_out()), x.transpose());
    return partial_trace(lifted, map.choi_dims(), Subsystem::second);
}

LinearMap map_from_action(std::size_t d_in, std::size_t d_out,
                          const std::function<ComplexMatrix(std::size_t, std::size_t)> &action) {
    ComplexMatrix choi(d_out * d_in, d_out * d_in);
    for (std::size_t i = 0; i < d_in; i++) {
        for (std::size_t j = 0; j < d_in; j++) {
            ComplexMatrix image = action(i, j);
            if (image.rows() != d_out || image.cols() != d_out) {
                throw InvalidInput("map_from_action: image of |" + std::to_string(i) + "><" + std::to_string(j) +
                                   "| is " + std::to_string(image.rows()) + "x" + std::to_string(image.cols()) +
                                   ", expected " + std::to_string(d_out) + "x" + std::to_string(d_out));
            }
            for (std::size_t a = 0; a < d_out; a++) {
                for (std::size_t b = 0; b < d_out; b++) {
                    choi(a * d_in + i, b * d_in + j) = image(a, b);
                }
            }
        }
    }
    return LinearMap(d_in, d_out, std::move(choi));
}

bool is_hp(const LinearMap &map) {
    return is_hermitian(map.choi(), kHermitianTolerance);
}

bool is_cp(const LinearMap &map) {
    if (!is_hp(map)) {
        return false;
    }
    auto eig = eig_hermitian(map.choi());
    return eig.values.front() >= -kPsdTolerance * max_abs_eigenvalue(eig.values);
}

ComplexMatrix trace_effect(const LinearMap &map) {
    return partial_trace(map.choi(), map.choi_dims(), Subsystem::first).transpose();
}

double tp_residual(const LinearMap &map) {
    return max_abs(trace_effect(map) - ComplexMatrix::identity(map.dim_in()));
}

double min_choi_eigenvalue(const LinearMap &map) {
    ComplexMatrix herm = map.choi() + map.choi().adjoint();
    herm *= 0.5;
    return eig_hermitian(herm).values.front();
}

KrausSet kraus_from_choi(const LinearMap &map) {
    require_hp(map, "kraus_from_choi");
    auto eig = eig_hermitian(map.choi());
    const double mu_max = max_abs_eigenvalue(eig.values);
    if (eig.values.front() < -kPsdTolerance * mu_max) {
        throw InvalidInput("kraus_from_choi: Choi matrix is not positive semidefinite (min eigenvalue " +
                           std::to_string(eig.values.front()) + ")");
    }
    KrausSet out;
    const std::size_t d_in = map.dim_in();
    const std::size_t d_out = map.dim_out();
    // Largest weight first.
    for (std::size_t k = eig.values.size(); k-- > 0;) {
        const double mu = eig.values[k];
        if (mu <= kRankCutoff * mu_max || mu <= 0) {
            continue;
        }
        const double amp = std::sqrt(mu);
        ComplexMatrix op(d_out, d_in);
        for (std::size_t a = 0; a < d_out; a++) {
            for (std::size_t i = 0; i < d_in; i++) {
                op(a, i) = amp * eig.vectors(a * d_in + i, k);
            }
        }
        out.operators.push_back(std::move(op));
    }
    return out;
}

ComplexMatrix apply_kraus(const KrausSet &kraus, const ComplexMatrix &x) {
    if (kraus.operators.empty()) {
        throw InvalidInput("apply_kraus: empty Kraus set has no output dimension");
    }
    ComplexMatrix out(kraus.operators.front().rows(), kraus.operators.front().rows());
    for (const auto &k : kraus.operators) {
        out += k * x * k.adjoint();
    }
    return out;
}

JordanParts jordan_parts(const LinearMap &map) {
    require_hp(map, "jordan_parts");
    auto eig = eig_hermitian(map.choi());
    const double cutoff = kRankCutoff * max_abs_eigenvalue(eig.values);
    const std::size_t n = eig.values.size();
    ComplexMatrix plus(n, n);
    ComplexMatrix minus(n, n);
    for (std::size_t k = 0; k < n; k++) {
        const double mu = eig.values[k];
        if (std::abs(mu) <= cutoff) {
            continue;
        }
        ComplexVector v = eig.vectors.col(k);
        ComplexMatrix proj = outer(v, v);
        if (mu > 0) {
            plus += Complex(mu) * proj;
        } else {
            minus += Complex(-mu) * proj;
        }
    }
    return {LinearMap(map.dim_in(), map.dim_out(), std::move(plus)),
            LinearMap(map.dim_in(), map.dim_out(), std::move(minus))};
}

StatisticalDecomposition statistical_decomposition(const LinearMap &map) {
    require_hp(map, "statistical_decomposition");
    StatisticalDecomposition dec;
    if (tp_residual(map) <= kTraceTolerance && is_cp(map)) {
        dec.coefficients = {1.0};
        dec.parts = {map};
        dec.l1_cost = 1.0;
        return dec;
    }

    auto [plus, minus] = jordan_parts(map);
    ComplexMatrix total_effect = trace_effect(plus) + trace_effect(minus);
    const double gamma = eig_hermitian(total_effect).values.back();
    if (gamma <= kZeroGamma) {
        return dec;
    }

    const double inv = 1.0 / gamma;
    if (max_abs(plus.choi()) > 0) {
        dec.coefficients.push_back(gamma);
        dec.parts.push_back(inv * plus);
    }
    if (max_abs(minus.choi()) > 0) {
        dec.coefficients.push_back(-gamma);
        dec.parts.push_back(inv * minus);
    }

    // Completion: E0(rho) = Tr[rho F] sigma0 with F = 1 - D/gamma, whose Choi
    // matrix is sigma0 (x) F^T.
    ComplexMatrix deficit = ComplexMatrix::identity(map.dim_in()) - Complex(inv) * total_effect;
    ComplexMatrix deficit_h = deficit + deficit.adjoint();
    deficit_h *= 0.5;
    if (max_abs(deficit_h) > kRankCutoff) {
        ComplexMatrix sigma0 = ComplexMatrix::identity(map.dim_out());
        sigma0 *= 1.0 / static_cast<double>(map.dim_out());
        dec.coefficients.push_back(0.0);
        dec.parts.emplace_back(map.dim_in(), map.dim_out(), kron(sigma0, deficit_h.transpose()));
    }

    for (double c : dec.coefficients) {
        dec.l1_cost += std::abs(c);
    }
    return dec;
}

LinearMap reconstruct(const StatisticalDecomposition &dec) {
    if (dec.empty()) {
        throw InvalidInput("reconstruct: empty decomposition");
    }
    if (dec.coefficients.size() != dec.parts.size()) {
        throw InvalidInput("reconstruct: coefficient and part counts differ");
    }
    LinearMap acc = LinearMap::zero(dec.parts.front().dim_in(), dec.parts.front().dim_out());
    for (std::size_t i = 0; i < dec.parts.size(); i++) {
        acc = acc + dec.coefficients[i] * dec.parts[i];
    }
    return acc;
}

DecompositionResiduals decomposition_residuals(const StatisticalDecomposition &dec, const LinearMap &map) {
    DecompositionResiduals res;
    if (dec.empty()) {
        // Only the reconstruction invariant is meaningful without parts.
        res.reconstruction = max_abs(map.choi());
        return res;
    }
    res.reconstruction = max_abs(reconstruct(dec).choi() - map.choi());
    LinearMap total = LinearMap::zero(map.dim_in(), map.dim_out());
    res.min_part_eigenvalue = 0;
    bool first = true;
    for (const auto &part : dec.parts) {
        total = total + part;
        double lo = min_choi_eigenvalue(part);
        res.min_part_eigenvalue = first ? lo : std::min(res.min_part_eigenvalue, lo);
        first = false;
    }
    res.trace_preserving = tp_residual(total);
    return res;
}

}  // namespace qcorr
