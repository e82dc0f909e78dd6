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

// Cyclic Jacobi diagonalization for dense complex Hermitian matrices.
//
// Each rotation first removes the phase of the pivot a_pq with a diagonal
// unitary and then applies the classical real symmetric rotation, so one
// step is A <- G^dagger A G with
//
//     G restricted to (p, q) = [ c            s           ]
//                              [ -s e^{-i phi}  c e^{-i phi} ]
//
// where phi = arg(a_pq). The dimensions seen here stay below ~100, where
// Jacobi's quadratic convergence and orthogonal accuracy beat anything
// fancier.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qcorr/errors.h"
#include "qcorr/linalg.h"

namespace qcorr {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalThreshold = 1e-13;
constexpr double kHermitianTolerance = 1e-9;

double off_diagonal_norm(const ComplexMatrix &a) {
    double acc = 0;
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t c = 0; c < a.cols(); c++) {
            if (r != c) {
                acc += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(acc);
}

void rotate(ComplexMatrix &a, ComplexMatrix &vecs, std::size_t p, std::size_t q) {
    const Complex b = a(p, q);
    const double mag = std::abs(b);
    if (mag == 0) {
        return;
    }
    const Complex phase = std::conj(b) / mag;  // e^{-i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double theta = (aqq - app) / (2 * mag);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
    }
    const double c = 1 / std::sqrt(t * t + 1);
    const double s = t * c;

    const Complex gpp = c;
    const Complex gpq = s;
    const Complex gqp = -s * phase;
    const Complex gqq = c * phase;

    const std::size_t n = a.rows();
    for (std::size_t r = 0; r < n; r++) {
        Complex xp = a(r, p);
        Complex xq = a(r, q);
        a(r, p) = xp * gpp + xq * gqp;
        a(r, q) = xp * gpq + xq * gqq;
        Complex vp = vecs(r, p);
        Complex vq = vecs(r, q);
        vecs(r, p) = vp * gpp + vq * gqp;
        vecs(r, q) = vp * gpq + vq * gqq;
    }
    for (std::size_t col = 0; col < n; col++) {
        Complex xp = a(p, col);
        Complex xq = a(q, col);
        a(p, col) = std::conj(gpp) * xp + std::conj(gqp) * xq;
        a(q, col) = std::conj(gpq) * xp + std::conj(gqq) * xq;
    }
    a(p, q) = 0;
    a(q, p) = 0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

HermitianEigen eig_hermitian(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw InvalidInput("eig_hermitian: matrix is not square");
    }
    const double scale = std::max(1.0, max_abs(m));
    const double skew = max_abs(m - m.adjoint());
    if (skew > kHermitianTolerance * scale) {
        throw InvalidInput("eig_hermitian: matrix is not Hermitian (residual " + std::to_string(skew) + ")");
    }

    const std::size_t n = m.rows();
    ComplexMatrix a = m + m.adjoint();
    a *= 0.5;
    ComplexMatrix vecs = ComplexMatrix::identity(n);

    const double threshold = kOffDiagonalThreshold * frobenius_norm(a);
    if (!std::isfinite(threshold)) {
        throw NumericalFailure("eig_hermitian: matrix norm overflows double precision");
    }
    int sweep = 0;
    while (off_diagonal_norm(a) > threshold) {
        if (sweep++ == kMaxSweeps) {
            throw NumericalFailure("eig_hermitian: Jacobi did not converge in " + std::to_string(kMaxSweeps) +
                                   " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; p++) {
            for (std::size_t q = p + 1; q < n; q++) {
                rotate(a, vecs, p, q);
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for (std::size_t k = 0; k < n; k++) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; r++) {
            out.vectors(r, k) = vecs(r, order[k]);
        }
    }
    return out;
}

}  // namespace qcorr
