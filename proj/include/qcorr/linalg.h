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

#ifndef QCORR_LINALG_H
#define QCORR_LINALG_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense complex matrix stored row-major. Always at least 1x1 and always
/// finite; both are checked when a matrix is built from caller data.
///
/// Tensor index convention used throughout the library: for a bipartite
/// space of dimensions (d1, d2) the basis state |i1, i2> sits at index
/// i1 * d2 + i2, so the first factor is the slow index. kron() and the
/// partial operations below all follow it.
class ComplexMatrix {
   public:
    /// Zero matrix.
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// Column vector (n x 1).
    static ComplexMatrix column(std::span<const Complex> values);

    std::size_t rows() const {
        return rows_;
    }
    std::size_t cols() const {
        return cols_;
    }
    bool is_square() const {
        return rows_ == cols_;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::span<const Complex> entries() const {
        return data_;
    }

    ComplexVector col(std::size_t c) const;

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conj() const;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex scale);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t rows_;
    std::size_t cols_;
    ComplexVector data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex s);
ComplexVector operator*(const ComplexMatrix &m, std::span<const Complex> v);

Complex trace(const ComplexMatrix &m);
/// Tr[a * b] without forming the product.
Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b);
/// |u><v|
ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v);
Complex inner(std::span<const Complex> u, std::span<const Complex> v);
double norm(std::span<const Complex> v);

/// Largest entry modulus. All residuals in the library are measured with it.
double max_abs(const ComplexMatrix &m);
double frobenius_norm(const ComplexMatrix &m);
/// max_abs(m - m^dagger) <= tol * max(1, max_abs(m)).
bool is_hermitian(const ComplexMatrix &m, double tol = 1e-9);

/// Dimensions of a bipartite space, first factor slow.
struct Bipartition {
    std::size_t first;
    std::size_t second;
};

enum class Subsystem { first = 1, second = 2 };

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v);
/// Traces out `traced`; the result lives on the other factor.
ComplexMatrix partial_trace(const ComplexMatrix &m, Bipartition dims, Subsystem traced);
/// Transposes only the indices of `transposed`. Involutive.
ComplexMatrix partial_transpose(const ComplexMatrix &m, Bipartition dims, Subsystem transposed);

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending and
/// eigenvectors stored as the matching columns of `vectors`.
struct HermitianEigen {
    std::vector<double> values;
    ComplexMatrix vectors;
};

/// Cyclic complex Jacobi. Rejects matrices whose anti-Hermitian part exceeds
/// 1e-9 * max(1, max_abs(m)); the anti-Hermitian part of accepted input is
/// discarded.
HermitianEigen eig_hermitian(const ComplexMatrix &m);

/// Square unitary whose leading columns are a copy of the isometry `v`.
/// The remaining columns come from Gram-Schmidt over the standard basis, so
/// the result is a deterministic function of `v`.
ComplexMatrix complete_to_unitary(const ComplexMatrix &v);

/// max_abs(v^dagger v - 1).
double isometry_residual(const ComplexMatrix &v);

}  // namespace qcorr

#endif
