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

#include "qcorr/linalg.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qcorr/errors.h"

namespace qcorr {

namespace {

void require_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw InvalidInput("matrix dimensions must be at least 1x1, got " + std::to_string(rows) + "x" +
                           std::to_string(cols));
    }
}

void require_finite(std::span<const Complex> entries) {
    for (const auto &z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidInput("matrix entries must be finite");
        }
    }
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidInput(std::string(op) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                           std::to_string(b.cols()));
    }
}

void require_bipartite(const ComplexMatrix &m, Bipartition dims, const char *op) {
    if (!m.is_square() || dims.first == 0 || dims.second == 0 || m.rows() != dims.first * dims.second) {
        throw InvalidInput(std::string(op) + ": matrix of side " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + " does not match dims (" + std::to_string(dims.first) +
                           "," + std::to_string(dims.second) + ")");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    require_shape(rows, cols);
    data_.assign(rows * cols, Complex{});
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    require_shape(rows, cols);
    if (data_.size() != rows * cols) {
        throw InvalidInput("expected " + std::to_string(rows * cols) + " entries, got " +
                           std::to_string(data_.size()));
    }
    require_finite(data_);
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    require_shape(rows_, cols_);
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw InvalidInput("ragged matrix literal");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    require_finite(data_);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; i++) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); i++) {
        m(i, i) = values[i];
    }
    require_finite(m.entries());
    return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> values) {
    return ComplexMatrix(values.size(), 1, ComplexVector(values.begin(), values.end()));
}

ComplexVector ComplexMatrix::col(std::size_t c) const {
    ComplexVector out(rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        out[r] = (*this)(r, c);
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; r++) {
        for (std::size_t c = 0; c < cols_; c++) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::conj() const {
    ComplexMatrix out = *this;
    for (auto &z : out.data_) {
        z = std::conj(z);
    }
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] += other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t k = 0; k < data_.size(); k++) {
        data_[k] -= other.data_[k];
    }
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (auto &z : data_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows()) {
        throw InvalidInput("operator*: inner dimensions differ (" + std::to_string(a.cols()) + " vs " +
                           std::to_string(b.rows()) + ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            Complex x = a(r, k);
            if (x == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); c++) {
                out(r, c) += x * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex s, ComplexMatrix m) {
    m *= s;
    return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex s) {
    m *= s;
    return m;
}

ComplexVector operator*(const ComplexMatrix &m, std::span<const Complex> v) {
    if (m.cols() != v.size()) {
        throw InvalidInput("matrix-vector product: dimension mismatch");
    }
    ComplexVector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        Complex acc{};
        for (std::size_t c = 0; c < m.cols(); c++) {
            acc += m(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

Complex trace(const ComplexMatrix &m) {
    if (!m.is_square()) {
        throw InvalidInput("trace of a non-square matrix");
    }
    Complex t{};
    for (std::size_t i = 0; i < m.rows(); i++) {
        t += m(i, i);
    }
    return t;
}

Complex trace_of_product(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.cols() != b.rows() || a.rows() != b.cols()) {
        throw InvalidInput("trace_of_product: shapes do not compose to a square matrix");
    }
    Complex t{};
    for (std::size_t r = 0; r < a.rows(); r++) {
        for (std::size_t k = 0; k < a.cols(); k++) {
            t += a(r, k) * b(k, r);
        }
    }
    return t;
}

ComplexMatrix outer(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexMatrix out(u.size(), v.size());
    for (std::size_t r = 0; r < u.size(); r++) {
        for (std::size_t c = 0; c < v.size(); c++) {
            out(r, c) = u[r] * std::conj(v[c]);
        }
    }
    return out;
}

Complex inner(std::span<const Complex> u, std::span<const Complex> v) {
    if (u.size() != v.size()) {
        throw InvalidInput("inner product: dimension mismatch");
    }
    Complex acc{};
    for (std::size_t k = 0; k < u.size(); k++) {
        acc += std::conj(u[k]) * v[k];
    }
    return acc;
}

double norm(std::span<const Complex> v) {
    double acc = 0;
    for (const auto &z : v) {
        acc += std::norm(z);
    }
    return std::sqrt(acc);
}

double max_abs(const ComplexMatrix &m) {
    double best = 0;
    for (const auto &z : m.entries()) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double frobenius_norm(const ComplexMatrix &m) {
    return norm(m.entries());
}

bool is_hermitian(const ComplexMatrix &m, double tol) {
    if (!m.is_square()) {
        return false;
    }
    double scale = std::max(1.0, max_abs(m));
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = r; c < m.cols(); c++) {
            if (std::abs(m(r, c) - std::conj(m(c, r))) > tol * scale) {
                return false;
            }
        }
    }
    return true;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t r1 = 0; r1 < a.rows(); r1++) {
        for (std::size_t c1 = 0; c1 < a.cols(); c1++) {
            Complex x = a(r1, c1);
            for (std::size_t r2 = 0; r2 < b.rows(); r2++) {
                for (std::size_t c2 = 0; c2 < b.cols(); c2++) {
                    out(r1 * b.rows() + r2, c1 * b.cols() + c2) = x * b(r2, c2);
                }
            }
        }
    }
    return out;
}

ComplexVector kron(std::span<const Complex> u, std::span<const Complex> v) {
    ComplexVector out(u.size() * v.size());
    for (std::size_t i = 0; i < u.size(); i++) {
        for (std::size_t j = 0; j < v.size(); j++) {
            out[i * v.size() + j] = u[i] * v[j];
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &m, Bipartition dims, Subsystem traced) {
    require_bipartite(m, dims, "partial_trace");
    const std::size_t d1 = dims.first;
    const std::size_t d2 = dims.second;
    if (traced == Subsystem::second) {
        ComplexMatrix out(d1, d1);
        for (std::size_t i = 0; i < d1; i++) {
            for (std::size_t j = 0; j < d1; j++) {
                Complex acc{};
                for (std::size_t k = 0; k < d2; k++) {
                    acc += m(i * d2 + k, j * d2 + k);
                }
                out(i, j) = acc;
            }
        }
        return out;
    }
    ComplexMatrix out(d2, d2);
    for (std::size_t i = 0; i < d2; i++) {
        for (std::size_t j = 0; j < d2; j++) {
            Complex acc{};
            for (std::size_t k = 0; k < d1; k++) {
                acc += m(k * d2 + i, k * d2 + j);
            }
            out(i, j) = acc;
        }
    }
    return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, Bipartition dims, Subsystem transposed) {
    require_bipartite(m, dims, "partial_transpose");
    const std::size_t d1 = dims.first;
    const std::size_t d2 = dims.second;
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i1 = 0; i1 < d1; i1++) {
        for (std::size_t i2 = 0; i2 < d2; i2++) {
            for (std::size_t j1 = 0; j1 < d1; j1++) {
                for (std::size_t j2 = 0; j2 < d2; j2++) {
                    Complex x = m(i1 * d2 + i2, j1 * d2 + j2);
                    if (transposed == Subsystem::second) {
                        out(i1 * d2 + j2, j1 * d2 + i2) = x;
                    } else {
                        out(j1 * d2 + i2, i1 * d2 + j2) = x;
                    }
                }
            }
        }
    }
    return out;
}

double isometry_residual(const ComplexMatrix &v) {
    return max_abs(v.adjoint() * v - ComplexMatrix::identity(v.cols()));
}

ComplexMatrix complete_to_unitary(const ComplexMatrix &v) {
    const std::size_t n = v.rows();
    const std::size_t k = v.cols();
    if (k > n) {
        throw InvalidInput("complete_to_unitary: more columns than rows");
    }
    double residual = isometry_residual(v);
    if (residual > 1e-9) {
        throw InvalidInput("complete_to_unitary: columns are not orthonormal (residual " + std::to_string(residual) +
                           ")");
    }

    std::vector<ComplexVector> basis;
    basis.reserve(n);
    for (std::size_t c = 0; c < k; c++) {
        basis.push_back(v.col(c));
    }
    for (std::size_t e = 0; e < n && basis.size() < n; e++) {
        ComplexVector cand(n);
        cand[e] = 1.0;
        // Two passes of modified Gram-Schmidt.
        for (int pass = 0; pass < 2; pass++) {
            for (const auto &b : basis) {
                Complex proj = inner(b, cand);
                for (std::size_t r = 0; r < n; r++) {
                    cand[r] -= proj * b[r];
                }
            }
        }
        double len = norm(cand);
        if (len < 1e-8) {
            continue;
        }
        for (auto &z : cand) {
            z /= len;
        }
        basis.push_back(std::move(cand));
    }
    if (basis.size() != n) {
        throw NumericalFailure("complete_to_unitary: standard basis did not span the complement");
    }

    ComplexMatrix u(n, n);
    for (std::size_t c = 0; c < n; c++) {
        for (std::size_t r = 0; r < n; r++) {
            u(r, c) = c < k ? v(r, c) : basis[c][r];
        }
    }
    return u;
}

}  // namespace qcorr
