// Copyright 2026 The su4geom Authors
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

#ifndef SU4GEOM_MATRIX_HPP
#define SU4GEOM_MATRIX_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace su4geom {

using Complex = std::complex<double>;

/// Dense row-major N x N complex matrix with value semantics.
template <std::size_t N>
class SquareMatrix {
   public:
    static constexpr std::size_t kDim = N;

    constexpr SquareMatrix() = default;

    /// Row-major initialisation; missing trailing entries are zero.
    SquareMatrix(std::initializer_list<Complex> row_major) {
        std::size_t k = 0;
        for (const auto &v : row_major) {
            if (k == N * N) {
                break;
            }
            entries_[k++] = v;
        }
    }

    static SquareMatrix identity() {
        SquareMatrix m;
        for (std::size_t i = 0; i < N; i++) {
            m(i, i) = 1.0;
        }
        return m;
    }

    Complex &operator()(std::size_t r, std::size_t c) {
        return entries_[r * N + c];
    }
    const Complex &operator()(std::size_t r, std::size_t c) const {
        return entries_[r * N + c];
    }

    const std::array<Complex, N * N> &entries() const {
        return entries_;
    }

    SquareMatrix adjoint() const {
        SquareMatrix out;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                out(c, r) = std::conj((*this)(r, c));
            }
        }
        return out;
    }

    SquareMatrix transpose() const {
        SquareMatrix out;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t c = 0; c < N; c++) {
                out(c, r) = (*this)(r, c);
            }
        }
        return out;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (std::size_t i = 0; i < N; i++) {
            t += (*this)(i, i);
        }
        return t;
    }

    /// Largest entry magnitude.
    double max_abs() const {
        double m = 0.0;
        for (const auto &v : entries_) {
            m = std::max(m, std::abs(v));
        }
        return m;
    }

    bool all_finite() const {
        for (const auto &v : entries_) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                return false;
            }
        }
        return true;
    }

    SquareMatrix &operator+=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            entries_[k] += o.entries_[k];
        }
        return *this;
    }
    SquareMatrix &operator-=(const SquareMatrix &o) {
        for (std::size_t k = 0; k < N * N; k++) {
            entries_[k] -= o.entries_[k];
        }
        return *this;
    }
    SquareMatrix &operator*=(Complex s) {
        for (auto &v : entries_) {
            v *= s;
        }
        return *this;
    }

    friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix &b) {
        return a += b;
    }
    friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix &b) {
        return a -= b;
    }
    friend SquareMatrix operator*(SquareMatrix a, Complex s) {
        return a *= s;
    }
    friend SquareMatrix operator*(Complex s, SquareMatrix a) {
        return a *= s;
    }
    friend SquareMatrix operator*(const SquareMatrix &a, const SquareMatrix &b) {
        SquareMatrix out;
        for (std::size_t r = 0; r < N; r++) {
            for (std::size_t k = 0; k < N; k++) {
                const Complex ark = a(r, k);
                if (ark == Complex{}) {
                    continue;
                }
                for (std::size_t c = 0; c < N; c++) {
                    out(r, c) += ark * b(k, c);
                }
            }
        }
        return out;
    }
    friend bool operator==(const SquareMatrix &a, const SquareMatrix &b) = default;

   private:
    std::array<Complex, N * N> entries_{};
};

using Matrix2 = SquareMatrix<2>;
using ComplexMatrix4 = SquareMatrix<4>;

/// Kronecker product a (x) b; a acts on the first (most significant) qubit.
ComplexMatrix4 kron(const Matrix2 &a, const Matrix2 &b);

/// Determinant by LU decomposition with partial pivoting.
Complex determinant(const ComplexMatrix4 &m);
Complex determinant(const Matrix2 &m);

/// max_ij |(U^dagger U - I)_ij|.
double unitarity_defect(const ComplexMatrix4 &u);

/// Max-norm distance between two matrices.
double max_abs_diff(const ComplexMatrix4 &a, const ComplexMatrix4 &b);

}  // namespace su4geom

#endif
