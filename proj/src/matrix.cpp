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

#include "su4geom/matrix.hpp"

#include <utility>

namespace su4geom {

ComplexMatrix4 kron(const Matrix2 &a, const Matrix2 &b) {
    ComplexMatrix4 out;
    for (std::size_t i = 0; i < 2; i++) {
        for (std::size_t j = 0; j < 2; j++) {
            for (std::size_t k = 0; k < 2; k++) {
                for (std::size_t l = 0; l < 2; l++) {
                    out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
                }
            }
        }
    }
    return out;
}

Complex determinant(const Matrix2 &m) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

Complex determinant(const ComplexMatrix4 &m) {
    ComplexMatrix4 lu = m;
    Complex det = 1.0;
    for (std::size_t col = 0; col < 4; col++) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < 4; r++) {
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) {
                pivot = r;
            }
        }
        if (lu(pivot, col) == Complex{}) {
            return 0.0;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < 4; c++) {
                std::swap(lu(pivot, c), lu(col, c));
            }
            det = -det;
        }
        det *= lu(col, col);
        for (std::size_t r = col + 1; r < 4; r++) {
            Complex f = lu(r, col) / lu(col, col);
            for (std::size_t c = col; c < 4; c++) {
                lu(r, c) -= f * lu(col, c);
            }
        }
    }
    return det;
}

double unitarity_defect(const ComplexMatrix4 &u) {
    return max_abs_diff(u.adjoint() * u, ComplexMatrix4::identity());
}

double max_abs_diff(const ComplexMatrix4 &a, const ComplexMatrix4 &b) {
    return (a - b).max_abs();
}

}  // namespace su4geom
