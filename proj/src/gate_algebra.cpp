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

#include "su4geom/gate_algebra.hpp"

#include <cmath>

#include "su4geom/error.hpp"

namespace su4geom {

namespace {

const Matrix2 kPauliI{1.0, 0.0, 0.0, 1.0};
const Matrix2 kPauliX{0.0, 1.0, 1.0, 0.0};
const Matrix2 kPauliY{0.0, Complex{0, -1}, Complex{0, 1}, 0.0};
const Matrix2 kPauliZ{1.0, 0.0, 0.0, -1.0};

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Complex kI{0.0, 1.0};

const ComplexMatrix4 kMagicQ{
    kInvSqrt2, 0.0,            0.0,        kInvSqrt2 * kI,
    0.0,       kInvSqrt2 * kI, kInvSqrt2,  0.0,
    0.0,       kInvSqrt2 * kI, -kInvSqrt2, 0.0,
    kInvSqrt2, 0.0,            0.0,        -kInvSqrt2 * kI,
};

double wrap(double x, double period) {
    double r = std::fmod(x, period);
    if (r < 0) {
        r += period;
    }
    if (r >= period) {
        r = 0.0;
    }
    return r;
}

}  // namespace

const Matrix2 &pauli(Pauli p) {
    switch (p) {
        case Pauli::I:
            return kPauliI;
        case Pauli::X:
            return kPauliX;
        case Pauli::Y:
            return kPauliY;
        case Pauli::Z:
            return kPauliZ;
    }
    throw ArgumentError("pauli: invalid axis");
}

GeneratorIndex::GeneratorIndex(Pauli first, Pauli second) : first_(first), second_(second) {
    auto valid = [](Pauli p) {
        int v = static_cast<int>(p);
        return v >= 0 && v <= 3;
    };
    if (!valid(first) || !valid(second)) {
        throw ArgumentError("generator index: axis out of range");
    }
    if (first == Pauli::I && second == Pauli::I) {
        throw ArgumentError("generator index: (0,0) is not a generator of su(4)");
    }
}

GeneratorIndex GeneratorIndex::from_flat(int flat) {
    if (flat < 0 || flat >= kGeneratorCount) {
        throw ArgumentError("generator index: flat index must lie in [0, 15)");
    }
    if (flat < 3) {
        return {Pauli::I, static_cast<Pauli>(flat + 1)};
    }
    if (flat < 6) {
        return {static_cast<Pauli>(flat - 2), Pauli::I};
    }
    int k = flat - 6;
    return {static_cast<Pauli>(k / 3 + 1), static_cast<Pauli>(k % 3 + 1)};
}

int GeneratorIndex::flat() const {
    int i = static_cast<int>(first_);
    int j = static_cast<int>(second_);
    if (i == 0) {
        return j - 1;
    }
    if (j == 0) {
        return i + 2;
    }
    return 6 + 3 * (i - 1) + (j - 1);
}

ComplexMatrix4 generator(GeneratorIndex idx) {
    return kron(pauli(idx.first()), pauli(idx.second())) * Complex{0.5};
}

Su2Params Su2Params::normalized(double alpha, double theta, double phi) {
    if (!std::isfinite(alpha) || !std::isfinite(theta) || !std::isfinite(phi)) {
        throw ArgumentError("su2 params: non-finite angle");
    }
    if (theta < 0.0 || theta > kPi) {
        throw ArgumentError("su2 params: theta must lie in [0, pi]");
    }
    return {wrap(alpha, 4 * kPi), theta, wrap(phi, 2 * kPi)};
}

bool CanonicalCoords::in_chamber(double tol) const {
    if (!std::isfinite(c1) || !std::isfinite(c2) || !std::isfinite(c3)) {
        return false;
    }
    return c3 >= -tol && c2 - c3 >= -tol && c1 - c2 >= -tol && c1 + c2 <= kPi + tol;
}

std::array<double, 15> FullCoords::flatten() const {
    return {a1.alpha, a1.theta, a1.phi, b1.alpha, b1.theta, b1.phi,
            a2.alpha, a2.theta, a2.phi, b2.alpha, b2.theta, b2.phi,
            c.c1,     c.c2,     c.c3};
}

FullCoords FullCoords::from_flat(std::span<const double, 15> x) {
    return {{x[0], x[1], x[2]},   {x[3], x[4], x[5]},   {x[6], x[7], x[8]},
            {x[9], x[10], x[11]}, {x[12], x[13], x[14]}};
}

GateMatrix::GateMatrix(const ComplexMatrix4 &m, double tol) : m_(m) {
    if (!m.all_finite()) {
        throw ValidationError("unitarity violation: matrix has non-finite entries");
    }
    defect_ = su4geom::unitarity_defect(m);
    if (!(defect_ <= tol)) {
        throw ValidationError("unitarity violation: max|U^dagger U - I| = " + std::to_string(defect_));
    }
}

Complex GateMatrix::det() const {
    return determinant(m_);
}

Matrix2 su2_factor(const Su2Params &v) {
    const double ca = std::cos(v.alpha / 2);
    const double sa = std::sin(v.alpha / 2);
    const double nx = std::sin(v.theta) * std::cos(v.phi);
    const double ny = std::sin(v.theta) * std::sin(v.phi);
    const double nz = std::cos(v.theta);
    // I cos - i (nx X + ny Y + nz Z) sin
    return Matrix2{
        Complex{ca, -nz * sa},
        Complex{-ny * sa, -nx * sa},
        Complex{ny * sa, -nx * sa},
        Complex{ca, nz * sa},
    };
}

ComplexMatrix4 local_gate(const Su2Params &a, const Su2Params &b) {
    return kron(su2_factor(a), su2_factor(b));
}

ComplexMatrix4 abelian_gate(double c1, double c2, double c3) {
    const std::array<double, 3> c{c1, c2, c3};
    const std::array<Pauli, 3> axes{Pauli::X, Pauli::Y, Pauli::Z};
    ComplexMatrix4 out = ComplexMatrix4::identity();
    for (std::size_t j = 0; j < 3; j++) {
        const ComplexMatrix4 ss = kron(pauli(axes[j]), pauli(axes[j]));
        ComplexMatrix4 factor = ComplexMatrix4::identity() * Complex{std::cos(c[j] / 2)} +
                                ss * Complex{0.0, -std::sin(c[j] / 2)};
        out = out * factor;
    }
    return out;
}

ComplexMatrix4 abelian_gate(const CanonicalCoords &c) {
    return abelian_gate(c.c1, c.c2, c.c3);
}

GateMatrix assemble(const FullCoords &x) {
    const ComplexMatrix4 k1 = local_gate(x.a1, x.b1);
    const ComplexMatrix4 k2 = local_gate(x.a2, x.b2);
    return GateMatrix(k1 * abelian_gate(x.c) * k2, kConstructedUnitarityTol);
}

const ComplexMatrix4 &magic_basis_matrix() {
    return kMagicQ;
}

ComplexMatrix4 magic_basis(const GateMatrix &u) {
    return kMagicQ.adjoint() * u.matrix() * kMagicQ;
}

ComplexMatrix4 cnot_matrix() {
    return ComplexMatrix4{
        1, 0, 0, 0,  //
        0, 1, 0, 0,  //
        0, 0, 0, 1,  //
        0, 0, 1, 0,
    };
}

ComplexMatrix4 swap_matrix() {
    return ComplexMatrix4{
        1, 0, 0, 0,  //
        0, 0, 1, 0,  //
        0, 1, 0, 0,  //
        0, 0, 0, 1,
    };
}

ComplexMatrix4 cphase_matrix() {
    return ComplexMatrix4{
        1, 0, 0, 0,  //
        0, 1, 0, 0,  //
        0, 0, 1, 0,  //
        0, 0, 0, -1,
    };
}

}  // namespace su4geom
