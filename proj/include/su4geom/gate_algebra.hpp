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

#ifndef SU4GEOM_GATE_ALGEBRA_HPP
#define SU4GEOM_GATE_ALGEBRA_HPP

#include <array>
#include <span>
#include <string>

#include "su4geom/matrix.hpp"

namespace su4geom {

inline constexpr double kPi = 3.14159265358979323846;

/// Unitarity tolerance applied to matrices supplied from outside.
inline constexpr double kInputUnitarityTol = 1e-10;
/// Unitarity tolerance expected of matrices built by this library.
inline constexpr double kConstructedUnitarityTol = 1e-12;

enum class Pauli { I = 0, X = 1, Y = 2, Z = 3 };

const Matrix2 &pauli(Pauli p);

/// Index (i, j) of the generator (sigma_i (x) sigma_j) / 2, with sigma_0 = I.
///
/// The flat ordering 0..14 is (0x, 0y, 0z, x0, y0, z0, xx, xy, xz, yx, yy, yz,
/// zx, zy, zz).
class GeneratorIndex {
   public:
    /// Throws ArgumentError for (I, I).
    GeneratorIndex(Pauli first, Pauli second);

    static GeneratorIndex from_flat(int flat);
    int flat() const;

    Pauli first() const {
        return first_;
    }
    Pauli second() const {
        return second_;
    }

   private:
    Pauli first_;
    Pauli second_;
};

inline constexpr int kGeneratorCount = 15;

ComplexMatrix4 generator(GeneratorIndex idx);

/// Rotation vector (alpha, theta, phi) of one SU(2) factor.
struct Su2Params {
    double alpha = 0.0;
    double theta = 0.0;
    double phi = 0.0;

    /// Reduces alpha mod 4pi and phi mod 2pi. Throws ArgumentError when theta
    /// is outside [0, pi] or any value is non-finite.
    static Su2Params normalized(double alpha, double theta, double phi);
};

/// Point (c1, c2, c3) labelling the entangling part A(c).
struct CanonicalCoords {
    double c1 = 0.0;
    double c2 = 0.0;
    double c3 = 0.0;

    /// Closed Weyl chamber membership, each inequality relaxed by tol.
    bool in_chamber(double tol = 1e-9) const;

    std::array<double, 3> as_array() const {
        return {c1, c2, c3};
    }
};

/// The fifteen coordinates (a1, b1, a2, b2, c) with U = k(a1, b1) A(c) k(a2, b2).
struct FullCoords {
    Su2Params a1;
    Su2Params b1;
    Su2Params a2;
    Su2Params b2;
    CanonicalCoords c;

    std::array<double, 15> flatten() const;
    static FullCoords from_flat(std::span<const double, 15> x);
};

/// 4x4 matrix known to be unitary within kInputUnitarityTol.
class GateMatrix {
   public:
    /// Validates unitarity and finiteness; throws ValidationError otherwise.
    explicit GateMatrix(const ComplexMatrix4 &m, double tol = kInputUnitarityTol);

    static GateMatrix identity() {
        return GateMatrix(ComplexMatrix4::identity());
    }

    const ComplexMatrix4 &matrix() const {
        return m_;
    }
    double unitarity_defect() const {
        return defect_;
    }
    Complex det() const;

   private:
    ComplexMatrix4 m_;
    double defect_ = 0.0;
};

/// I cos(alpha/2) - i (n . sigma) sin(alpha/2) with n the unit vector (theta, phi).
Matrix2 su2_factor(const Su2Params &v);

/// su2_factor(a) (x) su2_factor(b).
ComplexMatrix4 local_gate(const Su2Params &a, const Su2Params &b);

/// A(c) = prod_j [I cos(c_j/2) - i sigma_j (x) sigma_j sin(c_j/2)]. Valid for any real c.
ComplexMatrix4 abelian_gate(double c1, double c2, double c3);
ComplexMatrix4 abelian_gate(const CanonicalCoords &c);

/// k1 A k2.
GateMatrix assemble(const FullCoords &x);

/// Change of basis from the computational basis to the magic (Bell) basis.
const ComplexMatrix4 &magic_basis_matrix();

/// Q^dagger U Q.
ComplexMatrix4 magic_basis(const GateMatrix &u);

/// Named two-qubit gates in the computational basis (|00>,|01>,|10>,|11>).
ComplexMatrix4 cnot_matrix();
ComplexMatrix4 swap_matrix();
ComplexMatrix4 cphase_matrix();

}  // namespace su4geom

#endif
