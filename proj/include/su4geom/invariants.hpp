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

#ifndef SU4GEOM_INVARIANTS_HPP
#define SU4GEOM_INVARIANTS_HPP

#include <array>

#include "su4geom/gate_algebra.hpp"

namespace su4geom {

/// Makhlin local invariants (g1, g2, g3) of a local equivalence class.
struct LocalInvariants {
    double g1 = 0.0;
    double g2 = 0.0;
    double g3 = 0.0;

    /// sqrt(g1^2 + g2^2), the cylindrical radius in g-space.
    double rho() const;

    std::array<double, 3> as_array() const {
        return {g1, g2, g3};
    }
};

/// Global phase chi in [0, pi/2) of U = e^{i chi} k1 A k2.
struct PhaseAngle {
    double chi = 0.0;
};

inline constexpr double kImagResidueTol = 1e-9;
inline constexpr double kCubicClampTol = 1e-8;
inline constexpr double kChamberOutputTol = 1e-8;
/// Roots may leave [-1, 1] by this much before c_from_g rejects them. A triple root
/// (identity, SWAP) is only determined to about eps^(1/3).
inline constexpr double kRootRangeTol = 1e-5;
/// Largest discriminant q^2/4 + p^3/27 still read as a (near) double root. Errors of
/// order eps in g move it by about eps near a double root.
inline constexpr double kDiscriminantTol = 1e-12;
/// |g2| at or below this counts as g2 = 0 (rounding level for g computed from a unitary),
/// which selects the c1 <= pi/2 representative.
inline constexpr double kG2ZeroTol = 1e-14;

/// Determinant-normalised invariants computed from m = U_B^T U_B in the magic basis:
/// g1 + i g2 = conj(tr^2(m) / (16 det U)), g3 = (tr^2(m) - tr(m^2)) / (4 det U).
///
/// Works for any U in U(4). Throws ConsistencyError when the imaginary part of
/// g3 exceeds kImagResidueTol or when a value leaves its admissible range
/// (|g1| <= 1, |g2| <= 1/4, |g3| <= 3).
LocalInvariants makhlin_invariants(const GateMatrix &u);

/// Closed-form image of (c1, c2, c3) in invariant space; valid for any real input.
LocalInvariants g_from_c(double c1, double c2, double c3);
LocalInvariants g_from_c(const CanonicalCoords &c);

/// Ascending real roots of z^3 - g3 z^2 + (4 rho - 1) z + (g3 - 4 g1) = 0.
///
/// Trigonometric three-real-root method with the acos argument clamped to [-1, 1].
/// Throws InvalidInvariantsError if the discriminant shows a complex pair beyond
/// kCubicClampTol^2.
std::array<double, 3> invariant_cubic_roots(const LocalInvariants &g);

/// Inverse of g_from_c onto the Weyl chamber. The g2 = 0 locus takes the
/// c1 = acos(z1)/2 branch.
CanonicalCoords c_from_g(const LocalInvariants &g);

/// Weyl chamber point of the local equivalence class of u. The c_from_g estimate is
/// refined against the eigenphases of m, so vertices and faces come out to rounding.
CanonicalCoords canonical_coords(const GateMatrix &u);

struct Su4Projection {
    GateMatrix gate;
    PhaseAngle phase;
};

/// Splits u = e^{i chi} V with det V = 1 and chi = arg(det u)/4 mod pi/2.
Su4Projection project_su4(const ComplexMatrix4 &u);

/// Max-norm distance between the invariants of u and v is at most tol.
bool locally_equivalent(const GateMatrix &u, const GateMatrix &v, double tol = 1e-9);

}  // namespace su4geom

#endif
