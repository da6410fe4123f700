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

#ifndef SU4GEOM_GEOMETRY_HPP
#define SU4GEOM_GEOMETRY_HPP

#include <Eigen/Dense>

#include "su4geom/gate_algebra.hpp"
#include "su4geom/invariants.hpp"

namespace su4geom {

using Matrix3 = Eigen::Matrix3d;
using MetricTensor15 = Eigen::Matrix<double, 15, 15>;
using MetricTensor16 = Eigen::Matrix<double, 16, 16>;
using Frame15 = Eigen::Matrix<double, 15, 15>;

/// Global maximum of the Weyl chamber density, attained at the B-gate class.
inline constexpr double kWeylDensityMax = 12.0 / kPi;

/// Rows are zeta^x, zeta^y, zeta^z; columns are the (dalpha, dtheta, dphi) coefficients.
Matrix3 zeta_frame(const Su2Params &v);

/// zeta(-v) pulled back to (dalpha, dtheta, dphi): the 1-forms of the reversed
/// rotation -alpha_vec, i.e. zeta_frame at alpha -> -alpha with the dalpha column negated.
Matrix3 zeta_frame_reversed(const Su2Params &v);

/// Bi-invariant metric g_{mu nu} in the FullCoords ordering, trace-normalised
/// so that the generators are orthonormal.
MetricTensor15 metric_tensor(const FullCoords &x);

/// U(4) metric with the phase chi appended as coordinate 16 (weight 4 dchi^2).
MetricTensor16 metric_tensor_u4(const FullCoords &x);

/// Product closed form of det g; always >= 0.
double det_g_closed(const FullCoords &x);

enum class DensityForm {
    /// (48/pi) |prod sin(cj + ck) sin(cj - ck)|, defined everywhere.
    abs_product,
    /// Signed trigonometric-sum form; equals abs_product on the chamber.
    cosine,
};

/// Haar density M_A of the local equivalence classes w.r.t. dc1 dc2 dc3.
double weyl_density(double c1, double c2, double c3, DensityForm form = DensityForm::abs_product);
double weyl_density(const CanonicalCoords &c, DensityForm form = DensityForm::abs_product);

/// Normalised SU(2) Haar density (1/8pi^2) sin^2(alpha/2) sin(theta).
double su2_density(const Su2Params &v);

/// Normalised SU(4) Haar density w.r.t. d^15 x.
double full_haar_density(const FullCoords &x);

/// U(4) density w.r.t. d^15 x dchi, chi in [0, pi/2).
double full_haar_density_u4(const FullCoords &x);

/// (3/pi) / sqrt(g1^2 + g2^2). Throws SingularityError on the g3 axis.
double makhlin_density(const LocalInvariants &g);

/// J with dg = J dc.
Matrix3 jacobian(double c1, double c2, double c3);
Matrix3 jacobian(const CanonicalCoords &c);

/// Closed form of J J^T in terms of the invariants.
Matrix3 jjt_closed(const LocalInvariants &g);

/// (J J^T)^{-1}: the flat c-space metric expressed in invariant coordinates.
/// Computed numerically; throws SingularityError where J J^T is singular.
Matrix3 invariant_space_metric(const LocalInvariants &g);

inline constexpr double kFrameStep = 1e-5;
inline constexpr double kFrameSingularRadius = 1e-3;

/// Central-difference estimate of E^A_mu = i tr(T_A U^{-1} dU/dx^mu).
///
/// Row A follows GeneratorIndex::flat, column mu the FullCoords ordering.
/// Throws DomainError within kFrameSingularRadius of a coordinate singularity and
/// ConsistencyError when the imaginary residue exceeds 10 h^2.
Frame15 frame_finite_difference(const FullCoords &x, double h = kFrameStep);

/// Largest |A + A^dagger| entry, and |tr A|, over the 15 finite-difference
/// tangent matrices U^{-1} dU/dx^mu. Both vanish (to O(h^2)) on su(4).
struct TangentClosure {
    double anti_hermitian_defect = 0.0;
    double trace_defect = 0.0;
};
TangentClosure tangent_closure(const FullCoords &x, double h = kFrameStep);

}  // namespace su4geom

#endif
