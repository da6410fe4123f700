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

#include "su4geom/invariants.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "su4geom/error.hpp"

namespace su4geom {

namespace {

constexpr double kSinProductFloor = 1e-3;

constexpr double kRangeTol = 1e-9;

double cubic_value(const std::array<double, 4> &k, double z) {
    return ((z + k[1]) * z + k[2]) * z + k[3];
}

double cubic_slope(const std::array<double, 4> &k, double z) {
    return (3 * z + 2 * k[1]) * z + k[2];
}

// A few Newton steps, kept only while the residual shrinks.
double polish_root(const std::array<double, 4> &k, double z) {
    for (int it = 0; it < 3; it++) {
        double f = cubic_value(k, z);
        double df = cubic_slope(k, z);
        if (f == 0.0 || std::abs(df) < 1e-7) {
            break;
        }
        double next = z - f / df;
        if (std::abs(cubic_value(k, next)) >= std::abs(f)) {
            break;
        }
        z = next;
    }
    return z;
}

double clamped_acos(double z) {
    if (z < -1.0 - kRootRangeTol || z > 1.0 + kRootRangeTol) {
        throw InvalidInvariantsError("invariant cubic root " + std::to_string(z) + " lies outside [-1, 1]");
    }
    return std::acos(std::clamp(z, -1.0, 1.0));
}

}  // namespace

double LocalInvariants::rho() const {
    return std::hypot(g1, g2);
}

LocalInvariants makhlin_invariants(const GateMatrix &u) {
    const ComplexMatrix4 ub = magic_basis(u);
    const ComplexMatrix4 m = ub.transpose() * ub;
    const Complex tr = m.trace();
    const Complex tr_sq = (m * m).trace();
    const Complex det = u.det();

    const Complex z = tr * tr / (16.0 * det);
    const Complex g3 = (tr * tr - tr_sq) / (4.0 * det);
    if (std::abs(g3.imag()) > kImagResidueTol) {
        throw ConsistencyError("makhlin invariants: imaginary residue of g3 is " + std::to_string(g3.imag()));
    }
    // With A(c) = exp(-i/2 sum c_j sigma_j sigma_j) and this Q, Im{z} = -(1/4) prod sin(2 c_j);
    // the sign is flipped so that g agrees with g_from_c.
    LocalInvariants g{z.real(), -z.imag(), g3.real()};
    if (std::abs(g.g1) > 1.0 + kRangeTol || std::abs(g.g2) > 0.25 + kRangeTol || std::abs(g.g3) > 3.0 + kRangeTol) {
        throw ConsistencyError("makhlin invariants: value outside the admissible range");
    }
    return g;
}

LocalInvariants g_from_c(double c1, double c2, double c3) {
    const double k1 = std::cos(2 * c1), k2 = std::cos(2 * c2), k3 = std::cos(2 * c3);
    return {
        0.25 * (k1 + k2 + k3 + k1 * k2 * k3),
        0.25 * std::sin(2 * c1) * std::sin(2 * c2) * std::sin(2 * c3),
        k1 + k2 + k3,
    };
}

LocalInvariants g_from_c(const CanonicalCoords &c) {
    return g_from_c(c.c1, c.c2, c.c3);
}

std::array<double, 3> invariant_cubic_roots(const LocalInvariants &g) {
    // Monic coefficients (1, a, b, c) of z^3 + a z^2 + b z + c.
    const double a = -g.g3;
    const double b = 4 * g.rho() - 1;
    const double c = g.g3 - 4 * g.g1;
    const std::array<double, 4> k{1.0, a, b, c};

    // Depressed cubic t^3 + p t + q with z = t - a/3.
    const double shift = -a / 3;
    const double p = b - a * a / 3;
    const double q = 2 * a * a * a / 27 - a * b / 3 + c;

    // Positive discriminant term means a complex pair; rounding near a triple root lands
    // on either side of zero, so only a clear excess is rejected.
    const double disc = q * q / 4 + p * p * p / 27;
    if (disc > kDiscriminantTol) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "invariant cubic has complex roots (discriminant %.3g)", disc);
        throw InvalidInvariantsError(buf);
    }
    std::array<double, 3> roots{};
    const double r = std::sqrt(std::max(-p / 3, 0.0));
    if (r < 1e-150) {
        roots.fill(shift);
    } else {
        const double arg = std::clamp(-q / (2 * r * r * r), -1.0, 1.0);
        const double phi = std::acos(arg) / 3;
        for (int j = 0; j < 3; j++) {
            roots[j] = polish_root(k, shift + 2 * r * std::cos(phi - 2 * kPi * j / 3));
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

CanonicalCoords c_from_g(const LocalInvariants &g) {
    const auto z = invariant_cubic_roots(g);
    CanonicalCoords c{0.0, clamped_acos(z[1]) / 2, clamped_acos(z[2]) / 2};
    // z1 = cos(2 c1) is flat in c1 near c1 = pi/2, while g2 is linear in sin(2 c1);
    // combining both keeps c1 accurate there. The sign of g2 picks the branch as before.
    const double s23 = std::sin(2 * c.c2) * std::sin(2 * c.c3);
    if (s23 > kSinProductFloor) {
        const double two_c1 = std::atan2(4 * g.g2 / s23, z[0]);
        c.c1 = two_c1 < 0 ? kPi + two_c1 / 2 : two_c1 / 2;
    } else {
        const double a1 = clamped_acos(z[0]) / 2;
        c.c1 = g.g2 >= -kG2ZeroTol ? a1 : kPi - a1;
    }
    if (!c.in_chamber(kChamberOutputTol)) {
        throw ConsistencyError("c_from_g: recovered point lies outside the Weyl chamber");
    }
    return c;
}

namespace {

// Eigenphases of m for A(c) are the rows of this matrix applied to c (mod 2 pi, up to a
// common shift of pi from the square root of det U). Its columns are orthogonal, S^T S = 4.
constexpr int kPhaseSigns[4][3] = {{-1, 1, -1}, {1, -1, -1}, {-1, -1, 1}, {1, 1, 1}};

double wrap_angle(double x) {
    return std::remainder(x, 2 * kPi);
}

// Refines c against the spectrum of m. The g route loses about sqrt(eps) where cubic roots
// cluster (chamber faces and vertices); eigenvalues of a unitary do not.
CanonicalCoords refine_with_spectrum(const ComplexMatrix4 &m, CanonicalCoords c) {
    Eigen::Matrix4cd em;
    for (int r = 0; r < 4; r++) {
        for (int k = 0; k < 4; k++) {
            em(r, k) = m(r, k);
        }
    }
    const Eigen::ComplexEigenSolver<Eigen::Matrix4cd> solver(em, false);
    if (solver.info() != Eigen::Success) {
        return c;
    }
    std::array<double, 4> phase{};
    for (int k = 0; k < 4; k++) {
        phase[k] = std::arg(solver.eigenvalues()(k));
    }
    const CanonicalCoords start = c;
    for (int iter = 0; iter < 3; iter++) {
        const auto cv = c.as_array();
        std::array<double, 4> pred{};
        for (int k = 0; k < 4; k++) {
            pred[k] = kPhaseSigns[k][0] * cv[0] + kPhaseSigns[k][1] * cv[1] + kPhaseSigns[k][2] * cv[2];
        }
        std::array<int, 4> perm{0, 1, 2, 3};
        std::array<double, 4> best_d{};
        double best_cost = INFINITY;
        do {
            for (const double shift : {0.0, kPi}) {
                std::array<double, 4> d{};
                double cost = 0.0;
                for (int k = 0; k < 4; k++) {
                    d[k] = wrap_angle(phase[perm[k]] + shift - pred[k]);
                    cost += d[k] * d[k];
                }
                if (cost < best_cost) {
                    best_cost = cost;
                    best_d = d;
                }
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
        std::array<double, 3> delta{};
        for (int j = 0; j < 3; j++) {
            for (int k = 0; k < 4; k++) {
                delta[j] += kPhaseSigns[k][j] * best_d[k] / 4;
            }
        }
        c = {cv[0] + delta[0], cv[1] + delta[1], cv[2] + delta[2]};
    }
    const auto a = start.as_array(), b = c.as_array();
    for (int j = 0; j < 3; j++) {
        if (std::abs(a[j] - b[j]) > 1e-2) {
            return start;  // spectrum matched a different representative; keep the g estimate
        }
    }
    c.c3 = std::max(c.c3, 0.0);
    c.c2 = std::max(c.c2, c.c3);
    c.c1 = std::clamp(c.c1, c.c2, kPi - c.c2);
    return c;
}

}  // namespace

CanonicalCoords canonical_coords(const GateMatrix &u) {
    const CanonicalCoords rough = c_from_g(makhlin_invariants(u));
    const ComplexMatrix4 ub = magic_basis(u);
    const Complex root_det = std::sqrt(u.det());
    return refine_with_spectrum(ub.transpose() * ub * (1.0 / root_det), rough);
}

Su4Projection project_su4(const ComplexMatrix4 &u) {
    GateMatrix checked(u);
    const Complex det = checked.det();
    if (std::abs(det) < 0.5) {
        throw ValidationError("project_su4: determinant is not of unit modulus");
    }
    double chi = std::fmod(std::arg(det) / 4, kPi / 2);
    if (chi < 0) {
        chi += kPi / 2;
    }
    if (kPi / 2 - chi < 1e-12) {
        chi = 0.0;
    }
    ComplexMatrix4 v = u * std::polar(1.0, -chi);
    return {GateMatrix(v), PhaseAngle{chi}};
}

bool locally_equivalent(const GateMatrix &u, const GateMatrix &v, double tol) {
    const auto gu = makhlin_invariants(u).as_array();
    const auto gv = makhlin_invariants(v).as_array();
    double d = 0.0;
    for (std::size_t i = 0; i < 3; i++) {
        d = std::max(d, std::abs(gu[i] - gv[i]));
    }
    return d <= tol;
}

}  // namespace su4geom
