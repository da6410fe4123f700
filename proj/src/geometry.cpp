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

#include "su4geom/geometry.hpp"

#include <cmath>
#include <string>

#include "su4geom/error.hpp"

namespace su4geom {

namespace {

// sin(a + b) sin(a - b) = sin^2 a - sin^2 b
double weyl_product(double c1, double c2, double c3) {
    const double s1 = std::sin(c1), s2 = std::sin(c2), s3 = std::sin(c3);
    const double q1 = s1 * s1, q2 = s2 * s2, q3 = s3 * s3;
    return (q1 - q2) * (q1 - q3) * (q2 - q3);
}

double spherical_factor(const Su2Params &v) {
    const double s = std::sin(v.alpha / 2);
    return s * s * std::sin(v.theta);
}

void add_su2_block(MetricTensor15 &g, int offset, const Su2Params &v) {
    const double s = std::sin(v.alpha / 2);
    const double st = std::sin(v.theta);
    g(offset, offset) += 1.0;
    g(offset + 1, offset + 1) += 4 * s * s;
    g(offset + 2, offset + 2) += 4 * s * s * st * st;
}

// Adds -w_i (P_i (x) Q_i + Q_i (x) P_i) for each axis i to the (p, q) blocks.
void add_cross_block(MetricTensor15 &g, int p_off, const Matrix3 &p, int q_off, const Matrix3 &q,
                     const Eigen::Vector3d &w) {
    Matrix3 block = Matrix3::Zero();
    for (int i = 0; i < 3; i++) {
        block -= w[i] * p.row(i).transpose() * q.row(i);
    }
    g.block<3, 3>(p_off, q_off) += block;
    g.block<3, 3>(q_off, p_off) += block.transpose();
}

std::array<Su2Params, 4> su2_parts(const FullCoords &x) {
    return {x.a1, x.b1, x.a2, x.b2};
}

}  // namespace

Matrix3 zeta_frame(const Su2Params &v) {
    const double s = std::sin(v.alpha / 2), c = std::cos(v.alpha / 2);
    const double st = std::sin(v.theta), ct = std::cos(v.theta);
    const double sp = std::sin(v.phi), cp = std::cos(v.phi);
    Matrix3 z;
    z << st * cp, 2 * s * (s * sp + c * ct * cp), 2 * s * st * (s * ct * cp - c * sp),  //
        st * sp, 2 * s * (-s * cp + c * ct * sp), 2 * s * st * (s * ct * sp + c * cp),  //
        ct, -2 * s * c * st, -2 * s * s * st * st;
    return z;
}

Matrix3 zeta_frame_reversed(const Su2Params &v) {
    Matrix3 z = zeta_frame(Su2Params{-v.alpha, v.theta, v.phi});
    z.col(0) *= -1.0;
    return z;
}

MetricTensor15 metric_tensor(const FullCoords &x) {
    MetricTensor15 g = MetricTensor15::Zero();
    const auto parts = su2_parts(x);
    for (int b = 0; b < 4; b++) {
        add_su2_block(g, 3 * b, parts[b]);
    }
    for (int i = 12; i < 15; i++) {
        g(i, i) = 1.0;
    }

    const double k1 = std::cos(x.c.c1), k2 = std::cos(x.c.c2), k3 = std::cos(x.c.c3);
    const double s1 = std::sin(x.c.c1), s2 = std::sin(x.c.c2), s3 = std::sin(x.c.c3);
    const Eigen::Vector3d w_cos{k2 * k3, k1 * k3, k1 * k2};
    const Eigen::Vector3d w_sin{s2 * s3, s1 * s3, s1 * s2};

    const Matrix3 za1 = zeta_frame(x.a1), zb1 = zeta_frame(x.b1);
    const Matrix3 za2 = zeta_frame_reversed(x.a2), zb2 = zeta_frame_reversed(x.b2);
    add_cross_block(g, 0, za1, 6, za2, w_cos);
    add_cross_block(g, 3, zb1, 9, zb2, w_cos);
    add_cross_block(g, 0, za1, 9, zb2, w_sin);
    add_cross_block(g, 3, zb1, 6, za2, w_sin);
    return g;
}

MetricTensor16 metric_tensor_u4(const FullCoords &x) {
    MetricTensor16 g = MetricTensor16::Zero();
    g.topLeftCorner<15, 15>() = metric_tensor(x);
    g(15, 15) = 4.0;
    return g;
}

double det_g_closed(const FullCoords &x) {
    double f = 256.0 * weyl_product(x.c.c1, x.c.c2, x.c.c3);
    for (const auto &v : su2_parts(x)) {
        f *= spherical_factor(v);
    }
    return f * f;
}

double weyl_density(double c1, double c2, double c3, DensityForm form) {
    if (form == DensityForm::abs_product) {
        return (48.0 / kPi) * std::abs(weyl_product(c1, c2, c3));
    }
    const double a1 = std::cos(2 * c1), a2 = std::cos(2 * c2), a3 = std::cos(2 * c3);
    const double b1 = std::cos(4 * c1), b2 = std::cos(4 * c2), b3 = std::cos(4 * c3);
    return (3.0 / kPi) * (a1 * b2 + a2 * b3 + a3 * b1 - b1 * a2 - b2 * a3 - b3 * a1);
}

double weyl_density(const CanonicalCoords &c, DensityForm form) {
    return weyl_density(c.c1, c.c2, c.c3, form);
}

double su2_density(const Su2Params &v) {
    return std::abs(spherical_factor(v)) / (8 * kPi * kPi);
}

double full_haar_density(const FullCoords &x) {
    double f = 3.0 / (256.0 * std::pow(kPi, 9)) * weyl_product(x.c.c1, x.c.c2, x.c.c3);
    for (const auto &v : su2_parts(x)) {
        f *= spherical_factor(v);
    }
    return std::abs(f);
}

double full_haar_density_u4(const FullCoords &x) {
    return (2.0 / kPi) * full_haar_density(x);
}

double makhlin_density(const LocalInvariants &g) {
    const double rho = g.rho();
    if (rho == 0.0) {
        throw SingularityError("makhlin_density: density is singular on the g3 axis");
    }
    return (3.0 / kPi) / rho;
}

Matrix3 jacobian(double c1, double c2, double c3) {
    const std::array<double, 3> c{c1, c2, c3};
    Matrix3 j;
    for (int i = 0; i < 3; i++) {
        const int a = (i + 1) % 3, b = (i + 2) % 3;
        const double s = std::sin(2 * c[i]);
        j(0, i) = -0.5 * (1 + std::cos(2 * c[a]) * std::cos(2 * c[b])) * s;
        j(1, i) = 0.5 * std::cos(2 * c[i]) * std::sin(2 * c[a]) * std::sin(2 * c[b]);
        j(2, i) = -2 * s;
    }
    return j;
}

Matrix3 jacobian(const CanonicalCoords &c) {
    return jacobian(c.c1, c.c2, c.c3);
}

Matrix3 jjt_closed(const LocalInvariants &g) {
    const double rho = g.rho();
    const double g1 = g.g1, g2 = g.g2, g3 = g.g3;
    Matrix3 m;
    m << rho - 4 * g1 * g1 + 2 * g2 * g2 + g1 * g3, g2 * g3 - 6 * g1 * g2, 6 * rho - 2 * g1 * g3,  //
        g2 * g3 - 6 * g1 * g2, rho + 2 * g1 * g1 - 4 * g2 * g2 - g1 * g3, -2 * g2 * g3,          //
        6 * rho - 2 * g1 * g3, -2 * g2 * g3, 16 * rho + 2 - 2 * g3 * g3;
    return 2.0 * m;
}

Matrix3 invariant_space_metric(const LocalInvariants &g) {
    const Matrix3 m = jjt_closed(g);
    Eigen::FullPivLU<Matrix3> lu(m);
    if (!lu.isInvertible() || std::abs(m.determinant()) < 1e-300) {
        throw SingularityError("invariant_space_metric: J J^T is singular at this point");
    }
    return lu.inverse();
}

namespace {

ComplexMatrix4 gate_at(std::array<double, 15> x) {
    return assemble(FullCoords::from_flat(x)).matrix();
}

void check_frame_domain(const FullCoords &x, double h) {
    if (!(h > 0.0)) {
        throw ArgumentError("finite-difference step must be positive");
    }
    for (const auto &v : su2_parts(x)) {
        if (std::abs(std::sin(v.alpha / 2)) < kFrameSingularRadius ||
            std::abs(std::sin(v.theta)) < kFrameSingularRadius) {
            throw DomainError("frame_finite_difference: point is at a coordinate singularity");
        }
    }
}

template <class Visit>
void for_each_tangent(const FullCoords &x, double h, Visit visit) {
    const auto base = x.flatten();
    const ComplexMatrix4 u_inv = gate_at(base).adjoint();
    for (int mu = 0; mu < 15; mu++) {
        auto xp = base, xm = base;
        xp[mu] += h;
        xm[mu] -= h;
        ComplexMatrix4 du = (gate_at(xp) - gate_at(xm)) * Complex{1.0 / (2 * h)};
        visit(mu, u_inv * du);
    }
}

}  // namespace

Frame15 frame_finite_difference(const FullCoords &x, double h) {
    check_frame_domain(x, h);
    Frame15 e;
    double residue = 0.0;
    for_each_tangent(x, h, [&](int mu, const ComplexMatrix4 &theta) {
        for (int a = 0; a < kGeneratorCount; a++) {
            const Complex v = Complex{0, 1} * (generator(GeneratorIndex::from_flat(a)) * theta).trace();
            e(a, mu) = v.real();
            residue = std::max(residue, std::abs(v.imag()));
        }
    });
    if (residue > 10 * h * h) {
        throw ConsistencyError("frame_finite_difference: imaginary residue " + std::to_string(residue));
    }
    return e;
}

TangentClosure tangent_closure(const FullCoords &x, double h) {
    check_frame_domain(x, h);
    TangentClosure out;
    for_each_tangent(x, h, [&](int, const ComplexMatrix4 &theta) {
        out.anti_hermitian_defect = std::max(out.anti_hermitian_defect, (theta + theta.adjoint()).max_abs());
        out.trace_defect = std::max(out.trace_defect, std::abs(theta.trace()));
    });
    return out;
}

}  // namespace su4geom
