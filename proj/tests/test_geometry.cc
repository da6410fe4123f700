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

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "su4geom/error.hpp"
#include "su4geom/geometry.hpp"
#include "su4geom/invariants.hpp"
#include "su4geom/quadrature.hpp"
#include "support.hpp"

namespace su4geom {
namespace {

// zeta^j_mu = i tr(sigma_j k^{-1} d_mu k), by central differences of su2_factor.
Matrix3 zeta_by_differences(const Su2Params &v, double h = 1e-6) {
    Matrix3 z;
    const Matrix2 k_inv = su2_factor(v).adjoint();
    for (int mu = 0; mu < 3; mu++) {
        Su2Params p = v, m = v;
        double *pp[] = {&p.alpha, &p.theta, &p.phi};
        double *mm[] = {&m.alpha, &m.theta, &m.phi};
        *pp[mu] += h;
        *mm[mu] -= h;
        const Matrix2 dk = (su2_factor(p) - su2_factor(m)) * Complex{1.0 / (2 * h)};
        for (int j = 0; j < 3; j++) {
            z(j, mu) = (Complex{0, 1} * (pauli(static_cast<Pauli>(j + 1)) * k_inv * dk).trace()).real();
        }
    }
    return z;
}

TEST(ZetaFrameTest, MatchesMaurerCartanFormOfSu2Factor) {
    auto rng = testing::test_stream(30);
    for (int i = 0; i < 50; i++) {
        const Su2Params v = testing::regular_su2(rng);
        EXPECT_LT((zeta_frame(v) - zeta_by_differences(v)).cwiseAbs().maxCoeff(), 1e-8);
    }
    const Su2Params special{kPi, kPi / 2, 0.0};
    EXPECT_LT((zeta_frame(special) - zeta_by_differences(special)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(ZetaFrameTest, SmallAlphaLimit) {
    const double theta = 0.8;
    const Matrix3 z = zeta_frame({1e-9, theta, 0.4});
    EXPECT_NEAR(z(2, 0), std::cos(theta), 1e-12);
    EXPECT_LT(std::abs(z(2, 1)) + std::abs(z(2, 2)), 1e-8);
}

TEST(ZetaFrameTest, GramIsSu2LengthElement) {
    auto rng = testing::test_stream(31);
    for (int i = 0; i < 200; i++) {
        const Su2Params v = testing::any_su2(rng);
        const double s2 = std::pow(std::sin(v.alpha / 2), 2);
        Matrix3 want = Matrix3::Zero();
        want.diagonal() << 1.0, 4 * s2, 4 * s2 * std::pow(std::sin(v.theta), 2);
        const Matrix3 z = zeta_frame(v);
        EXPECT_LT((z.transpose() * z - want).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(MetricTensorTest, SymmetricPositiveSemidefiniteWithFlatChamberBlock) {
    auto rng = testing::test_stream(32);
    for (int i = 0; i < 1000; i++) {
        FullCoords x{testing::any_su2(rng), testing::any_su2(rng), testing::any_su2(rng), testing::any_su2(rng),
                     testing::interior_point(rng, 0.0)};
        const MetricTensor15 g = metric_tensor(x);
        ASSERT_LT((g - g.transpose()).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_GE(Eigen::SelfAdjointEigenSolver<MetricTensor15>(g).eigenvalues().minCoeff(), -1e-9);
        EXPECT_TRUE((g.bottomRightCorner<3, 3>() == Matrix3::Identity()));
        EXPECT_TRUE((g.block<12, 3>(0, 12).isZero(0.0)));
    }
}

TEST(MetricTensorTest, DeterminantMatchesClosedForm) {
    auto rng = testing::test_stream(33);
    double worst = 0.0;
    for (int i = 0; i < 100; i++) {
        const FullCoords x = testing::regular_coords(rng);
        const double closed = det_g_closed(x);
        worst = std::max(worst, std::abs(metric_tensor(x).determinant() - closed) / closed);
    }
    EXPECT_LE(worst, 1e-8);
}

TEST(MetricTensorTest, ClosedDeterminantVanishesOnDegenerateCoordinates) {
    auto rng = testing::test_stream(34);
    FullCoords x = testing::regular_coords(rng);
    x.c.c2 = x.c.c1;
    EXPECT_EQ(det_g_closed(x), 0.0);
    x = testing::regular_coords(rng);
    x.a1.alpha = 0.0;
    EXPECT_EQ(det_g_closed(x), 0.0);
    EXPECT_GT(det_g_closed(testing::regular_coords(rng)), 0.0);
}

TEST(MetricTensorTest, U4ExtensionAddsPhaseDirection) {
    auto rng = testing::test_stream(35);
    const FullCoords x = testing::regular_coords(rng);
    const MetricTensor16 g = metric_tensor_u4(x);
    EXPECT_EQ(g(15, 15), 4.0);
    EXPECT_TRUE((g.topLeftCorner<15, 15>() == metric_tensor(x)));
    EXPECT_NEAR(full_haar_density_u4(x), 2 / kPi * full_haar_density(x), 1e-300);
}

TEST(WeylDensityTest, Examples) {
    EXPECT_NEAR(weyl_density(kPi / 2, kPi / 4, 0), 12 / kPi, 1e-14);
    EXPECT_EQ(weyl_density(0, 0, 0), 0.0);
    EXPECT_NEAR(weyl_density(0.9, 0.9, 0.3), 0.0, 1e-15);
    EXPECT_DOUBLE_EQ(kWeylDensityMax, 12 / kPi);
}

TEST(WeylDensityTest, FormsAgreeOnChamberGrid) {
    const int n = 50;
    double worst = 0.0;
    for (int i = 0; i <= n; i++) {
        for (int j = 0; j <= n; j++) {
            for (int k = 0; k <= n; k++) {
                const CanonicalCoords c{kPi * i / n, kPi / 2 * j / n, kPi / 2 * k / n};
                if (!c.in_chamber(0.0)) {
                    continue;
                }
                worst = std::max(worst, std::abs(weyl_density(c) - weyl_density(c, DensityForm::cosine)));
            }
        }
    }
    EXPECT_LE(worst, 1e-12);
}

TEST(WeylDensityTest, AbsoluteProductIsNonnegativeEverywhere) {
    auto rng = testing::test_stream(36);
    for (int i = 0; i < 1000; i++) {
        EXPECT_GE(weyl_density(10 * rng.uniform() - 5, 10 * rng.uniform() - 5, 10 * rng.uniform() - 5), 0.0);
    }
}

TEST(WeylDensityTest, IntegratesToOneOverChamber) {
    QuadratureOptions o;
    o.resolution = 200;
    o.reference_extent = Point3{kPi, kPi / 2, kPi / 2};
    const auto q = integrate_polytope(weyl_chamber_polytope(), [](double a, double b, double c) { return weyl_density(a, b, c); }, o);
    EXPECT_NEAR(q.value, 1.0, 1e-6);
}

TEST(Su2DensityTest, Examples) {
    EXPECT_EQ(su2_density({0.0, 1.0, 1.0}), 0.0);
    EXPECT_NEAR(su2_density({kPi, kPi / 2, 0.3}), 1 / (8 * kPi * kPi), 1e-16);
}

TEST(Su2DensityTest, IntegratesToOne) {
    // phi does not enter; integrate over (alpha, theta) and multiply by 2 pi.
    const auto inner = [](double alpha) {
        return simpson([alpha](double theta) { return su2_density({alpha, theta, 0.0}); }, 0.0, kPi, 400);
    };
    EXPECT_NEAR(2 * kPi * simpson(inner, 0.0, 4 * kPi, 800), 1.0, 1e-8);
}

TEST(FullHaarDensityTest, FactorisesAndIsProportionalToRootDetG) {
    auto rng = testing::test_stream(37);
    double ratio0 = 0.0, spread = 0.0;
    for (int i = 0; i < 100; i++) {
        const FullCoords x = testing::regular_coords(rng);
        const double prod = su2_density(x.a1) * su2_density(x.b1) * su2_density(x.a2) * su2_density(x.b2) * weyl_density(x.c);
        EXPECT_NEAR(full_haar_density(x) / prod, 1.0, 1e-12);
        const double ratio = full_haar_density(x) / std::sqrt(det_g_closed(x));
        if (i == 0) {
            ratio0 = ratio;
        }
        spread = std::max(spread, std::abs(ratio / ratio0 - 1));
    }
    EXPECT_LT(spread, 1e-8);
    FullCoords y = testing::regular_coords(rng);
    y.b2.theta = 0.0;
    EXPECT_EQ(full_haar_density(y), 0.0);
}

TEST(MakhlinDensityTest, Examples) {
    EXPECT_NEAR(makhlin_density({1, 0, 3}), 3 / kPi, 1e-15);
    EXPECT_NEAR(makhlin_density({0, 0.25, 0}), 12 / kPi, 1e-14);
    EXPECT_THROW(makhlin_density({0, 0, 0.5}), SingularityError);
}

TEST(MakhlinDensityTest, ChangeOfVariables) {
    auto rng = testing::test_stream(38);
    double worst = 0.0;
    for (int i = 0; i < 1000; i++) {
        const CanonicalCoords c = testing::interior_point(rng, 1e-3);
        const double rhs = makhlin_density(g_from_c(c)) * std::abs(jacobian(c).determinant());
        worst = std::max(worst, std::abs(weyl_density(c) - rhs));
    }
    EXPECT_LE(worst, 1e-8);
}

TEST(JacobianTest, MatchesCentralDifferences) {
    auto rng = testing::test_stream(39);
    const double h = 1e-5;
    for (int n = 0; n < 100; n++) {
        const CanonicalCoords c = testing::interior_point(rng, 0.0);
        const Matrix3 j = jacobian(c);
        for (int i = 0; i < 3; i++) {
            auto cp = c.as_array(), cm = c.as_array();
            cp[i] += h;
            cm[i] -= h;
            const auto gp = g_from_c(cp[0], cp[1], cp[2]).as_array(), gm = g_from_c(cm[0], cm[1], cm[2]).as_array();
            for (int r = 0; r < 3; r++) {
                EXPECT_NEAR(j(r, i), (gp[r] - gm[r]) / (2 * h), 1e-9);
            }
            EXPECT_DOUBLE_EQ(j(2, i), -2 * std::sin(2 * c.as_array()[i]));
        }
    }
    EXPECT_EQ(jacobian(0, 0, 0), Matrix3::Zero());
}

TEST(JacobianTest, JJTClosedForm) {
    auto rng = testing::test_stream(40);
    for (int i = 0; i < 1000; i++) {
        const CanonicalCoords c = testing::interior_point(rng, 0.0);
        const LocalInvariants g = g_from_c(c);
        const Matrix3 j = jacobian(c);
        const Matrix3 closed = jjt_closed(g);
        EXPECT_LT((j * j.transpose() - closed).cwiseAbs().maxCoeff(), 1e-9);
        EXPECT_EQ(closed, closed.transpose());
        EXPECT_NEAR(closed(2, 2), 2 * (16 * g.rho() + 2 - 2 * g.g3 * g.g3), 1e-12);
    }
}

TEST(JacobianTest, InvariantSpaceMetricInvertsJJT) {
    auto rng = testing::test_stream(41);
    const LocalInvariants g = g_from_c(testing::interior_point(rng, 0.05));
    EXPECT_LT((invariant_space_metric(g) * jjt_closed(g) - Matrix3::Identity()).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(FrameTest, GramMatchesMetricAndDeterminantMatchesRootDetG) {
    auto rng = testing::test_stream(42);
    for (int i = 0; i < 20; i++) {
        const FullCoords x = testing::regular_coords(rng);
        const Frame15 e = frame_finite_difference(x);
        const MetricTensor15 g = metric_tensor(x);
        EXPECT_LT((e.transpose() * e - g).cwiseAbs().maxCoeff(), 1e-6);
        EXPECT_NEAR(std::abs(e.determinant()) / std::sqrt(det_g_closed(x)), 1.0, 1e-4);
    }
}

TEST(FrameTest, TangentVectorsAreAntiHermitianTraceless) {
    auto rng = testing::test_stream(43);
    const TangentClosure t = tangent_closure(testing::regular_coords(rng));
    EXPECT_LT(t.anti_hermitian_defect, 1e-8);
    EXPECT_LT(t.trace_defect, 1e-8);
}

TEST(FrameTest, SingularPointsAreRejected) {
    auto rng = testing::test_stream(44);
    FullCoords x = testing::regular_coords(rng);
    x.a2.theta = 1e-4;
    EXPECT_THROW(frame_finite_difference(x), DomainError);
    EXPECT_THROW(frame_finite_difference(testing::regular_coords(rng), 0.0), ArgumentError);
}

}  // namespace
}  // namespace su4geom
