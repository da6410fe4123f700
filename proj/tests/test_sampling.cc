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

#include <cmath>
#include <numeric>

#include "su4geom/error.hpp"
#include "su4geom/invariants.hpp"
#include "su4geom/sampling.hpp"
#include "su4geom/stats.hpp"
#include "su4geom/volumes.hpp"

namespace su4geom {
namespace {

struct MeanSe {
    double mean;
    double se;
};

MeanSe mean_and_se(const std::vector<double> &x) {
    const double n = static_cast<double>(x.size());
    const double m = std::accumulate(x.begin(), x.end(), 0.0) / n;
    double v = 0.0;
    for (const double xi : x) {
        v += (xi - m) * (xi - m);
    }
    return {m, std::sqrt(v / (n - 1) / n)};
}

TEST(PhiloxTest, KnownAnswerVectors) {
    using C = Philox4x32::Counter;
    EXPECT_EQ(Philox4x32::block({0, 0, 0, 0}, {0, 0}), (C{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
    EXPECT_EQ(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
              (C{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
    EXPECT_EQ(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (C{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(RandomStreamTest, ReproducibleAndDistinctStreams) {
    RandomStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
    for (int i = 0; i < 100; i++) {
        const std::uint64_t x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        EXPECT_NE(x, c.next_u64());
        EXPECT_NE(x, d.next_u64());
    }
    const RandomStream s(1, 0);
    EXPECT_EQ(s.split(0).seed(), s.seed());
    EXPECT_NE(s.split(0).stream_index(), s.split(1).stream_index());
    RandomStream s0 = s.split(5), s1 = s.split(5);
    EXPECT_EQ(s0.uniform(), s1.uniform());
}

TEST(RandomStreamTest, UniformAndNormalMoments) {
    RandomStream r(5, 0);
    std::vector<double> u, z, z2;
    for (int i = 0; i < 200000; i++) {
        const double x = r.uniform();
        ASSERT_GE(x, 0.0);
        ASSERT_LT(x, 1.0);
        u.push_back(x);
        const double n = r.normal();
        z.push_back(n);
        z2.push_back(n * n);
    }
    const auto mu = mean_and_se(u), mz = mean_and_se(z), mz2 = mean_and_se(z2);
    EXPECT_LE(std::abs(mu.mean - 0.5), 3 * mu.se);
    EXPECT_LE(std::abs(mz.mean), 3 * mz.se);
    EXPECT_LE(std::abs(mz2.mean - 1.0), 3 * mz2.se);
}

TEST(AlphaInverseCdfTest, InvertsTheCdf) {
    for (int i = 0; i <= 1000; i++) {
        const double u = i / 1000.0;
        const double a = alpha_inverse_cdf(u);
        EXPECT_NEAR((a - std::sin(a)) / (4 * kPi), u, 1e-12);
    }
    EXPECT_EQ(alpha_inverse_cdf(0.0), 0.0);
    EXPECT_NEAR(alpha_inverse_cdf(1.0), 4 * kPi, 1e-12);
    EXPECT_THROW(alpha_inverse_cdf(1.5), ArgumentError);
}

TEST(Su2SamplingTest, AnglesFollowTheHaarDensity) {
    RandomStream r(6, 0);
    std::vector<double> alpha, cos_theta, phi;
    for (int i = 0; i < 1000000; i++) {
        const Su2Params v = sample_su2_params(r);
        if (alpha.size() < 100000) {
            alpha.push_back(v.alpha);
        }
        cos_theta.push_back(std::cos(v.theta));
        phi.push_back(v.phi);
    }
    const auto ct = mean_and_se(cos_theta), ph = mean_and_se(phi);
    EXPECT_LE(std::abs(ct.mean), 3 * ct.se);
    EXPECT_LE(std::abs(ph.mean - kPi), 3 * ph.se);
    const double d = ks_statistic(alpha, [](double a) { return (a - std::sin(a)) / (4 * kPi); });
    EXPECT_LT(d, ks_critical_value(0.01, alpha.size()));
}

TEST(ChamberSamplingTest, AcceptanceRatePointsInChamberAndPeFraction) {
    RandomStream r(7, 0);
    const int n = 1000000;
    std::uint64_t proposals = 0;
    int pe = 0;
    for (int i = 0; i < n; i++) {
        const CanonicalCoords c = sample_weyl_chamber(r, &proposals);
        ASSERT_TRUE(c.in_chamber(0.0));
        pe += is_perfect_entangler(c);
    }
    const double acc = static_cast<double>(n) / static_cast<double>(proposals);
    const double want = 2 / (kPi * kPi);
    EXPECT_LE(std::abs(acc - want), 3 * std::sqrt(want * (1 - want) / static_cast<double>(proposals)) / want * acc);
    const double p = kPerfectEntanglerVolume;
    EXPECT_LE(std::abs(pe / static_cast<double>(n) - p), 3 * std::sqrt(p * (1 - p) / n));
}

TEST(GateSamplingTest, SamplesAreSpecialUnitary) {
    RandomStream r(8, 0);
    for (const auto method : {SamplingMethod::matrix_oracle, SamplingMethod::coordinate_density}) {
        for (int i = 0; i < 2000; i++) {
            const GateMatrix u = sample_gate(r, method);
            ASSERT_LE(u.unitarity_defect(), 1e-10);
            ASSERT_LE(std::abs(u.det() - 1.0), 1e-10);
        }
    }
}

TEST(GateSamplingTest, OraclePerfectEntanglerFraction) {
    const auto cs = sample_classes(1000000, {9, 1, SamplingMethod::matrix_oracle});
    int pe = 0;
    for (const auto &c : cs) {
        pe += is_perfect_entangler(c);
    }
    const double p = kPerfectEntanglerVolume;
    EXPECT_LE(std::abs(pe / 1e6 - p), 3 * std::sqrt(p * (1 - p) / 1e6));
}

std::vector<double> g3_values(SamplingMethod method, std::uint64_t seed, int n) {
    std::vector<double> out(n);
    for_each_gate(n, {seed, 1, method}, [&](std::uint64_t i, const GateMatrix &u) { out[i] = makhlin_invariants(u).g3; });
    return out;
}

TEST(GateSamplingTest, MethodsAgreeOnG3Distribution) {
    const int n = 100000;
    const auto a = g3_values(SamplingMethod::matrix_oracle, 10, n);
    const auto b = g3_values(SamplingMethod::coordinate_density, 11, n);
    EXPECT_LT(ks_statistic_two_sample(a, b), ks_critical_value_two_sample(0.01, n, n));
}

TEST(GateSamplingTest, TraceDistributionIsBiInvariant) {
    const int n = 50000;
    RandomStream r(12, 0);
    const ComplexMatrix4 v = sample_gate(r, SamplingMethod::matrix_oracle).matrix();
    const ComplexMatrix4 w = sample_gate(r, SamplingMethod::matrix_oracle).matrix();
    std::vector<double> plain, moved;
    for (int i = 0; i < n; i++) {
        const ComplexMatrix4 u = sample_gate(r, SamplingMethod::matrix_oracle).matrix();
        plain.push_back(std::abs(u.trace()));
        const ComplexMatrix4 u2 = sample_gate(r, SamplingMethod::matrix_oracle).matrix();
        moved.push_back(std::abs((v * u2 * w.adjoint()).trace()));
    }
    EXPECT_LT(ks_statistic_two_sample(plain, moved), ks_critical_value_two_sample(0.01, n, n));
}

TEST(SamplerConfigTest, ZeroWorkersRejected) {
    EXPECT_THROW((SamplerConfig{1, 0, SamplingMethod::matrix_oracle}.validate()), ArgumentError);
    EXPECT_THROW(sample_classes(10, {1, 0, SamplingMethod::matrix_oracle}), ArgumentError);
}

TEST(SamplerConfigTest, ReproducibleForAnyWorkerCount) {
    for (const auto method : {SamplingMethod::matrix_oracle, SamplingMethod::coordinate_density}) {
        const auto a = sample_classes(10000, {77, 1, method});
        const auto b = sample_classes(10000, {77, 1, method});
        const auto c = sample_classes(10000, {77, 4, method});
        ASSERT_EQ(a.size(), 10000u);
        for (std::size_t i = 0; i < a.size(); i++) {
            ASSERT_EQ(a[i].as_array(), b[i].as_array());
            ASSERT_EQ(a[i].as_array(), c[i].as_array());
        }
        EXPECT_NE(a[0].as_array(), sample_classes(1, {78, 1, method})[0].as_array());
    }
}

TEST(SamplerConfigTest, PrefixIsStableAcrossLengths) {
    const auto shorter = sample_classes(5000, {3, 2, SamplingMethod::matrix_oracle});
    const auto longer = sample_classes(9000, {3, 2, SamplingMethod::matrix_oracle});
    for (std::size_t i = 0; i < shorter.size(); i++) {
        ASSERT_EQ(shorter[i].as_array(), longer[i].as_array());
    }
}

TEST(SampleBlocksTest, WorkerExceptionsPropagate) {
    EXPECT_THROW(run_sample_blocks(10000, {1, 2, SamplingMethod::matrix_oracle},
                                   [](std::uint64_t block, std::uint64_t, std::uint64_t, RandomStream &) {
                                       if (block == 1) {
                                           throw ConsistencyError("boom");
                                       }
                                   }),
                 ConsistencyError);
}

}  // namespace
}  // namespace su4geom
