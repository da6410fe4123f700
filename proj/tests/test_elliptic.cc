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

#include <boost/math/special_functions/ellint_1.hpp>
#include <boost/math/special_functions/ellint_2.hpp>

#include "su4geom/elliptic.hpp"
#include "su4geom/error.hpp"
#include "su4geom/gate_algebra.hpp"
#include "su4geom/quadrature.hpp"

namespace su4geom {
namespace {

TEST(EllipticTest, SpecialValues) {
    EXPECT_NEAR(elliptic_K(0.0), kPi / 2, 1e-15);
    EXPECT_NEAR(elliptic_E(0.0), kPi / 2, 1e-15);
    EXPECT_EQ(elliptic_E(1.0), 1.0);
}

TEST(EllipticTest, DomainErrors) {
    EXPECT_THROW(elliptic_K(1.0), DomainError);
    EXPECT_THROW(elliptic_K(-0.1), DomainError);
    EXPECT_THROW(elliptic_E(1.5), DomainError);
    EXPECT_THROW(elliptic_E(NAN), DomainError);
}

TEST(EllipticTest, AgreesWithBoostOnGrid) {
    for (int i = 0; i < 1000; i++) {
        const double k = i / 1000.0;
        EXPECT_NEAR(elliptic_K(k), boost::math::ellint_1(k), 1e-12) << k;
        EXPECT_NEAR(elliptic_E(k), boost::math::ellint_2(k), 1e-12) << k;
    }
    for (const double k : {0.999, 0.99999, 1 - 1e-9}) {
        EXPECT_NEAR(elliptic_K(k) / boost::math::ellint_1(k), 1.0, 1e-12) << k;
        EXPECT_NEAR(elliptic_E(k), boost::math::ellint_2(k), 1e-12) << k;
    }
}

TEST(EllipticTest, AgreesWithIntegralDefinitions) {
    const double k = 0.5;
    const double kq = simpson([k](double t) { return 1 / std::sqrt(1 - k * k * std::sin(t) * std::sin(t)); }, 0, kPi / 2, 200);
    const double eq = simpson([k](double t) { return std::sqrt(1 - k * k * std::sin(t) * std::sin(t)); }, 0, kPi / 2, 200);
    EXPECT_NEAR(elliptic_K(k), kq, 1e-10);
    EXPECT_NEAR(elliptic_E(k), eq, 1e-10);
}

}  // namespace
}  // namespace su4geom
