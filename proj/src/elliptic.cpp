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

#include "su4geom/elliptic.hpp"

#include <cmath>

#include "su4geom/error.hpp"
#include "su4geom/gate_algebra.hpp"

namespace su4geom {

namespace {

constexpr double kAgmTol = 1e-14;

struct AgmResult {
    double mean;
    // sum over n >= 0 of 2^(n-1) c_n^2
    double weighted_c2;
};

AgmResult agm(double k) {
    double a = 1.0;
    double b = std::sqrt((1.0 - k) * (1.0 + k));
    double c = k;
    double pow2 = 0.5;
    double sum = pow2 * c * c;
    for (int it = 0; it < 64 && std::abs(c) > kAgmTol * a; it++) {
        const double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        sum += pow2 * c * c;
    }
    return {a, sum};
}

void check_modulus(double k, bool allow_one) {
    if (!std::isfinite(k) || k < 0.0 || k > 1.0 || (k == 1.0 && !allow_one)) {
        throw DomainError("elliptic modulus out of range");
    }
}

}  // namespace

double elliptic_K(double k) {
    check_modulus(k, false);
    return kPi / (2.0 * agm(k).mean);
}

double elliptic_E(double k) {
    check_modulus(k, true);
    if (k == 1.0) {
        return 1.0;
    }
    const auto r = agm(k);
    return kPi / (2.0 * r.mean) * (1.0 - r.weighted_c2);
}

}  // namespace su4geom
