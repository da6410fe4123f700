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

// Shared helpers for the unit tests: seeded random coordinates and matrix norms.

#ifndef SU4GEOM_TESTS_SUPPORT_HPP
#define SU4GEOM_TESTS_SUPPORT_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>

#include "su4geom/gate_algebra.hpp"
#include "su4geom/matrix.hpp"
#include "su4geom/sampling.hpp"

namespace su4geom::testing {

inline RandomStream test_stream(std::uint64_t salt) {
    return RandomStream(0x5eed0000u + salt, 0);
}

// Uniform point in the chamber whose four face inequalities all have slack > margin.
inline CanonicalCoords interior_point(RandomStream &rng, double margin) {
    while (true) {
        const CanonicalCoords c{kPi * rng.uniform(), kPi / 2 * rng.uniform(), kPi / 2 * rng.uniform()};
        if (c.c3 > margin && c.c2 - c.c3 > margin && c.c1 - c.c2 > margin && kPi - c.c1 - c.c2 > margin) {
            return c;
        }
    }
}

inline Su2Params any_su2(RandomStream &rng) {
    return {4 * kPi * rng.uniform(), kPi * rng.uniform(), 2 * kPi * rng.uniform()};
}

// Keeps every spherical sine factor above margin so frames and metrics are nonsingular.
inline Su2Params regular_su2(RandomStream &rng, double margin = 0.05) {
    Su2Params v;
    do {
        v.alpha = 4 * kPi * rng.uniform();
    } while (std::abs(std::sin(v.alpha / 2)) < margin);
    v.theta = margin + (kPi - 2 * margin) * rng.uniform();
    v.phi = 2 * kPi * rng.uniform();
    return v;
}

inline FullCoords regular_coords(RandomStream &rng) {
    return {regular_su2(rng), regular_su2(rng), regular_su2(rng), regular_su2(rng), interior_point(rng, 0.05)};
}

inline ComplexMatrix4 random_local(RandomStream &rng) {
    return local_gate(any_su2(rng), any_su2(rng));
}

template <std::size_t N>
double max_abs_diff(const SquareMatrix<N> &a, const SquareMatrix<N> &b) {
    return (a - b).max_abs();
}

inline double max_abs_diff(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

}  // namespace su4geom::testing

#endif
