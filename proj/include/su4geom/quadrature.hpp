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

#ifndef SU4GEOM_QUADRATURE_HPP
#define SU4GEOM_QUADRATURE_HPP

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace su4geom {

using Point3 = std::array<double, 3>;

/// {x : normal . x <= offset}
struct HalfSpace {
    Point3 normal{};
    double offset = 0.0;

    double slack(const Point3 &x) const {
        return offset - (normal[0] * x[0] + normal[1] * x[1] + normal[2] * x[2]);
    }
    HalfSpace flipped() const {
        return {{-normal[0], -normal[1], -normal[2]}, -offset};
    }
};

/// Bounded convex polytope given as an intersection of half-spaces.
class ConvexPolytope {
   public:
    ConvexPolytope() = default;
    explicit ConvexPolytope(std::vector<HalfSpace> faces) : faces_(std::move(faces)) {
    }

    static ConvexPolytope box(const Point3 &lo, const Point3 &hi);

    ConvexPolytope intersected(const HalfSpace &h) const;
    ConvexPolytope intersected(const ConvexPolytope &other) const;

    const std::vector<HalfSpace> &faces() const {
        return faces_;
    }

    bool contains(const Point3 &x, double tol = 1e-12) const;

    /// Vertices found by intersecting face triples; duplicates merged.
    std::vector<Point3> vertices() const;

    /// True when the vertex set spans three dimensions.
    bool has_interior() const;

   private:
    std::vector<HalfSpace> faces_;
};

/// Closed Weyl chamber {0 <= c3 <= c2 <= c1, c1 + c2 <= pi}.
ConvexPolytope weyl_chamber_polytope();

/// Perfect-entangler polyhedron inside the chamber.
ConvexPolytope perfect_entangler_polytope();

/// Recursively cuts `poly` along each plane normal . x = offset; keeps cells with interior.
std::vector<ConvexPolytope> split_by_planes(const ConvexPolytope &poly, std::span<const HalfSpace> planes);

struct QuadratureOptions {
    /// Simpson panels per axis across the reference extent at the fine level.
    int resolution = 300;
    /// Worker threads; the result does not depend on this value.
    unsigned workers = 1;
    /// Per-axis reference lengths; defaults to the integration domain's bounding box.
    std::optional<Point3> reference_extent;
};

struct QuadratureEstimate {
    double value = 0.0;
    /// |S(n) - S(n/2)| / 15.
    double error = 0.0;
};

using Integrand3 = std::function<double(double, double, double)>;

/// Iterated composite Simpson over a convex polytope with Richardson extrapolation.
///
/// Each axis is split at the projections of the polytope's vertices (and of
/// its 2D slices), so the integrand only has to be smooth on the polytope.
QuadratureEstimate integrate_polytope(const ConvexPolytope &poly, const Integrand3 &f,
                                      const QuadratureOptions &opts = {});

/// Sum over cells sharing one reference extent (their joint bounding box unless given).
QuadratureEstimate integrate_polytopes(std::span<const ConvexPolytope> cells, const Integrand3 &f,
                                       const QuadratureOptions &opts = {});

/// Composite Simpson on [a, b] with n (even) panels.
double simpson(const std::function<double(double)> &f, double a, double b, int n);

}  // namespace su4geom

#endif
