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

#include "su4geom/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "su4geom/error.hpp"
#include "su4geom/gate_algebra.hpp"

namespace su4geom {

namespace {

constexpr double kFeasTol = 1e-11;
constexpr double kMergeTol = 1e-12;

double dot(const Point3 &a, const Point3 &b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

double norm(const Point3 &a) {
    return std::sqrt(dot(a, a));
}

std::vector<double> unique_sorted(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
        if (out.empty() || x - out.back() > kMergeTol) {
            out.push_back(x);
        }
    }
    return out;
}

int panel_count(int resolution, double len, double ref, int level) {
    int base = 4 * static_cast<int>(std::ceil(resolution * len / (4.0 * ref)));
    base = std::max(base, 4);
    return base >> level;
}

template <class F>
double simpson_sum(F &&f, double a, double b, int n) {
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; i++) {
        acc += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
    }
    return acc * h / 3.0;
}

// Constraint a_y y + a_z z <= b in the slice at fixed x.
struct Line {
    double ay, az, b;
};

struct Slicer {
    const std::vector<HalfSpace> &faces;
    const Integrand3 &f;
    int resolution;
    Point3 ref;
    int level;

    double integrate_z(double x, double y, const std::vector<Line> &lines) const {
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (const auto &l : lines) {
            const double rhs = l.b - l.ay * y;
            if (std::abs(l.az) > 1e-14) {
                const double bound = rhs / l.az;
                if (l.az > 0) {
                    hi = std::min(hi, bound);
                } else {
                    lo = std::max(lo, bound);
                }
            } else if (rhs < -kFeasTol) {
                return 0.0;
            }
        }
        if (!(hi > lo)) {
            return 0.0;
        }
        const int n = panel_count(resolution, hi - lo, ref[2], level);
        return simpson_sum([&](double z) { return f(x, y, z); }, lo, hi, n);
    }

    double integrate_slice(double x) const {
        std::vector<Line> lines;
        lines.reserve(faces.size());
        for (const auto &h : faces) {
            lines.push_back({h.normal[1], h.normal[2], h.offset - h.normal[0] * x});
        }
        // Slice polygon vertices give the y breakpoints.
        std::vector<double> ys;
        for (std::size_t i = 0; i < lines.size(); i++) {
            for (std::size_t j = i + 1; j < lines.size(); j++) {
                const auto &p = lines[i];
                const auto &q = lines[j];
                const double det = p.ay * q.az - p.az * q.ay;
                if (std::abs(det) < 1e-14) {
                    continue;
                }
                const double y = (p.b * q.az - p.az * q.b) / det;
                const double z = (p.ay * q.b - p.b * q.ay) / det;
                bool ok = true;
                for (const auto &l : lines) {
                    if (l.ay * y + l.az * z > l.b + kFeasTol * (1 + std::abs(l.b))) {
                        ok = false;
                        break;
                    }
                }
                if (ok) {
                    ys.push_back(y);
                }
            }
        }
        ys = unique_sorted(std::move(ys));
        double total = 0.0;
        for (std::size_t k = 0; k + 1 < ys.size(); k++) {
            const double y0 = ys[k], y1 = ys[k + 1];
            const int n = panel_count(resolution, y1 - y0, ref[1], level);
            total += simpson_sum([&](double y) { return integrate_z(x, y, lines); }, y0, y1, n);
        }
        return total;
    }
};

double integrate_level(const ConvexPolytope &poly, const Integrand3 &f, int resolution, const Point3 &ref,
                       unsigned workers, int level) {
    const auto verts = poly.vertices();
    if (verts.size() < 4) {
        return 0.0;
    }
    std::vector<double> xs;
    for (const auto &v : verts) {
        xs.push_back(v[0]);
    }
    xs = unique_sorted(std::move(xs));

    // Flattened outer Simpson nodes and weights, summed in a fixed order.
    std::vector<double> nodes, weights;
    for (std::size_t k = 0; k + 1 < xs.size(); k++) {
        const double x0 = xs[k], x1 = xs[k + 1];
        const int n = panel_count(resolution, x1 - x0, ref[0], level);
        const double h = (x1 - x0) / n;
        for (int i = 0; i <= n; i++) {
            const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
            nodes.push_back(x0 + i * h);
            weights.push_back(w * h / 3.0);
        }
    }

    const Slicer slicer{poly.faces(), f, resolution, ref, level};
    std::vector<double> partial(nodes.size(), 0.0);
    auto job = [&](unsigned w, unsigned stride) {
        for (std::size_t i = w; i < nodes.size(); i += stride) {
            partial[i] = weights[i] * slicer.integrate_slice(nodes[i]);
        }
    };
    const unsigned width = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(nodes.size())));
    if (width == 1) {
        job(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < width; w++) {
            pool.emplace_back(job, w, width);
        }
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

Point3 extent_of(std::span<const ConvexPolytope> cells) {
    Point3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
              std::numeric_limits<double>::infinity()};
    Point3 hi{-lo[0], -lo[1], -lo[2]};
    for (const auto &c : cells) {
        for (const auto &v : c.vertices()) {
            for (int a = 0; a < 3; a++) {
                lo[a] = std::min(lo[a], v[a]);
                hi[a] = std::max(hi[a], v[a]);
            }
        }
    }
    Point3 ext{};
    for (int a = 0; a < 3; a++) {
        ext[a] = hi[a] > lo[a] ? hi[a] - lo[a] : 1.0;
    }
    return ext;
}

}  // namespace

ConvexPolytope ConvexPolytope::box(const Point3 &lo, const Point3 &hi) {
    std::vector<HalfSpace> f;
    for (int a = 0; a < 3; a++) {
        Point3 n{};
        n[a] = 1.0;
        f.push_back({n, hi[a]});
        n[a] = -1.0;
        f.push_back({n, -lo[a]});
    }
    return ConvexPolytope(std::move(f));
}

ConvexPolytope ConvexPolytope::intersected(const HalfSpace &h) const {
    auto f = faces_;
    f.push_back(h);
    return ConvexPolytope(std::move(f));
}

ConvexPolytope ConvexPolytope::intersected(const ConvexPolytope &other) const {
    auto f = faces_;
    f.insert(f.end(), other.faces_.begin(), other.faces_.end());
    return ConvexPolytope(std::move(f));
}

bool ConvexPolytope::contains(const Point3 &x, double tol) const {
    for (const auto &h : faces_) {
        if (h.slack(x) < -tol * std::max(1.0, norm(h.normal))) {
            return false;
        }
    }
    return true;
}

std::vector<Point3> ConvexPolytope::vertices() const {
    std::vector<Point3> out;
    const std::size_t m = faces_.size();
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = i + 1; j < m; j++) {
            for (std::size_t k = j + 1; k < m; k++) {
                const auto &a = faces_[i].normal, &b = faces_[j].normal, &c = faces_[k].normal;
                const Point3 bxc{b[1] * c[2] - b[2] * c[1], b[2] * c[0] - b[0] * c[2], b[0] * c[1] - b[1] * c[0]};
                const double det = dot(a, bxc);
                if (std::abs(det) < 1e-12) {
                    continue;
                }
                const Point3 cxa{c[1] * a[2] - c[2] * a[1], c[2] * a[0] - c[0] * a[2], c[0] * a[1] - c[1] * a[0]};
                const Point3 axb{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
                Point3 x{};
                for (int q = 0; q < 3; q++) {
                    x[q] = (faces_[i].offset * bxc[q] + faces_[j].offset * cxa[q] + faces_[k].offset * axb[q]) / det;
                }
                if (!contains(x, kFeasTol)) {
                    continue;
                }
                bool dup = false;
                for (const auto &y : out) {
                    if (std::abs(x[0] - y[0]) < 1e-10 && std::abs(x[1] - y[1]) < 1e-10 &&
                        std::abs(x[2] - y[2]) < 1e-10) {
                        dup = true;
                        break;
                    }
                }
                if (!dup) {
                    out.push_back(x);
                }
            }
        }
    }
    return out;
}

bool ConvexPolytope::has_interior() const {
    const auto v = vertices();
    if (v.size() < 4) {
        return false;
    }
    // Largest tetrahedron volume against the first vertex.
    double best = 0.0;
    for (std::size_t i = 1; i < v.size(); i++) {
        for (std::size_t j = i + 1; j < v.size(); j++) {
            for (std::size_t k = j + 1; k < v.size(); k++) {
                Point3 a{v[i][0] - v[0][0], v[i][1] - v[0][1], v[i][2] - v[0][2]};
                Point3 b{v[j][0] - v[0][0], v[j][1] - v[0][1], v[j][2] - v[0][2]};
                Point3 c{v[k][0] - v[0][0], v[k][1] - v[0][1], v[k][2] - v[0][2]};
                const Point3 bxc{b[1] * c[2] - b[2] * c[1], b[2] * c[0] - b[0] * c[2], b[0] * c[1] - b[1] * c[0]};
                best = std::max(best, std::abs(dot(a, bxc)));
            }
        }
    }
    return best > 1e-15;
}

ConvexPolytope weyl_chamber_polytope() {
    return ConvexPolytope({
        {{0, 0, -1}, 0.0},   // c3 >= 0
        {{0, -1, 1}, 0.0},   // c2 >= c3
        {{-1, 1, 0}, 0.0},   // c1 >= c2
        {{1, 1, 0}, kPi},    // c1 + c2 <= pi
    });
}

ConvexPolytope perfect_entangler_polytope() {
    return weyl_chamber_polytope()
        .intersected(HalfSpace{{-1, -1, 0}, -kPi / 2})  // c1 + c2 >= pi/2
        .intersected(HalfSpace{{1, -1, 0}, kPi / 2})    // c1 - c2 <= pi/2
        .intersected(HalfSpace{{0, 1, 1}, kPi / 2});    // c2 + c3 <= pi/2
}

std::vector<ConvexPolytope> split_by_planes(const ConvexPolytope &poly, std::span<const HalfSpace> planes) {
    std::vector<ConvexPolytope> cells{poly};
    for (const auto &plane : planes) {
        std::vector<ConvexPolytope> next;
        for (const auto &cell : cells) {
            double lo = std::numeric_limits<double>::infinity(), hi = -lo;
            for (const auto &v : cell.vertices()) {
                const double s = plane.slack(v);
                lo = std::min(lo, s);
                hi = std::max(hi, s);
            }
            const double scale = 1e-12 * std::max(1.0, norm(plane.normal));
            if (lo < -scale && hi > scale) {
                for (auto piece : {cell.intersected(plane), cell.intersected(plane.flipped())}) {
                    if (piece.has_interior()) {
                        next.push_back(std::move(piece));
                    }
                }
            } else {
                next.push_back(cell);
            }
        }
        cells = std::move(next);
    }
    return cells;
}

QuadratureEstimate integrate_polytopes(std::span<const ConvexPolytope> cells, const Integrand3 &f,
                                       const QuadratureOptions &opts) {
    if (opts.resolution < 4) {
        throw ArgumentError("quadrature resolution must be at least 4");
    }
    const Point3 ref = opts.reference_extent.value_or(extent_of(cells));
    double fine = 0.0, coarse = 0.0;
    for (const auto &c : cells) {
        fine += integrate_level(c, f, opts.resolution, ref, opts.workers, 0);
        coarse += integrate_level(c, f, opts.resolution, ref, opts.workers, 1);
    }
    const double diff = (fine - coarse) / 15.0;
    return {fine + diff, std::abs(diff)};
}

QuadratureEstimate integrate_polytope(const ConvexPolytope &poly, const Integrand3 &f,
                                      const QuadratureOptions &opts) {
    return integrate_polytopes(std::span<const ConvexPolytope>(&poly, 1), f, opts);
}

double simpson(const std::function<double(double)> &f, double a, double b, int n) {
    if (n < 2 || n % 2 != 0) {
        throw ArgumentError("simpson: panel count must be even and >= 2");
    }
    return simpson_sum(f, a, b, n);
}

}  // namespace su4geom
