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

#include "su4geom/volumes.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>

#include "su4geom/elliptic.hpp"
#include "su4geom/error.hpp"
#include "su4geom/geometry.hpp"
#include "su4geom/invariants.hpp"

namespace su4geom {

namespace {

#include "cube_series.inc"

// Below this side the Taylor series replaces the trigonometric closed forms.
constexpr double kSeriesSwitch = 0.5;
constexpr double kCenterMatchTol = 1e-12;
constexpr double kAdaptiveTol = 1e-13;

template <std::size_t N>
double horner(const std::array<double, N> &c, double x) {
    double acc = 0.0;
    for (std::size_t k = N; k-- > 0;) {
        acc = acc * x + c[k];
    }
    return acc;
}

bool same_point(const Triple &a, const Triple &b) {
    return std::abs(a[0] - b[0]) <= kCenterMatchTol && std::abs(a[1] - b[1]) <= kCenterMatchTol &&
           std::abs(a[2] - b[2]) <= kCenterMatchTol;
}

double v_identity_swap(double a) {
    if (a < kSeriesSwitch) {
        return horner(k_identity_swap, a);
    }
    return 3.0 / (2.0 * kPi) *
           (8 * a + a * std::cos(3 * a) - 9 * a * std::cos(a) - 3 * std::sin(3 * a) + 12 * std::sin(2 * a) -
            15 * std::sin(a));
}

double v_sqrt_swap(double a) {
    if (a < kSeriesSwitch) {
        return horner(k_sqrt_swap, a);
    }
    return 3.0 / (2.0 * kPi) * (2 * a * std::sin(3 * a) + 6 * a * std::sin(a) + 3 * std::cos(3 * a) - 3 * std::cos(a));
}

double v_b_gate(double a) {
    if (a < kSeriesSwitch) {
        return horner(k_b_gate, a);
    }
    return 3.0 * a / kPi * (std::cos(a) - std::cos(3 * a));
}

double v_cnot_dcnot(double a) {
    if (a < kSeriesSwitch) {
        return horner(k_cnot_dcnot, a);
    }
    return 1.0 / (2.0 * kPi) *
           (8 * a + 7 * a * std::cos(3 * a) - 15 * a * std::cos(a) - 9 * std::sin(3 * a) + 12 * std::sin(2 * a) +
            3 * std::sin(a));
}

double v_edge_point(double a) {
    if (a < kSeriesSwitch) {
        return horner(k_edge_point, a);
    }
    return 1.0 / (2.0 * kPi) * (3 * std::cos(a) - 3 * std::cos(3 * a) - 4 * a * std::sin(3 * a));
}

double v_c1_axis(double c1, double a) {
    double f0, f1, f2;
    if (a < kSeriesSwitch) {
        f0 = horner(k_axis_f0, a);
        f1 = horner(k_axis_f1, a);
        f2 = horner(k_axis_f2, a);
    } else {
        f0 = 8 * a + a * std::cos(3 * a) - 9 * a * std::cos(a);
        f1 = 3 * a * std::cos(3 * a) - 3 * a * std::cos(a) - 3 * std::sin(3 * a) + 9 * std::sin(a);
        f2 = 3 * a * std::cos(3 * a) - 3 * a * std::cos(a) - 6 * std::sin(3 * a) + 12 * std::sin(2 * a) -
             6 * std::sin(a);
    }
    return (f0 - f1 * std::cos(2 * c1) + f2 * std::cos(4 * c1)) / (2.0 * kPi);
}

double v_interior(const Triple &c, double a) {
    return 0.5 * a * std::sin(a) * std::sin(2 * a) * weyl_density(c[0], c[1], c[2]);
}

bool cube_in_chamber(const Triple &c, double a) {
    for (int mask = 0; mask < 8; mask++) {
        const CanonicalCoords corner{c[0] + ((mask & 1) ? 0.5 : -0.5) * a, c[1] + ((mask & 2) ? 0.5 : -0.5) * a,
                                     c[2] + ((mask & 4) ? 0.5 : -0.5) * a};
        if (!corner.in_chamber(kCenterMatchTol)) {
            return false;
        }
    }
    return true;
}

void check_side(double a, const char *what) {
    if (!std::isfinite(a) || a <= 0.0) {
        throw ArgumentError(std::string(what) + " must be positive");
    }
}

// Planes n.x = k pi across which some sin(cj +- ck) changes sign inside the box.
std::vector<HalfSpace> kink_planes(const Triple &lo, const Triple &hi) {
    std::vector<HalfSpace> planes;
    for (int j = 0; j < 3; j++) {
        for (int k = j + 1; k < 3; k++) {
            for (double s : {1.0, -1.0}) {
                const double vmin = lo[j] + (s > 0 ? lo[k] : -hi[k]);
                const double vmax = hi[j] + (s > 0 ? hi[k] : -lo[k]);
                for (long n = static_cast<long>(std::ceil(vmin / kPi)); n * kPi <= vmax; n++) {
                    Point3 normal{};
                    normal[j] = 1.0;
                    normal[k] = s;
                    planes.push_back({normal, n * kPi});
                }
            }
        }
    }
    return planes;
}

double polar_disc_integral(double rho_star, double radius) {
    // Integral of 1/rho over a disc of radius R whose centre sits at distance rho* from the origin.
    using boost::math::quadrature::gauss_kronrod;
    if (rho_star == 0.0) {
        return 2.0 * kPi * radius;
    }
    if (radius >= rho_star) {
        // Origin inside the disc: ray length from the origin, integrated over the full turn.
        auto ray = [&](double phi) {
            const double s = std::sin(phi);
            return rho_star * std::cos(phi) + std::sqrt(std::max(0.0, radius * radius - rho_star * rho_star * s * s));
        };
        return 2.0 * gauss_kronrod<double, 61>::integrate(ray, 0.0, kPi, 20, kAdaptiveTol);
    }
    // Origin outside: chord length over the subtended angle, with sin(phi) = (R/rho*) sin(t).
    const double k = radius / rho_star;
    auto chord = [&](double t) {
        const double ct = std::cos(t);
        const double st = std::sin(t);
        return 2.0 * radius * k * ct * ct / std::sqrt(std::max(0.0, 1.0 - k * k * st * st));
    };
    return 2.0 * gauss_kronrod<double, 61>::integrate(chord, 0.0, kPi / 2, 20, kAdaptiveTol);
}

struct SampleStats {
    double sum = 0.0;
    double sum_sq = 0.0;
};

}  // namespace

std::string_view method_name(VolumeMethod m) {
    switch (m) {
        case VolumeMethod::closed_form:
            return "closed_form";
        case VolumeMethod::quadrature:
            return "quadrature";
        case VolumeMethod::monte_carlo:
            return "monte_carlo";
    }
    return "";
}

std::string_view clip_mode_name(ClipMode m) {
    return m == ClipMode::unclipped_abs_density ? "unclipped" : "chamber-clipped";
}

ClipMode parse_clip_mode(std::string_view s) {
    if (s == "unclipped") {
        return ClipMode::unclipped_abs_density;
    }
    if (s == "chamber-clipped" || s == "clipped") {
        return ClipMode::chamber_clipped;
    }
    throw ArgumentError("unknown clip mode '" + std::string(s) + "'");
}

void validate_region(const Region &r) {
    std::visit(
        [](const auto &reg) {
            using T = std::decay_t<decltype(reg)>;
            if constexpr (std::is_same_v<T, CubeC> || std::is_same_v<T, CubeG>) {
                check_side(reg.side, "cube side");
            } else if constexpr (std::is_same_v<T, CylinderG>) {
                check_side(reg.radius, "cylinder radius");
                check_side(reg.height, "cylinder height");
            } else if constexpr (std::is_same_v<T, SphereG>) {
                check_side(reg.radius, "sphere radius");
            }
        },
        r);
}

bool is_perfect_entangler(const CanonicalCoords &c) {
    constexpr double tol = 1e-9;
    if (!c.in_chamber(tol)) {
        throw DomainError("point is outside the Weyl chamber");
    }
    return c.c1 + c.c2 >= kPi / 2 - tol && c.c1 - c.c2 <= kPi / 2 + tol && c.c2 + c.c3 <= kPi / 2 + tol;
}

QuadratureOptions chamber_quadrature_options(unsigned workers) {
    QuadratureOptions o;
    o.resolution = 300;
    o.workers = workers;
    o.reference_extent = Point3{kPi, kPi / 2, kPi / 2};
    return o;
}

VolumeResult pe_volume(VolumeMethod method, const QuadratureOptions &opts) {
    switch (method) {
        case VolumeMethod::closed_form:
            return {kPerfectEntanglerVolume, method, 0.0};
        case VolumeMethod::quadrature: {
            const auto q = integrate_polytope(
                perfect_entangler_polytope(), [](double a, double b, double c) { return weyl_density(a, b, c); },
                opts);
            return {q.value, method, q.error};
        }
        case VolumeMethod::monte_carlo:
            break;
    }
    throw ArgumentError("pe_volume: use region_volume_mc for Monte Carlo estimates");
}

VolumeResult chamber_volume_quadrature(const QuadratureOptions &opts) {
    const auto q = integrate_polytope(
        weyl_chamber_polytope(), [](double a, double b, double c) { return weyl_density(a, b, c); }, opts);
    return {q.value, VolumeMethod::quadrature, q.error};
}

NamedGate parse_named_gate(std::string_view name) {
    static constexpr std::array<std::pair<std::string_view, NamedGate>, 7> table{{
        {"identity", NamedGate::identity},
        {"swap", NamedGate::swap},
        {"sqrt-swap", NamedGate::sqrt_swap},
        {"b-gate", NamedGate::b_gate},
        {"cnot", NamedGate::cnot},
        {"cphase", NamedGate::cphase},
        {"dcnot", NamedGate::dcnot},
    }};
    for (const auto &[key, g] : table) {
        if (key == name) {
            return g;
        }
    }
    throw ArgumentError("unknown gate '" + std::string(name) + "' (identity, swap, sqrt-swap, b-gate, cnot, cphase, dcnot)");
}

std::string_view gate_name(NamedGate g) {
    switch (g) {
        case NamedGate::identity:
            return "identity";
        case NamedGate::swap:
            return "swap";
        case NamedGate::sqrt_swap:
            return "sqrt-swap";
        case NamedGate::b_gate:
            return "b-gate";
        case NamedGate::cnot:
            return "cnot";
        case NamedGate::cphase:
            return "cphase";
        case NamedGate::dcnot:
            return "dcnot";
    }
    return "";
}

CanonicalCoords named_gate_point(NamedGate g) {
    switch (g) {
        case NamedGate::identity:
            return {0.0, 0.0, 0.0};
        case NamedGate::swap:
            return {kPi / 2, kPi / 2, kPi / 2};
        case NamedGate::sqrt_swap:
            return {kPi / 4, kPi / 4, kPi / 4};
        case NamedGate::b_gate:
            return {kPi / 2, kPi / 4, 0.0};
        case NamedGate::cnot:
        case NamedGate::cphase:
            return {kPi / 2, 0.0, 0.0};
        case NamedGate::dcnot:
            return {kPi / 2, kPi / 2, 0.0};
    }
    return {};
}

std::optional<CubeFormulaInfo> cube_formula_for(const Triple &center, double a) {
    static const std::array<std::pair<Triple, CubeFormulaInfo>, 7> fixed{{
        {{0.0, 0.0, 0.0}, {CubeFormula::identity_swap, kPi}},
        {{kPi / 2, kPi / 2, kPi / 2}, {CubeFormula::identity_swap, kPi}},
        {{kPi / 4, kPi / 4, kPi / 4}, {CubeFormula::sqrt_swap, kPi / 2}},
        {{kPi / 2, kPi / 4, 0.0}, {CubeFormula::b_gate, kPi / 4}},
        {{kPi / 2, 0.0, 0.0}, {CubeFormula::cnot_dcnot, kPi / 2}},
        {{kPi / 2, kPi / 2, 0.0}, {CubeFormula::cnot_dcnot, kPi / 2}},
        {{kPi / 2, kPi / 4, kPi / 4}, {CubeFormula::edge_point, kPi / 4}},
    }};
    for (const auto &[p, info] : fixed) {
        if (same_point(p, center)) {
            return info;
        }
    }
    if (center[1] == 0.0 && center[2] == 0.0 && center[0] > 0.0 && center[0] <= kPi / 2) {
        return CubeFormulaInfo{CubeFormula::c1_axis, center[0]};
    }
    if (std::isfinite(a) && a >= 0.0 && cube_in_chamber(center, a)) {
        return CubeFormulaInfo{CubeFormula::interior, a};
    }
    return std::nullopt;
}

VolumeResult cube_volume_closed(const Triple &center, double a) {
    if (!std::isfinite(a) || a < 0.0) {
        throw RangeError("cube side must be non-negative");
    }
    const auto info = cube_formula_for(center, a);
    if (!info) {
        throw RangeError("no closed form for this cube; use quadrature");
    }
    if (a > info->max_side + kCenterMatchTol) {
        throw RangeError("cube side exceeds the closed form's validity range; use quadrature");
    }
    double v = 0.0;
    switch (info->formula) {
        case CubeFormula::identity_swap:
            v = v_identity_swap(a);
            break;
        case CubeFormula::sqrt_swap:
            v = v_sqrt_swap(a);
            break;
        case CubeFormula::b_gate:
            v = v_b_gate(a);
            break;
        case CubeFormula::cnot_dcnot:
            v = v_cnot_dcnot(a);
            break;
        case CubeFormula::edge_point:
            v = v_edge_point(a);
            break;
        case CubeFormula::c1_axis:
            v = v_c1_axis(center[0], a);
            break;
        case CubeFormula::interior:
            v = v_interior(center, a);
            break;
    }
    return {v, VolumeMethod::closed_form, 0.0};
}

VolumeResult cube_volume_closed(NamedGate gate, double a) {
    return cube_volume_closed(named_gate_point(gate).as_array(), a);
}

VolumeResult cube_volume_quadrature(const Triple &center, double a, ClipMode clip, const QuadratureOptions &opts) {
    check_side(a, "cube side");
    const Point3 lo{center[0] - a / 2, center[1] - a / 2, center[2] - a / 2};
    const Point3 hi{center[0] + a / 2, center[1] + a / 2, center[2] + a / 2};
    ConvexPolytope domain = ConvexPolytope::box(lo, hi);
    if (clip == ClipMode::chamber_clipped) {
        domain = domain.intersected(weyl_chamber_polytope());
        if (!domain.has_interior()) {
            return {0.0, VolumeMethod::quadrature, 0.0};
        }
    }
    const auto planes = kink_planes(lo, hi);
    const auto cells = split_by_planes(domain, planes);
    QuadratureOptions o = opts;
    if (!o.reference_extent) {
        o.reference_extent = Point3{a, a, a};
    }
    const auto q = integrate_polytopes(cells, [](double x, double y, double z) { return weyl_density(x, y, z); }, o);
    return {q.value, VolumeMethod::quadrature, q.error};
}

VolumeResult cylinder_volume_g(const Triple &center, double radius, double height) {
    check_side(radius, "cylinder radius");
    check_side(height, "cylinder height");
    const double rho = std::hypot(center[0], center[1]);
    if (rho == 0.0) {
        return {6.0 * radius * height, VolumeMethod::closed_form, 0.0};
    }
    double v;
    if (radius >= rho) {
        v = 12.0 * radius * height / kPi * elliptic_E(rho / radius);
    } else {
        const double k = radius / rho;
        v = 12.0 * rho * height / kPi * (elliptic_E(k) + (k * k - 1.0) * elliptic_K(k));
    }
    return {v, VolumeMethod::closed_form, 0.0};
}

VolumeResult cylinder_volume_g_quadrature(const Triple &center, double radius, double height) {
    check_side(radius, "cylinder radius");
    check_side(height, "cylinder height");
    const double rho = std::hypot(center[0], center[1]);
    const double v = 3.0 / kPi * height * polar_disc_integral(rho, radius);
    return {v, VolumeMethod::quadrature, kAdaptiveTol * std::abs(v)};
}

OriginRegionKind parse_origin_region_kind(std::string_view s) {
    if (s == "cube") {
        return OriginRegionKind::cube;
    }
    if (s == "cylinder") {
        return OriginRegionKind::cylinder;
    }
    if (s == "sphere") {
        return OriginRegionKind::sphere;
    }
    throw ArgumentError("unknown region kind '" + std::string(s) + "'");
}

VolumeResult origin_region_volume_g(OriginRegionKind kind, double size, double height) {
    check_side(size, "region size");
    switch (kind) {
        case OriginRegionKind::cube:
            return {12.0 * size * size / kPi * std::log(std::sqrt(2.0) + 1.0), VolumeMethod::closed_form, 0.0};
        case OriginRegionKind::cylinder:
            check_side(height, "cylinder height");
            return {6.0 * size * height, VolumeMethod::closed_form, 0.0};
        case OriginRegionKind::sphere:
            return {3.0 * kPi * size * size, VolumeMethod::closed_form, 0.0};
    }
    throw ArgumentError("unknown region kind");
}

VolumeResult origin_region_volume_g_quadrature(OriginRegionKind kind, double size, double height) {
    using boost::math::quadrature::gauss_kronrod;
    using GK = gauss_kronrod<double, 31>;
    check_side(size, "region size");
    if (kind == OriginRegionKind::cylinder) {
        check_side(height, "cylinder height");
    }
    // Integrand 3/pi in (rho, phi, z); only the rho upper limit depends on the shape.
    auto rho_max = [&](double phi, double z) {
        switch (kind) {
            case OriginRegionKind::cube:
                return 0.5 * size / std::max(std::abs(std::cos(phi)), std::abs(std::sin(phi)));
            case OriginRegionKind::cylinder:
                return size;
            case OriginRegionKind::sphere:
                return std::sqrt(std::max(0.0, size * size - z * z));
        }
        return 0.0;
    };
    const double half = kind == OriginRegionKind::cube ? size / 2 : kind == OriginRegionKind::cylinder ? height / 2 : size;
    auto over_phi = [&](double z) {
        double total = 0.0;
        // Split at multiples of pi/4 where the cube's rho limit has kinks.
        for (int s = 0; s < 8; s++) {
            total += GK::integrate(
                [&](double phi) {
                    const double r = rho_max(phi, z);
                    return GK::integrate([](double) { return 3.0 / kPi; }, 0.0, r, 0, kAdaptiveTol);
                },
                s * kPi / 4, (s + 1) * kPi / 4, 10, kAdaptiveTol);
        }
        return total;
    };
    const double v = GK::integrate(over_phi, -half, half, 15, kAdaptiveTol);
    return {v, VolumeMethod::quadrature, kAdaptiveTol * std::abs(v)};
}

int symmetry_image_count(const CanonicalCoords &c, const Triple &lo, const Triple &hi) {
    const Triple v = c.as_array();
    std::array<int, 3> perm{0, 1, 2};
    int total = 0;
    do {
        for (int signs = 0; signs < 8; signs++) {
            int count = 1;
            for (int i = 0; i < 3 && count > 0; i++) {
                const double x = ((signs >> i) & 1) ? -v[perm[i]] : v[perm[i]];
                // Integers n with lo <= x + n pi <= hi.
                const long first = static_cast<long>(std::ceil((lo[i] - x) / kPi));
                const long last = static_cast<long>(std::floor((hi[i] - x) / kPi));
                count *= static_cast<int>(std::max(0L, last - first + 1));
            }
            total += count;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

VolumeResult region_volume_mc(const Region &region, std::uint64_t n, const SamplerConfig &cfg) {
    if (n < 1000) {
        throw ArgumentError("Monte Carlo volume needs at least 1000 samples");
    }
    validate_region(region);
    cfg.validate();

    auto weight = [&](const CanonicalCoords &c) -> double {
        return std::visit(
            [&](const auto &reg) -> double {
                using T = std::decay_t<decltype(reg)>;
                if constexpr (std::is_same_v<T, PeRegion>) {
                    return is_perfect_entangler(c) ? 1.0 : 0.0;
                } else if constexpr (std::is_same_v<T, ChamberRegion>) {
                    return c.in_chamber(kChamberOutputTol) ? 1.0 : 0.0;
                } else if constexpr (std::is_same_v<T, CubeC>) {
                    const Triple lo{reg.center[0] - reg.side / 2, reg.center[1] - reg.side / 2,
                                    reg.center[2] - reg.side / 2};
                    const Triple hi{reg.center[0] + reg.side / 2, reg.center[1] + reg.side / 2,
                                    reg.center[2] + reg.side / 2};
                    if (reg.clip == ClipMode::unclipped_abs_density) {
                        return 0.5 * symmetry_image_count(c, lo, hi);
                    }
                    const Triple p = c.as_array();
                    for (int i = 0; i < 3; i++) {
                        if (p[i] < lo[i] || p[i] > hi[i]) {
                            return 0.0;
                        }
                    }
                    return 1.0;
                } else {
                    const auto g = g_from_c(c);
                    const double d1 = g.g1 - reg.center[0];
                    const double d2 = g.g2 - reg.center[1];
                    const double d3 = g.g3 - reg.center[2];
                    if constexpr (std::is_same_v<T, CubeG>) {
                        const double h = reg.side / 2;
                        return std::abs(d1) <= h && std::abs(d2) <= h && std::abs(d3) <= h ? 1.0 : 0.0;
                    } else if constexpr (std::is_same_v<T, CylinderG>) {
                        return d1 * d1 + d2 * d2 <= reg.radius * reg.radius && std::abs(d3) <= reg.height / 2 ? 1.0
                                                                                                              : 0.0;
                    } else {
                        return d1 * d1 + d2 * d2 + d3 * d3 <= reg.radius * reg.radius ? 1.0 : 0.0;
                    }
                }
            },
            region);
    };

    const std::uint64_t blocks = (n + kSampleBlockSize - 1) / kSampleBlockSize;
    std::vector<SampleStats> partial(blocks);
    run_sample_blocks(n, cfg, [&](std::uint64_t b, std::uint64_t, std::uint64_t count, RandomStream &stream) {
        SampleStats s;
        for (std::uint64_t i = 0; i < count; i++) {
            const CanonicalCoords c = cfg.method == SamplingMethod::coordinate_density
                                          ? sample_weyl_chamber(stream)
                                          : canonical_coords(sample_gate(stream, cfg.method));
            const double w = weight(c);
            s.sum += w;
            s.sum_sq += w * w;
        }
        partial[b] = s;
    });
    SampleStats total;
    for (const auto &s : partial) {
        total.sum += s.sum;
        total.sum_sq += s.sum_sq;
    }
    const double dn = static_cast<double>(n);
    const double mean = total.sum / dn;
    const double var = std::max(0.0, total.sum_sq / dn - mean * mean);
    return {mean, VolumeMethod::monte_carlo, std::sqrt(var / dn)};
}

}  // namespace su4geom
