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

#include "su4geom/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>

#include "su4geom/error.hpp"
#include "su4geom/gate_algebra.hpp"
#include "su4geom/geometry.hpp"
#include "su4geom/invariants.hpp"
#include "su4geom/quadrature.hpp"
#include "su4geom/sampling.hpp"
#include "su4geom/stats.hpp"
#include "su4geom/volumes.hpp"

namespace su4geom {

namespace {

struct Sizes {
    int random_points;
    int round_trip_points;
    int metric_points;
    int frame_points;
    int density_grid;
    int chamber_resolution;
    int cube_resolution;
    std::uint64_t mc_samples;
    bool histogram;
};

Sizes sizes_for(VerifyLevel level) {
    if (level == VerifyLevel::quick) {
        return {200, 1000, 20, 5, 20, 150, 100, 200000, false};
    }
    return {1000, 10000, 100, 20, 50, 300, 300, 1000000, true};
}

// Interior point of the chamber, at least `margin` from every wall.
// c_from_g loses about sqrt(eps) where the cubic's roots cluster, i.e. next to the faces.
constexpr double kRoundTripMargin = 0.02;

CanonicalCoords random_interior_point(RandomStream &rng, double margin) {
    while (true) {
        const CanonicalCoords c{kPi * rng.uniform(), kPi / 2 * rng.uniform(), kPi / 2 * rng.uniform()};
        if (c.c3 > margin && c.c2 - c.c3 > margin && c.c1 - c.c2 > margin && kPi - c.c1 - c.c2 > margin) {
            return c;
        }
    }
}

// SU(2) parameters away from the coordinate singularities alpha = 0, 2pi and theta = 0, pi.
Su2Params random_regular_params(RandomStream &rng) {
    const double margin = 0.05;
    Su2Params v;
    do {
        v.alpha = 4 * kPi * rng.uniform();
    } while (std::abs(std::sin(v.alpha / 2)) < margin);
    v.theta = margin + (kPi - 2 * margin) * rng.uniform();
    v.phi = 2 * kPi * rng.uniform();
    return v;
}

FullCoords random_regular_coords(RandomStream &rng) {
    FullCoords x;
    x.a1 = random_regular_params(rng);
    x.b1 = random_regular_params(rng);
    x.a2 = random_regular_params(rng);
    x.b2 = random_regular_params(rng);
    x.c = random_interior_point(rng, 0.05);
    return x;
}

double max_abs3(const std::array<double, 3> &a, const std::array<double, 3> &b) {
    return std::max({std::abs(a[0] - b[0]), std::abs(a[1] - b[1]), std::abs(a[2] - b[2])});
}

class Suite {
   public:
    explicit Suite(const VerifyOptions &opts) : opts_(opts), sizes_(sizes_for(opts.level)), rng_(opts.seed, 1u << 20) {
    }

    VerifyReport run() {
        check("generators_orthonormal", 1e-15, [&] {
            double worst = 0.0;
            for (int a = 0; a < kGeneratorCount; a++) {
                for (int b = 0; b < kGeneratorCount; b++) {
                    const Complex t = (generator(GeneratorIndex::from_flat(a)) * generator(GeneratorIndex::from_flat(b))).trace();
                    worst = std::max(worst, std::abs(t - Complex(a == b ? 1.0 : 0.0)));
                }
            }
            return worst;
        });
        check("assemble_unitary", kConstructedUnitarityTol, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.random_points; i++) {
                worst = std::max(worst, assemble(random_regular_coords(rng_)).unitarity_defect());
            }
            return worst;
        });
        check("assemble_det_one", 1e-10, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.random_points; i++) {
                worst = std::max(worst, std::abs(assemble(random_regular_coords(rng_)).det() - Complex(1.0)));
            }
            return worst;
        });
        check("c_g_round_trip", 1e-9, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.round_trip_points; i++) {
                const CanonicalCoords c = random_interior_point(rng_, kRoundTripMargin);
                worst = std::max(worst, max_abs3(c_from_g(g_from_c(c)).as_array(), c.as_array()));
            }
            return worst;
        });
        check("g_c_round_trip", 1e-9, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.round_trip_points; i++) {
                const LocalInvariants g = g_from_c(random_interior_point(rng_, 0.0));
                worst = std::max(worst, max_abs3(g_from_c(c_from_g(g)).as_array(), g.as_array()));
            }
            return worst;
        });
        check("cubic_roots_are_cos2c", 1e-10, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.random_points; i++) {
                const CanonicalCoords c = random_interior_point(rng_, 0.0);
                std::array<double, 3> z{std::cos(2 * c.c1), std::cos(2 * c.c2), std::cos(2 * c.c3)};
                std::sort(z.begin(), z.end());
                worst = std::max(worst, max_abs3(invariant_cubic_roots(g_from_c(c)), z));
            }
            return worst;
        });
        check("local_and_phase_invariance", 1e-9, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.random_points; i++) {
                const GateMatrix u = assemble(random_regular_coords(rng_));
                const ComplexMatrix4 k1 = local_gate(random_regular_params(rng_), random_regular_params(rng_));
                const ComplexMatrix4 k2 = local_gate(random_regular_params(rng_), random_regular_params(rng_));
                const Complex phase = std::polar(1.0, 2 * kPi * rng_.uniform());
                const GateMatrix v(k1 * u.matrix() * k2 * phase);
                worst = std::max(worst, max_abs3(makhlin_invariants(u).as_array(), makhlin_invariants(v).as_array()));
            }
            return worst;
        });
        check("canonical_coords_recovery", 1e-8, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.random_points; i++) {
                const FullCoords x = random_regular_coords(rng_);
                worst = std::max(worst, max_abs3(canonical_coords(assemble(x)).as_array(), x.c.as_array()));
            }
            return worst;
        });
        check("density_forms_agree", 1e-12, [&] {
            const int n = sizes_.density_grid;
            double worst = 0.0;
            for (int i = 0; i <= n; i++) {
                for (int j = 0; j <= n; j++) {
                    for (int k = 0; k <= n; k++) {
                        const CanonicalCoords c{kPi * i / n, kPi / 2 * j / n, kPi / 2 * k / n};
                        if (!c.in_chamber(0.0)) {
                            continue;
                        }
                        worst = std::max(worst, std::abs(weyl_density(c, DensityForm::cosine) - weyl_density(c)));
                    }
                }
            }
            return worst;
        });
        check("density_maximum_b_gate", 1e-12, [&] {
            return std::abs(density(kPi / 2, kPi / 4, 0.0) - kWeylDensityMax);
        });
        check("chamber_normalisation", 1e-6, [&] {
            QuadratureOptions q = chamber_quadrature_options(opts_.workers);
            q.resolution = sizes_.chamber_resolution;
            return std::abs(integrate_polytope(weyl_chamber_polytope(), density_fn(), q).value - 1.0);
        });
        check("pe_volume_quadrature", 1e-5, [&] {
            pe_quad_ = integrate_polytope(perfect_entangler_polytope(), density_fn(), chamber_quadrature_options(opts_.workers)).value;
            return std::abs(pe_quad_ - kPerfectEntanglerVolume);
        });
        check("change_of_variables", 1e-8, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.random_points; i++) {
                const CanonicalCoords c = random_interior_point(rng_, 1e-3);
                const double rhs = makhlin_density(g_from_c(c)) * std::abs(jacobian(c).determinant());
                worst = std::max(worst, std::abs(density(c.c1, c.c2, c.c3) - rhs) / std::max(1.0, rhs));
            }
            return worst;
        });
        check("jjt_closed_form", 1e-9, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.random_points; i++) {
                const CanonicalCoords c = random_interior_point(rng_, 0.0);
                const Matrix3 j = jacobian(c);
                worst = std::max(worst, (j * j.transpose() - jjt_closed(g_from_c(c))).cwiseAbs().maxCoeff());
            }
            return worst;
        });
        check("metric_determinant", 1e-8, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.metric_points; i++) {
                const FullCoords x = random_regular_coords(rng_);
                const double closed = det_g_closed(x);
                worst = std::max(worst, std::abs(metric_tensor(x).determinant() - closed) / closed);
            }
            return worst;
        });
        check("frame_determinant", 1e-4, [&] {
            double worst = 0.0;
            for (int i = 0; i < sizes_.frame_points; i++) {
                const FullCoords x = random_regular_coords(rng_);
                const double root = std::sqrt(det_g_closed(x));
                worst = std::max(worst, std::abs(std::abs(frame_finite_difference(x).determinant()) - root) / root);
            }
            return worst;
        });
        check("haar_density_over_sqrt_det_g", 1e-8, [&] {
            double lo = INFINITY, hi = -INFINITY;
            for (int i = 0; i < sizes_.metric_points; i++) {
                const FullCoords x = random_regular_coords(rng_);
                const double r = full_haar_density(x) / std::sqrt(det_g_closed(x));
                lo = std::min(lo, r);
                hi = std::max(hi, r);
            }
            return (hi - lo) / hi;
        });
        check("su2_density_normalisation", 1e-8, [&] {
            // The density factorises, so the 3D integral is a product of 1D Simpson integrals.
            const double ia = simpson([](double a) { return std::sin(a / 2) * std::sin(a / 2); }, 0.0, 4 * kPi, 400);
            const double it = simpson([](double t) { return std::sin(t); }, 0.0, kPi, 400);
            return std::abs(ia * it * 2 * kPi / (8 * kPi * kPi) - 1.0);
        });
        check("cube_closed_forms", 1e-5, [&] {
            struct Case {
                Triple c;
                double amax;
            };
            const Case cases[] = {
                {{0, 0, 0}, kPi},
                {{kPi / 2, kPi / 2, kPi / 2}, kPi},
                {{kPi / 4, kPi / 4, kPi / 4}, kPi / 2},
                {{kPi / 2, kPi / 4, 0}, kPi / 4},
                {{kPi / 2, 0, 0}, kPi / 2},
                {{kPi / 2, kPi / 2, 0}, kPi / 2},
                {{kPi / 2, kPi / 4, kPi / 4}, kPi / 4},
                {{kPi / 4, 0, 0}, kPi / 4},
                {{0.9, 0.5, 0.25}, 0.2},
            };
            QuadratureOptions q;
            q.resolution = sizes_.cube_resolution;
            q.workers = opts_.workers;
            double worst = 0.0;
            for (const auto &cs : cases) {
                std::vector<double> sides{0.1};
                if (opts_.level == VerifyLevel::full) {
                    sides = {0.1, std::min(0.2, cs.amax), cs.amax / 2};
                }
                for (double a : sides) {
                    const double closed = cube_volume_closed(cs.c, a).value;
                    const double quad =
                        opts_.density_scale * cube_volume_quadrature(cs.c, a, ClipMode::unclipped_abs_density, q).value;
                    worst = std::max(worst, std::abs(quad - closed) / closed);
                }
            }
            return worst;
        });
        check("cylinder_volumes", 1e-6, [&] {
            double worst = 0.0;
            const Triple center{0.3, 0.4, 0.0};
            for (double ratio : {0.5, 1 - 1e-6, 1 + 1e-6, 2.0}) {
                const double r = 0.5 * ratio;
                const double closed = cylinder_volume_g(center, r, 0.2).value;
                const double quad = cylinder_volume_g_quadrature(center, r, 0.2).value;
                worst = std::max(worst, std::abs(quad - closed) / closed);
            }
            const double below = cylinder_volume_g(center, 0.5 * (1 - 1e-12), 0.2).value;
            const double at = cylinder_volume_g(center, 0.5, 0.2).value;
            worst = std::max(worst, std::abs(below - at) / at);
            for (auto kind : {OriginRegionKind::cube, OriginRegionKind::cylinder, OriginRegionKind::sphere}) {
                const double closed = origin_region_volume_g(kind, 0.2, 0.3).value;
                const double quad = origin_region_volume_g_quadrature(kind, 0.2, 0.3).value;
                worst = std::max(worst, std::abs(quad - closed) / closed);
            }
            return worst;
        });
        check("sampler_determinism", 0.0, [&] {
            SamplerConfig a{opts_.seed, 1, SamplingMethod::matrix_oracle};
            SamplerConfig b{opts_.seed, std::max(2u, opts_.workers), SamplingMethod::matrix_oracle};
            const auto x = sample_classes(10000, a);
            const auto y = sample_classes(10000, b);
            double worst = 0.0;
            for (std::size_t i = 0; i < x.size(); i++) {
                worst = std::max(worst, max_abs3(x[i].as_array(), y[i].as_array()));
            }
            return worst;
        });
        check_stat("mc_pe_fraction", 3.0, [&] {
            const SamplerConfig cfg{opts_.seed, opts_.workers, SamplingMethod::matrix_oracle};
            const auto r = region_volume_mc(PeRegion{}, sizes_.mc_samples, cfg);
            const double expected = pe_quad_ > 0 ? pe_quad_ : kPerfectEntanglerVolume;
            return std::abs(r.value - expected) / r.error_estimate;
        });
        if (sizes_.histogram) {
            check_stat("chamber_histogram_chi2", 0.01, [&] {
                auto p = chamber_bin_probabilities(30);
                for (double &v : p) {
                    v *= opts_.density_scale;
                }
                const auto s = sample_classes(1000000, {opts_.seed, opts_.workers, SamplingMethod::matrix_oracle});
                return chamber_histogram_test(s, 30, p).p_value;
            }, /*lower_is_worse=*/true);
            check_stat("sampler_methods_agree_g3", 1.0, [&] {
                const std::uint64_t n = 100000;
                std::vector<double> a, b;
                for (const auto &c : sample_classes(n, {opts_.seed, opts_.workers, SamplingMethod::matrix_oracle})) {
                    a.push_back(g_from_c(c).g3);
                }
                for (const auto &c :
                     sample_classes(n, {opts_.seed + 1, opts_.workers, SamplingMethod::coordinate_density})) {
                    b.push_back(g_from_c(c).g3);
                }
                return ks_statistic_two_sample(a, b) / ks_critical_value_two_sample(0.01, n, n);
            });
        }
        return std::move(report_);
    }

   private:
    double density(double a, double b, double c) const {
        return opts_.density_scale * weyl_density(a, b, c);
    }
    Integrand3 density_fn() const {
        return [this](double a, double b, double c) { return density(a, b, c); };
    }

    // Passes when observed <= budget.
    void check(const std::string &name, double budget, const std::function<double()> &body) {
        run_check(name, budget, body, false);
    }
    void check_stat(const std::string &name, double budget, const std::function<double()> &body,
                    bool lower_is_worse = false) {
        run_check(name, budget, body, lower_is_worse);
    }

    void run_check(const std::string &name, double budget, const std::function<double()> &body, bool lower_is_worse) {
        CheckResult r;
        r.name = name;
        r.budget = budget;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.observed = body();
            r.passed = std::isfinite(r.observed) && (lower_is_worse ? r.observed > budget : r.observed <= budget);
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report_.checks.push_back(std::move(r));
    }

    VerifyOptions opts_;
    Sizes sizes_;
    RandomStream rng_;
    double pe_quad_ = 0.0;
    VerifyReport report_;
};

}  // namespace

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

VerifyReport run_verification(const VerifyOptions &opts) {
    if (opts.workers == 0) {
        throw ArgumentError("workers must be at least 1");
    }
    return Suite(opts).run();
}

}  // namespace su4geom
