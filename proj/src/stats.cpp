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

#include "su4geom/stats.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "su4geom/error.hpp"
#include "su4geom/geometry.hpp"
#include "su4geom/quadrature.hpp"

namespace su4geom {

namespace {

constexpr double kMinExpected = 5.0;

std::array<double, 3> cell_size(int bins) {
    return {kPi / bins, kPi / (2 * bins), kPi / (2 * bins)};
}

}  // namespace

double ks_statistic(std::vector<double> x, const std::function<double(double)> &cdf) {
    if (x.empty()) {
        throw ArgumentError("ks_statistic: empty sample");
    }
    std::sort(x.begin(), x.end());
    const double n = static_cast<double>(x.size());
    double d = 0.0;
    for (std::size_t i = 0; i < x.size(); i++) {
        const double f = cdf(x[i]);
        d = std::max({d, (i + 1) / n - f, f - i / n});
    }
    return d;
}

double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) {
        throw ArgumentError("ks_statistic_two_sample: empty sample");
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size());
    const double nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] == v) {
            i++;
        }
        while (j < b.size() && b[j] == v) {
            j++;
        }
        d = std::max(d, std::abs(i / na - j / nb));
    }
    return d;
}

double ks_critical_value(double alpha, std::size_t n) {
    return std::sqrt(-0.5 * std::log(alpha / 2)) / std::sqrt(static_cast<double>(n));
}

double ks_critical_value_two_sample(double alpha, std::size_t n, std::size_t m) {
    const double dn = static_cast<double>(n), dm = static_cast<double>(m);
    return std::sqrt(-0.5 * std::log(alpha / 2)) * std::sqrt((dn + dm) / (dn * dm));
}

std::vector<double> chamber_bin_probabilities(int bins) {
    if (bins < 1) {
        throw ArgumentError("bins must be positive");
    }
    const auto h = cell_size(bins);
    const ConvexPolytope chamber = weyl_chamber_polytope();
    QuadratureOptions opts;
    opts.resolution = 12;
    opts.reference_extent = Point3{h[0], h[1], h[2]};
    auto density = [](double a, double b, double c) { return weyl_density(a, b, c); };
    std::vector<double> p(static_cast<std::size_t>(bins) * bins * bins, 0.0);
    for (int i = 0; i < bins; i++) {
        for (int j = 0; j < bins; j++) {
            // The chamber has c2 <= c1 and c2 <= pi - c1.
            if (j * h[1] > std::min((i + 1) * h[0], kPi - i * h[0])) {
                continue;
            }
            for (int k = 0; k <= j; k++) {
                const Point3 lo{i * h[0], j * h[1], k * h[2]};
                const Point3 hi{(i + 1) * h[0], (j + 1) * h[1], (k + 1) * h[2]};
                const auto cell = ConvexPolytope::box(lo, hi).intersected(chamber);
                if (!cell.has_interior()) {
                    continue;
                }
                p[(static_cast<std::size_t>(i) * bins + j) * bins + k] = integrate_polytope(cell, density, opts).value;
            }
        }
    }
    return p;
}

ChiSquareResult chamber_histogram_test(const std::vector<CanonicalCoords> &samples, int bins,
                                       const std::vector<double> &probabilities) {
    const std::size_t cells = static_cast<std::size_t>(bins) * bins * bins;
    if (probabilities.size() != cells) {
        throw ArgumentError("probability table does not match the bin count");
    }
    if (samples.empty()) {
        throw ArgumentError("chamber_histogram_test: no samples");
    }
    const auto h = cell_size(bins);
    std::vector<double> counts(cells, 0.0);
    for (const auto &c : samples) {
        const int i = std::clamp(static_cast<int>(c.c1 / h[0]), 0, bins - 1);
        const int j = std::clamp(static_cast<int>(c.c2 / h[1]), 0, bins - 1);
        const int k = std::clamp(static_cast<int>(c.c3 / h[2]), 0, bins - 1);
        counts[(static_cast<std::size_t>(i) * bins + j) * bins + k] += 1.0;
    }
    const double n = static_cast<double>(samples.size());
    ChiSquareResult r;
    double pooled_obs = 0.0, pooled_exp = 0.0;
    int kept = 0;
    for (std::size_t b = 0; b < cells; b++) {
        r.expected_total += probabilities[b];
        const double e = n * probabilities[b];
        if (e < kMinExpected) {
            pooled_obs += counts[b];
            pooled_exp += e;
            continue;
        }
        r.statistic += (counts[b] - e) * (counts[b] - e) / e;
        kept++;
    }
    if (pooled_exp > 0.0) {
        r.statistic += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
        kept++;
    }
    r.degrees_of_freedom = kept - 1;
    if (r.degrees_of_freedom < 1) {
        throw ArgumentError("chamber_histogram_test: too few samples for the bin count");
    }
    r.p_value = boost::math::gamma_q(0.5 * r.degrees_of_freedom, 0.5 * r.statistic);
    return r;
}

}  // namespace su4geom
