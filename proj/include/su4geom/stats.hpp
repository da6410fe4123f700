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

#ifndef SU4GEOM_STATS_HPP
#define SU4GEOM_STATS_HPP

#include <functional>
#include <vector>

#include "su4geom/gate_algebra.hpp"

namespace su4geom {

/// sup |F_n - F| for the sample x against a continuous CDF.
double ks_statistic(std::vector<double> x, const std::function<double(double)> &cdf);

/// sup |F_a - F_b| between two empirical distributions.
double ks_statistic_two_sample(std::vector<double> a, std::vector<double> b);

/// Asymptotic critical values at significance level alpha.
double ks_critical_value(double alpha, std::size_t n);
double ks_critical_value_two_sample(double alpha, std::size_t n, std::size_t m);

struct ChiSquareResult {
    double statistic = 0.0;
    int degrees_of_freedom = 0;
    double p_value = 0.0;
    /// Sum of the per-bin expected probabilities (should be 1).
    double expected_total = 0.0;
};

/// Probability mass of the Weyl density in each cell of a bins^3 grid over the
/// chamber's bounding box [0, pi] x [0, pi/2] x [0, pi/2]. Index (i * bins + j) * bins + k.
std::vector<double> chamber_bin_probabilities(int bins);

/// Pearson chi-square of a chamber histogram against `probabilities` (from
/// chamber_bin_probabilities). Cells with expected count below 5 are pooled into one.
ChiSquareResult chamber_histogram_test(const std::vector<CanonicalCoords> &samples, int bins,
                                       const std::vector<double> &probabilities);

}  // namespace su4geom

#endif
