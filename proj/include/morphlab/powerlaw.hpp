// Copyright 2026 The morphlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Rank-frequency law f(x) = a * b^(-x) fitted by nonlinear least squares.

#ifndef MORPHLAB_POWERLAW_HPP_
#define MORPHLAB_POWERLAW_HPP_

#include <array>
#include <span>
#include <utility>
#include <vector>

namespace morphlab {

struct PowerLawFit {
  double a = 0.0;
  double b = 0.0;
  /// Sum of squared errors at the optimum.
  double residual = 0.0;
  int iterations = 0;

  double operator()(double rank) const;
};

/// (rank, count) observations.
using RankedCounts = std::vector<std::pair<double, double>>;

/// Ranks 1..K for counts already sorted by rank.
RankedCounts ranked(std::span<const double> counts);

/// d f / d(a, b) at `rank`.
std::array<double, 2> power_law_jacobian(double a, double b, double rank);

/// Levenberg-Marquardt on raw counts, started from ordinary least squares on
/// log(count) against rank. Stops when the parameter step is below 1e-10
/// relative or after 200 iterations. Throws ValidationError for fewer than
/// two distinct ranks or non-positive counts, FitDivergence on non-finite
/// parameters and DegenerateFit when the optimum has b <= 1.
PowerLawFit fit_power_law(const RankedCounts& points);

}  // namespace morphlab

#endif  // MORPHLAB_POWERLAW_HPP_
