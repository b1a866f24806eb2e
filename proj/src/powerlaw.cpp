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

#include "morphlab/powerlaw.hpp"

#include <cmath>
#include <set>
#include <string>

#include "morphlab/error.hpp"

namespace morphlab {

namespace {

constexpr int kMaxIterations = 200;
constexpr double kStepTolerance = 1e-10;

double sse(const RankedCounts& points, double a, double b) {
  double s = 0.0;
  for (const auto& [x, y] : points) {
    const double r = a * std::pow(b, -x) - y;
    s += r * r;
  }
  return s;
}

}  // namespace

double PowerLawFit::operator()(double rank) const { return a * std::pow(b, -rank); }

RankedCounts ranked(std::span<const double> counts) {
  RankedCounts points;
  points.reserve(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    points.emplace_back(static_cast<double>(i + 1), counts[i]);
  }
  return points;
}

std::array<double, 2> power_law_jacobian(double a, double b, double rank) {
  const double decay = std::pow(b, -rank);
  return {decay, -rank * a * decay / b};
}

PowerLawFit fit_power_law(const RankedCounts& points) {
  std::set<double> ranks;
  for (const auto& [x, y] : points) {
    if (!(y > 0)) throw ValidationError("power-law fit needs positive counts");
    ranks.insert(x);
  }
  if (ranks.size() < 2) {
    throw ValidationError("power-law fit needs at least two distinct ranks");
  }

  // log y = log a - x log b
  double mx = 0.0;
  double my = 0.0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += std::log(y);
  }
  const double n = static_cast<double>(points.size());
  mx /= n;
  my /= n;
  double sxy = 0.0;
  double sxx = 0.0;
  for (const auto& [x, y] : points) {
    sxy += (x - mx) * (std::log(y) - my);
    sxx += (x - mx) * (x - mx);
  }
  const double slope = sxy / sxx;
  double a = std::exp(my - slope * mx);
  double b = std::exp(-slope);

  double lambda = 1e-3;
  double current = sse(points, a, b);
  int iter = 0;
  for (; iter < kMaxIterations; ++iter) {
    double jtj[2][2] = {{0, 0}, {0, 0}};
    double jtr[2] = {0, 0};
    for (const auto& [x, y] : points) {
      const auto j = power_law_jacobian(a, b, x);
      const double r = a * std::pow(b, -x) - y;
      for (int p = 0; p < 2; ++p) {
        jtr[p] += j[p] * r;
        for (int q = 0; q < 2; ++q) jtj[p][q] += j[p] * j[q];
      }
    }
    if (jtr[0] == 0.0 && jtr[1] == 0.0) break;

    bool accepted = false;
    double da = 0.0;
    double db = 0.0;
    while (lambda < 1e20) {
      const double m00 = jtj[0][0] * (1.0 + lambda);
      const double m11 = jtj[1][1] * (1.0 + lambda);
      const double m01 = jtj[0][1];
      const double det = m00 * m11 - m01 * m01;
      da = (-jtr[0] * m11 + jtr[1] * m01) / det;
      db = (-jtr[1] * m00 + jtr[0] * m01) / det;
      const double na = a + da;
      const double nb = b + db;
      if (!std::isfinite(na) || !std::isfinite(nb)) {
        throw FitDivergence("power-law fit produced non-finite parameters");
      }
      const double trial = nb > 0 ? sse(points, na, nb) : INFINITY;
      if (trial <= current) {
        a = na;
        b = nb;
        current = trial;
        lambda = std::max(lambda / 10.0, 1e-12);
        accepted = true;
        break;
      }
      lambda *= 10.0;
    }
    if (!accepted) break;
    const double step = std::hypot(da, db);
    const double scale = std::hypot(a, b);
    if (step <= kStepTolerance * scale) {
      ++iter;
      break;
    }
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw FitDivergence("power-law fit produced non-finite parameters");
  }
  if (b <= 1.0) {
    throw DegenerateFit("fitted decay base " + std::to_string(b) +
                        " is not above 1; counts do not decay with rank");
  }
  return {a, b, current, iter};
}

}  // namespace morphlab
