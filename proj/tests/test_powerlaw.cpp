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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "morphlab/error.hpp"
#include "morphlab/powerlaw.hpp"
#include "morphlab/rng.hpp"

using namespace morphlab;

namespace {

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

RankedCounts exact(double a, double b, int ranks) {
  RankedCounts pts;
  for (int x = 1; x <= ranks; ++x) pts.emplace_back(x, a * std::pow(b, -x));
  return pts;
}

}  // namespace

TEST_CASE("noiseless recovery") {
  const PowerLawFit f = fit_power_law(exact(100, 1.5, 20));
  CHECK(rel(f.a, 100) <= 1e-6);
  CHECK(rel(f.b, 1.5) <= 1e-6);
  CHECK(f.residual < 1e-12);
  for (double a : {10.0, 100.0, 1000.0}) {
    for (double b : {1.2, 1.5, 2.0}) {
      CAPTURE(a);
      CAPTURE(b);
      const PowerLawFit g = fit_power_law(exact(a, b, 20));
      CHECK(rel(g.a, a) <= 1e-6);
      CHECK(rel(g.b, b) <= 1e-6);
    }
  }
}

TEST_CASE("halving counts give a=16, b=2") {
  const std::vector<double> counts = {8, 4, 2, 1};
  const PowerLawFit f = fit_power_law(ranked(counts));
  CHECK(std::fabs(f.a - 16.0) <= 1e-9);
  CHECK(std::fabs(f.b - 2.0) <= 1e-9);
  CHECK(f(1) == doctest::Approx(8.0));
}

TEST_CASE("flat counts are degenerate") {
  const std::vector<double> counts = {3, 3, 3};
  CHECK_THROWS_AS(fit_power_law(ranked(counts)), DegenerateFit);
  const std::vector<double> rising = {1, 2, 4};
  CHECK_THROWS_AS(fit_power_law(ranked(rising)), DegenerateFit);
}

TEST_CASE("invalid input") {
  const std::vector<double> one = {5};
  CHECK_THROWS_AS(fit_power_law(ranked(one)), ValidationError);
  const std::vector<double> zero = {5, 0};
  CHECK_THROWS_AS(fit_power_law(ranked(zero)), ValidationError);
}

TEST_CASE("noisy counts still decay") {
  Rng rng(47);
  for (int trial = 0; trial < 50; ++trial) {
    RankedCounts pts;
    for (int x = 1; x <= 30; ++x) {
      const double clean = 500.0 * std::pow(1.3, -x);
      pts.emplace_back(x, std::max(1.0, std::round(clean * (0.8 + 0.4 * rng.uniform01()))));
    }
    const PowerLawFit f = fit_power_law(pts);
    CHECK(f.b > 1.0);
    CHECK(std::isfinite(f.a));
  }
}

TEST_CASE("jacobian matches central differences") {
  Rng rng(53);
  auto f = [](double a, double b, double x) { return a * std::pow(b, -x); };
  for (int trial = 0; trial < 500; ++trial) {
    const double a = 1.0 + 999.0 * rng.uniform01();
    const double b = 1.05 + 2.0 * rng.uniform01();
    const double x = 1.0 + static_cast<double>(rng.uniform_index(30));
    const auto j = power_law_jacobian(a, b, x);
    const double ha = 1e-5 * a;
    const double hb = 1e-6 * b;
    const double da = (f(a + ha, b, x) - f(a - ha, b, x)) / (2 * ha);
    const double db = (f(a, b + hb, x) - f(a, b - hb, x)) / (2 * hb);
    CHECK(rel(j[0], da) <= 1e-6);
    CHECK(rel(j[1], db) <= 1e-6);
  }
}
