// Copyright 2026 The pnspace Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "pnspace/distribution_function.hpp"
#include "pnspace/random.hpp"

using namespace pnspace;

namespace {

// F(x) = x / (x + c) sampled densely enough that interpolation error is
// negligible at the probe points.
DistributionFunction rational_df(double c, double step = 0.125, double x_max = 128.0) {
  std::vector<Knot> knots;
  for (double x = 0.0; x <= x_max; x += step) {
    knots.push_back({x, x / (x + c)});
  }
  return DistributionFunction(std::move(knots), 1.0);
}

}  // namespace

TEST_CASE("construction rejects malformed inputs") {
  CHECK_THROWS_AS(DistributionFunction({}, 1.0), std::domain_error);
  CHECK_THROWS_AS(DistributionFunction({{0.5, 0.0}}, 1.0), std::domain_error);  // no (0,0)
  CHECK_THROWS_AS(DistributionFunction({{0.0, 0.0}, {1.0, 0.5}, {1.0, 0.7}}, 1.0),
                  std::domain_error);  // duplicate abscissa
  CHECK_THROWS_AS(DistributionFunction({{0.0, 0.0}, {1.0, 0.8}, {2.0, 0.5}}, 1.0),
                  std::domain_error);  // decreasing ordinate
  CHECK_THROWS_AS(DistributionFunction({{0.0, 0.0}, {1.0, 0.5}}, 0.3),
                  std::domain_error);  // value_at_inf below last ordinate
  CHECK_THROWS_AS(DistributionFunction({{0.0, 0.0}, {std::nan(""), 0.5}}, 1.0),
                  std::domain_error);
}

TEST_CASE("eval: step function and closed form") {
  const DistributionFunction e0 = epsilon0();
  CHECK(e0(5.0) == doctest::Approx(1.0));
  CHECK(e0(0.0) == 0.0);
  CHECK(e0.eval(ExtendedNonNegReal::infinity()) == 1.0);
  CHECK_THROWS_AS(e0(-1.0), std::domain_error);

  // x/(x+1) on integer knots: exact at the knots.
  std::vector<Knot> knots;
  for (int i = 0; i <= 64; ++i) {
    const double x = static_cast<double>(i);
    knots.push_back({x, x / (x + 1.0)});
  }
  const DistributionFunction f(std::move(knots), 1.0);
  CHECK(f(1.0) == doctest::Approx(0.5));
  CHECK(f(200.0) == doctest::Approx(64.0 / 65.0));  // constant beyond the last knot
}

TEST_CASE("left limit at infinity separates D+ from Delta+") {
  CHECK(epsilon0().left_limit_at_inf() == 1.0);
  CHECK(epsilon_inf().left_limit_at_inf() == 0.0);
  CHECK(epsilon0().in_d_plus());
  CHECK_FALSE(epsilon_inf().in_d_plus());

  // 0.5 x/(x+1): analytic limit 0.5; cross-check by evaluating far out.
  std::vector<Knot> knots;
  for (double x = 0.0; x <= 128.0; x += 0.5) {
    knots.push_back({x, 0.5 * x / (x + 1.0)});
  }
  const DistributionFunction g(std::move(knots), 0.5);
  CHECK(g.left_limit_at_inf() == doctest::Approx(0.5));
  CHECK(0.5 * 1e6 / (1e6 + 1.0) == doctest::Approx(0.5).epsilon(1e-5));
  CHECK_FALSE(g.in_d_plus());

  CHECK(rational_df(2.0).left_limit_at_inf() == 1.0);  // x/(x+2) -> 1
}

TEST_CASE("pointwise order") {
  const GridSpec grid;
  const DistributionFunction f1 = rational_df(1.0);
  const DistributionFunction f2 = rational_df(2.0);

  CHECK(pointwise_leq(f2, f1, grid));        // x/(x+2) <= x/(x+1)
  CHECK(pointwise_leq(f1, f1, grid));        // reflexive
  CHECK_FALSE(pointwise_leq(f1, f2, grid));  // fails at x=1: 0.5 > 1/3

  // eps0 maximal, eps_inf minimal for random functions.
  std::mt19937_64 rng(42);
  for (int i = 0; i < 50; ++i) {
    const DistributionFunction f = random_distribution_function(rng);
    CHECK(pointwise_leq(f, epsilon0(grid), grid));
    CHECK(pointwise_leq(epsilon_inf(), f, grid));
  }
}

TEST_CASE("pointwise order is a partial order on random triples") {
  const GridSpec grid;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const DistributionFunction a = random_distribution_function(rng);
    const DistributionFunction b = random_distribution_function(rng);
    const DistributionFunction c = random_distribution_function(rng);

    CHECK(pointwise_leq(a, a, grid));
    // antisymmetry up to tol: a <= b and b <= a force grid agreement
    if (pointwise_leq(a, b, grid) && pointwise_leq(b, a, grid)) {
      CHECK(df_distance(a, b, grid) <= 2.0 * grid.tol_eq);
    }
    // transitivity
    if (pointwise_leq(a, b, grid) && pointwise_leq(b, c, grid)) {
      CHECK(pointwise_leq(a, c, grid));
    }
    // min/max envelopes bracket both arguments
    CHECK(pointwise_leq(pointwise_min(a, b), a, grid));
    CHECK(pointwise_leq(b, pointwise_max(a, b), grid));
  }
}

TEST_CASE("eval is non-decreasing on random abscissa pairs") {
  const GridSpec grid;
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> xs(0.0, 20.0);
  const DistributionFunction f = random_distribution_function(rng);
  for (int i = 0; i < 1000; ++i) {
    double x1 = xs(rng), x2 = xs(rng);
    if (x1 > x2) std::swap(x1, x2);
    CHECK(f(x1) <= f(x2) + grid.tol_eq);
  }
}

TEST_CASE("df_distance: identical, extreme and analytic cases") {
  const GridSpec grid;
  const DistributionFunction f1 = rational_df(1.0);
  const DistributionFunction f2 = rational_df(2.0);

  CHECK(df_distance(f1, f1, grid) == 0.0);
  CHECK(df_distance(epsilon0(grid), epsilon_inf(), grid) == doctest::Approx(1.0));

  // max of x/(x+1) - x/(x+2) is (sqrt(2)-1)^2 at x = sqrt(2); oracle: dense scan.
  double oracle = 0.0;
  for (double x = 0.0; x <= 100.0; x += 1e-3) {
    oracle = std::max(oracle, x / (x + 1.0) - x / (x + 2.0));
  }
  CHECK(oracle ==
        doctest::Approx((std::sqrt(2.0) - 1.0) * (std::sqrt(2.0) - 1.0)).epsilon(1e-6));
  const double d = df_distance(f1, f2, grid);
  CHECK(d > 0.0);
  CHECK(d <= 0.2);
  CHECK(d == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("D+ membership is exactly left limit 1") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const DistributionFunction f = random_distribution_function(rng);
    CHECK(f.in_d_plus(1e-9) == (f.left_limit_at_inf() >= 1.0 - 1e-9));
  }
}

TEST_CASE("csv emission samples the grid") {
  const GridSpec grid(0.25, 1.0);
  std::ostringstream os;
  write_csv(os, epsilon0(grid), grid);
  CHECK(os.str() == "x,F\n0,0\n0.25,1\n0.5,1\n0.75,1\n1,1\n");
}
