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
#include <limits>
#include <random>

#include "pnspace/phi.hpp"

using namespace pnspace;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// phi(x) = x^2 sampled on knots with matching final slope.
MonotonePwl square_pwl(double step = 0.25, double x_max = 16.0) {
  std::vector<Knot> knots;
  for (double x = 0.0; x <= x_max + step / 2.0; x += step) {
    knots.push_back({x, x * x});
  }
  return MonotonePwl(std::move(knots), MonotonePwl::Tail::Slope, 2.0 * x_max);
}

// phi = 1 on (0, 2], then x - 1: a jump at 0+ encoded as a steep segment,
// a flat stretch, then slope 1.
MonotonePwl flat_segment_pwl(const GridSpec& grid = GridSpec()) {
  const double w = grid.jump_width();
  return MonotonePwl({{0.0, 0.0}, {w, 1.0}, {2.0, 1.0}, {3.0, 2.0}},
                     MonotonePwl::Tail::Slope, 1.0);
}

// Independent oracle: sup{u <= u_max : phi(u) < t} by forward scan.
double brute_quasi_inverse(const MonotonePwl& phi, double t, double u_max, double step) {
  double sup = 0.0;
  for (double u = 0.0; u <= u_max; u += step) {
    const double v = phi.finite_at(u) ? phi(u) : kInf;
    if (v < t) {
      sup = u;
    } else {
      break;  // non-decreasing: once >= t, stays >= t
    }
  }
  return sup;
}

}  // namespace

TEST_CASE("validation accepts identity and the square transform") {
  const PhiTransform id = PhiTransform::identity();
  CHECK(id.bijective());
  CHECK_FALSE(id.bounded_domain());
  CHECK(id.phi(3.5) == 3.5);
  CHECK(id.phi_hat(3.5) == 3.5);

  const PhiTransform sq = PhiTransform::validate(square_pwl());
  CHECK(sq.bijective());
  CHECK(sq.phi(2.0) == 4.0);
}

TEST_CASE("validation rejects violations with a named condition and witness") {
  // phi = 0 on [0,1], then x-1: positivity fails.
  const MonotonePwl zero_start({{0.0, 0.0}, {1.0, 0.0}, {2.0, 1.0}},
                               MonotonePwl::Tail::Slope, 1.0);
  try {
    PhiTransform::validate(zero_start);
    FAIL("expected rejection");
  } catch (const PhiValidationError& e) {
    CHECK(e.condition() == "phi(x) > 0 for x > 0");
    CHECK(e.witness_x() > 0.0);
    CHECK(e.witness_x() <= 1.0);
  }

  // Constant tail: phi(+inf) = +inf cannot hold.
  const MonotonePwl flat_forever({{0.0, 0.0}, {1.0, 1.0}}, MonotonePwl::Tail::Constant);
  CHECK_THROWS_AS(PhiTransform::validate(flat_forever), PhiValidationError);
}

TEST_CASE("bounded-domain transforms are flagged, bijective ones too") {
  // Strictly increasing on [0,1], then jumps to +inf exactly at 1.
  const MonotonePwl m_b({{0.0, 0.0}, {1.0, 5.0}}, MonotonePwl::Tail::JumpToInf, 1.0);
  const PhiTransform phi = PhiTransform::validate(m_b);
  CHECK(phi.bounded_domain());
  CHECK_FALSE(phi.bijective());
  CHECK(phi.domain_bound() == 1.0);

  CHECK_FALSE(PhiTransform::validate(flat_segment_pwl()).bijective());
}

TEST_CASE("quasi-inverse: identity and square") {
  const PhiTransform id = PhiTransform::identity();
  for (double t : {0.0, 0.5, 1.0, 7.25}) {
    CHECK(id.phi_hat(t) == t);
  }

  const PhiTransform sq = PhiTransform::validate(square_pwl());
  CHECK(sq.phi_hat(4.0) == 2.0);  // knot-exact
  CHECK(sq.phi_hat(2.0) == doctest::Approx(std::sqrt(2.0)).epsilon(0.01));
}

TEST_CASE("quasi-inverse of the flat-segment transform") {
  const GridSpec grid;
  const PhiTransform phi = PhiTransform::validate(flat_segment_pwl(grid));

  // The jump of phi at 0+ pins phi_hat to ~0 up to t = 1.
  CHECK(phi.phi_hat(0.5) <= grid.jump_width());
  CHECK(phi.phi_hat(1.0) <= grid.jump_width());
  // The flat stretch at height 1 turns into a jump: phi_hat(1.5) = 2.5.
  CHECK(phi.phi_hat(1.5) == doctest::Approx(2.5));
  // phi(phi_hat(1.5)) = phi(2.5) = 1.5.
  CHECK(phi.phi(phi.phi_hat(1.5)) == doctest::Approx(1.5));
}

TEST_CASE("quasi-inverse agrees with the brute-force sup oracle") {
  const GridSpec grid;
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ts(0.0, 20.0);

  const PhiTransform candidates[] = {PhiTransform::identity(),
                                     PhiTransform::validate(square_pwl()),
                                     PhiTransform::validate(flat_segment_pwl(grid))};
  for (const PhiTransform& phi : candidates) {
    for (int i = 0; i < 1000; ++i) {
      const double t = ts(rng);
      const double exact = phi.phi_hat(t);
      const double brute = brute_quasi_inverse(phi.phi_fn(), t, 64.0, grid.mesh / 16.0);
      CHECK(std::fabs(exact - brute) <= grid.mesh);
    }
  }
}

TEST_CASE("quasi-inverse inequalities hold for every accepted transform") {
  const GridSpec grid;
  for (const PhiTransform& phi :
       {PhiTransform::identity(), PhiTransform::validate(square_pwl()),
        PhiTransform::validate(flat_segment_pwl(grid)),
        PhiTransform::validate(
            MonotonePwl({{0.0, 0.0}, {1.0, 5.0}}, MonotonePwl::Tail::JumpToInf, 1.0))}) {
    const QuasiInverseReport report = check_quasi_inverse_inequalities(phi, 500, grid);
    CHECK(report.pass);
    CHECK(report.worst_left_slack <= grid.tol_eq);
    CHECK(report.worst_right_slack <= grid.tol_eq);
    CHECK(report.points_checked >= 500);
  }
}

TEST_CASE("identity satisfies the inequalities with equality") {
  const PhiTransform id = PhiTransform::identity();
  for (double x : {0.0, 0.1, 1.0, 3.0, 100.0}) {
    CHECK(id.phi_hat(id.phi(x)) == x);
    CHECK(id.phi(id.phi_hat(x)) == x);
  }
  // phi(x) = x^2: phi_hat(phi(3)) = 3 exactly (3 is a knot).
  const PhiTransform sq = PhiTransform::validate(square_pwl());
  CHECK(sq.phi_hat(sq.phi(3.0)) == 3.0);
}

TEST_CASE("bijective transforms invert exactly at every knot") {
  const PhiTransform sq = PhiTransform::validate(square_pwl());
  for (const Knot& k : sq.phi_fn().knots()) {
    CHECK(sq.phi_hat(sq.phi(k.x)) == k.x);
  }
}
