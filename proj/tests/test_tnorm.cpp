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

#include "pnspace/tnorm.hpp"

using namespace pnspace;

TEST_CASE("built-in values") {
  const TNorm m = TNorm::minimum();
  const TNorm pi = TNorm::product();
  CHECK(m(0.3, 0.7) == 0.3);
  CHECK(pi(0.5, 0.5) == 0.25);
  CHECK_THROWS_AS(m(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(pi(0.5, 1.5), std::domain_error);
}

TEST_CASE("identity law, exact, on 100 random points") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const TNorm m = TNorm::minimum();
  const TNorm pi = TNorm::product();
  const TConorm mx = TConorm::maximum();
  const TConorm ps = TConorm::probabilistic_sum();
  for (int i = 0; i < 100; ++i) {
    const double x = unit(rng);
    CHECK(m(x, 1.0) == x);
    CHECK(pi(x, 1.0) == x);
    CHECK(mx(x, 0.0) == x);
    CHECK(ps(x, 0.0) == x);
  }
}

TEST_CASE("t-norm laws exact on sampled triples") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (const TNorm& t : {TNorm::minimum(), TNorm::product()}) {
    for (int i = 0; i < 200; ++i) {
      const double x = unit(rng), y = unit(rng), z = unit(rng);
      CHECK(t(x, y) == t(y, x));  // bitwise for both built-ins
      if (t.kind() == TNorm::Kind::Min) {
        CHECK(t(t(x, y), z) == t(x, t(y, z)));
      } else {
        // IEEE products reassociate within 1 ulp.
        CHECK(t(t(x, y), z) == doctest::Approx(t(x, t(y, z))).epsilon(1e-15));
      }
      const double lo = std::min(x, y), hi = std::max(x, y);
      CHECK(t(lo, z) <= t(hi, z));
    }
  }
}

TEST_CASE("duality: dual of M is max, dual of pi is probabilistic sum") {
  const TConorm dual_m = dual_conorm(TNorm::minimum());
  const TConorm dual_pi = dual_conorm(TNorm::product());
  CHECK(dual_m(0.3, 0.7) == doctest::Approx(0.7));   // 1 - min(0.7, 0.3)
  CHECK(dual_pi(0.5, 0.5) == doctest::Approx(0.75)); // 1 - 0.25

  // Formula agreement on a 101x101 grid.
  const TNorm m = TNorm::minimum();
  const TNorm pi = TNorm::product();
  for (int i = 0; i <= 100; ++i) {
    for (int j = 0; j <= 100; ++j) {
      const double x = i / 100.0, y = j / 100.0;
      CHECK(dual_m(x, y) == doctest::Approx(1.0 - m(1.0 - x, 1.0 - y)));
      CHECK(dual_pi(x, y) == doctest::Approx(1.0 - pi(1.0 - x, 1.0 - y)));
    }
  }
}

TEST_CASE("duality is an involution on a 101x101 grid") {
  for (const TNorm& t : {TNorm::minimum(), TNorm::product()}) {
    const TNorm back = dual_tnorm(dual_conorm(t));
    for (int i = 0; i <= 100; ++i) {
      for (int j = 0; j <= 100; ++j) {
        const double x = i / 100.0, y = j / 100.0;
        CHECK(back(x, y) == doctest::Approx(t(x, y)));
      }
    }
  }
}

TEST_CASE("custom operations go through the axiom sampler") {
  // Lukasiewicz t-norm is a valid t-norm.
  const TNorm luk = TNorm::custom(
      "lukasiewicz", [](double x, double y) { return std::max(0.0, x + y - 1.0); });
  CHECK(luk(0.7, 0.8) == doctest::Approx(0.5));

  // Arithmetic mean is not associative and has no identity: rejected.
  CHECK_THROWS_AS(
      TNorm::custom("mean", [](double x, double y) { return 0.5 * (x + y); }),
      std::domain_error);
  CHECK_THROWS_AS(
      TConorm::custom("mean", [](double x, double y) { return 0.5 * (x + y); }),
      std::domain_error);
}

TEST_CASE("law sampler reports the worst violation") {
  const OperatorLawReport good =
      check_operator_laws([](double x, double y) { return x * y; }, 1.0, 300, 9);
  CHECK(good.all_pass());
  CHECK(good.worst_violation <= 1e-12);

  const OperatorLawReport bad =
      check_operator_laws([](double x, double y) { return 0.5 * (x + y); }, 1.0, 300, 9);
  CHECK_FALSE(bad.all_pass());
  CHECK(bad.worst_violation > 0.01);
}
