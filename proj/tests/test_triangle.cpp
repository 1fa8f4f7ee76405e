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
#include <functional>
#include <random>
#include <vector>

#include "pnspace/random.hpp"
#include "pnspace/triangle.hpp"

using namespace pnspace;

namespace {

DistributionFunction sampled_df(const std::function<double(double)>& f, double step,
                                double x_max, double value_at_inf) {
  std::vector<Knot> knots;
  for (double x = 0.0; x <= x_max + step / 2.0; x += step) {
    knots.push_back({x, f(x)});
  }
  return DistributionFunction(std::move(knots), value_at_inf);
}

DistributionFunction rational_df(double c) {
  const GridSpec grid;
  return sampled_df([c](double x) { return x / (x + c); }, grid.mesh, grid.x_max, 1.0);
}

// Independent oracle: dumb fine-grid scan over splits, no cell analysis.
// Presamples both operands so the scan is array reads.
class BruteConvolution {
 public:
  BruteConvolution(const DistributionFunction& f, const DistributionFunction& g,
                   double x_hi, double step)
      : step_(step) {
    const std::size_t n = static_cast<std::size_t>(std::ceil(x_hi / step)) + 1;
    fs_.reserve(n);
    gs_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = static_cast<double>(i) * step;
      fs_.push_back(f(x));
      gs_.push_back(g(x));
    }
  }

  double sup_at(const std::function<double(double, double)>& t, double x) const {
    const std::size_t k = index_of(x);
    double best = 0.0;
    for (std::size_t i = 0; i <= k; ++i) {
      best = std::max(best, t(fs_[i], gs_[k - i]));
    }
    return best;
  }

  double inf_at(const std::function<double(double, double)>& s, double x) const {
    const std::size_t k = index_of(x);
    double best = 1.0;
    for (std::size_t i = 0; i <= k; ++i) {
      best = std::min(best, s(fs_[i], gs_[k - i]));
    }
    return best;
  }

 private:
  std::size_t index_of(double x) const {
    const std::size_t k = static_cast<std::size_t>(std::round(x / step_));
    REQUIRE(k < fs_.size());
    return k;
  }

  double step_;
  std::vector<double> fs_;
  std::vector<double> gs_;
};

double grid_gap(const DistributionFunction& got,
                const std::function<double(double)>& expected, const GridSpec& grid) {
  double worst = 0.0;
  for (std::size_t i = 0; i < grid.point_count(); ++i) {
    const double x = grid.point(i);
    worst = std::max(worst, std::fabs(got(x) - expected(x)));
  }
  return worst;
}

}  // namespace

TEST_CASE("unit law: tau_T(pi, eps0, G) returns G for random G") {
  const GridSpec grid;
  const DistributionFunction e0 = epsilon0(grid);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const DistributionFunction g = random_distribution_function(rng);
    const DistributionFunction out = tau_t_convolve(TNorm::product(), e0, g, grid);
    CHECK(df_distance(out, g, grid) <= 1e-3);
  }
}

TEST_CASE("analytic sup-convolutions of x/(x+1)") {
  const GridSpec grid;
  const DistributionFunction f = rational_df(1.0);

  // Quasi-inverse addition: F^{-1}(y) = y/(1-y) doubles to 2y/(1-y), which
  // inverts to x/(x+2).
  const DistributionFunction m = tau_t_convolve(TNorm::minimum(), f, f, grid);
  CHECK(grid_gap(m, [](double x) { return x / (x + 2.0); }, grid) <= 1e-3);

  // For the product the optimal split is s = t = x/2 by symmetry (log F is
  // concave), so the value is (x/2 / (x/2+1))^2 = x^2/(x+2)^2.
  const DistributionFunction p = tau_t_convolve(TNorm::product(), f, f, grid);
  CHECK(grid_gap(p, [](double x) { return x * x / ((x + 2.0) * (x + 2.0)); }, grid) <= 1e-3);
}

TEST_CASE("inf-convolution with max") {
  const GridSpec grid;
  const DistributionFunction e0 = epsilon0(grid);

  const DistributionFunction unit = tau_tstar_convolve(TConorm::maximum(), e0, e0, grid);
  CHECK(df_distance(unit, e0, grid) <= 1e-3);

  // inf over s+t=x of max(F(s), F(t)) is attained at s = t = x/2.
  const DistributionFunction f = rational_df(1.0);
  const DistributionFunction out = tau_tstar_convolve(TConorm::maximum(), f, f, grid);
  CHECK(grid_gap(out, [](double x) { return x / (x + 2.0); }, grid) <= 1e-3);

  // eps_inf forces the lower envelope below G.
  std::mt19937_64 rng(6);
  const DistributionFunction g = random_distribution_function(rng);
  const DistributionFunction low = tau_tstar_convolve(TConorm::maximum(), epsilon_inf(), g, grid);
  CHECK(pointwise_leq(low, g, grid));
}

TEST_CASE("tau_M: unit, analytic case, exact symmetry") {
  const GridSpec grid;
  const DistributionFunction f1 = rational_df(1.0);
  const DistributionFunction f2 = rational_df(2.0);

  std::mt19937_64 rng(8);
  const DistributionFunction g = random_distribution_function(rng);
  CHECK(df_distance(tau_m_fast(epsilon0(grid), g, grid), g, grid) <= 1e-3);

  // F^{-1} + G^{-1} = y/(1-y) + 2y/(1-y) inverts to x/(x+3).
  const DistributionFunction out = tau_m_fast(f1, f2, grid);
  CHECK(grid_gap(out, [](double x) { return x / (x + 3.0); }, grid) <= 1e-3);

  const DistributionFunction ab = tau_m_fast(f1, f2, grid);
  const DistributionFunction ba = tau_m_fast(f2, f1, grid);
  for (std::size_t i = 0; i < grid.point_count(); i += 7) {
    const double x = grid.point(i);
    CHECK(ab(x) == ba(x));
  }
}

TEST_CASE("tau_M fast path agrees with brute-force sup on random pairs") {
  const GridSpec grid;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> xs(0.0, 26.0);
  const auto tmin = [](double a, double b) { return std::min(a, b); };

  for (int i = 0; i < 100; ++i) {
    const DistributionFunction f = random_distribution_function(rng);
    const DistributionFunction g = random_distribution_function(rng);
    const DistributionFunction fast = tau_m_fast(f, g, grid);
    const DistributionFunction generic = tau_t_convolve(TNorm::minimum(), f, g, grid);
    const BruteConvolution brute(f, g, 27.0, grid.mesh / 128.0);

    for (int k = 0; k < 12; ++k) {
      const double x = std::round(xs(rng) / grid.mesh) * grid.mesh;
      const double reference = brute.sup_at(tmin, x);
      CHECK(std::fabs(fast(x) - reference) <= 1e-3);
      CHECK(std::fabs(generic(x) - reference) <= 1e-3);
    }
  }
}

TEST_CASE("sup-convolution with product agrees with brute force on random pairs") {
  const GridSpec grid;
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> xs(0.0, 26.0);
  const auto tprod = [](double a, double b) { return a * b; };

  for (int i = 0; i < 25; ++i) {
    const DistributionFunction f = random_distribution_function(rng);
    const DistributionFunction g = random_distribution_function(rng);
    const DistributionFunction got = tau_t_convolve(TNorm::product(), f, g, grid);
    const BruteConvolution brute(f, g, 27.0, grid.mesh / 128.0);
    for (int k = 0; k < 8; ++k) {
      const double x = std::round(xs(rng) / grid.mesh) * grid.mesh;
      CHECK(std::fabs(got(x) - brute.sup_at(tprod, x)) <= 1e-3);
    }
  }
}

TEST_CASE("inf-convolution agrees with brute force on random pairs") {
  const GridSpec grid;
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> xs(0.0, 26.0);
  const auto smax = [](double a, double b) { return std::max(a, b); };
  const auto spsum = [](double a, double b) { return a + b - a * b; };

  for (int i = 0; i < 25; ++i) {
    const DistributionFunction f = random_distribution_function(rng);
    const DistributionFunction g = random_distribution_function(rng);
    const DistributionFunction got_max = tau_tstar_convolve(TConorm::maximum(), f, g, grid);
    const DistributionFunction got_ps =
        tau_tstar_convolve(TConorm::probabilistic_sum(), f, g, grid);
    const BruteConvolution brute(f, g, 27.0, grid.mesh / 128.0);
    for (int k = 0; k < 8; ++k) {
      const double x = std::round(xs(rng) / grid.mesh) * grid.mesh;
      CHECK(std::fabs(got_max(x) - brute.inf_at(smax, x)) <= 1e-3);
      CHECK(std::fabs(got_ps(x) - brute.inf_at(spsum, x)) <= 1e-3);
    }
  }
}

TEST_CASE("monotonicity: F <= G implies tau(F,H) <= tau(G,H) + 2 mesh") {
  const GridSpec grid;
  std::mt19937_64 rng(13);
  const std::vector<TriangleFunction> taus = {
      TriangleFunction::tau_t(TNorm::product()), TriangleFunction::tau_m(),
      TriangleFunction::tau_tstar(TConorm::maximum())};
  for (int i = 0; i < 15; ++i) {
    const DistributionFunction a = random_distribution_function(rng);
    const DistributionFunction b = random_distribution_function(rng);
    const DistributionFunction h = random_distribution_function(rng);
    const DistributionFunction lo = pointwise_min(a, b);
    const DistributionFunction hi = pointwise_max(a, b);
    for (const TriangleFunction& tau : taus) {
      const DistributionFunction tl = tau.apply(lo, h, grid);
      const DistributionFunction th = tau.apply(hi, h, grid);
      for (std::size_t k = 0; k < grid.point_count(); k += 3) {
        const double x = grid.point(k);
        CHECK(tl(x) <= th(x) + 2.0 * grid.mesh);
        if (x > tl.support_end() && x > th.support_end()) break;
      }
    }
  }
}

TEST_CASE("convolution output passes the distribution-function validator") {
  const GridSpec grid;
  std::mt19937_64 rng(14);
  for (int i = 0; i < 10; ++i) {
    const DistributionFunction f = random_distribution_function(rng);
    const DistributionFunction g = random_distribution_function(rng);
    // Construction itself revalidates the invariants; spot-check the range.
    for (const TriangleFunction& tau :
         {TriangleFunction::tau_t(TNorm::product()), TriangleFunction::tau_m(),
          TriangleFunction::tau_tstar(TConorm::maximum())}) {
      const DistributionFunction out = tau.apply(f, g, grid);
      CHECK(out(0.0) == 0.0);
      CHECK(out.left_limit_at_inf() >= out.max_finite_value());
      CHECK(out.max_finite_value() <= 1.0);
    }
  }
}

TEST_CASE("grid refinement: halving mesh stays within the previous bound") {
  const GridSpec coarse;
  const GridSpec fine(coarse.mesh / 2.0, coarse.x_max, coarse.tol_eq);
  const DistributionFunction f = rational_df(1.0);
  const auto expected = [](double x) { return x / (x + 2.0); };

  const double gap_coarse =
      grid_gap(tau_t_convolve(TNorm::minimum(), f, f, coarse), expected, coarse);
  const double gap_fine =
      grid_gap(tau_t_convolve(TNorm::minimum(), f, f, fine), expected, coarse);
  CHECK(gap_coarse <= 1e-3);
  CHECK(gap_fine <= gap_coarse + coarse.mesh);
}

TEST_CASE("axiom checker passes the built-ins and fails a broken operator") {
  const GridSpec grid;
  for (const TriangleFunction& tau :
       {TriangleFunction::tau_t(TNorm::product()), TriangleFunction::tau_m(),
        TriangleFunction::tau_tstar(TConorm::maximum())}) {
    const TriangleAxiomReport report = check_triangle_axioms(tau, 50, grid, 7);
    CAPTURE(tau.name());
    CHECK(report.all_pass());
    CHECK(report.worst_violation() <= 2.0 * grid.mesh);
  }

  const TriangleFunction broken = TriangleFunction::custom(
      "broken-eps-inf",
      [](const DistributionFunction&, const DistributionFunction&, const GridSpec&) {
        return epsilon_inf();
      });
  const TriangleAxiomReport report = check_triangle_axioms(broken, 10, grid, 7);
  CHECK_FALSE(report.unit.pass);
  CHECK(report.unit.worst_violation > 0.5);
}

TEST_CASE("error bound reports mesh times the gentler slope") {
  const GridSpec grid;
  const DistributionFunction f = rational_df(1.0);
  const double bound = convolution_error_bound(f, f, grid);
  CHECK(bound > 0.0);
  CHECK(bound <= grid.mesh);  // max slope of x/(x+1) is 1 at the origin
}
