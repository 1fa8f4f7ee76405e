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

#include "pnspace/norm_family.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pnspace {

NormFamily NormFamily::ex22(double a) {
  if (!(std::isfinite(a) && a > 0.0 && a < 1.0)) {
    throw std::domain_error("ex22: a in (0,1) violated");
  }
  return NormFamily(Kind::Ex22, "ex22", a);
}

NormFamily NormFamily::ex25() { return NormFamily(Kind::Ex25, "ex25", 1.0); }

NormFamily NormFamily::simple() { return NormFamily(Kind::Simple, "simple", 1.0); }

NormFamily NormFamily::broken_eps0() {
  return NormFamily(Kind::BrokenEps0, "broken_eps0", 1.0);
}

double NormFamily::value_for_norm(double nrm, double x) const {
  if (std::isnan(x) || x < 0.0) {
    throw std::domain_error("NormFamily: argument must be >= 0");
  }
  if (nrm == 0.0 || kind_ == Kind::BrokenEps0) {
    return x > 0.0 ? 1.0 : 0.0;  // nu_theta = eps0 (and the broken control everywhere)
  }
  switch (kind_) {
    case Kind::Ex22:
      return x == 0.0 ? 0.0 : a_ * x / (x + nrm);
    case Kind::Ex25:
      return x / (x + nrm);
    case Kind::Simple:
      return x > nrm ? 1.0 : 0.0;
    case Kind::BrokenEps0:
      break;  // handled above
  }
  return 0.0;
}

double NormFamily::limit_for_norm(double nrm) const {
  if (nrm == 0.0) return 1.0;
  switch (kind_) {
    case Kind::Ex22:
      return a_;
    case Kind::Ex25:
    case Kind::Simple:
    case Kind::BrokenEps0:
      return 1.0;
  }
  return 1.0;
}

double NormFamily::value(const Vector& p, double x) const {
  return value_for_norm(p.norm(), x);
}

double NormFamily::limit_at_inf(const Vector& p) const {
  return limit_for_norm(p.norm());
}

DistributionFunction NormFamily::distribution_for_norm(double nrm,
                                                       const GridSpec& grid) const {
  if (nrm == 0.0 || kind_ == Kind::BrokenEps0) {
    return epsilon0(grid);
  }
  if (kind_ == Kind::Simple) {
    // Exact: a flat zero stretch, then the encoded jump to 1.
    const double w = grid.jump_width();
    return DistributionFunction({{0.0, 0.0}, {nrm, 0.0}, {nrm + w, 1.0}}, 1.0);
  }

  // Curvature of x/(x+c) concentrates near 0 on the scale of c = |p|:
  // linear knots below c, geometrically spaced knots from c to the horizon.
  // Interpolation error stays below ~2.5e-4 with a few hundred knots.
  std::vector<double> xs;
  xs.push_back(0.0);
  for (int j = 1; j < 32; ++j) {
    const double x = nrm * static_cast<double>(j) / 32.0;
    if (x >= grid.x_max) break;
    xs.push_back(x);
  }
  const double ratio = std::pow(2.0, 1.0 / 16.0);
  for (double x = nrm; x < grid.x_max; x *= ratio) {
    xs.push_back(x);
  }
  xs.push_back(grid.x_max);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Knot> knots;
  knots.reserve(xs.size());
  for (double x : xs) {
    knots.push_back({x, value_for_norm(nrm, x)});
  }
  return DistributionFunction(std::move(knots), limit_for_norm(nrm));
}

DistributionFunction NormFamily::distribution(const Vector& p, const GridSpec& grid) const {
  return distribution_for_norm(p.norm(), grid);
}

DistributionFunction NormFamily::radius_for_sup_norm(double sup_norm,
                                                     const GridSpec& grid) const {
  if (std::isnan(sup_norm) || sup_norm < 0.0) {
    throw std::domain_error("radius_for_sup_norm: sup_norm must be >= 0 or +inf");
  }
  if (std::isinf(sup_norm)) {
    return epsilon_inf();
  }
  return distribution_for_norm(sup_norm, grid);
}

double NormFamily::radius_value_for_sup_norm(double sup_norm, double x) const {
  if (std::isinf(sup_norm)) return 0.0;
  return value_for_norm(sup_norm, x);
}

}  // namespace pnspace
