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

#include "pnspace/distribution_function.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace pnspace {

DistributionFunction::DistributionFunction(std::vector<Knot> knots,
                                           double value_at_inf)
    : knots_(std::move(knots)), value_at_inf_(value_at_inf) {
  if (knots_.empty()) {
    throw std::domain_error("DistributionFunction: empty knot list");
  }
  if (knots_.front().x != 0.0 || knots_.front().y != 0.0) {
    throw std::domain_error("DistributionFunction: first knot must be (0, 0)");
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    const Knot& k = knots_[i];
    if (!std::isfinite(k.x) || !std::isfinite(k.y)) {
      throw std::domain_error("DistributionFunction: non-finite knot");
    }
    if (k.y < 0.0 || k.y > 1.0) {
      throw std::domain_error("DistributionFunction: knot ordinate outside [0, 1]");
    }
    if (i > 0) {
      if (!(k.x > knots_[i - 1].x)) {
        throw std::domain_error(
            "DistributionFunction: knot abscissae must be strictly increasing");
      }
      if (k.y < knots_[i - 1].y) {
        throw std::domain_error("DistributionFunction: knot ordinates must be non-decreasing");
      }
    }
  }
  if (std::isnan(value_at_inf_) || value_at_inf_ < knots_.back().y ||
      value_at_inf_ > 1.0) {
    throw std::domain_error(
        "DistributionFunction: value_at_inf must lie in [last knot y, 1]");
  }
}

double DistributionFunction::operator()(double x) const {
  if (std::isnan(x)) {
    throw std::domain_error("DistributionFunction: NaN argument");
  }
  if (x < 0.0) {
    throw std::domain_error("DistributionFunction: negative argument");
  }
  if (x >= knots_.back().x) {
    return knots_.back().y;
  }
  // First knot with abscissa > x; x lies on the segment ending there.
  auto it = std::upper_bound(
      knots_.begin(), knots_.end(), x,
      [](double v, const Knot& k) { return v < k.x; });
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  const double t = (x - lo.x) / (hi.x - lo.x);
  return lo.y + t * (hi.y - lo.y);
}

double DistributionFunction::eval(const ExtendedNonNegReal& x) const {
  if (x.is_infinite()) {
    return 1.0;  // Delta+ convention: the value at +inf is defined to be 1.
  }
  return (*this)(x.finite_value());
}

DistributionFunction epsilon0(const GridSpec& grid) {
  return DistributionFunction({{0.0, 0.0}, {grid.jump_width(), 1.0}}, 1.0);
}

DistributionFunction epsilon_inf() {
  return DistributionFunction({{0.0, 0.0}}, 0.0);
}

namespace {

std::vector<double> merged_abscissae(const DistributionFunction& f,
                                     const DistributionFunction& g) {
  std::vector<double> xs;
  xs.reserve(f.knots().size() + g.knots().size());
  for (const Knot& k : f.knots()) xs.push_back(k.x);
  for (const Knot& k : g.knots()) xs.push_back(k.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

bool pointwise_leq(const DistributionFunction& f, const DistributionFunction& g,
                   const GridSpec& grid) {
  for (double x : merged_abscissae(f, g)) {
    if (f(x) > g(x) + grid.tol_eq) return false;
  }
  const std::size_t n = grid.point_count();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.point(i);
    if (f(x) > g(x) + grid.tol_eq) return false;
  }
  return f.left_limit_at_inf() <= g.left_limit_at_inf() + grid.tol_eq;
}

double df_distance(const DistributionFunction& f, const DistributionFunction& g,
                   const GridSpec& grid) {
  double sup = 0.0;
  const std::size_t n = grid.point_count();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.point(i);
    sup = std::max(sup, std::fabs(f(x) - g(x)));
    // Both constant past their supports: nothing changes beyond this point.
    if (x >= f.support_end() && x >= g.support_end()) break;
  }
  return sup <= grid.tol_eq ? 0.0 : sup;
}

namespace {

template <typename Combine>
DistributionFunction pointwise_combine(const DistributionFunction& f,
                                       const DistributionFunction& g,
                                       Combine combine) {
  std::vector<Knot> out;
  const std::vector<double> xs = merged_abscissae(f, g);
  out.reserve(xs.size());
  for (double x : xs) {
    out.push_back({x, combine(f(x), g(x))});
  }
  // Segments of min/max can kink between shared knots where the two
  // interpolants cross; insert the crossing abscissae so the result is exact.
  std::vector<Knot> refined;
  refined.reserve(out.size() * 2);
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    refined.push_back(out[i]);
    const double x0 = xs[i], x1 = xs[i + 1];
    const double d0 = f(x0) - g(x0), d1 = f(x1) - g(x1);
    if (d0 * d1 < 0.0) {
      const double xc = x0 + (x1 - x0) * (d0 / (d0 - d1));
      if (xc > x0 && xc < x1) {
        refined.push_back({xc, combine(f(xc), g(xc))});
      }
    }
  }
  refined.push_back(out.back());
  // Guard against rounding defeating monotonicity.
  for (std::size_t i = 1; i < refined.size(); ++i) {
    refined[i].y = std::max(refined[i].y, refined[i - 1].y);
  }
  const double vinf = std::max(combine(f.left_limit_at_inf(), g.left_limit_at_inf()),
                               refined.back().y);
  return DistributionFunction(std::move(refined), vinf);
}

}  // namespace

DistributionFunction pointwise_min(const DistributionFunction& f,
                                   const DistributionFunction& g) {
  return pointwise_combine(f, g, [](double a, double b) { return std::min(a, b); });
}

DistributionFunction pointwise_max(const DistributionFunction& f,
                                   const DistributionFunction& g) {
  return pointwise_combine(f, g, [](double a, double b) { return std::max(a, b); });
}

void write_csv(std::ostream& out, const DistributionFunction& f,
               const GridSpec& grid) {
  out << "x,F\n";
  const std::size_t n = grid.point_count();
  for (std::size_t i = 0; i < n; ++i) {
    const double x = grid.point(i);
    out << x << ',' << f(x) << '\n';
  }
}

}  // namespace pnspace
