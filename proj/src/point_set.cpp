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

#include "pnspace/point_set.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pnspace {

PointSet PointSet::explicit_set(std::vector<Vector> points) {
  if (points.empty()) {
    throw std::invalid_argument("PointSet: explicit set must be non-empty");
  }
  PointSet s;
  s.kind_ = Kind::Explicit;
  s.dim_ = points.front().dim();
  for (const Vector& p : points) {
    if (p.dim() != s.dim_) {
      throw std::invalid_argument("PointSet: mixed dimensions");
    }
  }
  s.points_ = std::move(points);
  s.description_ = "explicit set (" + std::to_string(s.points_.size()) + " points)";
  return s;
}

PointSet PointSet::sampled(std::vector<Vector> points, std::string description) {
  PointSet s = explicit_set(std::move(points));
  s.kind_ = Kind::Sampled;
  s.description_ = std::move(description);
  return s;
}

PointSet PointSet::interval_rationals(double a, double b) {
  if (!(std::isfinite(a) && std::isfinite(b) && 0.0 <= a && a < b)) {
    throw std::invalid_argument("PointSet: interval requires 0 <= a < b");
  }
  PointSet s;
  s.kind_ = Kind::Parametric;
  s.family_ = Family::IntervalRationals;
  s.dim_ = 1;
  s.a_ = a;
  s.b_ = b;
  s.description_ = "[a, b] ∩ Q with a = " + std::to_string(a) + ", b = " + std::to_string(b);
  return s;
}

PointSet PointSet::naturals() {
  PointSet s;
  s.kind_ = Kind::Parametric;
  s.family_ = Family::Naturals;
  s.dim_ = 1;
  s.description_ = "{m : m in N}";
  return s;
}

const std::vector<Vector>& PointSet::points() const {
  if (kind_ == Kind::Parametric) {
    throw std::logic_error("PointSet: parametric sets have no explicit member list");
  }
  return points_;
}

double PointSet::sup_norm() const {
  switch (kind_) {
    case Kind::Explicit:
    case Kind::Sampled: {
      double m = 0.0;
      for (const Vector& p : points_) m = std::max(m, p.norm());
      return m;
    }
    case Kind::Parametric:
      if (family_ == Family::Naturals) {
        return std::numeric_limits<double>::infinity();
      }
      return std::max(std::fabs(a_), std::fabs(b_));
  }
  return 0.0;
}

bool PointSet::contains(const Vector& v, double tol) const {
  if (v.dim() != dim_) return false;
  switch (kind_) {
    case Kind::Explicit:
    case Kind::Sampled:
      return std::any_of(points_.begin(), points_.end(),
                         [&](const Vector& p) { return (p - v).norm() <= tol; });
    case Kind::Parametric: {
      const double x = v.coords[0];
      if (family_ == Family::Naturals) {
        const double r = std::round(x);
        return r >= 1.0 && std::fabs(x - r) <= tol;
      }
      // [a, b] ∩ Q: rationality is carried by the flag, not the float.
      return v.rational.value_or(false) && x >= a_ - tol && x <= b_ + tol;
    }
  }
  return false;
}

std::vector<Vector> PointSet::sample_members(std::size_t n) const {
  std::vector<Vector> out;
  switch (kind_) {
    case Kind::Explicit:
    case Kind::Sampled:
      out.assign(points_.begin(),
                 points_.begin() + static_cast<std::ptrdiff_t>(std::min(n, points_.size())));
      break;
    case Kind::Parametric:
      if (family_ == Family::Naturals) {
        for (std::size_t m = 1; m <= n; ++m) {
          out.push_back(Vector::scalar(static_cast<double>(m), true));
        }
      } else {
        // Rationals k/D for a fixed denominator, evenly spread across [a, b].
        const double denom = 4096.0;
        const long long k_lo = static_cast<long long>(std::ceil(a_ * denom));
        const long long k_hi = static_cast<long long>(std::floor(b_ * denom));
        const long long span = std::max<long long>(1, k_hi - k_lo);
        const long long count = std::max<long long>(1, static_cast<long long>(n));
        for (long long i = 0; i < count; ++i) {
          const long long k = k_lo + (span * i) / std::max<long long>(1, count - 1);
          out.push_back(Vector::scalar(static_cast<double>(k) / denom, true));
        }
      }
      break;
  }
  return out;
}

}  // namespace pnspace
