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

#ifndef PNSPACE_VECTOR_HPP
#define PNSPACE_VECTOR_HPP

#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

namespace pnspace {

/// A carrier point in R^n (n >= 1). The optional rational flag marks
/// membership in Q^n for spaces whose carrier is rational; floating point
/// cannot represent that property intrinsically, so it travels with the
/// point.
struct Vector {
  std::vector<double> coords;
  std::optional<bool> rational;

  Vector() = default;

  explicit Vector(std::vector<double> c, std::optional<bool> rational_flag = std::nullopt)
      : coords(std::move(c)), rational(rational_flag) {
    if (coords.empty()) {
      throw std::domain_error("Vector: dimension must be >= 1");
    }
    for (double v : coords) {
      if (!std::isfinite(v)) {
        throw std::domain_error("Vector: coordinates must be finite");
      }
    }
  }

  static Vector zero(std::size_t dim) {
    return Vector(std::vector<double>(dim, 0.0), true);
  }

  /// Convenience for 1-D carriers.
  static Vector scalar(double v, std::optional<bool> rational_flag = std::nullopt) {
    return Vector({v}, rational_flag);
  }

  std::size_t dim() const { return coords.size(); }

  double norm() const {
    double sum = 0.0;
    for (double v : coords) sum += v * v;
    return std::sqrt(sum);
  }

  bool is_zero(double tol = 0.0) const { return norm() <= tol; }

  Vector operator+(const Vector& o) const {
    require_same_dim(o);
    Vector r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
    r.rational = merge_flags(rational, o.rational);
    return r;
  }

  Vector operator-(const Vector& o) const {
    require_same_dim(o);
    Vector r = *this;
    for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
    r.rational = merge_flags(rational, o.rational);
    return r;
  }

  Vector operator-() const {
    Vector r = *this;
    for (double& v : r.coords) v = -v;
    return r;
  }

  friend Vector operator*(double a, const Vector& p) {
    if (!std::isfinite(a)) {
      throw std::domain_error("Vector: scalar must be finite");
    }
    Vector r = p;
    for (double& v : r.coords) v *= a;
    r.rational = std::nullopt;  // rational * irrational scalar is undecided
    return r;
  }

  void require_same_dim(const Vector& o) const {
    if (coords.size() != o.coords.size()) {
      throw std::invalid_argument("Vector: dimension mismatch");
    }
  }

 private:
  static std::optional<bool> merge_flags(std::optional<bool> a, std::optional<bool> b) {
    if (a.has_value() && b.has_value()) {
      return *a && *b ? std::optional<bool>(true) : std::nullopt;
    }
    return std::nullopt;
  }
};

/// Scalar multiplier in the scaling laws; must be nonzero.
struct LambdaScalar {
  double value;

  explicit LambdaScalar(double v) : value(v) {
    if (!std::isfinite(v) || v == 0.0) {
      throw std::domain_error("LambdaScalar: value must be finite and nonzero");
    }
  }

  double abs() const { return std::fabs(value); }
};

}  // namespace pnspace

#endif  // PNSPACE_VECTOR_HPP
