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

#ifndef PNSPACE_NORM_FAMILY_HPP
#define PNSPACE_NORM_FAMILY_HPP

#include <string>

#include "pnspace/distribution_function.hpp"
#include "pnspace/grid.hpp"
#include "pnspace/vector.hpp"

namespace pnspace {

/// Closed-form probabilistic norm families. Each maps a point p to a
/// distribution function that depends on p only through |p| (Euclidean), with
/// nu_theta = eps0:
///
///   "ex22":   nu_p(x) = a x / (x + |p|), a in (0,1); left limit a < 1.
///   "ex25":   nu_p(t) = t / (t + |p|); left limit 1.
///   "simple": nu_p = unit step at |p|+ (the classical normed-space
///             embedding).
///
/// `value` is the exact closed form; `distribution` samples it into the
/// piecewise-linear representation with knots graded toward 0 (linear in
/// |p|/16 below |p|, geometric above) so interpolation error stays below
/// ~1e-4 with a few hundred knots.
class NormFamily {
 public:
  enum class Kind { Ex22, Ex25, Simple, BrokenEps0 };

  static NormFamily ex22(double a);
  static NormFamily ex25();
  static NormFamily simple();

  /// Negative control for the axiom auditor: nu_p = eps0 for every p, which
  /// violates the backward direction of the origin axiom. Not part of the
  /// JSON wire format.
  static NormFamily broken_eps0();

  /// Exact nu_p(x) for finite x >= 0.
  double value(const Vector& p, double x) const;

  /// l^- nu_p(+inf).
  double limit_at_inf(const Vector& p) const;

  /// nu_p sampled as a DistributionFunction.
  DistributionFunction distribution(const Vector& p, const GridSpec& grid) const;

  /// Radius of a set whose norms fill [0, sup_norm]: these families are
  /// non-increasing in |p|, so the pointwise inf is attained at sup_norm.
  /// An unbounded set (sup_norm = +inf) yields eps_inf.
  DistributionFunction radius_for_sup_norm(double sup_norm, const GridSpec& grid) const;
  double radius_value_for_sup_norm(double sup_norm, double x) const;

  Kind kind() const { return kind_; }
  const std::string& id() const { return id_; }
  double param_a() const { return a_; }

 private:
  NormFamily(Kind kind, std::string id, double a) : kind_(kind), id_(std::move(id)), a_(a) {}

  double value_for_norm(double nrm, double x) const;
  double limit_for_norm(double nrm) const;
  DistributionFunction distribution_for_norm(double nrm, const GridSpec& grid) const;

  Kind kind_;
  std::string id_;
  double a_ = 1.0;
};

}  // namespace pnspace

#endif  // PNSPACE_NORM_FAMILY_HPP
