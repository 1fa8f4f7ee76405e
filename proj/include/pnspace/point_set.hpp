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

#ifndef PNSPACE_POINT_SET_HPP
#define PNSPACE_POINT_SET_HPP

#include <string>
#include <vector>

#include "pnspace/vector.hpp"

namespace pnspace {

/// A subset of the carrier: an explicit finite list, a parametric family with
/// a closed-form radius rule, or a sampled approximation of a described set.
class PointSet {
 public:
  enum class Kind { Explicit, Parametric, Sampled };
  enum class Family { None, IntervalRationals, Naturals };

  static PointSet explicit_set(std::vector<Vector> points);
  static PointSet sampled(std::vector<Vector> points, std::string description);

  /// [a, b] intersected with Q on a 1-D rational carrier; a, b may be
  /// irrational. Requires a < b and 0 <= a.
  static PointSet interval_rationals(double a, double b);

  /// {m : m in N}, 1-D; unbounded, so its radius is eps_inf.
  static PointSet naturals();

  Kind kind() const { return kind_; }
  Family family() const { return family_; }
  std::size_t dim() const { return dim_; }
  const std::string& description() const { return description_; }

  /// Explicit/sampled members; throws std::logic_error for parametric sets.
  const std::vector<Vector>& points() const;

  /// Largest member norm; +inf for the naturals family.
  double sup_norm() const;

  /// Membership test. For IntervalRationals the vector must carry
  /// rational = true; for Naturals it must be a positive integer within tol.
  bool contains(const Vector& v, double tol = 1e-9) const;

  /// Deterministic member sample for probing parametric families (explicit
  /// sets return their members, truncated to n).
  std::vector<Vector> sample_members(std::size_t n) const;

  double interval_a() const { return a_; }
  double interval_b() const { return b_; }

 private:
  PointSet() = default;

  Kind kind_ = Kind::Explicit;
  Family family_ = Family::None;
  std::size_t dim_ = 1;
  std::vector<Vector> points_;
  std::string description_;
  double a_ = 0.0;
  double b_ = 0.0;
};

}  // namespace pnspace

#endif  // PNSPACE_POINT_SET_HPP
