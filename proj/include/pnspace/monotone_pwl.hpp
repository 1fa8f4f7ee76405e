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

#ifndef PNSPACE_MONOTONE_PWL_HPP
#define PNSPACE_MONOTONE_PWL_HPP

#include <vector>

#include "pnspace/distribution_function.hpp"

namespace pnspace {

/// A non-decreasing left-continuous piecewise-linear function on [0, +inf].
///
/// Duplicate abscissae encode jump discontinuities: at a jump the knot with
/// the lower ordinate comes first and is the value returned at the jump
/// abscissa itself (left continuity). Behavior past the last knot is one of:
///
///   - Constant:  f(x) = last ordinate forever,
///   - Slope:     f(x) grows linearly with the given positive slope
///                (so f(+inf) = +inf),
///   - JumpToInf: f(x) = +inf for x > b; f stays at the last ordinate on
///                [last knot, b]. Evaluation at b itself returns the finite
///                left value, preserving left continuity.
///
/// The class is closed under the exact quasi-inverse
///   f^(t) = sup{ u : f(u) < t },
/// which maps rising segments to rising segments, flats to jumps and jumps to
/// flats. This is what makes quasi-inverse computations and quasi-inverse
/// addition exact rather than grid-approximate.
class MonotonePwl {
 public:
  enum class Tail { Constant, Slope, JumpToInf };

  MonotonePwl(std::vector<Knot> knots, Tail tail, double tail_param = 0.0);

  static MonotonePwl identity();

  /// Left-continuous evaluation; returns +inf past a JumpToInf tail.
  double operator()(double x) const;

  bool finite_at(double x) const;

  /// Exact quasi-inverse sup{u : f(u) < t}, with f^(0) = 0 and
  /// f^(+inf) = +inf.
  MonotonePwl quasi_inverse() const;

  const std::vector<Knot>& knots() const { return knots_; }
  Tail tail() const { return tail_; }
  /// Slope for Tail::Slope, jump abscissa for Tail::JumpToInf, unused
  /// otherwise.
  double tail_param() const { return tail_param_; }

  double last_x() const { return knots_.back().x; }
  double last_y() const { return knots_.back().y; }

  bool has_jump() const;            // any duplicated abscissa
  bool strictly_increasing() const; // no flats and no jumps

 private:
  std::vector<Knot> knots_;
  Tail tail_;
  double tail_param_;
};

/// View of a distribution function's finite part as a MonotonePwl
/// (constant tail at the last ordinate).
MonotonePwl pwl_from_distribution(const DistributionFunction& f);

/// Converts back to a DistributionFunction. Jumps become steep segments of
/// width `jump_width`; the tail must be Constant.
DistributionFunction distribution_from_pwl(const MonotonePwl& f, double value_at_inf,
                                           double jump_width);

/// Pointwise sum of two monotone pwl functions on the common domain
/// [0, x_cap], used by quasi-inverse addition. Both inputs must be finite on
/// [0, x_cap].
MonotonePwl pwl_sum(const MonotonePwl& f, const MonotonePwl& g, double x_cap);

}  // namespace pnspace

#endif  // PNSPACE_MONOTONE_PWL_HPP
