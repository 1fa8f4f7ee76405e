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

#ifndef PNSPACE_DISTRIBUTION_FUNCTION_HPP
#define PNSPACE_DISTRIBUTION_FUNCTION_HPP

#include <iosfwd>
#include <vector>

#include "pnspace/extended_real.hpp"
#include "pnspace/grid.hpp"

namespace pnspace {

struct Knot {
  double x = 0.0;
  double y = 0.0;
};

/// A distance distribution function: non-decreasing, left-continuous,
/// F(0) = 0, with the value at +inf fixed to 1 by convention.
///
/// Represented as a piecewise-linear interpolant through strictly increasing
/// knots, constant after the last knot. Jumps are encoded as steep segments
/// of width GridSpec::jump_width(), so the interpolant itself is continuous
/// and the left-limit convention is automatic: evaluation at the foot of an
/// encoded jump returns the pre-jump value.
///
/// `value_at_inf` stores the left limit at +inf, which may be below 1; the
/// function belongs to the proper subclass D+ exactly when that limit is 1.
class DistributionFunction {
 public:
  DistributionFunction(std::vector<Knot> knots, double value_at_inf);

  /// Left-continuous evaluation at finite x >= 0. Throws std::domain_error
  /// for negative x.
  double operator()(double x) const;

  /// Evaluation on [0, +inf]; eval at +inf is 1 exactly.
  double eval(const ExtendedNonNegReal& x) const;

  /// l^- F(+inf).
  double left_limit_at_inf() const { return value_at_inf_; }

  bool in_d_plus(double tol = 1e-9) const { return value_at_inf_ >= 1.0 - tol; }

  const std::vector<Knot>& knots() const { return knots_; }

  /// Abscissa of the last knot; the function is constant beyond it.
  double support_end() const { return knots_.back().x; }

  /// Largest value attained at finite arguments (the last knot's ordinate).
  double max_finite_value() const { return knots_.back().y; }

 private:
  std::vector<Knot> knots_;
  double value_at_inf_;
};

/// Unit step at 0+: the maximal element of Delta+. The jump is encoded on
/// [0, grid.jump_width()].
DistributionFunction epsilon0(const GridSpec& grid = GridSpec());

/// Identically 0 on [0, +inf) with zero left limit at +inf: the minimal
/// element.
DistributionFunction epsilon_inf();

/// Pointwise order F <= G, checked on the union of both knot sets and the
/// uniform grid, with slack grid.tol_eq, plus the left limits at +inf.
bool pointwise_leq(const DistributionFunction& f, const DistributionFunction& g,
                   const GridSpec& grid = GridSpec());

/// Uniform-grid sup distance between two distribution functions. Grid points
/// sit at multiples of mesh, so sub-mesh jump encodings never dominate the
/// comparison (a Levy-flavored reading of weak-convergence distance).
/// Returns exactly 0 when the functions agree within grid.tol_eq everywhere
/// on the grid.
double df_distance(const DistributionFunction& f, const DistributionFunction& g,
                   const GridSpec& grid = GridSpec());

/// Pointwise min/max on the union of knot sets (used by order-related checks
/// and the probabilistic radius).
DistributionFunction pointwise_min(const DistributionFunction& f,
                                   const DistributionFunction& g);
DistributionFunction pointwise_max(const DistributionFunction& f,
                                   const DistributionFunction& g);

/// Emits "x,F(x)" lines sampled on the uniform grid.
void write_csv(std::ostream& out, const DistributionFunction& f,
               const GridSpec& grid = GridSpec());

}  // namespace pnspace

#endif  // PNSPACE_DISTRIBUTION_FUNCTION_HPP
