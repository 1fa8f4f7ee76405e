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

#include "pnspace/phi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace pnspace {

PhiTransform PhiTransform::validate(const MonotonePwl& candidate, const GridSpec& grid) {
  // phi(0) = 0 is structural in MonotonePwl (first knot (0,0)).
  // phi(+inf) = +inf is syntactic in the tail declaration:
  if (candidate.tail() == MonotonePwl::Tail::Constant) {
    throw PhiValidationError("phi(+inf) = +inf requires a positive final slope or a jump-to-inf tail",
                             candidate.last_x());
  }

  // phi(x) > 0 for x > 0, checked at x = mesh and at all positive knots.
  for (const Knot& k : candidate.knots()) {
    if (k.x > 0.0 && !(k.y > 0.0)) {
      throw PhiValidationError("phi(x) > 0 for x > 0", k.x);
    }
  }
  {
    const double probe = std::min(grid.mesh, candidate.last_x() > 0.0
                                                 ? candidate.last_x() / 2.0
                                                 : grid.mesh);
    if (!(candidate(probe) > 0.0)) {
      throw PhiValidationError("phi(x) > 0 for x > 0", probe);
    }
  }

  const bool strictly = candidate.strictly_increasing();
  const bool bijective = strictly && candidate.tail() == MonotonePwl::Tail::Slope;
  const bool bounded = strictly && candidate.tail() == MonotonePwl::Tail::JumpToInf &&
                       candidate.tail_param() == candidate.last_x();
  const double bound = candidate.tail() == MonotonePwl::Tail::JumpToInf
                           ? candidate.tail_param()
                           : std::numeric_limits<double>::infinity();

  MonotonePwl hat = candidate.quasi_inverse();
  return PhiTransform(candidate, std::move(hat), bijective, bounded, bound);
}

PhiTransform PhiTransform::identity() {
  return validate(MonotonePwl::identity());
}

QuasiInverseReport check_quasi_inverse_inequalities(const PhiTransform& phi,
                                                    int samples, const GridSpec& grid,
                                                    std::uint64_t seed) {
  QuasiInverseReport report;
  std::mt19937_64 rng(seed);

  // Arguments where phi is finite.
  const MonotonePwl& fn = phi.phi_fn();
  const double x_hi = std::isfinite(phi.domain_bound())
                          ? phi.domain_bound()
                          : std::max(grid.x_max, fn.last_x());
  std::uniform_real_distribution<double> xdist(0.0, x_hi);

  // Ordinates where phi_hat is finite: phi_hat jumps to +inf only past a
  // constant tail, which validation excludes, so any finite y works; sample
  // up to a little past the last finite phi value reached on [0, x_hi].
  const double y_hi = fn(x_hi) * 1.25 + 1.0;
  std::uniform_real_distribution<double> ydist(0.0, y_hi);

  auto check_x = [&](double x) {
    const double slack = phi.phi_hat(phi.phi(x)) - x;
    report.worst_left_slack = std::max(report.worst_left_slack, slack);
    ++report.points_checked;
  };
  auto check_y = [&](double y) {
    const double slack = phi.phi(phi.phi_hat(y)) - y;
    report.worst_right_slack = std::max(report.worst_right_slack, slack);
  };

  for (const Knot& k : fn.knots()) {
    check_x(k.x);
    check_y(k.y);
  }
  for (int i = 0; i < samples; ++i) {
    check_x(xdist(rng));
    check_y(ydist(rng));
  }

  const double tol = grid.tol_eq;
  report.pass = report.worst_left_slack <= tol && report.worst_right_slack <= tol;
  return report;
}

}  // namespace pnspace
