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

#ifndef PNSPACE_GRID_HPP
#define PNSPACE_GRID_HPP

#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace pnspace {

/// Evaluation grid and comparison tolerances shared by the numeric routines.
///
/// `tol_eq` is the tolerance for exact algebra (closed forms, order checks);
/// comparisons that involve convolution output use kConvolutionTol instead,
/// since discretized convolutions carry O(mesh) error.
struct GridSpec {
  double mesh = 0.015625;  // 2^-6
  double x_max = 128.0;
  double tol_eq = 1e-9;

  GridSpec() = default;

  GridSpec(double mesh_in, double x_max_in, double tol_eq_in = 1e-9)
      : mesh(mesh_in), x_max(x_max_in), tol_eq(tol_eq_in) {
    if (!(std::isfinite(mesh) && mesh > 0.0)) {
      throw std::domain_error("GridSpec: mesh must be a positive finite real");
    }
    if (!(std::isfinite(x_max) && x_max >= 1.0)) {
      throw std::domain_error("GridSpec: x_max must be finite and >= 1");
    }
    if (!(std::isfinite(tol_eq) && tol_eq > 0.0)) {
      throw std::domain_error("GridSpec: tol_eq must be positive");
    }
  }

  std::size_t point_count() const {
    return static_cast<std::size_t>(std::floor(x_max / mesh)) + 1;
  }

  double point(std::size_t i) const { return static_cast<double>(i) * mesh; }

  /// Abscissa step used to encode unit jumps as steep segments. Kept well
  /// below the grid resolution so jump encodings never land on grid points.
  double jump_width() const { return mesh / 1024.0; }
};

/// Tolerance for comparisons whose operands went through a discretized
/// sup/inf-convolution.
inline constexpr double kConvolutionTol = 1e-3;

}  // namespace pnspace

#endif  // PNSPACE_GRID_HPP
