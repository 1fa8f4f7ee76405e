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

#ifndef PNSPACE_PHI_HPP
#define PNSPACE_PHI_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pnspace/grid.hpp"
#include "pnspace/monotone_pwl.hpp"

namespace pnspace {

/// Raised when a candidate fails one of the membership conditions for the
/// class of admissible transforms; carries the violated condition and a
/// witness abscissa.
class PhiValidationError : public std::domain_error {
 public:
  PhiValidationError(std::string condition, double witness_x)
      : std::domain_error("phi rejected: " + condition +
                          " (witness x = " + std::to_string(witness_x) + ")"),
        condition_(std::move(condition)),
        witness_x_(witness_x) {}

  const std::string& condition() const { return condition_; }
  double witness_x() const { return witness_x_; }

 private:
  std::string condition_;
  double witness_x_;
};

/// A validated transform phi: non-decreasing, left-continuous on [0, +inf],
/// phi(0) = 0, phi(+inf) = +inf (positive final slope or a declared
/// jump-to-inf), phi(x) > 0 for x > 0 -- paired with its exact quasi-inverse
/// phi^(t) = sup{u : phi(u) < t}.
class PhiTransform {
 public:
  /// Validates a candidate; throws PhiValidationError naming the failed
  /// condition.
  static PhiTransform validate(const MonotonePwl& candidate,
                               const GridSpec& grid = GridSpec());

  static PhiTransform identity();

  double phi(double x) const { return phi_(x); }
  double phi_hat(double t) const { return phi_hat_(t); }

  const MonotonePwl& phi_fn() const { return phi_; }
  const MonotonePwl& quasi_inverse() const { return phi_hat_; }

  /// True iff phi is bijective on [0,+inf], i.e. phi lies in the
  /// full-domain transform class: strictly increasing with a slope tail.
  bool bijective() const { return bijective_; }

  /// True iff phi matches the bounded-domain class: continuous, strictly
  /// increasing on [0, b] with a declared jump to +inf exactly at b.
  bool bounded_domain() const { return bounded_domain_; }
  double domain_bound() const { return domain_bound_; }  // b; +inf otherwise

 private:
  PhiTransform(MonotonePwl phi, MonotonePwl phi_hat, bool bijective,
               bool bounded_domain, double domain_bound)
      : phi_(std::move(phi)),
        phi_hat_(std::move(phi_hat)),
        bijective_(bijective),
        bounded_domain_(bounded_domain),
        domain_bound_(domain_bound) {}

  MonotonePwl phi_;
  MonotonePwl phi_hat_;
  bool bijective_;
  bool bounded_domain_;
  double domain_bound_;
};

struct QuasiInverseReport {
  bool pass = false;
  /// Worst value of phi_hat(phi(x)) - x over the test points (<= 0 expected).
  double worst_left_slack = 0.0;
  /// Worst value of phi(phi_hat(y)) - y over the test points.
  double worst_right_slack = 0.0;
  int points_checked = 0;
};

/// Asserts phi_hat(phi(x)) <= x and phi(phi_hat(y)) <= y at `samples` random
/// points plus all knots, restricted to arguments where phi is finite. Must
/// pass for every validated transform.
QuasiInverseReport check_quasi_inverse_inequalities(const PhiTransform& phi,
                                                    int samples,
                                                    const GridSpec& grid = GridSpec(),
                                                    std::uint64_t seed = 11);

}  // namespace pnspace

#endif  // PNSPACE_PHI_HPP
