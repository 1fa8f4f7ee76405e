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

#ifndef PNSPACE_TNORM_HPP
#define PNSPACE_TNORM_HPP

#include <cstdint>
#include <functional>
#include <string>

namespace pnspace {

/// Outcome of sampling the t-norm/t-conorm axioms on random triples.
struct OperatorLawReport {
  bool commutative = false;
  bool associative = false;
  bool monotone = false;
  bool has_identity = false;
  double worst_violation = 0.0;
  bool all_pass() const { return commutative && associative && monotone && has_identity; }
};

/// A continuous t-norm on [0,1]: commutative, associative, non-decreasing,
/// with 1 as identity. Built-ins are minimum ("M") and product ("pi"); a
/// user-supplied operation is accepted only after passing the axiom sampler.
class TNorm {
 public:
  enum class Kind { Min, Product, Custom };

  static TNorm minimum();
  static TNorm product();
  /// Validates `fn` on sampled triples before accepting it; throws
  /// std::domain_error (with the failed law in the message) on violation.
  static TNorm custom(std::string id, std::function<double(double, double)> fn,
                      int samples = 200, std::uint64_t seed = 1);

  /// Applies the t-norm. Throws std::domain_error outside [0,1]^2.
  double operator()(double x, double y) const;

  Kind kind() const { return kind_; }
  const std::string& id() const { return id_; }

 private:
  TNorm(Kind kind, std::string id, std::function<double(double, double)> fn)
      : kind_(kind), id_(std::move(id)), fn_(std::move(fn)) {}

  Kind kind_;
  std::string id_;
  std::function<double(double, double)> fn_;
};

/// A continuous t-conorm on [0,1]: dual axioms with 0 as identity.
class TConorm {
 public:
  enum class Kind { Max, ProbSum, Custom };

  static TConorm maximum();
  static TConorm probabilistic_sum();  // x + y - xy
  static TConorm custom(std::string id, std::function<double(double, double)> fn,
                        int samples = 200, std::uint64_t seed = 1);

  double operator()(double x, double y) const;

  Kind kind() const { return kind_; }
  const std::string& id() const { return id_; }

 private:
  friend TConorm dual_conorm(const TNorm&);
  TConorm(Kind kind, std::string id, std::function<double(double, double)> fn)
      : kind_(kind), id_(std::move(id)), fn_(std::move(fn)) {}

  Kind kind_;
  std::string id_;
  std::function<double(double, double)> fn_;
};

/// T*(x, y) = 1 - T(1-x, 1-y). The dual of minimum is maximum; the dual of
/// product is the probabilistic sum.
TConorm dual_conorm(const TNorm& t);

/// Inverse direction of the same duality, so dual_tnorm(dual_conorm(T)) == T
/// pointwise.
TNorm dual_tnorm(const TConorm& s);

/// Samples the defining laws of a candidate t-norm (identity element 1) or
/// t-conorm (identity element 0) on `samples` random triples plus the corner
/// cases.
OperatorLawReport check_operator_laws(const std::function<double(double, double)>& fn,
                                      double identity_element, int samples,
                                      std::uint64_t seed);

}  // namespace pnspace

#endif  // PNSPACE_TNORM_HPP
