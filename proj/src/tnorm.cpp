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

#include "pnspace/tnorm.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pnspace {

namespace {

void check_unit_interval(double x, double y) {
  if (std::isnan(x) || std::isnan(y) || x < 0.0 || x > 1.0 || y < 0.0 || y > 1.0) {
    throw std::domain_error("t-norm/t-conorm arguments must lie in [0, 1]");
  }
}

}  // namespace

OperatorLawReport check_operator_laws(const std::function<double(double, double)>& fn,
                                      double identity_element, int samples,
                                      std::uint64_t seed) {
  OperatorLawReport report;
  report.commutative = report.associative = report.monotone = report.has_identity = true;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double tol = 1e-12;

  auto note = [&](bool& flag, double violation) {
    report.worst_violation = std::max(report.worst_violation, violation);
    if (violation > tol) flag = false;
  };

  for (int i = 0; i < samples; ++i) {
    double x = unit(rng), y = unit(rng), z = unit(rng);
    if (i == 0) { x = 0.0; y = 1.0; z = 0.5; }  // pin the corners once

    note(report.commutative, std::fabs(fn(x, y) - fn(y, x)));
    note(report.associative, std::fabs(fn(fn(x, y), z) - fn(x, fn(y, z))));
    note(report.has_identity, std::fabs(fn(x, identity_element) - x));

    const double lo = std::min(x, y), hi = std::max(x, y);
    const double diff = fn(lo, z) - fn(hi, z);
    note(report.monotone, diff > 0.0 ? diff : 0.0);
  }
  return report;
}

TNorm TNorm::minimum() {
  return TNorm(Kind::Min, "M", [](double x, double y) { return std::min(x, y); });
}

TNorm TNorm::product() {
  return TNorm(Kind::Product, "pi", [](double x, double y) { return x * y; });
}

TNorm TNorm::custom(std::string id, std::function<double(double, double)> fn,
                    int samples, std::uint64_t seed) {
  const OperatorLawReport report = check_operator_laws(fn, 1.0, samples, seed);
  if (!report.all_pass()) {
    throw std::domain_error("custom t-norm '" + id + "' failed the axiom sampler");
  }
  return TNorm(Kind::Custom, std::move(id), std::move(fn));
}

double TNorm::operator()(double x, double y) const {
  check_unit_interval(x, y);
  return fn_(x, y);
}

TConorm TConorm::maximum() {
  return TConorm(Kind::Max, "max", [](double x, double y) { return std::max(x, y); });
}

TConorm TConorm::probabilistic_sum() {
  return TConorm(Kind::ProbSum, "pisum",
                 [](double x, double y) { return x + y - x * y; });
}

TConorm TConorm::custom(std::string id, std::function<double(double, double)> fn,
                        int samples, std::uint64_t seed) {
  const OperatorLawReport report = check_operator_laws(fn, 0.0, samples, seed);
  if (!report.all_pass()) {
    throw std::domain_error("custom t-conorm '" + id + "' failed the axiom sampler");
  }
  return TConorm(Kind::Custom, std::move(id), std::move(fn));
}

double TConorm::operator()(double x, double y) const {
  check_unit_interval(x, y);
  return fn_(x, y);
}

TConorm dual_conorm(const TNorm& t) {
  switch (t.kind()) {
    case TNorm::Kind::Min:
      return TConorm::maximum();
    case TNorm::Kind::Product:
      return TConorm::probabilistic_sum();
    case TNorm::Kind::Custom:
      break;
  }
  auto fn = [t](double x, double y) { return 1.0 - t(1.0 - x, 1.0 - y); };
  return TConorm(TConorm::Kind::Custom, t.id() + "*", fn);
}

TNorm dual_tnorm(const TConorm& s) {
  switch (s.kind()) {
    case TConorm::Kind::Max:
      return TNorm::minimum();
    case TConorm::Kind::ProbSum:
      return TNorm::product();
    case TConorm::Kind::Custom:
      break;
  }
  return TNorm::custom(s.id() + "*",
                       [s](double x, double y) { return 1.0 - s(1.0 - x, 1.0 - y); });
}

}  // namespace pnspace
