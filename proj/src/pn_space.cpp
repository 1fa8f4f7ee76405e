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

#include "pnspace/pn_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace pnspace {

namespace {

void require_dim(const PNSpace& space, const Vector& p) {
  if (p.dim() != space.dim) {
    throw std::invalid_argument("PNSpace: point dimension mismatch");
  }
}

// Strided grid abscissae for pointwise audits; keeps N3/N4 convolution
// comparisons at a few hundred points per pair.
std::vector<double> audit_abscissae(const GridSpec& grid, std::size_t target = 257) {
  const std::size_t n = grid.point_count();
  const std::size_t stride = std::max<std::size_t>(1, n / target);
  std::vector<double> xs;
  xs.reserve(target + 2);
  for (std::size_t i = 0; i < n; i += stride) xs.push_back(grid.point(i));
  if (xs.back() < grid.x_max) xs.push_back(grid.x_max);
  return xs;
}

}  // namespace

DistributionFunction norm_eval(const PNSpace& space, const Vector& p,
                               const GridSpec& grid) {
  require_dim(space, p);
  return space.norm.distribution(p, grid);
}

double norm_value(const PNSpace& space, const Vector& p, double x) {
  require_dim(space, p);
  return space.norm.value(p, x);
}

bool SpaceAxiomReport::all_pass() const {
  for (const AxiomCheck* c : {&n1_forward, &n1_reverse, &n2, &n3, &n4}) {
    if (c->status == AxiomStatus::Fail) return false;
  }
  return true;
}

SpaceAxiomReport check_axioms(const PNSpace& space, const std::vector<Vector>& points,
                              const std::vector<double>& alphas, const GridSpec& grid) {
  if (points.empty()) {
    throw std::invalid_argument("check_axioms: sample points must be non-empty");
  }
  for (const Vector& p : points) require_dim(space, p);

  SpaceAxiomReport report;
  const DistributionFunction e0 = epsilon0(grid);
  const std::vector<double> xs = audit_abscissae(grid);
  const Vector theta = Vector::zero(space.dim);

  // N1 forward: nu_theta = eps0.
  report.n1_forward.axiom = "N1 (nu_theta = eps0)";
  {
    const double d = df_distance(norm_eval(space, theta, grid), e0, grid);
    report.n1_forward.worst_violation = d;
    report.n1_forward.status = d <= grid.tol_eq ? AxiomStatus::Pass : AxiomStatus::Fail;
    if (report.n1_forward.status == AxiomStatus::Fail) {
      report.n1_forward.witness.p = theta;
    }
  }

  // N1 reverse, sampled: nu_p != eps0 for every sampled p != theta.
  report.n1_reverse.axiom = "N1 reverse (nu_p = eps0 only if p = theta)";
  report.n1_reverse.note = "sampled";
  report.n1_reverse.status = AxiomStatus::Pass;
  for (const Vector& p : points) {
    if (p.norm() <= grid.tol_eq) continue;
    const double d = df_distance(norm_eval(space, p, grid), e0, grid);
    if (d <= grid.tol_eq) {
      report.n1_reverse.status = AxiomStatus::Fail;
      report.n1_reverse.witness.p = p;
      break;
    }
  }

  // N2: nu_{-p} = nu_p, exact family symmetry.
  report.n2.axiom = "N2 (nu_{-p} = nu_p)";
  report.n2.status = AxiomStatus::Pass;
  for (const Vector& p : points) {
    const Vector m = -p;
    for (double x : xs) {
      const double d = std::fabs(norm_value(space, p, x) - norm_value(space, m, x));
      if (d > report.n2.worst_violation) {
        report.n2.worst_violation = d;
        report.n2.witness.p = p;
        report.n2.witness.x = x;
      }
    }
  }
  if (report.n2.worst_violation > grid.tol_eq) report.n2.status = AxiomStatus::Fail;

  // N3: nu_{p+q} >= tau(nu_p, nu_q), pointwise with convolution tolerance.
  report.n3.axiom = "N3 (nu_{p+q} >= tau(nu_p, nu_q))";
  report.n3.status = AxiomStatus::Pass;
  {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < points.size() && pairs.size() < 24; ++i) {
      for (std::size_t j = i; j < points.size() && pairs.size() < 24; ++j) {
        pairs.emplace_back(i, j);
      }
    }
    for (const auto& [i, j] : pairs) {
      const Vector& p = points[i];
      const Vector& q = points[j];
      const DistributionFunction rhs =
          space.tau.apply(norm_eval(space, p, grid), norm_eval(space, q, grid), grid);
      const Vector sum = p + q;
      for (double x : xs) {
        const double v = rhs(x) - norm_value(space, sum, x);
        if (v > report.n3.worst_violation) {
          report.n3.worst_violation = v;
          report.n3.witness.p = p;
          report.n3.witness.q = q;
          report.n3.witness.x = x;
        }
      }
    }
    if (report.n3.worst_violation > kConvolutionTol) report.n3.status = AxiomStatus::Fail;
  }

  // N4: nu_p <= tau*(nu_{alpha p}, nu_{(1-alpha) p}).
  report.n4.axiom = "N4 (nu_p <= tau*(nu_{alpha p}, nu_{(1-alpha) p}))";
  report.n4.status = AxiomStatus::Pass;
  for (const Vector& p : points) {
    for (double alpha : alphas) {
      if (alpha < 0.0 || alpha > 1.0) {
        throw std::invalid_argument("check_axioms: alpha outside [0, 1]");
      }
      const DistributionFunction rhs = space.tau_star.apply(
          norm_eval(space, alpha * p, grid), norm_eval(space, (1.0 - alpha) * p, grid),
          grid);
      for (double x : xs) {
        const double v = norm_value(space, p, x) - rhs(x);
        if (v > report.n4.worst_violation) {
          report.n4.worst_violation = v;
          report.n4.witness.p = p;
          report.n4.witness.alpha = alpha;
          report.n4.witness.x = x;
        }
      }
    }
  }
  if (report.n4.worst_violation > kConvolutionTol) report.n4.status = AxiomStatus::Fail;

  return report;
}

std::vector<double> default_alpha_samples(int extra, std::uint64_t seed) {
  std::vector<double> alphas = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < extra; ++i) alphas.push_back(unit(rng));
  return alphas;
}

double serstnev_residual(const PNSpace& space, const Vector& p, const LambdaScalar& lambda,
                         double x) {
  const double lhs = norm_value(space, lambda.value * p, x);
  const double rhs = norm_value(space, p, x / lambda.abs());
  return lhs - rhs;
}

double phi_serstnev_residual(const PNSpace& space, const Vector& p,
                             const LambdaScalar& lambda, double x) {
  if (!space.phi.has_value()) {
    throw std::invalid_argument("phi-Serstnev check: space has no phi configured");
  }
  const PhiTransform& phi = *space.phi;
  const double lhs = norm_value(space, lambda.value * p, x);
  const double scaled = phi.phi(x) / lambda.abs();
  if (std::isinf(scaled)) {
    return lhs - space.norm.limit_at_inf(p);
  }
  const double rhs = norm_value(space, p, phi.phi_hat(scaled));
  return lhs - rhs;
}

namespace {

template <typename Residual>
IdentityCheckReport run_identity_check(const std::vector<Vector>& points,
                                       const std::vector<double>& lambdas,
                                       const GridSpec& grid, double tol,
                                       Residual residual) {
  IdentityCheckReport report;
  const std::vector<double> xs = audit_abscissae(grid);
  for (const Vector& p : points) {
    for (double l : lambdas) {
      const LambdaScalar lambda(l);
      for (double x : xs) {
        const double r = std::fabs(residual(p, lambda, x));
        ++report.triples_checked;
        if (r > report.max_residual) {
          report.max_residual = r;
          report.worst.p = p;
          report.worst.alpha = l;
          report.worst.x = x;
        }
      }
    }
  }
  report.pass = report.max_residual <= tol;
  return report;
}

}  // namespace

IdentityCheckReport check_serstnev(const PNSpace& space, const std::vector<Vector>& points,
                                   const std::vector<double>& lambdas,
                                   const GridSpec& grid, double tol) {
  return run_identity_check(points, lambdas, grid, tol,
                            [&](const Vector& p, const LambdaScalar& l, double x) {
                              return serstnev_residual(space, p, l, x);
                            });
}

IdentityCheckReport check_phi_serstnev(const PNSpace& space,
                                       const std::vector<Vector>& points,
                                       const std::vector<double>& lambdas,
                                       const GridSpec& grid, double tol) {
  if (!space.phi.has_value()) {
    throw std::invalid_argument("phi-Serstnev check: space has no phi configured");
  }
  return run_identity_check(points, lambdas, grid, tol,
                            [&](const Vector& p, const LambdaScalar& l, double x) {
                              return phi_serstnev_residual(space, p, l, x);
                            });
}

CharacteristicReport is_characteristic(const PNSpace& space,
                                       const std::vector<Vector>& points, double tol) {
  if (points.empty()) {
    throw std::invalid_argument("is_characteristic: points must be non-empty");
  }
  CharacteristicReport report;
  report.characteristic = true;
  for (const Vector& p : points) {
    require_dim(space, p);
    const double limit = space.norm.limit_at_inf(p);
    if (limit < 1.0 - tol) {
      report.characteristic = false;
      report.witness = p;
      report.witness_limit = limit;
      break;
    }
  }
  return report;
}

bool check_lemma_1_3(const PNSpace& space, const Vector& p, double alpha, double beta,
                     const GridSpec& grid) {
  if (std::fabs(alpha) > std::fabs(beta)) {
    throw std::invalid_argument("check_lemma_1_3 requires |alpha| <= |beta|");
  }
  return pointwise_leq(norm_eval(space, beta * p, grid), norm_eval(space, alpha * p, grid),
                       grid);
}

bool in_strong_neighborhood(const PNSpace& space, const Vector& p, double lambda,
                            const Vector& q) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::domain_error("strong neighborhood: lambda must be positive");
  }
  return norm_value(space, p - q, lambda) > 1.0 - lambda;
}

ConvergenceReport is_strongly_convergent(const PNSpace& space,
                                         const std::vector<Vector>& sequence,
                                         const Vector& limit,
                                         const std::vector<double>& lambdas) {
  if (sequence.empty()) {
    throw std::invalid_argument("is_strongly_convergent: empty sequence");
  }
  ConvergenceReport report;
  report.verdict = true;
  for (double lambda : lambdas) {
    LambdaTailIndex tail{lambda, true, 0};
    // Least N with all later given terms inside N_limit(lambda).
    std::size_t n = 0;
    for (std::size_t i = sequence.size(); i-- > 0;) {
      if (!in_strong_neighborhood(space, limit, lambda, sequence[i])) {
        n = i + 1;
        break;
      }
    }
    if (n >= sequence.size()) {
      tail.attained = false;
      report.verdict = false;
    }
    tail.tail_index = n;
    report.per_lambda.push_back(tail);
  }
  return report;
}

ConvergenceReport is_strongly_cauchy(const PNSpace& space,
                                     const std::vector<Vector>& sequence,
                                     const std::vector<double>& lambdas) {
  if (sequence.empty()) {
    throw std::invalid_argument("is_strongly_cauchy: empty sequence");
  }
  ConvergenceReport report;
  report.verdict = true;
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) {
      throw std::domain_error("is_strongly_cauchy: lambda must be positive");
    }
    // N = 1 + the largest lower index participating in a violating pair.
    std::size_t n = 0;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
      for (std::size_t j = i + 1; j < sequence.size(); ++j) {
        if (norm_value(space, sequence[i] - sequence[j], lambda) <= 1.0 - lambda) {
          n = std::max(n, i + 1);
          break;  // later j only raise min(i, j) to the same i
        }
      }
    }
    LambdaTailIndex tail{lambda, n + 1 < sequence.size(), n};
    if (!tail.attained) report.verdict = false;
    report.per_lambda.push_back(tail);
  }
  return report;
}

}  // namespace pnspace
