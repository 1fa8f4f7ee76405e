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

#ifndef PNSPACE_PN_SPACE_HPP
#define PNSPACE_PN_SPACE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pnspace/norm_family.hpp"
#include "pnspace/phi.hpp"
#include "pnspace/triangle.hpp"
#include "pnspace/vector.hpp"

namespace pnspace {

/// A probabilistic normed space over R^n: carrier dimension, norm family and
/// the (tau, tau*) pair, optionally equipped with a transform phi for the
/// generalized scaling law.
struct PNSpace {
  std::size_t dim = 1;
  NormFamily norm = NormFamily::ex25();
  TriangleFunction tau = TriangleFunction::tau_t(TNorm::product());
  TriangleFunction tau_star = TriangleFunction::tau_m();
  std::optional<PhiTransform> phi;
};

/// nu_p as a sampled DistributionFunction. Throws std::invalid_argument on
/// dimension mismatch.
DistributionFunction norm_eval(const PNSpace& space, const Vector& p,
                               const GridSpec& grid = GridSpec());

/// Exact closed-form nu_p(x).
double norm_value(const PNSpace& space, const Vector& p, double x);

enum class AxiomStatus { Pass, Fail, Inconclusive };

struct AxiomWitness {
  std::optional<Vector> p;
  std::optional<Vector> q;
  std::optional<double> alpha;
  std::optional<double> x;
};

struct AxiomCheck {
  std::string axiom;
  AxiomStatus status = AxiomStatus::Inconclusive;
  double worst_violation = 0.0;
  AxiomWitness witness;
  std::string note;
};

struct SpaceAxiomReport {
  AxiomCheck n1_forward;   // nu_theta = eps0
  AxiomCheck n1_reverse;   // nu_p != eps0 for sampled p != theta ("pass (sampled)")
  AxiomCheck n2;           // nu_{-p} = nu_p
  AxiomCheck n3;           // nu_{p+q} >= tau(nu_p, nu_q)
  AxiomCheck n4;           // nu_p <= tau*(nu_{alpha p}, nu_{(1-alpha) p})
  bool all_pass() const;
};

/// Audits N1-N4 on the sampled points and N4 scalars. N1's reverse direction
/// is sampled, not proven; N3/N4 are checked pointwise on a strided grid with
/// the convolution tolerance.
SpaceAxiomReport check_axioms(const PNSpace& space, const std::vector<Vector>& points,
                              const std::vector<double>& alphas,
                              const GridSpec& grid = GridSpec());

/// {0, 1/4, 1/2, 3/4, 1} plus `extra` uniform draws: deterministic coverage
/// of the endpoints where nu scales down to eps0.
std::vector<double> default_alpha_samples(int extra = 10, std::uint64_t seed = 5);

struct IdentityCheckReport {
  bool pass = false;
  double max_residual = 0.0;
  AxiomWitness worst;
  std::size_t triples_checked = 0;
};

/// Residual of the plain scaling law  nu_{lambda p}(x) - nu_p(x / |lambda|),
/// closed-form path.
double serstnev_residual(const PNSpace& space, const Vector& p, const LambdaScalar& lambda,
                         double x);

/// Residual of the generalized law  nu_{lambda p}(x) - nu_p(phi^(phi(x)/|lambda|)).
/// Throws std::invalid_argument when the space has no phi.
double phi_serstnev_residual(const PNSpace& space, const Vector& p,
                             const LambdaScalar& lambda, double x);

/// Asserts the scaling identities over all (p, lambda) pairs at strided grid
/// abscissae, within tol.
IdentityCheckReport check_serstnev(const PNSpace& space, const std::vector<Vector>& points,
                                   const std::vector<double>& lambdas,
                                   const GridSpec& grid = GridSpec(), double tol = 1e-6);
IdentityCheckReport check_phi_serstnev(const PNSpace& space,
                                       const std::vector<Vector>& points,
                                       const std::vector<double>& lambdas,
                                       const GridSpec& grid = GridSpec(),
                                       double tol = 1e-6);

struct CharacteristicReport {
  bool characteristic = false;
  std::optional<Vector> witness;  // a sampled p with l^- nu_p(+inf) < 1
  double witness_limit = 1.0;
};

/// True iff l^- nu_p(+inf) = 1 (within tol) for every sampled point.
CharacteristicReport is_characteristic(const PNSpace& space,
                                       const std::vector<Vector>& points,
                                       double tol = 1e-9);

/// Lemma: |alpha| <= |beta| implies nu_{beta p} <= nu_{alpha p}. Throws
/// std::invalid_argument when the precondition fails.
bool check_lemma_1_3(const PNSpace& space, const Vector& p, double alpha, double beta,
                     const GridSpec& grid = GridSpec());

/// q in N_p(lambda), i.e. nu_{p-q}(lambda) > 1 - lambda, evaluated with the
/// exact closed form (strict inequality).
bool in_strong_neighborhood(const PNSpace& space, const Vector& p, double lambda,
                            const Vector& q);

struct LambdaTailIndex {
  double lambda = 0.0;
  bool attained = false;
  std::size_t tail_index = 0;  // least N with the defining property from N on
};

struct ConvergenceReport {
  bool verdict = false;
  std::vector<LambdaTailIndex> per_lambda;
  std::string basis = "prefix-based";
};

/// Prefix-based strong convergence: for each lambda, the least N such that
/// every later given term lies in N_limit(lambda). The infinite-tail
/// quantifier of the definition is certified only on the supplied prefix.
ConvergenceReport is_strongly_convergent(const PNSpace& space,
                                         const std::vector<Vector>& sequence,
                                         const Vector& limit,
                                         const std::vector<double>& lambdas);

/// Prefix-based strong Cauchy check over all pairs beyond N.
ConvergenceReport is_strongly_cauchy(const PNSpace& space,
                                     const std::vector<Vector>& sequence,
                                     const std::vector<double>& lambdas);

}  // namespace pnspace

#endif  // PNSPACE_PN_SPACE_HPP
