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

#ifndef PNSPACE_TRIANGLE_HPP
#define PNSPACE_TRIANGLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "pnspace/distribution_function.hpp"
#include "pnspace/grid.hpp"
#include "pnspace/tnorm.hpp"

namespace pnspace {

/// Sup-convolution tau_T(F,G)(x) = sup_{s+t=x} T(F(s), G(t)), evaluated on
/// the uniform grid. For each output abscissa the split range is decomposed
/// into cells by the union of both knot sets; within a cell the objective is
/// min-of-linear (T = M) or a concave quadratic (T = pi), so the per-cell
/// maximum is closed-form. Custom t-norms fall back to mesh-spaced split
/// candidates inside each cell.
DistributionFunction tau_t_convolve(const TNorm& t, const DistributionFunction& f,
                                    const DistributionFunction& g,
                                    const GridSpec& grid = GridSpec());

/// Inf-convolution tau_{T*}(F,G)(x) = inf_{s+t=x} T*(F(s), G(t)); same cell
/// scheme with per-cell minima.
DistributionFunction tau_tstar_convolve(const TConorm& s, const DistributionFunction& f,
                                        const DistributionFunction& g,
                                        const GridSpec& grid = GridSpec());

/// tau_M via quasi-inverse addition: (tau_M(F,G))^ = F^ + G^. Exact for the
/// piecewise-linear representation; must agree with the brute-force grid sup
/// within kConvolutionTol.
DistributionFunction tau_m_fast(const DistributionFunction& f,
                                const DistributionFunction& g,
                                const GridSpec& grid = GridSpec());

/// Interpolation error bound for convolution output between grid abscissae:
/// mesh times the smaller of the two inputs' maximal segment slopes (the
/// built-in operations are 1-Lipschitz in each argument).
double convolution_error_bound(const DistributionFunction& f,
                               const DistributionFunction& g, const GridSpec& grid);

/// A triangle function on Delta+. tau_T and tau_Tstar carry their underlying
/// t-norm/t-conorm; tau_M uses the quasi-inverse-addition fast path and
/// coincides with tau_T under T = minimum. Custom operators exist so that
/// deliberately broken candidates can be pushed through the axiom checker.
class TriangleFunction {
 public:
  enum class Kind { TauT, TauTstar, TauM, Custom };

  using CustomFn = std::function<DistributionFunction(
      const DistributionFunction&, const DistributionFunction&, const GridSpec&)>;

  static TriangleFunction tau_t(TNorm t);
  static TriangleFunction tau_tstar(TConorm s);
  static TriangleFunction tau_m();
  static TriangleFunction custom(std::string name, CustomFn fn);

  DistributionFunction apply(const DistributionFunction& f,
                             const DistributionFunction& g,
                             const GridSpec& grid = GridSpec()) const;

  Kind kind() const { return kind_; }
  /// Wire name: "tauM", "tauT:pi", "tauT:M", "tauTstar:max", "tauTstar:pisum".
  const std::string& name() const { return name_; }

 private:
  TriangleFunction(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
  std::optional<TNorm> tnorm_;
  std::optional<TConorm> tconorm_;
  CustomFn custom_;
};

/// One sampled law of the triangle-function axioms.
struct TriangleLawResult {
  std::string law;
  bool pass = false;
  double worst_violation = 0.0;
  int witness_sample = -1;  // index of the random draw that attained the worst
};

struct TriangleAxiomReport {
  TriangleLawResult associativity;
  TriangleLawResult commutativity;
  TriangleLawResult monotonicity;
  TriangleLawResult unit;
  double tolerance = 0.0;

  bool all_pass() const {
    return associativity.pass && commutativity.pass && monotonicity.pass && unit.pass;
  }
  double worst_violation() const;
};

/// Draws `samples` random distribution-function triples and checks the four
/// defining laws within 2*mesh. Deterministic for a fixed seed.
TriangleAxiomReport check_triangle_axioms(const TriangleFunction& tau, int samples,
                                          const GridSpec& grid = GridSpec(),
                                          std::uint64_t seed = 7);

}  // namespace pnspace

#endif  // PNSPACE_TRIANGLE_HPP
