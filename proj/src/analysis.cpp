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

#include "pnspace/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pnspace {

std::string to_string(BoundednessClass cls) {
  switch (cls) {
    case BoundednessClass::CertainlyBounded:
      return "CertainlyBounded";
    case BoundednessClass::PerhapsBounded:
      return "PerhapsBounded";
    case BoundednessClass::PerhapsUnbounded:
      return "PerhapsUnbounded";
    case BoundednessClass::CertainlyUnbounded:
      return "CertainlyUnbounded";
  }
  return "?";
}

DistributionFunction probabilistic_radius(const PNSpace& space, const PointSet& set,
                                          const GridSpec& grid) {
  if (set.kind() == PointSet::Kind::Parametric) {
    // Built-in families are non-increasing in |p|, so the inf over the family
    // is the norm at the sup of member norms (eps_inf when unbounded).
    return space.norm.radius_for_sup_norm(set.sup_norm(), grid);
  }

  const std::vector<Vector>& members = set.points();
  // The inf of finitely many continuous non-decreasing interpolants is again
  // continuous, so the left-regularization is the value itself. Knots: the
  // sampled knots of the extreme members (they carry the curvature scales)
  // plus a strided uniform grid.
  std::set<double> xs;
  const Vector* lo = &members.front();
  const Vector* hi = &members.front();
  for (const Vector& p : members) {
    if (p.norm() < lo->norm()) lo = &p;
    if (p.norm() > hi->norm()) hi = &p;
  }
  for (const Vector* m : {lo, hi}) {
    for (const Knot& k : space.norm.distribution(*m, grid).knots()) xs.insert(k.x);
  }
  const std::size_t n = grid.point_count();
  const std::size_t stride = std::max<std::size_t>(1, n / 1024);
  for (std::size_t i = 0; i < n; i += stride) xs.insert(grid.point(i));
  xs.insert(grid.x_max);

  std::vector<Knot> knots;
  knots.reserve(xs.size());
  double vinf = 1.0;
  for (const Vector& p : members) vinf = std::min(vinf, space.norm.limit_at_inf(p));
  for (double x : xs) {
    double y = 1.0;
    for (const Vector& p : members) {
      y = std::min(y, space.norm.value(p, x));
      if (y == 0.0) break;
    }
    if (!knots.empty() && y < knots.back().y) y = knots.back().y;
    knots.push_back({x, y});
  }
  vinf = std::max(vinf, knots.back().y);
  return DistributionFunction(std::move(knots), vinf);
}

Classification classify_radius(const DistributionFunction& radius, double tol) {
  Classification c;
  c.left_limit = radius.left_limit_at_inf();

  if (radius.max_finite_value() >= 1.0 - tol) {
    c.cls = BoundednessClass::CertainlyBounded;
    for (const Knot& k : radius.knots()) {
      if (k.y >= 1.0 - tol) {
        c.witness_x0 = k.x;
        break;
      }
    }
    // R(0) = 0 < 1, so any witness knot has x > 0.
  } else if (c.left_limit >= 1.0 - tol) {
    c.cls = BoundednessClass::PerhapsBounded;
  } else if (c.left_limit >= tol) {
    c.cls = BoundednessClass::PerhapsUnbounded;
    if (radius.max_finite_value() <= tol) {
      c.diagnostics =
          "left limit in (0,1) but R vanishes at every finite abscissa; "
          "classified by the left-limit criterion";
    }
  } else {
    c.cls = BoundednessClass::CertainlyUnbounded;
    if (radius.max_finite_value() > tol) {
      c.diagnostics =
          "left limit 0 but R is positive at finite abscissae (not eps_inf); "
          "classified by the left-limit criterion";
    }
  }
  c.d_bounded = c.cls == BoundednessClass::CertainlyBounded ||
                c.cls == BoundednessClass::PerhapsBounded;
  return c;
}

BoundednessClass classify_boundedness(const DistributionFunction& radius, double tol) {
  return classify_radius(radius, tol).cls;
}

RadiusReport radius_report(const PNSpace& space, const PointSet& set,
                           const GridSpec& grid) {
  DistributionFunction r = probabilistic_radius(space, set, grid);
  const Classification c = classify_radius(r, grid.tol_eq);
  RadiusReport report{std::move(r),
                      c.cls,
                      c.d_bounded,
                      c.left_limit,
                      c.witness_x0,
                      set.kind() == PointSet::Kind::Sampled ? "sampled" : "exact",
                      c.diagnostics,
                      grid};
  return report;
}

DBoundedWitness d_bounded_witness(const PNSpace& space, const PointSet& set,
                                  const GridSpec& grid) {
  DBoundedWitness result;
  const DistributionFunction r = probabilistic_radius(space, set, grid);
  const Classification c = classify_radius(r, grid.tol_eq);
  const std::vector<Vector> members = set.sample_members(64);

  if (c.d_bounded) {
    result.witness = r;
    result.verified = true;
    for (const Vector& p : members) {
      if (!pointwise_leq(r, space.norm.distribution(p, grid), grid)) {
        result.verified = false;
        result.detail = "radius fails to minorize a sampled member";
        break;
      }
    }
    if (result.verified) {
      result.detail = "G = R_A minorizes every sampled nu_p";
    }
    return result;
  }

  // Not D-bounded: no member of the D+ test family t/(t+c) may minorize all
  // sampled norms.
  result.verified = true;
  for (int k = -2; k <= 10; ++k) {
    const double cpar = std::pow(4.0, k);
    const DistributionFunction g = NormFamily::ex25().radius_for_sup_norm(cpar, grid);
    bool minorizes = true;
    for (const Vector& p : members) {
      if (!pointwise_leq(g, space.norm.distribution(p, grid), grid)) {
        minorizes = false;
        break;
      }
    }
    if (minorizes) {
      result.verified = false;
      std::ostringstream os;
      os << "test d.f. t/(t+" << cpar << ") minorizes all sampled members";
      result.detail = os.str();
      return result;
    }
  }
  result.detail = "no test d.f. from D+ minorizes all sampled nu_p";
  return result;
}

ProbeVerdict topological_boundedness_probe(
    const PNSpace& space, const PointSet& set,
    const std::vector<std::vector<double>>& scalar_sequences,
    const std::vector<std::vector<Vector>>& point_sequences,
    const std::vector<double>& lambdas) {
  for (const auto& alphas : scalar_sequences) {
    if (alphas.empty()) {
      throw std::invalid_argument("topological probe: empty scalar sequence");
    }
    if (std::fabs(alphas.back()) > 0.1) {
      throw std::invalid_argument(
          "topological probe: scalar prefix does not visibly decay toward 0");
    }
    for (std::size_t i = 1; i < alphas.size(); ++i) {
      if (std::fabs(alphas[i]) > std::fabs(alphas[i - 1]) + 1e-12) {
        throw std::invalid_argument(
            "topological probe: scalar magnitudes must be non-increasing");
      }
    }
  }

  ProbeVerdict verdict;
  const Vector theta = Vector::zero(set.dim());
  std::size_t pairing = 0;
  for (const auto& alphas : scalar_sequences) {
    for (const auto& points : point_sequences) {
      for (const Vector& p : points) {
        if (!set.contains(p)) {
          throw std::invalid_argument("topological probe: sequence point outside the set");
        }
      }
      const std::size_t len = std::min(alphas.size(), points.size());
      std::vector<Vector> products;
      products.reserve(len);
      for (std::size_t i = 0; i < len; ++i) {
        products.push_back(alphas[i] * points[i]);
      }
      const ConvergenceReport conv =
          is_strongly_convergent(space, products, theta, lambdas);
      if (!conv.verdict) {
        verdict.counterexample_found = true;
        verdict.witness_pairing = pairing;
        verdict.detail = "alpha_n * p_n fails to reach theta on the prefix";
        return verdict;
      }
      ++pairing;
    }
  }
  verdict.detail = "no counterexample found";
  return verdict;
}

namespace {

// Least k in [1, k_max] with nu_{p/k}(lambda) > 1 - lambda, exploiting that
// the built-in families are non-increasing in |p| (so the predicate is
// monotone in k). Returns 0 when even k_max fails.
long long least_absorbing_k(const PNSpace& space, const Vector& p, double lambda,
                            long long k_max) {
  auto inside = [&](long long k) {
    return in_strong_neighborhood(space, Vector::zero(p.dim()), lambda,
                                  (1.0 / static_cast<double>(k)) * p);
  };
  if (!inside(k_max)) return 0;
  long long lo = 1, hi = k_max;
  while (lo < hi) {
    const long long mid = lo + (hi - lo) / 2;
    if (inside(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

std::vector<AbsorptionRow> absorption_check(const PNSpace& space, const PointSet& set,
                                            const std::vector<int>& n_values,
                                            long long k_max) {
  std::vector<AbsorptionRow> rows;
  const bool unbounded = std::isinf(set.sup_norm());
  const std::vector<Vector> members = set.sample_members(1024);

  for (int n : n_values) {
    if (n < 1) throw std::invalid_argument("absorption_check: n must be >= 1");
    AbsorptionRow row;
    row.n = n;
    const double lambda = 1.0 / static_cast<double>(n);

    if (unbounded) {
      // For any k there is a member with |p|/k outside the neighborhood; the
      // sampled witness is the largest member that already fails at k_max.
      row.absorbed = false;
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        if (least_absorbing_k(space, *it, lambda, k_max) == 0) {
          row.unabsorbed = *it;
          break;
        }
      }
      if (!row.unabsorbed.has_value() && !members.empty()) {
        row.unabsorbed = members.back();
      }
      rows.push_back(row);
      continue;
    }

    long long k = 1;
    bool ok = true;
    for (const Vector& p : members) {
      const long long kp = least_absorbing_k(space, p, lambda, k_max);
      if (kp == 0) {
        ok = false;
        row.unabsorbed = p;
        break;
      }
      k = std::max(k, kp);
    }
    row.absorbed = ok;
    row.k = ok ? k : 0;
    rows.push_back(row);
  }
  return rows;
}

Lemma112Report lemma_1_12_consistency(const PNSpace& space, const PointSet& set,
                                      const GridSpec& grid,
                                      const std::vector<int>& n_values, long long k_max) {
  Lemma112Report report;

  std::vector<Vector> probe_points = set.sample_members(16);
  probe_points.push_back(Vector::scalar(1.0, true));
  std::vector<Vector> padded;
  for (const Vector& p : probe_points) {
    if (p.dim() == space.dim) padded.push_back(p);
  }
  const CharacteristicReport ch = is_characteristic(space, padded);
  report.hypothesis_met = ch.characteristic;
  if (!ch.characteristic) {
    report.hypothesis_witness = ch.witness;
    report.detail = "hypothesis not met (not characteristic)";
    return report;
  }

  // (a) absorption by neighborhoods of theta
  const std::vector<AbsorptionRow> rows = absorption_check(space, set, n_values, k_max);
  report.absorption_bounded =
      std::all_of(rows.begin(), rows.end(), [](const AbsorptionRow& r) { return r.absorbed; });

  // (b) D-boundedness via the radius
  report.radius_bounded = classify_radius(probabilistic_radius(space, set, grid)).d_bounded;

  // (c) topological boundedness with alpha_n = 1/n against member sequences.
  // The prefix must be long enough for |p|/n to cross the smallest
  // neighborhood threshold.
  const std::size_t len = 16384;
  std::vector<double> alphas;
  alphas.reserve(len);
  for (std::size_t i = 1; i <= len; ++i) alphas.push_back(1.0 / static_cast<double>(i));
  std::vector<Vector> points = set.sample_members(len);
  const std::size_t base = points.size();
  while (points.size() < len) points.push_back(points[points.size() % base]);
  const ProbeVerdict topo = topological_boundedness_probe(space, set, {alphas}, {points},
                                                          {0.5, 0.25, 0.1});
  report.topologically_bounded = !topo.counterexample_found;

  report.consistent = (report.absorption_bounded == report.radius_bounded) &&
                      (report.radius_bounded == report.topologically_bounded);
  report.detail = report.consistent
                      ? (report.radius_bounded ? "all probes agree: bounded"
                                               : "all probes agree: unbounded")
                      : "probe verdicts disagree";
  return report;
}

Theorem21Report theorem_2_1_check(const PNSpace& space, const std::vector<Vector>& sequence,
                                  const Vector& limit, const std::vector<double>& lambdas,
                                  const GridSpec& grid) {
  if (sequence.empty()) {
    throw std::invalid_argument("theorem_2_1_check: empty sequence");
  }
  Theorem21Report report;

  std::vector<Vector> pts = sequence;
  pts.push_back(limit);
  const bool characteristic = is_characteristic(space, pts).characteristic;

  const ConvergenceReport conv = is_strongly_convergent(space, sequence, limit, lambdas);
  report.convergent = conv.verdict;

  const PointSet range = PointSet::explicit_set(sequence);
  report.d_bounded = classify_radius(probabilistic_radius(space, range, grid)).d_bounded;

  if (characteristic) {
    report.route = Theorem21Report::Route::Characteristic;
    if (!conv.verdict) {
      report.route = Theorem21Report::Route::PreconditionFailed;
      report.detail = "sequence is not strongly convergent on the prefix";
      return report;
    }
    report.consistent = report.d_bounded;
    report.detail = report.consistent
                        ? "convergent sequence has D-bounded range"
                        : "convergent sequence with non-D-bounded range (theorem violated)";
  } else {
    report.route = Theorem21Report::Route::CounterBehavior;
    report.consistent = report.convergent && !report.d_bounded;
    report.detail = report.consistent
                        ? "non-characteristic space: convergent sequence, range not D-bounded"
                        : "counter-behavior not reproduced";
  }
  return report;
}

CompactnessProbeReport d_compactness_probe(
    const PNSpace& space, const PointSet& set,
    const std::vector<std::vector<Vector>>& test_sequences,
    const std::vector<Vector>& limit_candidates, const std::vector<double>& lambdas,
    const GridSpec& grid, const std::optional<Vector>& outside_limit) {
  CompactnessProbeReport report;

  for (const auto& seq : test_sequences) {
    if (seq.empty()) {
      throw std::invalid_argument("d_compactness_probe: empty test sequence");
    }
    for (const Vector& p : seq) {
      if (!set.contains(p)) {
        throw std::invalid_argument("d_compactness_probe: sequence point outside the set");
      }
    }
  }

  report.d_bounded = classify_radius(probabilistic_radius(space, set, grid)).d_bounded;

  // A candidate admits a convergent subsequence when, for every lambda,
  // enough of the later terms fall inside N_candidate(lambda).
  auto admits_subsequence = [&](const std::vector<Vector>& seq, const Vector& cand) {
    const std::size_t half = seq.size() / 2;
    for (double lambda : lambdas) {
      std::size_t hits = 0;
      for (std::size_t i = half; i < seq.size(); ++i) {
        if (in_strong_neighborhood(space, cand, lambda, seq[i])) ++hits;
      }
      const std::size_t needed = std::min<std::size_t>(3, seq.size() - half);
      if (hits < needed) return false;
    }
    return true;
  };

  for (std::size_t s = 0; s < test_sequences.size(); ++s) {
    const auto& seq = test_sequences[s];
    bool some_candidate = false;
    for (const Vector& cand : limit_candidates) {
      if (!set.contains(cand)) continue;  // only in-set limits rescue compactness
      if (admits_subsequence(seq, cand)) {
        some_candidate = true;
        break;
      }
    }
    if (!some_candidate) {
      report.counterexample_found = true;
      report.witness_sequence = s;
      break;
    }
  }

  if (outside_limit.has_value() && !test_sequences.empty()) {
    const auto& seq = test_sequences[report.witness_sequence.value_or(0)];
    const ConvergenceReport conv = is_strongly_convergent(space, seq, *outside_limit, lambdas);
    if (conv.verdict && !set.contains(*outside_limit)) {
      const bool carrier_is_rational = set.family() == PointSet::Family::IntervalRationals;
      const bool in_carrier =
          !carrier_is_rational || outside_limit->rational.value_or(true);
      std::ostringstream os;
      os << "sequence strongly convergent to a limit outside the set";
      if (in_carrier) {
        report.non_closedness_certified = true;
        os << " but inside the carrier: non-closedness certified";
      } else {
        os << "; the limit is irrational, hence outside the Q carrier "
              "(no in-carrier limit exists)";
      }
      report.certificate = os.str();
    }
  }

  if (report.counterexample_found) {
    if (report.certificate.empty()) {
      report.certificate = "no candidate in the set admits a convergent subsequence";
    }
    report.detail = "counterexample to D-compactness";
  } else {
    report.detail = "no counterexample found";
  }
  report.compactness_impossible =
      report.counterexample_found || !report.d_bounded || report.non_closedness_certified;
  return report;
}

}  // namespace pnspace
