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

#include "pnspace/triangle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pnspace/monotone_pwl.hpp"
#include "pnspace/random.hpp"

namespace pnspace {

namespace {

enum class Direction { Sup, Inf };

// Operation kinds the per-cell optimizer knows closed forms for.
enum class CellOp { Min, Max, Product, ProbSum, CustomNorm, CustomConorm };

struct CellContext {
  CellOp op;
  const TNorm* tnorm = nullptr;
  const TConorm* tconorm = nullptr;
  double mesh = 0.0;

  double apply(double a, double b) const {
    switch (op) {
      case CellOp::Min:
        return std::min(a, b);
      case CellOp::Max:
        return std::max(a, b);
      case CellOp::Product:
        return a * b;
      case CellOp::ProbSum:
        return a + b - a * b;
      case CellOp::CustomNorm:
        return (*tnorm)(std::clamp(a, 0.0, 1.0), std::clamp(b, 0.0, 1.0));
      case CellOp::CustomConorm:
        return (*tconorm)(std::clamp(a, 0.0, 1.0), std::clamp(b, 0.0, 1.0));
    }
    return 0.0;
  }
};

// Forward-walk evaluator over a distribution function's knots; arguments must
// be non-decreasing across calls.
class EvalCursor {
 public:
  explicit EvalCursor(const std::vector<Knot>& ks) : ks_(ks) {}

  double eval(double s) {
    if (s >= ks_.back().x) return ks_.back().y;
    while (i_ + 1 < ks_.size() && ks_[i_ + 1].x < s) ++i_;
    const Knot& lo = ks_[i_];
    const Knot& hi = ks_[i_ + 1];
    if (s <= lo.x) return lo.y;
    const double t = (s - lo.x) / (hi.x - lo.x);
    return lo.y + t * (hi.y - lo.y);
  }

 private:
  const std::vector<Knot>& ks_;
  std::size_t i_ = 0;
};

// Best objective value inside one cell (a, b), where F rises linearly from fa
// to fb and G(x - s) falls linearly from ga to gb. Endpoints are handled by
// the caller; this contributes interior candidates only.
void interior_candidates(const CellContext& ctx, Direction dir, double a, double b,
                         double fa, double fb, double ga, double gb, double& best) {
  const double len = b - a;
  if (!(len > 0.0)) return;
  const double bf = (fb - fa) / len;   // >= 0
  const double dg = (ga - gb) / len;   // >= 0

  auto consider = [&](double value) {
    if (dir == Direction::Sup) {
      best = std::max(best, value);
    } else {
      best = std::min(best, value);
    }
  };

  switch (ctx.op) {
    case CellOp::Min:
    case CellOp::Max: {
      // Extremum of min/max of a rising and a falling line is at the crossing.
      if ((fa - ga) * (fb - gb) < 0.0 && bf + dg > 0.0) {
        const double u = (ga - fa) / (bf + dg);
        if (u > 0.0 && u < len) {
          const double fu = fa + bf * u;
          const double gu = ga - dg * u;
          consider(ctx.op == CellOp::Min ? std::min(fu, gu) : std::max(fu, gu));
        }
      }
      break;
    }
    case CellOp::Product: {
      // Concave quadratic in the split offset.
      if (bf > 0.0 && dg > 0.0) {
        const double u = (bf * ga - dg * fa) / (2.0 * bf * dg);
        if (u > 0.0 && u < len) {
          consider((fa + bf * u) * (ga - dg * u));
        }
      }
      break;
    }
    case CellOp::ProbSum: {
      // 1 - (1-F)(1-G) is convex along the split; minimize at the vertex.
      if (bf > 0.0 && dg > 0.0) {
        const double u = (dg * (1.0 - fa) - bf * (1.0 - ga)) / (2.0 * bf * dg);
        if (u > 0.0 && u < len) {
          const double fu = fa + bf * u;
          const double gu = ga - dg * u;
          consider(fu + gu - fu * gu);
        }
      }
      break;
    }
    case CellOp::CustomNorm:
    case CellOp::CustomConorm: {
      // No closed form: mesh-spaced split candidates inside the cell.
      double s = std::ceil(a / ctx.mesh) * ctx.mesh;
      if (s <= a) s += ctx.mesh;
      for (; s < b; s += ctx.mesh) {
        const double u = s - a;
        consider(ctx.apply(fa + bf * u, ga - dg * u));
      }
      break;
    }
  }
}

void prune_collinear(std::vector<Knot>& ks) {
  if (ks.size() < 3) return;
  std::vector<Knot> out;
  out.reserve(ks.size());
  out.push_back(ks[0]);
  for (std::size_t i = 1; i < ks.size(); ++i) {
    while (out.size() >= 2) {
      const Knot& a = out[out.size() - 2];
      const Knot& b = out.back();
      const Knot& c = ks[i];
      const double cross = (b.y - a.y) * (c.x - a.x) - (c.y - a.y) * (b.x - a.x);
      if (std::fabs(cross) <= 1e-12 * std::max(1.0, c.x - a.x)) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(ks[i]);
  }
  ks = std::move(out);
}

DistributionFunction convolve(const CellContext& ctx, Direction dir,
                              const DistributionFunction& f,
                              const DistributionFunction& g, const GridSpec& grid) {
  const double supp_f = f.support_end();
  const double supp_g = g.support_end();
  const double max_f = f.max_finite_value();
  const double max_g = g.max_finite_value();

  const double x_end = std::min(grid.x_max, supp_f + supp_g);
  std::size_t last = static_cast<std::size_t>(std::ceil(x_end / grid.mesh - 1e-12));
  last = std::min(last, grid.point_count() - 1);
  last = std::max<std::size_t>(last, 1);

  const auto& fk = f.knots();
  const auto& gk = g.knots();

  std::vector<double> breakpoints;
  std::vector<double> fvals;
  std::vector<double> gvals;
  breakpoints.reserve(fk.size() + gk.size() + 2);

  std::vector<Knot> out;
  out.reserve(last + 1);
  out.push_back({0.0, 0.0});

  for (std::size_t k = 1; k <= last; ++k) {
    const double x = grid.point(k);
    double best;

    const double s_lo = std::max(0.0, x - supp_g);
    const double s_hi = std::min(x, supp_f);

    if (s_lo >= s_hi) {
      // Both operands saturated across the whole admissible middle zone.
      best = ctx.apply(max_f, max_g);
      if (dir == Direction::Inf) {
        best = std::min({best, g(x), f(x)});
      }
    } else {
      breakpoints.clear();
      breakpoints.push_back(s_lo);
      {
        auto it = std::lower_bound(fk.begin(), fk.end(), s_lo,
                                   [](const Knot& kn, double v) { return kn.x < v; });
        for (; it != fk.end() && it->x <= s_hi; ++it) breakpoints.push_back(it->x);
      }
      {
        const double t_lo = x - s_hi;
        auto it = std::lower_bound(gk.begin(), gk.end(), t_lo,
                                   [](const Knot& kn, double v) { return kn.x < v; });
        for (; it != gk.end() && it->x <= x - s_lo; ++it) {
          breakpoints.push_back(x - it->x);
        }
      }
      breakpoints.push_back(s_hi);
      std::sort(breakpoints.begin(), breakpoints.end());
      breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                        breakpoints.end());

      const std::size_t m = breakpoints.size();
      fvals.resize(m);
      gvals.resize(m);
      {
        EvalCursor fc(fk);
        for (std::size_t i = 0; i < m; ++i) fvals[i] = fc.eval(breakpoints[i]);
      }
      {
        EvalCursor gc(gk);
        for (std::size_t i = m; i-- > 0;) gvals[i] = gc.eval(x - breakpoints[i]);
      }

      best = ctx.apply(fvals[0], gvals[0]);
      for (std::size_t i = 1; i < m; ++i) {
        const double v = ctx.apply(fvals[i], gvals[i]);
        best = (dir == Direction::Sup) ? std::max(best, v) : std::min(best, v);
      }
      for (std::size_t i = 0; i + 1 < m; ++i) {
        interior_candidates(ctx, dir, breakpoints[i], breakpoints[i + 1], fvals[i],
                            fvals[i + 1], gvals[i], gvals[i + 1], best);
      }
      if (dir == Direction::Inf) {
        // Splits outside [s_lo, s_hi] keep one operand saturated; their
        // minima sit at the extreme splits s = 0 and s = x.
        best = std::min({best, ctx.apply(0.0, g(x)), ctx.apply(f(x), 0.0)});
      }
    }

    best = std::clamp(best, 0.0, 1.0);
    best = std::max(best, out.back().y);  // guard rounding against monotonicity
    out.push_back({x, best});
  }

  prune_collinear(out);

  double vinf = (dir == Direction::Sup)
                    ? ctx.apply(f.left_limit_at_inf(), g.left_limit_at_inf())
                    : std::min(f.left_limit_at_inf(), g.left_limit_at_inf());
  vinf = std::max(std::clamp(vinf, 0.0, 1.0), out.back().y);
  return DistributionFunction(std::move(out), vinf);
}

CellContext context_for(const TNorm& t, const GridSpec& grid) {
  CellContext ctx;
  ctx.mesh = grid.mesh;
  switch (t.kind()) {
    case TNorm::Kind::Min:
      ctx.op = CellOp::Min;
      break;
    case TNorm::Kind::Product:
      ctx.op = CellOp::Product;
      break;
    case TNorm::Kind::Custom:
      ctx.op = CellOp::CustomNorm;
      ctx.tnorm = &t;
      break;
  }
  return ctx;
}

CellContext context_for(const TConorm& s, const GridSpec& grid) {
  CellContext ctx;
  ctx.mesh = grid.mesh;
  switch (s.kind()) {
    case TConorm::Kind::Max:
      ctx.op = CellOp::Max;
      break;
    case TConorm::Kind::ProbSum:
      ctx.op = CellOp::ProbSum;
      break;
    case TConorm::Kind::Custom:
      ctx.op = CellOp::CustomConorm;
      ctx.tconorm = &s;
      break;
  }
  return ctx;
}

}  // namespace

DistributionFunction tau_t_convolve(const TNorm& t, const DistributionFunction& f,
                                    const DistributionFunction& g,
                                    const GridSpec& grid) {
  return convolve(context_for(t, grid), Direction::Sup, f, g, grid);
}

DistributionFunction tau_tstar_convolve(const TConorm& s, const DistributionFunction& f,
                                        const DistributionFunction& g,
                                        const GridSpec& grid) {
  return convolve(context_for(s, grid), Direction::Inf, f, g, grid);
}

DistributionFunction tau_m_fast(const DistributionFunction& f,
                                const DistributionFunction& g, const GridSpec& grid) {
  const double y_cap = std::min(f.max_finite_value(), g.max_finite_value());
  const double v_inf = std::min(f.left_limit_at_inf(), g.left_limit_at_inf());
  if (y_cap <= 0.0) {
    return DistributionFunction({{0.0, 0.0}}, v_inf);
  }
  const MonotonePwl qf = pwl_from_distribution(f).quasi_inverse();
  const MonotonePwl qg = pwl_from_distribution(g).quasi_inverse();
  const MonotonePwl q_sum = pwl_sum(qf, qg, y_cap);
  return distribution_from_pwl(q_sum.quasi_inverse(), v_inf, grid.jump_width());
}

double convolution_error_bound(const DistributionFunction& f,
                               const DistributionFunction& g, const GridSpec& grid) {
  auto max_slope = [](const DistributionFunction& df) {
    double m = 0.0;
    const auto& ks = df.knots();
    for (std::size_t i = 1; i < ks.size(); ++i) {
      m = std::max(m, (ks[i].y - ks[i - 1].y) / (ks[i].x - ks[i - 1].x));
    }
    return m;
  };
  return grid.mesh * std::min(max_slope(f), max_slope(g));
}

TriangleFunction TriangleFunction::tau_t(TNorm t) {
  TriangleFunction tf(Kind::TauT, "tauT:" + t.id());
  tf.tnorm_ = std::move(t);
  return tf;
}

TriangleFunction TriangleFunction::tau_tstar(TConorm s) {
  TriangleFunction tf(Kind::TauTstar, "tauTstar:" + s.id());
  tf.tconorm_ = std::move(s);
  return tf;
}

TriangleFunction TriangleFunction::tau_m() { return TriangleFunction(Kind::TauM, "tauM"); }

TriangleFunction TriangleFunction::custom(std::string name, CustomFn fn) {
  TriangleFunction tf(Kind::Custom, std::move(name));
  tf.custom_ = std::move(fn);
  return tf;
}

DistributionFunction TriangleFunction::apply(const DistributionFunction& f,
                                             const DistributionFunction& g,
                                             const GridSpec& grid) const {
  switch (kind_) {
    case Kind::TauT:
      return tau_t_convolve(*tnorm_, f, g, grid);
    case Kind::TauTstar:
      return tau_tstar_convolve(*tconorm_, f, g, grid);
    case Kind::TauM:
      return tau_m_fast(f, g, grid);
    case Kind::Custom:
      return custom_(f, g, grid);
  }
  throw std::logic_error("TriangleFunction: unknown kind");
}

double TriangleAxiomReport::worst_violation() const {
  return std::max({associativity.worst_violation, commutativity.worst_violation,
                   monotonicity.worst_violation, unit.worst_violation});
}

TriangleAxiomReport check_triangle_axioms(const TriangleFunction& tau, int samples,
                                          const GridSpec& grid, std::uint64_t seed) {
  if (samples < 1) {
    throw std::domain_error("check_triangle_axioms: samples must be >= 1");
  }
  TriangleAxiomReport report;
  report.tolerance = 2.0 * grid.mesh;
  report.associativity.law = "associativity";
  report.commutativity.law = "commutativity";
  report.monotonicity.law = "monotonicity";
  report.unit.law = "unit";

  std::mt19937_64 rng(seed);
  const DistributionFunction e0 = epsilon0(grid);

  auto record = [&](TriangleLawResult& law, double violation, int sample) {
    if (violation > law.worst_violation) {
      law.worst_violation = violation;
      law.witness_sample = sample;
    }
  };

  for (int i = 0; i < samples; ++i) {
    const DistributionFunction a = random_distribution_function(rng);
    const DistributionFunction b = random_distribution_function(rng);
    const DistributionFunction c = random_distribution_function(rng);

    // tau(tau(a,b),c) = tau(a,tau(b,c))
    const DistributionFunction ab = tau.apply(a, b, grid);
    const DistributionFunction bc = tau.apply(b, c, grid);
    record(report.associativity,
           df_distance(tau.apply(ab, c, grid), tau.apply(a, bc, grid), grid), i);

    // tau(a,b) = tau(b,a)
    record(report.commutativity, df_distance(ab, tau.apply(b, a, grid), grid), i);

    // lo <= hi  =>  tau(lo,c) <= tau(hi,c)
    const DistributionFunction lo = pointwise_min(a, b);
    const DistributionFunction hi = pointwise_max(a, b);
    const DistributionFunction tau_lo = tau.apply(lo, c, grid);
    const DistributionFunction tau_hi = tau.apply(hi, c, grid);
    double mono_violation = 0.0;
    const double stop = std::max(tau_lo.support_end(), tau_hi.support_end());
    for (std::size_t k = 0; k < grid.point_count(); ++k) {
      const double x = grid.point(k);
      mono_violation = std::max(mono_violation, tau_lo(x) - tau_hi(x));
      if (x >= stop) break;
    }
    mono_violation =
        std::max(mono_violation, tau_lo.left_limit_at_inf() - tau_hi.left_limit_at_inf());
    record(report.monotonicity, mono_violation, i);

    // tau(a, eps0) = a
    record(report.unit, df_distance(tau.apply(a, e0, grid), a, grid), i);
  }

  for (TriangleLawResult* law : {&report.associativity, &report.commutativity,
                                 &report.monotonicity, &report.unit}) {
    law->pass = law->worst_violation <= report.tolerance;
  }
  return report;
}

}  // namespace pnspace
