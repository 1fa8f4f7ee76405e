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

#include "pnspace/monotone_pwl.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pnspace {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Keeps at most the first and last knot of every equal-abscissa run and drops
// exact duplicates.
std::vector<Knot> canonicalize(std::vector<Knot> knots) {
  std::vector<Knot> out;
  out.reserve(knots.size());
  for (const Knot& k : knots) {
    if (!out.empty() && out.back().x == k.x && out.back().y == k.y) continue;
    if (out.size() >= 2 && out[out.size() - 1].x == k.x &&
        out[out.size() - 2].x == k.x) {
      out.back() = k;  // extend the jump instead of stacking a third knot
      continue;
    }
    out.push_back(k);
  }
  return out;
}

}  // namespace

MonotonePwl::MonotonePwl(std::vector<Knot> knots, Tail tail, double tail_param)
    : knots_(canonicalize(std::move(knots))), tail_(tail), tail_param_(tail_param) {
  if (knots_.empty()) {
    throw std::domain_error("MonotonePwl: empty knot list");
  }
  if (knots_.front().x != 0.0 || knots_.front().y != 0.0) {
    throw std::domain_error("MonotonePwl: first knot must be (0, 0)");
  }
  for (std::size_t i = 0; i < knots_.size(); ++i) {
    if (!std::isfinite(knots_[i].x) || !std::isfinite(knots_[i].y) ||
        knots_[i].x < 0.0 || knots_[i].y < 0.0) {
      throw std::domain_error("MonotonePwl: knots must be finite and non-negative");
    }
    if (i > 0 && (knots_[i].x < knots_[i - 1].x || knots_[i].y < knots_[i - 1].y)) {
      throw std::domain_error("MonotonePwl: knots must be non-decreasing");
    }
  }
  switch (tail_) {
    case Tail::Constant:
      break;
    case Tail::Slope:
      if (!(std::isfinite(tail_param_) && tail_param_ > 0.0)) {
        throw std::domain_error("MonotonePwl: tail slope must be positive");
      }
      break;
    case Tail::JumpToInf:
      if (!(std::isfinite(tail_param_) && tail_param_ >= knots_.back().x)) {
        throw std::domain_error(
            "MonotonePwl: jump-to-inf abscissa must be at or past the last knot");
      }
      break;
  }
}

MonotonePwl MonotonePwl::identity() {
  return MonotonePwl({{0.0, 0.0}}, Tail::Slope, 1.0);
}

double MonotonePwl::operator()(double x) const {
  if (std::isnan(x) || x < 0.0) {
    throw std::domain_error("MonotonePwl: argument must be in [0, +inf)");
  }
  if (x <= knots_.front().x) {
    return knots_.front().y;
  }
  const double lx = knots_.back().x;
  if (x > lx) {
    switch (tail_) {
      case Tail::Constant:
        return knots_.back().y;
      case Tail::Slope:
        return knots_.back().y + tail_param_ * (x - lx);
      case Tail::JumpToInf:
        return x <= tail_param_ ? knots_.back().y : kInf;
    }
  }
  // Last knot strictly left of x; x lies on the segment to the next knot.
  // When x coincides with a jump abscissa the segment ends at the lower knot
  // of the jump, which is exactly the left limit.
  auto it = std::lower_bound(
      knots_.begin(), knots_.end(), x,
      [](const Knot& k, double v) { return k.x < v; });
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  if (x == hi.x) {
    return hi.y;  // exact at knots; hi is the lower knot of a jump pair
  }
  if (hi.x == lo.x) {
    return lo.y;
  }
  const double t = (x - lo.x) / (hi.x - lo.x);
  return lo.y + t * (hi.y - lo.y);
}

bool MonotonePwl::finite_at(double x) const {
  return !(tail_ == Tail::JumpToInf && x > tail_param_);
}

bool MonotonePwl::has_jump() const {
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (knots_[i].x == knots_[i - 1].x && knots_[i].y > knots_[i - 1].y) return true;
  }
  return false;
}

bool MonotonePwl::strictly_increasing() const {
  for (std::size_t i = 1; i < knots_.size(); ++i) {
    if (!(knots_[i].x > knots_[i - 1].x && knots_[i].y > knots_[i - 1].y)) return false;
  }
  return true;
}

MonotonePwl MonotonePwl::quasi_inverse() const {
  // sup{u : f(u) < t} swaps the roles of abscissa and ordinate: rising
  // segments invert, a flat at height h becomes a jump at t = h (resolved to
  // the flat's left endpoint at t = h itself, the strict-inequality
  // convention), and a jump over (y1, y2] at u0 becomes a flat equal to u0.
  std::vector<Knot> swapped;
  swapped.reserve(knots_.size() + 1);
  for (const Knot& k : knots_) {
    swapped.push_back({k.y, k.x});
  }
  switch (tail_) {
    case Tail::Constant:
      // f never exceeds last_y, so the inverse is +inf past it.
      return MonotonePwl(std::move(swapped), Tail::JumpToInf, knots_.back().y);
    case Tail::Slope:
      return MonotonePwl(std::move(swapped), Tail::Slope, 1.0 / tail_param_);
    case Tail::JumpToInf: {
      // f sits at last_y up to the jump abscissa b, then is +inf; the
      // inverse therefore jumps to b at last_y and stays there.
      const double b = tail_param_;
      if (b > knots_.back().x) {
        swapped.push_back({knots_.back().y, b});
      }
      return MonotonePwl(std::move(swapped), Tail::Constant);
    }
  }
  throw std::logic_error("MonotonePwl: unknown tail");
}

namespace {

double right_limit(const MonotonePwl& f, double x) {
  const auto& knots = f.knots();
  const double lx = knots.back().x;
  if (x >= lx) {
    switch (f.tail()) {
      case MonotonePwl::Tail::Constant:
        return knots.back().y;
      case MonotonePwl::Tail::Slope:
        return knots.back().y + f.tail_param() * (x - lx);
      case MonotonePwl::Tail::JumpToInf:
        return x < f.tail_param() ? knots.back().y : kInf;
    }
  }
  // Last knot with abscissa <= x; at a jump abscissa this is the upper knot,
  // which is the limit from the right.
  auto it = std::upper_bound(
      knots.begin(), knots.end(), x,
      [](double v, const Knot& k) { return v < k.x; });
  const Knot& hi = *it;
  const Knot& lo = *(it - 1);
  if (x == lo.x) {
    return lo.y;
  }
  const double t = (x - lo.x) / (hi.x - lo.x);
  return lo.y + t * (hi.y - lo.y);
}

}  // namespace

MonotonePwl pwl_from_distribution(const DistributionFunction& f) {
  return MonotonePwl(f.knots(), MonotonePwl::Tail::Constant);
}

DistributionFunction distribution_from_pwl(const MonotonePwl& f, double value_at_inf,
                                           double jump_width) {
  if (f.tail() != MonotonePwl::Tail::Constant) {
    throw std::domain_error("distribution_from_pwl: tail must be constant");
  }
  const auto& in = f.knots();
  std::vector<Knot> out;
  out.reserve(in.size());
  for (std::size_t i = 0; i < in.size(); ++i) {
    double x = in[i].x;
    double y = std::clamp(in[i].y, 0.0, 1.0);
    if (!out.empty() && x <= out.back().x) {
      // Jump encoding: push the upper knot just after the lower one, staying
      // clear of the following knot.
      double next_x = (i + 1 < in.size()) ? in[i + 1].x : out.back().x + 2.0 * jump_width;
      double step = jump_width;
      if (next_x > out.back().x) {
        step = std::min(step, (next_x - out.back().x) / 2.0);
      }
      x = out.back().x + step;
    }
    if (!out.empty() && y < out.back().y) {
      y = out.back().y;
    }
    out.push_back({x, y});
  }
  const double vinf = std::max(std::clamp(value_at_inf, 0.0, 1.0), out.back().y);
  return DistributionFunction(std::move(out), vinf);
}

MonotonePwl pwl_sum(const MonotonePwl& f, const MonotonePwl& g, double x_cap) {
  if (!(std::isfinite(x_cap) && x_cap >= 0.0)) {
    throw std::domain_error("pwl_sum: cap must be finite and non-negative");
  }
  if (!f.finite_at(x_cap) || !g.finite_at(x_cap)) {
    throw std::domain_error("pwl_sum: inputs must be finite on [0, cap]");
  }
  std::vector<double> xs;
  xs.reserve(f.knots().size() + g.knots().size() + 2);
  xs.push_back(0.0);
  for (const Knot& k : f.knots()) {
    if (k.x < x_cap) xs.push_back(k.x);
  }
  for (const Knot& k : g.knots()) {
    if (k.x < x_cap) xs.push_back(k.x);
  }
  xs.push_back(x_cap);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  std::vector<Knot> out;
  out.reserve(xs.size() * 2);
  for (double x : xs) {
    const double left = f(x) + g(x);
    out.push_back({x, left});
    if (x < x_cap) {
      const double right = right_limit(f, x) + right_limit(g, x);
      if (right > left) {
        out.push_back({x, right});
      }
    }
  }
  // The true sum of the quasi-inverse operands is +inf past the cap.
  return MonotonePwl(std::move(out), MonotonePwl::Tail::JumpToInf, x_cap);
}

}  // namespace pnspace
