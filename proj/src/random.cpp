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

#include "pnspace/random.hpp"

#include <algorithm>
#include <vector>

namespace pnspace {

DistributionFunction random_distribution_function(std::mt19937_64& rng,
                                                  double support_max) {
  std::uniform_int_distribution<int> knot_count(3, 10);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  const int n = knot_count(rng);
  const double min_gap = 0.25;

  std::vector<double> xs(static_cast<std::size_t>(n));
  xs[0] = 0.0;
  for (int i = 1; i < n; ++i) {
    xs[static_cast<std::size_t>(i)] = unit(rng) * support_max;
  }
  std::sort(xs.begin(), xs.end());
  for (int i = 1; i < n; ++i) {
    const std::size_t j = static_cast<std::size_t>(i);
    if (xs[j] < xs[j - 1] + min_gap) xs[j] = xs[j - 1] + min_gap;
  }

  std::vector<double> ys(static_cast<std::size_t>(n));
  ys[0] = 0.0;
  for (int i = 1; i < n; ++i) {
    ys[static_cast<std::size_t>(i)] = unit(rng);
  }
  std::sort(ys.begin(), ys.end());

  std::vector<Knot> knots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const std::size_t j = static_cast<std::size_t>(i);
    knots[j] = {xs[j], ys[j]};
  }
  const double value_at_inf = (unit(rng) < 0.5) ? ys.back() : 1.0;
  return DistributionFunction(std::move(knots), value_at_inf);
}

}  // namespace pnspace
