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

#ifndef PNSPACE_RANDOM_HPP
#define PNSPACE_RANDOM_HPP

#include <cstdint>
#include <random>

#include "pnspace/distribution_function.hpp"

namespace pnspace {

/// Random distribution functions for the axiom samplers: 3-10 knots with
/// spacing at least 1/4 (keeping segment slopes at most 4), sorted uniform
/// ordinates, and a left limit at +inf drawn from {last ordinate, 1} so both
/// D+ and Delta+ \ D+ cases occur.
DistributionFunction random_distribution_function(std::mt19937_64& rng,
                                                  double support_max = 12.0);

}  // namespace pnspace

#endif  // PNSPACE_RANDOM_HPP
