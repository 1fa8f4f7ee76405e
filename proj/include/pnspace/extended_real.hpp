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

#ifndef PNSPACE_EXTENDED_REAL_HPP
#define PNSPACE_EXTENDED_REAL_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pnspace {

/// A value in [0, +inf]. Total order with +inf maximal.
class ExtendedNonNegReal {
 public:
  ExtendedNonNegReal(double v) : value_(v) {  // NOLINT: implicit by design
    if (std::isnan(v)) {
      throw std::domain_error("ExtendedNonNegReal: NaN rejected");
    }
    if (v < 0.0) {
      throw std::domain_error("ExtendedNonNegReal: negative value rejected");
    }
  }

  static ExtendedNonNegReal infinity() {
    return ExtendedNonNegReal(std::numeric_limits<double>::infinity());
  }

  bool is_infinite() const { return std::isinf(value_); }

  /// The stored value; +inf when is_infinite().
  double raw() const { return value_; }

  double finite_value() const {
    if (is_infinite()) {
      throw std::domain_error("ExtendedNonNegReal: value is +inf");
    }
    return value_;
  }

  friend bool operator==(const ExtendedNonNegReal& a, const ExtendedNonNegReal& b) {
    return a.value_ == b.value_;
  }
  friend bool operator<(const ExtendedNonNegReal& a, const ExtendedNonNegReal& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const ExtendedNonNegReal& a, const ExtendedNonNegReal& b) {
    return a.value_ <= b.value_;
  }

 private:
  double value_;
};

}  // namespace pnspace

#endif  // PNSPACE_EXTENDED_REAL_HPP
