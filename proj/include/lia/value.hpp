// Copyright 2026 The LIA Kernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LIA_VALUE_HPP_
#define LIA_VALUE_HPP_

#include <variant>

#include "lia/fp_core.hpp"

namespace lia {

/// Closed interval over the extended reals in endpoint form. The empty set
/// is canonically (+inf, -inf), the only representation with low > high.
struct Interval {
  double low = 0.0;
  double high = 0.0;

  static constexpr Interval empty() noexcept { return {kInfinity, -kInfinity}; }
  static constexpr Interval entire() noexcept { return {-kInfinity, kInfinity}; }
  static constexpr Interval point(double x) noexcept { return {x, x}; }

  constexpr bool is_empty() const noexcept { return low > high; }

  /// Bitwise endpoint identity.
  friend constexpr bool operator==(const Interval& a, const Interval& b) noexcept {
    return to_bits(a.low) == to_bits(b.low) && to_bits(a.high) == to_bits(b.high);
  }
};

/// Anything an LIA operation can yield or carry as a continuation.
using Value = std::variant<double, Interval, bool>;

/// Bitwise equality for doubles (NaNs with equal payloads compare equal).
inline bool same_value(const Value& a, const Value& b) noexcept {
  if (a.index() != b.index()) return false;
  if (const double* x = std::get_if<double>(&a)) return to_bits(*x) == to_bits(std::get<double>(b));
  return a == b;
}

}  // namespace lia

#endif  // LIA_VALUE_HPP_
