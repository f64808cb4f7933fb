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

// Endpoint interval arithmetic with outward rounding. Lower endpoints are
// rounded toward -inf and upper endpoints toward +inf through the notifying
// operations, so flags raised by endpoint arithmetic reach the environment.

#ifndef LIA_INTERVAL_HPP_
#define LIA_INTERVAL_HPP_

#include <algorithm>
#include <array>

#include "lia/environment.hpp"
#include "lia/ops.hpp"
#include "lia/value.hpp"

namespace lia {

namespace detail {

inline constexpr RoundingMode kDown = RoundingMode::to_negative_infinity;
inline constexpr RoundingMode kUp = RoundingMode::to_positive_infinity;

constexpr double unsigned_zero(double x) noexcept { return x == 0 ? 0.0 : x; }

constexpr Interval normalized(double low, double high) noexcept {
  return {unsigned_zero(low), unsigned_zero(high)};
}

constexpr bool well_formed(double low, double high) noexcept {
  return !is_nan(low) && !is_nan(high) && low <= high && low != kInfinity &&
         high != -kInfinity;
}

// Endpoint product under the set-hull convention 0 * inf = 0.
inline double hull_mul(FpEnvironment& env, double a, double b, RoundingMode mode) {
  if ((a == 0 && is_infinite(b)) || (is_infinite(a) && b == 0)) return 0.0;
  return lia_mul(env, a, b, mode);
}

}  // namespace detail

/// Builds [low, high]. Anything other than a well-formed pair or the
/// canonical empty pair raises invalid with the empty interval as continuation.
inline Interval make_interval(FpEnvironment& env, double low, double high) {
  if (to_bits(low) == to_bits(kInfinity) && to_bits(high) == to_bits(-kInfinity)) {
    return Interval::empty();
  }
  if (!detail::well_formed(low, high)) {
    return env.notify<Interval>(Indicator::invalid, "interval", {low, high}, Interval::empty());
  }
  return detail::normalized(low, high);
}

/// Width high - low, rounded up.
inline double radius(FpEnvironment& env, const Interval& i) {
  if (i.is_empty()) return env.notify<double>(Indicator::invalid, "radius", {i}, quiet_nan());
  return lia_sub(env, i.high, i.low, detail::kUp);
}

inline bool is_point(FpEnvironment& env, const Interval& i) {
  if (i.is_empty()) return env.notify<bool>(Indicator::invalid, "point?", {i}, false);
  return lia_eq(env, i.high, i.low);
}

inline Interval i_add(FpEnvironment& env, const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  double low = lia_add(env, a.low, b.low, detail::kDown);
  double high = lia_add(env, a.high, b.high, detail::kUp);
  // Unreachable for well-formed operands; kept so no endpoint is ever NaN.
  if (is_nan(low)) low = -kInfinity;
  if (is_nan(high)) high = kInfinity;
  return detail::normalized(low, high);
}

inline Interval i_sub(FpEnvironment& env, const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  double low = lia_sub(env, a.low, b.high, detail::kDown);
  double high = lia_sub(env, a.high, b.low, detail::kUp);
  if (is_nan(low)) low = -kInfinity;
  if (is_nan(high)) high = kInfinity;
  return detail::normalized(low, high);
}

/// Hull of the four endpoint products, each rounded outward.
inline Interval i_mul(FpEnvironment& env, const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  const std::array<std::pair<double, double>, 4> corners = {
      {{a.low, b.low}, {a.low, b.high}, {a.high, b.low}, {a.high, b.high}}};
  double low = kInfinity;
  double high = -kInfinity;
  for (const auto& [x, y] : corners) {
    low = std::min(low, detail::hull_mul(env, x, y, detail::kDown));
    high = std::max(high, detail::hull_mul(env, x, y, detail::kUp));
  }
  return detail::normalized(low, high);
}

/// Divisor [0,0] gives empty (invalid); any other zero-containing divisor
/// gives the whole line (divide-by-zero).
inline Interval i_div(FpEnvironment& env, const Interval& a, const Interval& b) {
  if (a.is_empty() || b.is_empty()) return Interval::empty();
  if (b.low == 0 && b.high == 0) {
    return env.notify<Interval>(Indicator::invalid, "i-div", {a, b}, Interval::empty());
  }
  if (b.low <= 0 && b.high >= 0) {
    return env.notify<Interval>(Indicator::divide_by_zero, "i-div", {a, b}, Interval::entire());
  }
  using detail::kDown;
  using detail::kUp;
  // Divisor is strictly positive or strictly negative; pick the extreme
  // quotients by sign class of the dividend.
  double low = 0;
  double high = 0;
  if (b.low > 0) {
    if (a.low >= 0) {
      low = lia_div(env, a.low, b.high, kDown);
      high = lia_div(env, a.high, b.low, kUp);
    } else if (a.high <= 0) {
      low = lia_div(env, a.low, b.low, kDown);
      high = lia_div(env, a.high, b.high, kUp);
    } else {
      low = lia_div(env, a.low, b.low, kDown);
      high = lia_div(env, a.high, b.low, kUp);
    }
  } else {
    if (a.low >= 0) {
      low = lia_div(env, a.high, b.high, kDown);
      high = lia_div(env, a.low, b.low, kUp);
    } else if (a.high <= 0) {
      low = lia_div(env, a.high, b.low, kDown);
      high = lia_div(env, a.low, b.high, kUp);
    } else {
      low = lia_div(env, a.high, b.high, kDown);
      high = lia_div(env, a.low, b.high, kUp);
    }
  }
  return detail::normalized(low, high);
}

/// Membership in the extended-real order. NaN is never a member.
constexpr bool i_member(double x, const Interval& i) noexcept {
  return !is_nan(x) && !i.is_empty() && i.low <= x && x <= i.high;
}

constexpr bool i_subseteq(const Interval& a, const Interval& b) noexcept {
  if (a.is_empty()) return true;
  if (b.is_empty()) return false;
  return b.low <= a.low && a.high <= b.high;
}

}  // namespace lia

#endif  // LIA_INTERVAL_HPP_
