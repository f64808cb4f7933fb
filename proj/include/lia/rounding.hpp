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

// Correctly rounded add/sub/mul/div/sqrt under every operational rounding
// mode. Results come from the hardware round-to-nearest value plus the sign
// of the exact residual; the hardware rounding mode is never touched.

#ifndef LIA_ROUNDING_HPP_
#define LIA_ROUNDING_HPP_

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "lia/fp_core.hpp"

namespace lia {

/// Numeric codes are the published constant values.
enum class RoundingMode : int {
  indeterminate = -1,
  to_zero = 0,
  to_nearest = 1,
  to_positive_infinity = 2,
  to_negative_infinity = 3,
  to_nearest_even = 4,
};

constexpr std::string_view to_string(RoundingMode m) noexcept {
  switch (m) {
    case RoundingMode::indeterminate: return "indeterminate";
    case RoundingMode::to_zero: return "to-zero";
    case RoundingMode::to_nearest: return "to-nearest";
    case RoundingMode::to_positive_infinity: return "to-positive-infinity";
    case RoundingMode::to_negative_infinity: return "to-negative-infinity";
    case RoundingMode::to_nearest_even: return "to-nearest-even";
  }
  return "indeterminate";
}

inline std::optional<RoundingMode> rounding_mode_from_string(std::string_view name) {
  for (auto m : {RoundingMode::indeterminate, RoundingMode::to_zero, RoundingMode::to_nearest,
                 RoundingMode::to_positive_infinity, RoundingMode::to_negative_infinity,
                 RoundingMode::to_nearest_even}) {
    if (to_string(m) == name) return m;
  }
  return std::nullopt;
}

class InvalidRoundingMode : public std::invalid_argument {
 public:
  InvalidRoundingMode()
      : std::invalid_argument("indeterminate is not an operational rounding mode") {}
};

constexpr void require_operational(RoundingMode m) {
  if (m == RoundingMode::indeterminate) throw InvalidRoundingMode();
}

/// Outcome of a directed operation on finite operands.
struct DirectedResult {
  double value;
  int residual;   // sign(exact - value)
  bool overflow;  // |exact| > largest finite
};

namespace detail {

// Mode applied to a round-to-nearest result `nearest` whose exact value
// differs from it by a quantity of sign `residual`. `overflow` marks that
// the exact value is finite but beyond the largest finite double.
inline DirectedResult apply_mode(double nearest, int residual, RoundingMode mode) {
  require_operational(mode);
  const bool negative = sign_bit(nearest) || (nearest == 0 && residual < 0);
  if (is_infinite(nearest)) {
    // Finite operands whose nearest result overflowed.
    double v = nearest;
    switch (mode) {
      case RoundingMode::to_zero: v = negative ? -kMaxFinite : kMaxFinite; break;
      case RoundingMode::to_positive_infinity: v = negative ? -kMaxFinite : kInfinity; break;
      case RoundingMode::to_negative_infinity: v = negative ? -kInfinity : kMaxFinite; break;
      default: break;
    }
    return {v, negative ? (v == -kInfinity ? 1 : -1) : (v == kInfinity ? -1 : 1), true};
  }
  const bool beyond_max = std::fabs(nearest) == kMaxFinite &&
                          residual == (negative ? -1 : 1);
  if (residual == 0) return {nearest, 0, false};
  double v = nearest;
  switch (mode) {
    case RoundingMode::to_positive_infinity:
      if (residual > 0) v = next_up(nearest);
      break;
    case RoundingMode::to_negative_infinity:
      if (residual < 0) v = next_down(nearest);
      break;
    case RoundingMode::to_zero:
      if (!negative && residual < 0) v = next_down(nearest);
      if (negative && residual > 0) v = next_up(nearest);
      break;
    default:
      break;
  }
  return {v, v != nearest ? -residual : residual, beyond_max};
}

inline DirectedResult add_finite(double a, double b, RoundingMode mode) {
  const ExactPair s = two_sum(a, b);
  if (is_infinite(s.hi)) return apply_mode(s.hi, 0, mode);
  DirectedResult r = apply_mode(s.hi, sign_of(s.lo), mode);
  // An exact zero sum is -0 under rounding toward -inf unless both
  // operands are +0. Hardware already yields -0 + -0 = -0 and +0 otherwise.
  const bool both_positive_zero = a == 0 && b == 0 && !sign_bit(a) && !sign_bit(b);
  if (r.value == 0 && s.lo == 0 && mode == RoundingMode::to_negative_infinity &&
      !both_positive_zero) {
    r.value = -0.0;
  }
  return r;
}

inline DirectedResult mul_finite(double a, double b, RoundingMode mode) {
  const double p = a * b;
  if (is_infinite(p)) return apply_mode(p, 0, mode);
  if (p == 0) {
    const bool exact_zero = a == 0 || b == 0;
    return apply_mode(p, exact_zero ? 0 : (sign_bit(p) ? -1 : 1), mode);
  }
  return apply_mode(p, product_residual_sign(a, b, p), mode);
}

// b is nonzero.
inline DirectedResult div_finite(double a, double b, RoundingMode mode) {
  const double q = a / b;
  if (is_infinite(q)) return apply_mode(q, 0, mode);
  if (a == 0) return {q, 0, false};
  return apply_mode(q, quot_residual_sign(a, b, q), mode);
}

// x is finite and positive.
inline DirectedResult sqrt_finite(double x, RoundingMode mode) {
  const double r = std::sqrt(x);
  return apply_mode(r, sqrt_residual_sign(x, r), mode);
}

}  // namespace detail

/// Exact a+b rounded per `mode`; IEEE default results for non-finite operands.
inline double add_dir(double a, double b, RoundingMode mode) {
  require_operational(mode);
  if (is_nan(a) || is_nan(b)) return quiet_nan();
  if (!is_finite(a) || !is_finite(b)) {
    const double s = a + b;
    return is_nan(s) ? quiet_nan() : s;
  }
  return detail::add_finite(a, b, mode).value;
}

inline double sub_dir(double a, double b, RoundingMode mode) { return add_dir(a, -b, mode); }

inline double mul_dir(double a, double b, RoundingMode mode) {
  require_operational(mode);
  if (is_nan(a) || is_nan(b)) return quiet_nan();
  if (!is_finite(a) || !is_finite(b)) {
    const double p = a * b;
    return is_nan(p) ? quiet_nan() : p;
  }
  return detail::mul_finite(a, b, mode).value;
}

inline double div_dir(double a, double b, RoundingMode mode) {
  require_operational(mode);
  if (is_nan(a) || is_nan(b)) return quiet_nan();
  if (!is_finite(a) || !is_finite(b) || b == 0) {
    const double q = a / b;
    return is_nan(q) ? quiet_nan() : q;
  }
  return detail::div_finite(a, b, mode).value;
}

inline double sqrt_dir(double x, RoundingMode mode) {
  require_operational(mode);
  if (is_nan(x) || x < 0) return quiet_nan();
  if (x == 0 || is_infinite(x)) return x;
  return detail::sqrt_finite(x, mode).value;
}

/// The dynamic rounding mode of one evaluation context.
class RoundingContext {
 public:
  RoundingContext() = default;
  explicit RoundingContext(RoundingMode mode) { set_mode(mode); }

  RoundingMode mode() const noexcept { return mode_; }
  void set_mode(RoundingMode mode) {
    require_operational(mode);
    mode_ = mode;
  }

 private:
  RoundingMode mode_ = RoundingMode::to_nearest_even;
};

/// Installs a mode for the lifetime of the scope; restores on every exit.
class RoundingScope {
 public:
  RoundingScope(RoundingContext& ctx, RoundingMode mode) : ctx_(ctx), saved_(ctx.mode()) {
    ctx_.set_mode(mode);
  }
  ~RoundingScope() { ctx_.set_mode(saved_); }
  RoundingScope(const RoundingScope&) = delete;
  RoundingScope& operator=(const RoundingScope&) = delete;

 private:
  RoundingContext& ctx_;
  RoundingMode saved_;
};

template <typename Body>
decltype(auto) with_rounding(RoundingContext& ctx, RoundingMode mode, Body&& body) {
  RoundingScope scope(ctx, mode);
  return std::forward<Body>(body)();
}

// Unsuffixed forms observe the context; the hard-rounded forms ignore it.
inline double add(const RoundingContext& ctx, double a, double b) { return add_dir(a, b, ctx.mode()); }
inline double sub(const RoundingContext& ctx, double a, double b) { return sub_dir(a, b, ctx.mode()); }
inline double mul(const RoundingContext& ctx, double a, double b) { return mul_dir(a, b, ctx.mode()); }
inline double div(const RoundingContext& ctx, double a, double b) { return div_dir(a, b, ctx.mode()); }
inline double sqrt(const RoundingContext& ctx, double x) { return sqrt_dir(x, ctx.mode()); }

inline double add_down(double a, double b) { return add_dir(a, b, RoundingMode::to_negative_infinity); }
inline double add_near(double a, double b) { return add_dir(a, b, RoundingMode::to_nearest_even); }
inline double add_up(double a, double b) { return add_dir(a, b, RoundingMode::to_positive_infinity); }
inline double sub_down(double a, double b) { return sub_dir(a, b, RoundingMode::to_negative_infinity); }
inline double sub_near(double a, double b) { return sub_dir(a, b, RoundingMode::to_nearest_even); }
inline double sub_up(double a, double b) { return sub_dir(a, b, RoundingMode::to_positive_infinity); }
inline double mul_down(double a, double b) { return mul_dir(a, b, RoundingMode::to_negative_infinity); }
inline double mul_near(double a, double b) { return mul_dir(a, b, RoundingMode::to_nearest_even); }
inline double mul_up(double a, double b) { return mul_dir(a, b, RoundingMode::to_positive_infinity); }
inline double div_down(double a, double b) { return div_dir(a, b, RoundingMode::to_negative_infinity); }
inline double div_near(double a, double b) { return div_dir(a, b, RoundingMode::to_nearest_even); }
inline double div_up(double a, double b) { return div_dir(a, b, RoundingMode::to_positive_infinity); }
inline double sqrt_down(double x) { return sqrt_dir(x, RoundingMode::to_negative_infinity); }
inline double sqrt_near(double x) { return sqrt_dir(x, RoundingMode::to_nearest_even); }
inline double sqrt_up(double x) { return sqrt_dir(x, RoundingMode::to_positive_infinity); }

}  // namespace lia

#endif  // LIA_ROUNDING_HPP_
