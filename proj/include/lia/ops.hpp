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

// Notifying LIA arithmetic and the = / /= comparisons.
//
// Each arithmetic operation delegates the numeric work to the directed
// rounding layer and then reports exceptional situations through the
// environment, yielding whatever value the notification resolves to:
//
//   signaling NaN operand              invalid          qNaN
//   inf-inf, 0*inf, 0/0, inf/inf, sqrt(<0)  invalid     qNaN
//   finite nonzero / 0                 divide-by-zero   +-inf (sign xor)
//   |exact| > largest finite           overflow         mode-rounded value
//   tiny and inexact                   underflow        rounded value
//   any inexact result                 inexact          rounded value
//
// Quiet NaN operands propagate silently.

#ifndef LIA_OPS_HPP_
#define LIA_OPS_HPP_

#include <span>
#include <stdexcept>
#include <string_view>

#include "lia/environment.hpp"
#include "lia/rounding.hpp"

namespace lia {

namespace detail {

inline double report_rounding(FpEnvironment& env, std::string_view op, double a, double b,
                              const DirectedResult& r) {
  double v = r.value;
  const bool inexact = r.residual != 0 || r.overflow;
  if (r.overflow) {
    v = env.notify<double>(Indicator::overflow, op, {a, b}, v);
  } else if (inexact && std::fabs(r.value) < kMinNormal) {
    v = env.notify<double>(Indicator::underflow, op, {a, b}, v);
  }
  if (inexact) v = env.notify<double>(Indicator::inexact, op, {a, b}, v);
  return v;
}

inline double invalid(FpEnvironment& env, std::string_view op, double a, double b) {
  return env.notify<double>(Indicator::invalid, op, {a, b}, quiet_nan());
}

}  // namespace detail

inline double lia_add(FpEnvironment& env, double a, double b, RoundingMode mode) {
  require_operational(mode);
  if (is_signaling_nan(a) || is_signaling_nan(b)) return detail::invalid(env, "add", a, b);
  if (is_nan(a) || is_nan(b)) return quiet_nan();
  if (is_infinite(a) && is_infinite(b) && sign_bit(a) != sign_bit(b)) {
    return detail::invalid(env, "add", a, b);
  }
  if (!is_finite(a) || !is_finite(b)) return a + b;
  return detail::report_rounding(env, "add", a, b, detail::add_finite(a, b, mode));
}

inline double lia_sub(FpEnvironment& env, double a, double b, RoundingMode mode) {
  require_operational(mode);
  if (is_signaling_nan(a) || is_signaling_nan(b)) return detail::invalid(env, "sub", a, b);
  if (is_nan(a) || is_nan(b)) return quiet_nan();
  if (is_infinite(a) && is_infinite(b) && sign_bit(a) == sign_bit(b)) {
    return detail::invalid(env, "sub", a, b);
  }
  if (!is_finite(a) || !is_finite(b)) return a - b;
  return detail::report_rounding(env, "sub", a, b, detail::add_finite(a, -b, mode));
}

inline double lia_mul(FpEnvironment& env, double a, double b, RoundingMode mode) {
  require_operational(mode);
  if (is_signaling_nan(a) || is_signaling_nan(b)) return detail::invalid(env, "mul", a, b);
  if (is_nan(a) || is_nan(b)) return quiet_nan();
  if ((a == 0 && is_infinite(b)) || (is_infinite(a) && b == 0)) {
    return detail::invalid(env, "mul", a, b);
  }
  if (!is_finite(a) || !is_finite(b)) return a * b;
  return detail::report_rounding(env, "mul", a, b, detail::mul_finite(a, b, mode));
}

inline double lia_div(FpEnvironment& env, double a, double b, RoundingMode mode) {
  require_operational(mode);
  if (is_signaling_nan(a) || is_signaling_nan(b)) return detail::invalid(env, "div", a, b);
  if (is_nan(a) || is_nan(b)) return quiet_nan();
  if ((a == 0 && b == 0) || (is_infinite(a) && is_infinite(b))) {
    return detail::invalid(env, "div", a, b);
  }
  if (b == 0 && is_finite(a)) {
    const double pole = sign_bit(a) != sign_bit(b) ? -kInfinity : kInfinity;
    return env.notify<double>(Indicator::divide_by_zero, "div", {a, b}, pole);
  }
  if (!is_finite(a) || !is_finite(b) || a == 0) return a / b;
  return detail::report_rounding(env, "div", a, b, detail::div_finite(a, b, mode));
}

inline double lia_sqrt(FpEnvironment& env, double x, RoundingMode mode) {
  require_operational(mode);
  if (is_signaling_nan(x)) return env.notify<double>(Indicator::invalid, "sqrt", {x}, quiet_nan());
  if (is_nan(x)) return quiet_nan();
  if (x < 0) return env.notify<double>(Indicator::invalid, "sqrt", {x}, quiet_nan());
  if (x == 0 || is_infinite(x)) return x;
  const DirectedResult r = detail::sqrt_finite(x, mode);
  if (r.residual == 0) return r.value;
  return env.notify<double>(Indicator::inexact, "sqrt", {x}, r.value);
}

// Context-rounded forms read the environment's dynamic mode.
inline double lia_add(FpEnvironment& env, double a, double b) { return lia_add(env, a, b, env.mode()); }
inline double lia_sub(FpEnvironment& env, double a, double b) { return lia_sub(env, a, b, env.mode()); }
inline double lia_mul(FpEnvironment& env, double a, double b) { return lia_mul(env, a, b, env.mode()); }
inline double lia_div(FpEnvironment& env, double a, double b) { return lia_div(env, a, b, env.mode()); }
inline double lia_sqrt(FpEnvironment& env, double x) { return lia_sqrt(env, x, env.mode()); }

/// Arithmetic equality: -0 = +0, infinities equal iff same sign, quiet NaN
/// compares unequal, signaling NaN raises invalid with continuation false.
inline bool lia_eq(FpEnvironment& env, double a, double b) {
  if (is_signaling_nan(a) || is_signaling_nan(b)) {
    return env.notify<bool>(Indicator::invalid, "eq", {a, b}, false);
  }
  if (is_nan(a) || is_nan(b)) return false;
  return a == b;
}

inline bool lia_neq(FpEnvironment& env, double a, double b) {
  if (is_signaling_nan(a) || is_signaling_nan(b)) {
    return env.notify<bool>(Indicator::invalid, "neq", {a, b}, false);
  }
  if (is_nan(a) || is_nan(b)) return true;
  return a != b;
}

/// n-adic =: every adjacent pair equal. Stops at the first false comparison.
inline bool lia_eq(FpEnvironment& env, std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("=: needs at least one argument");
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (!lia_eq(env, xs[i], xs[i + 1])) return false;
  }
  return true;
}

/// n-adic /=: every pair distinct. Stops at the first false comparison.
inline bool lia_neq(FpEnvironment& env, std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("/=: needs at least one argument");
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!lia_neq(env, xs[i], xs[j])) return false;
    }
  }
  return true;
}

}  // namespace lia

#endif  // LIA_OPS_HPP_
