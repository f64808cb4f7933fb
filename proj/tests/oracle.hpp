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

// Arbitrary-precision rational reference for binary64 rounding. Uses only
// GMP rationals, std::bit_cast and integer bit patterns; it shares no code
// with the kernel's residual-based implementation.

#ifndef LIA_TESTS_ORACLE_HPP_
#define LIA_TESTS_ORACLE_HPP_

#include <gmpxx.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>

namespace oracle {

inline mpq_class exact(double x) {
  mpq_class q(x);  // mpq_set_d is exact for finite doubles
  return q;
}

inline mpq_class pow2(int e) {
  mpz_class one = 1;
  if (e >= 0) return mpq_class(mpz_class(one << e), 1);
  return mpq_class(1, mpz_class(one << -e));
}

// Monotone integer key over finite doubles; both zeros map to 0.
inline std::int64_t key(double x) {
  const auto bits = std::bit_cast<std::uint64_t>(x);
  const auto magnitude = static_cast<std::int64_t>(bits & 0x7FFFFFFFFFFFFFFFull);
  return (bits >> 63) ? -magnitude : magnitude;
}

inline double from_key(std::int64_t k) {
  if (k >= 0) return std::bit_cast<double>(static_cast<std::uint64_t>(k));
  return -std::bit_cast<double>(static_cast<std::uint64_t>(-k));
}

inline constexpr double kMax = std::numeric_limits<double>::max();
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Largest double d (possibly -inf) with d <= q.
inline double floor_double(const mpq_class& q) {
  if (q < exact(-kMax)) return -kInf;
  if (q >= exact(kMax)) return kMax;
  std::int64_t lo = key(-kMax);  // value(lo) <= q
  std::int64_t hi = key(kMax);   // value(hi) > q
  while (lo + 1 < hi) {
    const std::int64_t mid = std::midpoint(lo, hi);
    if (exact(from_key(mid)) <= q) lo = mid;
    else hi = mid;
  }
  return from_key(lo);
}

struct Rounded {
  double down;
  double up;
  double nearest_even;
  double to_zero;
  bool exact;
  bool overflow;  // |q| > largest finite
};

// Extended value used for distance comparison: +-inf count as +-2^1024.
inline mpq_class extended(double d) {
  if (d == kInf) return pow2(1024);
  if (d == -kInf) return -pow2(1024);
  return exact(d);
}

inline bool even_significand(double d) {
  if (std::isinf(d)) return true;
  return (std::bit_cast<std::uint64_t>(d) & 1u) == 0;
}

/// Rounds a nonzero rational under every mode.
inline Rounded round_nonzero(const mpq_class& q) {
  Rounded r{};
  const double d = floor_double(q);
  r.exact = !std::isinf(d) && exact(d) == q;
  r.overflow = abs(q) > exact(kMax);
  r.down = d;
  if (r.exact) {
    r.up = d;
  } else if (d == -kInf) {
    r.up = -kMax;
  } else if (d == kMax) {
    r.up = kInf;
  } else {
    r.up = from_key(key(d) + 1);
  }
  if (r.exact) {
    r.nearest_even = d;
  } else {
    const mpq_class below = q - extended(r.down);
    const mpq_class above = extended(r.up) - q;
    if (below < above) r.nearest_even = r.down;
    else if (above < below) r.nearest_even = r.up;
    else r.nearest_even = even_significand(r.down) ? r.down : r.up;
  }
  r.to_zero = sgn(q) > 0 ? r.down : r.up;
  // A zero result carries the sign of the exact value.
  const bool negative = sgn(q) < 0;
  for (double* v : {&r.down, &r.up, &r.nearest_even, &r.to_zero}) {
    if (*v == 0) *v = negative ? -0.0 : 0.0;
  }
  return r;
}

inline Rounded all_modes(double v) { return {v, v, v, v, true, false}; }

/// Finite a + b.
inline Rounded add(double a, double b) {
  const mpq_class q = exact(a) + exact(b);
  if (sgn(q) != 0) return round_nonzero(q);
  // Exact zero: -0 + -0 = -0 and +0 + +0 = +0 in every mode; any other
  // exact zero sum is +0, except -0 when rounding toward -inf.
  const bool na = std::signbit(a), nb = std::signbit(b);
  if (a == 0 && b == 0 && na == nb) return all_modes(na ? -0.0 : 0.0);
  Rounded r = all_modes(0.0);
  r.down = -0.0;
  return r;
}

inline Rounded sub(double a, double b) { return add(a, -b); }

inline Rounded mul(double a, double b) {
  const mpq_class q = exact(a) * exact(b);
  if (sgn(q) != 0) return round_nonzero(q);
  return all_modes(std::signbit(a) != std::signbit(b) ? -0.0 : 0.0);
}

/// b nonzero.
inline Rounded div(double a, double b) {
  const mpq_class q = exact(a) / exact(b);
  if (sgn(q) != 0) return round_nonzero(q);
  return all_modes(std::signbit(a) != std::signbit(b) ? -0.0 : 0.0);
}

/// x finite and positive: compares squares of neighboring candidates with x.
inline Rounded sqrt(double x) {
  const mpq_class target = exact(x);
  std::int64_t lo = 0;                   // 0^2 <= x
  std::int64_t hi = key(kMax);           // max^2 > x
  while (lo + 1 < hi) {
    const std::int64_t mid = std::midpoint(lo, hi);
    const mpq_class m = exact(from_key(mid));
    if (m * m <= target) lo = mid;
    else hi = mid;
  }
  Rounded r{};
  r.down = from_key(lo);
  const mpq_class d = exact(r.down);
  r.exact = d * d == target;
  r.up = r.exact ? r.down : from_key(lo + 1);
  r.overflow = false;
  if (r.exact) {
    r.nearest_even = r.down;
  } else {
    const mpq_class mid = (d + exact(r.up)) / 2;
    r.nearest_even = mid * mid < target ? r.up : r.down;  // no ties for sqrt
  }
  r.to_zero = r.down;
  return r;
}

}  // namespace oracle

#endif  // LIA_TESTS_ORACLE_HPP_
