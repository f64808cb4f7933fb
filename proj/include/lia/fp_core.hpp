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

// Bit-level binary64 model: classification, neighbor stepping and the
// error-free transformations used to implement directed rounding in
// software on top of round-to-nearest hardware results.

#ifndef LIA_FP_CORE_HPP_
#define LIA_FP_CORE_HPP_

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string_view>

namespace lia {

inline constexpr std::uint64_t kSignMask = 0x8000000000000000ull;
inline constexpr std::uint64_t kExponentMask = 0x7FF0000000000000ull;
inline constexpr std::uint64_t kFractionMask = 0x000FFFFFFFFFFFFFull;
inline constexpr std::uint64_t kQuietBit = 0x0008000000000000ull;

inline constexpr double kMaxFinite = std::numeric_limits<double>::max();
inline constexpr double kMinNormal = std::numeric_limits<double>::min();
inline constexpr double kMinSubnormal = std::numeric_limits<double>::denorm_min();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

constexpr std::uint64_t to_bits(double x) noexcept { return std::bit_cast<std::uint64_t>(x); }
constexpr double from_bits(std::uint64_t bits) noexcept { return std::bit_cast<double>(bits); }

/// Raised by fp-core primitives whose operand lies outside their domain
/// (the `invalid` kind in LIA terms). Higher layers never let it escape.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class FloatClass {
  negative_infinity,
  negative_normal,
  negative_subnormal,
  negative_zero,
  positive_zero,
  positive_subnormal,
  positive_normal,
  positive_infinity,
  quiet_nan,
  signaling_nan,
};

constexpr std::string_view to_string(FloatClass c) noexcept {
  switch (c) {
    case FloatClass::negative_infinity: return "negative-infinity";
    case FloatClass::negative_normal: return "negative-normal";
    case FloatClass::negative_subnormal: return "negative-subnormal";
    case FloatClass::negative_zero: return "negative-zero";
    case FloatClass::positive_zero: return "positive-zero";
    case FloatClass::positive_subnormal: return "positive-subnormal";
    case FloatClass::positive_normal: return "positive-normal";
    case FloatClass::positive_infinity: return "positive-infinity";
    case FloatClass::quiet_nan: return "quiet-nan";
    case FloatClass::signaling_nan: return "signaling-nan";
  }
  return "unknown";
}

constexpr FloatClass classify(double x) noexcept {
  const std::uint64_t bits = to_bits(x);
  const bool negative = (bits & kSignMask) != 0;
  const std::uint64_t exponent = bits & kExponentMask;
  const std::uint64_t fraction = bits & kFractionMask;
  if (exponent == kExponentMask) {
    if (fraction == 0) {
      return negative ? FloatClass::negative_infinity : FloatClass::positive_infinity;
    }
    return (fraction & kQuietBit) ? FloatClass::quiet_nan : FloatClass::signaling_nan;
  }
  if (exponent == 0) {
    if (fraction == 0) return negative ? FloatClass::negative_zero : FloatClass::positive_zero;
    return negative ? FloatClass::negative_subnormal : FloatClass::positive_subnormal;
  }
  return negative ? FloatClass::negative_normal : FloatClass::positive_normal;
}

constexpr bool is_nan(double x) noexcept {
  const std::uint64_t bits = to_bits(x);
  return (bits & kExponentMask) == kExponentMask && (bits & kFractionMask) != 0;
}

constexpr bool is_signaling_nan(double x) noexcept {
  return classify(x) == FloatClass::signaling_nan;
}

constexpr bool is_quiet_nan(double x) noexcept { return classify(x) == FloatClass::quiet_nan; }

constexpr bool is_infinite(double x) noexcept {
  return (to_bits(x) & ~kSignMask) == kExponentMask;
}

constexpr bool is_finite(double x) noexcept {
  return (to_bits(x) & kExponentMask) != kExponentMask;
}

constexpr bool sign_bit(double x) noexcept { return (to_bits(x) & kSignMask) != 0; }

constexpr double quiet_nan() noexcept { return from_bits(kExponentMask | kQuietBit); }

/// Positive signaling NaN. The payload occupies the 51 low fraction bits;
/// a zero payload would encode infinity, so it is bumped to 1.
constexpr double signaling_nan(std::uint64_t payload = 1) noexcept {
  payload &= kFractionMask & ~kQuietBit;
  if (payload == 0) payload = 1;
  return from_bits(kExponentMask | payload);
}

/// Smallest binary64 strictly greater than x. next_up(+inf) is +inf and
/// both zeros step to the smallest positive subnormal.
constexpr double next_up(double x) {
  if (is_nan(x)) throw DomainError("invalid: next_up of NaN");
  if (x == kInfinity) return x;
  const std::uint64_t bits = to_bits(x);
  if ((bits & ~kSignMask) == 0) return kMinSubnormal;
  return from_bits(sign_bit(x) ? bits - 1 : bits + 1);
}

constexpr double next_down(double x) {
  if (is_nan(x)) throw DomainError("invalid: next_down of NaN");
  return -next_up(-x);
}

/// hi is the round-to-nearest result, lo the representable remainder.
struct ExactPair {
  double hi;
  double lo;
};

/// Knuth's branch-free TwoSum. Exact whenever a + b does not overflow.
inline ExactPair two_sum(double a, double b) noexcept {
  const double s = a + b;
  const double b_virtual = s - a;
  const double a_virtual = s - b_virtual;
  const double b_round = b - b_virtual;
  const double a_round = a - a_virtual;
  return {s, a_round + b_round};
}

enum class FmaStrategy { hardware, software_fallback };

#if defined(FP_FAST_FMA) && !defined(LIA_FORCE_SOFTWARE_FMA)
inline constexpr FmaStrategy kFmaStrategy = FmaStrategy::hardware;
#else
inline constexpr FmaStrategy kFmaStrategy = FmaStrategy::software_fallback;
#endif

constexpr std::string_view to_string(FmaStrategy s) noexcept {
  return s == FmaStrategy::hardware ? "hardware" : "software-fallback";
}

namespace detail {

using u128 = unsigned __int128;

// Finite x == (negative ? -1 : 1) * significand * 2^exponent.
struct Decomposed {
  bool negative;
  std::uint64_t significand;
  int exponent;
};

constexpr Decomposed decompose(double x) noexcept {
  const std::uint64_t bits = to_bits(x);
  const int biased = static_cast<int>((bits & kExponentMask) >> 52);
  const std::uint64_t fraction = bits & kFractionMask;
  if (biased == 0) return {sign_bit(x), fraction, -1074};
  return {sign_bit(x), fraction | (1ull << 52), biased - 1075};
}

constexpr int bit_length(u128 v) noexcept {
  const auto high = static_cast<std::uint64_t>(v >> 64);
  if (high != 0) return 128 - std::countl_zero(high);
  return 64 - std::countl_zero(static_cast<std::uint64_t>(v));
}

// Compares a*2^ea with b*2^eb for nonzero a, b. Alignment never needs more
// than 128 bits for operands of at most 106 bits.
constexpr int compare_scaled(u128 a, int ea, u128 b, int eb) noexcept {
  const int top_a = bit_length(a) + ea;
  const int top_b = bit_length(b) + eb;
  if (top_a != top_b) return top_a < top_b ? -1 : 1;
  if (ea > eb) a <<= (ea - eb);
  else if (eb > ea) b <<= (eb - ea);
  return a < b ? -1 : (a > b ? 1 : 0);
}

}  // namespace detail

/// Exact sign of x*y + z for finite operands, by integer arithmetic on the
/// decomposed significands. Never rounds, so it is valid across the whole
/// range including subnormals.
constexpr int exact_fma_sign(double x, double y, double z) noexcept {
  const auto dx = detail::decompose(x);
  const auto dy = detail::decompose(y);
  const auto dz = detail::decompose(z);
  const detail::u128 product = static_cast<detail::u128>(dx.significand) * dy.significand;
  const int product_sign = product == 0 ? 0 : (dx.negative != dy.negative ? -1 : 1);
  const int addend_sign = dz.significand == 0 ? 0 : (dz.negative ? -1 : 1);
  if (product_sign == 0) return addend_sign;
  if (addend_sign == 0 || product_sign == addend_sign) return product_sign;
  const int cmp = detail::compare_scaled(product, dx.exponent + dy.exponent,
                                         dz.significand, dz.exponent);
  return cmp > 0 ? product_sign : (cmp < 0 ? addend_sign : 0);
}

constexpr int sign_of(double x) noexcept { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

namespace detail {

// Residual a*b - hi computed from exact integer significand products.
// Exact when hi = RN(a*b) lies in the normal range.
inline double integer_product_residual(double a, double b, double hi) noexcept {
  const auto da = decompose(a);
  const auto db = decompose(b);
  const auto dh = decompose(hi);
  const u128 product = static_cast<u128>(da.significand) * db.significand;
  const int product_exponent = da.exponent + db.exponent;
  const int base = product_exponent < dh.exponent ? product_exponent : dh.exponent;
  const u128 p = product << (product_exponent - base);
  const u128 h = static_cast<u128>(dh.significand) << (dh.exponent - base);
  const bool product_negative = da.negative != db.negative;
  // Signed difference of magnitudes; both terms have the product's sign.
  const __int128 diff = static_cast<__int128>(p) - static_cast<__int128>(h);
  const double magnitude = std::ldexp(static_cast<double>(diff), base);
  return product_negative ? -magnitude : magnitude;
}

// Below this magnitude an fma residual can underflow and lose its sign.
inline constexpr double kFmaSafeLow = 0x1p-900;
inline constexpr double kFmaSafeHigh = 0x1p+900;

constexpr bool fma_safe(double v) noexcept {
  const double m = v < 0 ? -v : v;
  return m >= kFmaSafeLow && m <= kFmaSafeHigh;
}

}  // namespace detail

/// hi = RN(a*b), lo = a*b - hi. Requires RN(a*b) finite and normal-range.
inline ExactPair prod_residual(double a, double b) noexcept {
  const double hi = a * b;
  if constexpr (kFmaStrategy == FmaStrategy::hardware) {
    return {hi, std::fma(a, b, -hi)};
  } else {
    return {hi, detail::integer_product_residual(a, b, hi)};
  }
}

/// Residual routes exposed separately so each can be checked against the other.
inline int product_residual_sign_fma(double a, double b, double hi) noexcept {
  return sign_of(std::fma(a, b, -hi));
}

inline int quot_residual_sign_fma(double a, double b, double q) noexcept {
  return sign_of(std::fma(-q, b, a)) * sign_of(b);
}

inline int sqrt_residual_sign_fma(double x, double r) noexcept {
  return sign_of(std::fma(-r, r, x));
}

/// Sign of a*b - hi where hi = RN(a*b) is finite.
inline int product_residual_sign(double a, double b, double hi) noexcept {
  if constexpr (kFmaStrategy == FmaStrategy::hardware) {
    if (detail::fma_safe(hi)) return product_residual_sign_fma(a, b, hi);
  }
  return exact_fma_sign(a, b, -hi);
}

/// Sign of (a/b - q) for q = RN(a/b), a and b finite, b nonzero.
inline int quot_residual_sign(double a, double b, double q) noexcept {
  if constexpr (kFmaStrategy == FmaStrategy::hardware) {
    if (detail::fma_safe(a) && detail::fma_safe(q) && detail::fma_safe(b)) {
      return quot_residual_sign_fma(a, b, q);
    }
  }
  return exact_fma_sign(-q, b, a) * sign_of(b);
}

/// Sign of (sqrt(x) - r) for r = RN(sqrt(x)), x finite and nonnegative.
inline int sqrt_residual_sign(double x, double r) noexcept {
  if constexpr (kFmaStrategy == FmaStrategy::hardware) {
    if (detail::fma_safe(x)) return sqrt_residual_sign_fma(x, r);
  }
  return exact_fma_sign(-r, r, x);
}

}  // namespace lia

#endif  // LIA_FP_CORE_HPP_
