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

// Deterministic text rendering of scalars, intervals and values.

#ifndef LIA_FORMAT_HPP_
#define LIA_FORMAT_HPP_

#include <array>
#include <charconv>
#include <string>
#include <variant>

#include "lia/value.hpp"

namespace lia {

/// Shortest round-trip decimal; non-finite values use the CLI symbols.
inline std::string render_decimal(double x) {
  switch (classify(x)) {
    case FloatClass::positive_infinity: return "+inf";
    case FloatClass::negative_infinity: return "-inf";
    case FloatClass::quiet_nan: return "qnan";
    case FloatClass::signaling_nan: return "snan";
    default: break;
  }
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), end);
}

/// Conventional 0x1.<hexfrac>p<exp> form; subnormals print as 0x0.<frac>p-1022.
inline std::string render_hex(double x) {
  if (!is_finite(x)) return render_decimal(x);
  const std::uint64_t bits = to_bits(x);
  const std::uint64_t fraction = bits & kFractionMask;
  const int biased = static_cast<int>((bits & kExponentMask) >> 52);
  std::string out = sign_bit(x) ? "-0x" : "0x";
  if (biased == 0 && fraction == 0) return out + "0p+0";
  out += biased == 0 ? '0' : '1';
  if (fraction != 0) {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string frac;
    for (int shift = 48; shift >= 0; shift -= 4) frac += kDigits[(fraction >> shift) & 0xF];
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    out += '.';
    out += frac;
  }
  const int exponent = biased == 0 ? -1022 : biased - 1023;
  out += 'p';
  out += exponent < 0 ? '-' : '+';
  out += std::to_string(exponent < 0 ? -exponent : exponent);
  return out;
}

/// Scalar rendering used on CLI value lines: decimal plus hex for finite values.
inline std::string render_scalar(double x) {
  if (!is_finite(x)) return render_decimal(x);
  return render_decimal(x) + " (" + render_hex(x) + ")";
}

inline std::string render_interval(const Interval& i) {
  if (i.is_empty()) return "empty";
  return "[" + render_decimal(i.low) + ", " + render_decimal(i.high) + "]";
}

/// Compact form (decimal only) used inside diagnostics.
inline std::string render_compact(const Value& v) {
  if (const double* x = std::get_if<double>(&v)) return render_decimal(*x);
  if (const Interval* i = std::get_if<Interval>(&v)) return render_interval(*i);
  return std::get<bool>(v) ? "true" : "false";
}

inline std::string render_value(const Value& v) {
  if (const double* x = std::get_if<double>(&v)) return render_scalar(*x);
  return render_compact(v);
}

}  // namespace lia

#endif  // LIA_FORMAT_HPP_
