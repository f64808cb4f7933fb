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

#include "lia/fp_core.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "oracle.hpp"
#include "sampling.hpp"

namespace lia {
namespace {

int rational_sign(const mpq_class& q) { return sgn(q); }

TEST(Classify, EncodingTable) {
  EXPECT_EQ(classify(from_bits(0x7FF0000000000000ull)), FloatClass::positive_infinity);
  EXPECT_EQ(classify(from_bits(0xFFF0000000000000ull)), FloatClass::negative_infinity);
  EXPECT_EQ(classify(from_bits(0x0000000000000000ull)), FloatClass::positive_zero);
  EXPECT_EQ(classify(from_bits(0x8000000000000000ull)), FloatClass::negative_zero);
  EXPECT_EQ(classify(from_bits(0x7FF0000000000001ull)), FloatClass::signaling_nan);
  EXPECT_EQ(classify(from_bits(0x7FF8000000000000ull)), FloatClass::quiet_nan);
  EXPECT_EQ(classify(from_bits(0x0000000000000001ull)), FloatClass::positive_subnormal);
  EXPECT_EQ(classify(-1.5), FloatClass::negative_normal);
}

TEST(Classify, NanConstructors) {
  EXPECT_TRUE(is_signaling_nan(signaling_nan()));
  EXPECT_TRUE(is_signaling_nan(signaling_nan(0)));
  EXPECT_TRUE(is_quiet_nan(quiet_nan()));
  EXPECT_FALSE(is_nan(kInfinity));
  EXPECT_EQ(to_string(FloatClass::signaling_nan), "signaling-nan");
}

TEST(Neighbors, Examples) {
  EXPECT_EQ(to_bits(next_up(1.0)), 0x3FF0000000000001ull);
  EXPECT_EQ(to_bits(next_down(kInfinity)), 0x7FEFFFFFFFFFFFFFull);
  EXPECT_EQ(next_up(kMaxFinite), kInfinity);
  EXPECT_EQ(next_down(-kMaxFinite), -kInfinity);
  EXPECT_EQ(next_up(-kInfinity), -kMaxFinite);
  EXPECT_EQ(next_up(0.0), kMinSubnormal);
  EXPECT_EQ(next_up(-0.0), kMinSubnormal);
  EXPECT_EQ(next_down(0.0), -kMinSubnormal);
  EXPECT_EQ(next_up(-kMinSubnormal), 0.0);
  EXPECT_THROW(next_up(quiet_nan()), DomainError);
  EXPECT_THROW(next_down(signaling_nan()), DomainError);
}

TEST(Neighbors, AgreeWithNextafter) {
  sampling::Rng rng(11);
  for (int i = 0; i < 20000; ++i) {
    const double x = sampling::finite(rng);
    EXPECT_EQ(to_bits(next_up(x)), to_bits(std::nextafter(x, kInfinity))) << x;
    EXPECT_EQ(to_bits(next_down(x)), to_bits(std::nextafter(x, -kInfinity))) << x;
  }
}

TEST(TwoSum, Examples) {
  const ExactPair a = two_sum(1.0, 0x1p-60);
  EXPECT_EQ(a.hi, 1.0);
  EXPECT_EQ(a.lo, 0x1p-60);
  const ExactPair b = two_sum(123.25, 0.0);
  EXPECT_EQ(b.hi, 123.25);
  EXPECT_EQ(b.lo, 0.0);
}

TEST(TwoSum, PointOnePlusPointTwoAgainstOracle) {
  const ExactPair s = two_sum(0.1, 0.2);
  EXPECT_EQ(s.hi, 0.1 + 0.2);
  const mpq_class residual = oracle::exact(0.1) + oracle::exact(0.2) - oracle::exact(s.hi);
  EXPECT_LT(rational_sign(residual), 0);
  EXPECT_EQ(oracle::exact(s.lo), residual);
}

TEST(TwoSum, RandomPairsAreErrorFree) {
  sampling::Rng rng(12);
  for (int i = 0; i < 20000; ++i) {
    const auto [a, b] = sampling::pair(rng);
    const ExactPair s = two_sum(a, b);
    if (!is_finite(s.hi)) continue;
    EXPECT_EQ(oracle::exact(s.hi) + oracle::exact(s.lo), oracle::exact(a) + oracle::exact(b))
        << a << " " << b;
  }
}

TEST(ProdResidual, Examples) {
  const ExactPair a = prod_residual(1.5, 2.0);
  EXPECT_EQ(a.hi, 3.0);
  EXPECT_EQ(a.lo, 0.0);
  const ExactPair b = prod_residual(0.7, 1.0);
  EXPECT_EQ(b.hi, 0.7);
  EXPECT_EQ(b.lo, 0.0);
}

TEST(ProdResidual, PointOneSquaredAgainstOracle) {
  const ExactPair p = prod_residual(0.1, 0.1);
  EXPECT_EQ(p.hi, 0.1 * 0.1);
  const mpq_class residual = oracle::exact(0.1) * oracle::exact(0.1) - oracle::exact(p.hi);
  EXPECT_NE(rational_sign(residual), 0);
  EXPECT_EQ(oracle::exact(p.lo), residual);
}

TEST(QuotResidual, Examples) {
  EXPECT_EQ(quot_residual_sign(1.0, 2.0, 0.5), 0);
  const double third = 1.0 / 3.0;
  const int expected = rational_sign(mpq_class(1, 3) - oracle::exact(third));
  EXPECT_NE(expected, 0);
  EXPECT_EQ(quot_residual_sign(1.0, 3.0, third), expected);
  EXPECT_EQ(quot_residual_sign(-1.0, 3.0, -1.0 / 3.0), -expected);
}

TEST(SqrtResidual, Examples) {
  EXPECT_EQ(sqrt_residual_sign(4.0, 2.0), 0);
  EXPECT_EQ(sqrt_residual_sign(0.0, 0.0), 0);
  const double r = std::sqrt(2.0);
  const mpq_class rr = oracle::exact(r) * oracle::exact(r);
  // sign(sqrt(2) - r) equals sign(2 - r^2).
  EXPECT_EQ(sqrt_residual_sign(2.0, r), rational_sign(mpq_class(2) - rr));
}

TEST(ExactFmaSign, RandomAgainstOracle) {
  sampling::Rng rng(13);
  for (int i = 0; i < 100000; ++i) {
    const double x = sampling::finite(rng);
    const double y = sampling::finite(rng);
    // Bias z toward -x*y so cancellation is exercised.
    const double z = (i % 2) ? -(x * y) : sampling::finite(rng);
    if (!is_finite(z)) continue;
    const mpq_class exact = oracle::exact(x) * oracle::exact(y) + oracle::exact(z);
    ASSERT_EQ(exact_fma_sign(x, y, z), rational_sign(exact)) << x << " " << y << " " << z;
  }
}

TEST(ResidualRoutes, IntegerRouteMatchesFmaInSafeRange) {
  sampling::Rng rng(14);
  for (int i = 0; i < 50000; ++i) {
    const double a = sampling::draw(rng, sampling::Stratum::unit);
    const double b = sampling::draw(rng, sampling::Stratum::unit);
    const double p = a * b;
    EXPECT_EQ(exact_fma_sign(a, b, -p), product_residual_sign_fma(a, b, p));
    const double q = a / b;
    EXPECT_EQ(exact_fma_sign(-q, b, a) * sign_of(b), quot_residual_sign_fma(a, b, q));
    const double x = std::fabs(a);
    const double r = std::sqrt(x);
    EXPECT_EQ(exact_fma_sign(-r, r, x), sqrt_residual_sign_fma(x, r));
    EXPECT_EQ(detail::integer_product_residual(a, b, p), std::fma(a, b, -p));
  }
}

TEST(FmaStrategy, NamesAreStable) {
  EXPECT_EQ(to_string(FmaStrategy::hardware), "hardware");
  EXPECT_EQ(to_string(FmaStrategy::software_fallback), "software-fallback");
}

}  // namespace
}  // namespace lia
