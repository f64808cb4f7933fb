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

#include "lia/interval.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

namespace lia {
namespace {

class Intervals : public ::testing::Test {
 protected:
  Intervals() { env.set_style(NotificationStyle::recording); }
  Interval iv(double lo, double hi) { return make_interval(env, lo, hi); }
  FpEnvironment env;
};

TEST_F(Intervals, Construction) {
  EXPECT_EQ(iv(1.0, 2.0), (Interval{1.0, 2.0}));
  EXPECT_EQ(iv(-kInfinity, 0.0), (Interval{-kInfinity, 0.0}));
  EXPECT_TRUE(env.flags().empty());
  EXPECT_TRUE(iv(2.0, 1.0).is_empty());
  EXPECT_EQ(env.flags(), IndicatorSet{Indicator::invalid});
}

TEST_F(Intervals, ConstructionRejectsMalformed) {
  EXPECT_TRUE(iv(quiet_nan(), 1.0).is_empty());
  EXPECT_TRUE(iv(kInfinity, kInfinity).is_empty());
  EXPECT_TRUE(iv(-kInfinity, -kInfinity).is_empty());
  EXPECT_TRUE(env.test_indicator(Indicator::invalid));
  env.clear();
  EXPECT_TRUE(iv(kInfinity, -kInfinity).is_empty());  // canonical empty is accepted
  EXPECT_TRUE(env.flags().empty());
  EXPECT_EQ(iv(-0.0, -0.0), (Interval{0.0, 0.0}));
}

TEST_F(Intervals, ConstructionErrorStyle) {
  env.set_style(NotificationStyle::error);
  EXPECT_THROW(iv(2.0, 1.0), FloatingPointInvalidOperation);
}

TEST_F(Intervals, RadiusAndPoint) {
  EXPECT_EQ(radius(env, iv(1.0, 3.0)), 2.0);
  EXPECT_EQ(radius(env, iv(-kInfinity, 0.0)), kInfinity);
  EXPECT_TRUE(is_point(env, iv(3.141592653589793, 3.141592653589793)));
  EXPECT_FALSE(is_point(env, iv(1.0, 2.0)));
  EXPECT_TRUE(env.flags().empty());
  // 1 + 2^-60 is not representable; the width rounds up.
  EXPECT_EQ(radius(env, iv(-1.0, 0x1p-60)), std::nextafter(1.0, 2.0));
  EXPECT_TRUE(std::isnan(radius(env, Interval::empty())));
  EXPECT_FALSE(is_point(env, Interval::empty()));
  EXPECT_TRUE(env.test_indicator(Indicator::invalid));
}

TEST_F(Intervals, AddSub) {
  EXPECT_EQ(i_add(env, iv(1, 2), iv(3, 4)), (Interval{4, 6}));
  EXPECT_EQ(i_sub(env, iv(1, 2), iv(3, 4)), (Interval{-3, -1}));
  const Interval s = i_add(env, iv(0.1, 0.1), iv(0.2, 0.2));
  const oracle::Rounded o = oracle::add(0.1, 0.2);
  EXPECT_EQ(s, (Interval{o.down, o.up}));
  EXPECT_EQ(std::nextafter(s.low, 1.0), s.high);
  EXPECT_TRUE(i_member(0.3, s));
  EXPECT_TRUE(i_add(env, Interval::empty(), iv(1, 2)).is_empty());
}

TEST_F(Intervals, AddSubWithInfiniteEndpoints) {
  EXPECT_EQ(i_add(env, iv(-kInfinity, 1), iv(1, kInfinity)), Interval::entire());
  EXPECT_EQ(i_sub(env, iv(0, kInfinity), iv(0, kInfinity)), Interval::entire());
  EXPECT_FALSE(env.test_indicator(Indicator::invalid));
}

TEST_F(Intervals, Mul) {
  EXPECT_EQ(i_mul(env, iv(-1, 2), iv(3, 4)), (Interval{-4, 8}));
  EXPECT_EQ(i_mul(env, iv(0, 1), iv(0, kInfinity)), (Interval{0, kInfinity}));
  EXPECT_EQ(i_mul(env, iv(2, 3), iv(1, 1)), (Interval{2, 3}));
  EXPECT_EQ(i_mul(env, iv(-2, -1), iv(-3, 5)), (Interval{-10, 6}));
  EXPECT_FALSE(env.test_indicator(Indicator::invalid));
}

TEST_F(Intervals, Div) {
  EXPECT_EQ(i_div(env, iv(1, 2), iv(4, 8)), (Interval{0.125, 0.5}));
  EXPECT_TRUE(env.flags().empty());
  EXPECT_EQ(i_div(env, iv(1, 2), iv(-1, 1)), Interval::entire());
  EXPECT_EQ(env.flags(), IndicatorSet{Indicator::divide_by_zero});
  env.clear();
  EXPECT_TRUE(i_div(env, iv(1, 2), iv(0, 0)).is_empty());
  EXPECT_EQ(env.flags(), IndicatorSet{Indicator::invalid});
  env.clear();
  EXPECT_EQ(i_div(env, iv(1, 2), iv(0, 4)), Interval::entire());
  EXPECT_EQ(i_div(env, iv(-6, 3), iv(-3, -1)), (Interval{-3, 6}));
  EXPECT_EQ(i_div(env, iv(-6, -3), iv(1, 2)), (Interval{-6, -1.5}));
}

TEST_F(Intervals, DivErrorStyleEscapes) {
  env.set_style(NotificationStyle::error);
  EXPECT_THROW(i_div(env, iv(1, 2), iv(-1, 1)), DivisionByZero);
  EXPECT_THROW(i_div(env, iv(1, 2), iv(0, 0)), FloatingPointInvalidOperation);
}

TEST_F(Intervals, ThirdIsBracketed) {
  const Interval t = i_div(env, iv(1, 1), iv(3, 3));
  EXPECT_LT(oracle::exact(t.low), mpq_class(1, 3));
  EXPECT_GT(oracle::exact(t.high), mpq_class(1, 3));
  EXPECT_EQ(std::nextafter(t.low, 1.0), t.high);
}

TEST(Predicates, MembershipAndSubset) {
  EXPECT_TRUE(i_subseteq(Interval::empty(), Interval{1, 2}));
  EXPECT_FALSE(i_subseteq(Interval{1, 2}, Interval::empty()));
  EXPECT_TRUE(i_member(kInfinity, Interval{0, kInfinity}));
  EXPECT_FALSE(i_member(quiet_nan(), Interval::entire()));
  EXPECT_FALSE(i_member(0.0, Interval::empty()));
  EXPECT_TRUE(i_subseteq(Interval{1, 2}, Interval{0, 2}));
  EXPECT_FALSE(i_subseteq(Interval{1, 3}, Interval{0, 2}));
  static_assert(i_member(1.0, Interval{1.0, 1.0}));
}

}  // namespace
}  // namespace lia
