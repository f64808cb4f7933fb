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

#include "lia/eval.hpp"

#include <gtest/gtest.h>

#include <sstream>
#include <string>

namespace lia {
namespace {

constexpr double kTwoPi = 6.283185307179586;

EvalResult run(const std::string& text, NotificationStyle style = NotificationStyle::error) {
  FpEnvironment env;
  env.set_style(style);
  return evaluate(parse(text), env);
}

double number(const EvalResult& r) { return std::get<double>(r.value); }

TEST(Eval, ExactDoubling) {
  for (const char* text : {"(+.< pi pi)", "(+.<> pi pi)", "(+.> pi pi)", "(+ pi pi)"}) {
    const EvalResult r = run(text);
    EXPECT_EQ(to_bits(number(r)), to_bits(kTwoPi)) << text;
    EXPECT_TRUE(r.flags.empty());
  }
}

TEST(Eval, RoundingFormAndSuffixes) {
  EXPECT_EQ(number(run("(rounding :positive-infinity (+ 0.1 0.2))")), add_up(0.1, 0.2));
  EXPECT_EQ(number(run("(rounding :positive-infinity (+.< 0.1 0.2))")), add_down(0.1, 0.2));
  EXPECT_EQ(number(run("(rounding :zero (/ -1 3))")), div_up(-1.0, 3.0));
  EXPECT_EQ(number(run("(sqrt.< 2)")), sqrt_down(2.0));
  const EvalResult r = run("(rounding :negative-infinity (+ 1 2))");
  EXPECT_EQ(r.mode, RoundingMode::to_nearest_even);
}

TEST(Eval, DivideByZeroUnderRecording) {
  const EvalResult r = run("(/ 1.0 0.0)", NotificationStyle::recording);
  EXPECT_EQ(number(r), kInfinity);
  EXPECT_EQ(r.flags, IndicatorSet{Indicator::divide_by_zero});
}

TEST(Eval, DivideByZeroUnderError) {
  EXPECT_THROW(run("(/ 1.0 0.0)"), DivisionByZero);
}

TEST(Eval, DivideByZeroUnderTerminating) {
  FpEnvironment env;
  std::ostringstream diag;
  env.set_diagnostic_stream(diag);
  env.set_style(NotificationStyle::terminating);
  EXPECT_THROW(evaluate(parse("(/ 1.0 0.0)"), env), Terminated);
  EXPECT_EQ(diag.str(), "LIA-NTM: divide-by-zero in div(1, 0) continuation=+inf\n");
}

TEST(Eval, SignalingNanComparison) {
  const EvalResult r = run("(= snan 1.0)", NotificationStyle::recording);
  EXPECT_FALSE(std::get<bool>(r.value));
  EXPECT_EQ(r.flags, IndicatorSet{Indicator::invalid});
  EXPECT_TRUE(std::get<bool>(run("(/= qnan 1.0)").value));
  EXPECT_TRUE(std::get<bool>(run("(= 1 1 1)").value));
  EXPECT_FALSE(std::get<bool>(run("(/= 1 2 1)").value));
}

TEST(Eval, Intervals) {
  EXPECT_EQ(std::get<Interval>(run("(interval 1 2)").value), (Interval{1, 2}));
  const EvalResult d = run("(/ (interval 1 2) (interval -1 1))", NotificationStyle::recording);
  EXPECT_EQ(std::get<Interval>(d.value), Interval::entire());
  EXPECT_EQ(d.flags, IndicatorSet{Indicator::divide_by_zero});
  EXPECT_EQ(std::get<Interval>(run("(* (interval -1 2) 3)").value), (Interval{-3, 6}));
  EXPECT_EQ(number(run("(radius (interval 1 3))")), 2.0);
  EXPECT_TRUE(std::get<bool>(run("(point? (interval pi pi))").value));
  EXPECT_TRUE(std::get<bool>(run("(member? 0.3 (+ (interval 0.1 0.1) (interval 0.2 0.2)))").value));
  EXPECT_TRUE(std::get<bool>(run("(subset? (interval 1 2) (interval 0 2))").value));
}

TEST(Eval, TypeErrors) {
  EXPECT_THROW(run("(+.< (interval 1 2) 1)"), EvalError);
  EXPECT_THROW(run("(+ (= 1 1) 1)"), EvalError);
  EXPECT_THROW(run("(interval (interval 1 2) 3)"), EvalError);
  EXPECT_THROW(run("(radius (= 1 1))"), EvalError);
}

TEST(Eval, FastThenReliableSolution) {
  FpEnvironment env;
  env.record(Indicator::underflow);
  const EvalResult r = evaluate(
      parse("(trap-math (:before :save :clear :after :merge)"
            " (+ (* 1e300 1e300) 1)"
            " (:overflow () :clear (:continue 42)))"),
      env);
  EXPECT_EQ(number(r), 43.0);
  EXPECT_FALSE(r.flags.contains(Indicator::overflow));
  EXPECT_TRUE(r.flags.contains(Indicator::underflow));
}

TEST(Eval, HandlerValueIsAnExpression) {
  EXPECT_EQ(number(run("(trap-math () (/ 1 0) (:divide-by-zero (:continue (- 0 max-finite))))")),
            -kMaxFinite);
}

TEST(Eval, NestedStyles) {
  const EvalResult r = run("(with-notification-style :recording (sqrt -1))");
  EXPECT_TRUE(is_quiet_nan(number(r)));
  EXPECT_EQ(r.style, NotificationStyle::error);
  EXPECT_THROW(run("(with-notification-style :error (sqrt -1))", NotificationStyle::recording),
               FloatingPointInvalidOperation);
}

TEST(Eval, WrongContinuationTypeIsRejected) {
  EXPECT_THROW(run("(trap-math () (/ 1 0) (:divide-by-zero (:continue (= 1 1))))"),
               ContinuationTypeError);
}

}  // namespace
}  // namespace lia
