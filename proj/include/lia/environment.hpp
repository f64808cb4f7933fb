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

// The floating-point environment of one evaluation context: indicator
// flags, notification style, rounding mode and the handler stack through
// which error-style notifications are delivered and resumed.
//
// Notification follows the three LIA regimes:
//   recording    flag is set, the continuation value is returned;
//   error        flag is set, the condition goes to the innermost handler,
//                which may resume the faulting operation with a value or
//                decline; with no taker an ArithmeticError is thrown;
//   terminating  flag is set, a diagnostic line is written and Terminated
//                is thrown.

#ifndef LIA_ENVIRONMENT_HPP_
#define LIA_ENVIRONMENT_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lia/format.hpp"
#include "lia/rounding.hpp"
#include "lia/value.hpp"

namespace lia {

enum class Indicator : std::uint8_t { overflow, underflow, inexact, invalid, divide_by_zero };

inline constexpr std::array<Indicator, 5> kAllIndicators = {
    Indicator::overflow, Indicator::underflow, Indicator::inexact, Indicator::invalid,
    Indicator::divide_by_zero};

constexpr std::string_view to_string(Indicator k) noexcept {
  switch (k) {
    case Indicator::overflow: return "overflow";
    case Indicator::underflow: return "underflow";
    case Indicator::inexact: return "inexact";
    case Indicator::invalid: return "invalid";
    case Indicator::divide_by_zero: return "divide-by-zero";
  }
  return "unknown";
}

inline std::optional<Indicator> indicator_from_string(std::string_view name) {
  for (Indicator k : kAllIndicators) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

class IndicatorSet {
 public:
  constexpr IndicatorSet() = default;
  constexpr IndicatorSet(std::initializer_list<Indicator> kinds) {
    for (Indicator k : kinds) insert(k);
  }

  constexpr void insert(Indicator k) noexcept { bits_ |= mask(k); }
  constexpr void erase(Indicator k) noexcept { bits_ &= static_cast<std::uint8_t>(~mask(k)); }
  constexpr bool contains(Indicator k) const noexcept { return (bits_ & mask(k)) != 0; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr void clear() noexcept { bits_ = 0; }
  constexpr std::uint8_t raw() const noexcept { return bits_; }

  constexpr IndicatorSet& operator|=(IndicatorSet other) noexcept {
    bits_ |= other.bits_;
    return *this;
  }
  friend constexpr IndicatorSet operator|(IndicatorSet a, IndicatorSet b) noexcept { return a |= b; }
  friend constexpr bool operator==(IndicatorSet, IndicatorSet) = default;

  constexpr bool is_subset_of(IndicatorSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }

  std::vector<Indicator> kinds() const {
    std::vector<Indicator> out;
    for (Indicator k : kAllIndicators) {
      if (contains(k)) out.push_back(k);
    }
    return out;
  }

 private:
  static constexpr std::uint8_t mask(Indicator k) noexcept {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(k));
  }
  std::uint8_t bits_ = 0;
};

/// Comma-separated kinds in canonical order, or "none".
inline std::string to_string(IndicatorSet set) {
  std::string out;
  for (Indicator k : set.kinds()) {
    if (!out.empty()) out += ", ";
    out += to_string(k);
  }
  return out.empty() ? "none" : out;
}

enum class NotificationStyle { recording, error, terminating };

constexpr std::string_view to_string(NotificationStyle s) noexcept {
  switch (s) {
    case NotificationStyle::recording: return "recording";
    case NotificationStyle::error: return "error";
    case NotificationStyle::terminating: return "terminating";
  }
  return "unknown";
}

inline std::optional<NotificationStyle> notification_style_from_string(std::string_view name) {
  for (auto s : {NotificationStyle::recording, NotificationStyle::error,
                 NotificationStyle::terminating}) {
    if (to_string(s) == name) return s;
  }
  return std::nullopt;
}

struct ArithmeticCondition {
  Indicator kind;
  std::string operation;
  std::vector<Value> operands;
  Value continuation;
};

inline std::string describe(const ArithmeticCondition& c) {
  std::string out(to_string(c.kind));
  out += " in ";
  out += c.operation;
  out += '(';
  for (std::size_t i = 0; i < c.operands.size(); ++i) {
    if (i) out += ", ";
    out += render_compact(c.operands[i]);
  }
  out += ") continuation=";
  out += render_compact(c.continuation);
  return out;
}

/// The NTM diagnostic line.
inline std::string termination_message(const ArithmeticCondition& c) {
  return "LIA-NTM: " + describe(c);
}

/// Common parent of the arithmetic condition taxonomy. Thrown when an
/// error-style notification finds no handler willing to resume it.
class ArithmeticError : public std::runtime_error {
 public:
  explicit ArithmeticError(ArithmeticCondition c)
      : std::runtime_error(describe(c)), condition_(std::move(c)) {}

  const ArithmeticCondition& condition() const noexcept { return condition_; }
  Indicator kind() const noexcept { return condition_.kind; }
  const Value& continuation_value() const noexcept { return condition_.continuation; }

 private:
  ArithmeticCondition condition_;
};

class FloatingPointOverflow : public ArithmeticError { using ArithmeticError::ArithmeticError; };
class FloatingPointUnderflow : public ArithmeticError { using ArithmeticError::ArithmeticError; };
class FloatingPointInexact : public ArithmeticError { using ArithmeticError::ArithmeticError; };
class FloatingPointInvalidOperation : public ArithmeticError { using ArithmeticError::ArithmeticError; };
class DivisionByZero : public ArithmeticError { using ArithmeticError::ArithmeticError; };

[[noreturn]] inline void throw_condition(ArithmeticCondition c) {
  switch (c.kind) {
    case Indicator::overflow: throw FloatingPointOverflow(std::move(c));
    case Indicator::underflow: throw FloatingPointUnderflow(std::move(c));
    case Indicator::inexact: throw FloatingPointInexact(std::move(c));
    case Indicator::invalid: throw FloatingPointInvalidOperation(std::move(c));
    case Indicator::divide_by_zero: throw DivisionByZero(std::move(c));
  }
  throw ArithmeticError(std::move(c));
}

/// Abort of the whole evaluation under the terminating style.
class Terminated : public std::exception {
 public:
  explicit Terminated(ArithmeticCondition c)
      : message_(termination_message(c)), condition_(std::move(c)) {}
  const char* what() const noexcept override { return message_.c_str(); }
  const ArithmeticCondition& condition() const noexcept { return condition_; }

 private:
  std::string message_;
  ArithmeticCondition condition_;
};

/// A handler resumed with a value the faulting operation cannot yield.
class ContinuationTypeError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Immutable copy of an environment's observable state.
struct EnvironmentSnapshot {
  IndicatorSet flags;
  NotificationStyle style = NotificationStyle::error;
  RoundingMode mode = RoundingMode::to_nearest_even;

  friend bool operator==(const EnvironmentSnapshot&, const EnvironmentSnapshot&) = default;
};

/// Returns a value to resume the faulting operation, or nullopt to decline.
using ConditionHandler = std::function<std::optional<Value>(const ArithmeticCondition&)>;

class FpEnvironment {
  struct HandlerFrame {
    ConditionHandler handler;
    const HandlerFrame* outer;
  };

 public:
  FpEnvironment() = default;
  FpEnvironment(const FpEnvironment&) = delete;
  FpEnvironment& operator=(const FpEnvironment&) = delete;

  // Flags.
  IndicatorSet flags() const noexcept { return flags_; }
  bool test_indicator(Indicator k) const noexcept { return flags_.contains(k); }
  void clear_indicator(Indicator k) noexcept { flags_.erase(k); }
  void record(Indicator k) noexcept { flags_.insert(k); }

  EnvironmentSnapshot save() const noexcept { return {flags_, style_, rounding_.mode()}; }
  /// Empties the flags; style and mode are untouched.
  void clear() noexcept { flags_.clear(); }
  void merge(const EnvironmentSnapshot& snapshot) noexcept { flags_ |= snapshot.flags; }

  // Style and mode.
  NotificationStyle style() const noexcept { return style_; }
  void set_style(NotificationStyle s) noexcept { style_ = s; }
  RoundingMode mode() const noexcept { return rounding_.mode(); }
  void set_mode(RoundingMode m) { rounding_.set_mode(m); }
  RoundingContext& rounding() noexcept { return rounding_; }
  const RoundingContext& rounding() const noexcept { return rounding_; }

  /// Kinds that are recorded but never notified under the error style.
  IndicatorSet notification_mask() const noexcept { return mask_; }
  void set_notification_mask(IndicatorSet m) noexcept { mask_ = m; }

  void set_diagnostic_stream(std::ostream& os) noexcept { diagnostics_ = &os; }

  /// Records `c.kind` and notifies per the current style. Returns the value
  /// the faulting operation yields.
  Value raise(ArithmeticCondition c) {
    flags_.insert(c.kind);
    switch (style_) {
      case NotificationStyle::recording:
        return std::move(c.continuation);
      case NotificationStyle::terminating:
        *diagnostics_ << termination_message(c) << '\n';
        diagnostics_->flush();
        throw Terminated(std::move(c));
      case NotificationStyle::error:
        if (mask_.contains(c.kind)) return std::move(c.continuation);
        return signal(c);
    }
    return std::move(c.continuation);
  }

  /// Typed raise that builds the condition only when it is delivered.
  template <typename T>
  T notify(Indicator kind, std::string_view operation, std::initializer_list<Value> operands,
           T continuation) {
    if (style_ == NotificationStyle::recording ||
        (style_ == NotificationStyle::error && mask_.contains(kind))) {
      flags_.insert(kind);
      return continuation;
    }
    Value v = raise({kind, std::string(operation), std::vector<Value>(operands), continuation});
    if (T* typed = std::get_if<T>(&v)) return *typed;
    throw ContinuationTypeError("handler resumed " + std::string(operation) +
                                " with a value of the wrong type");
  }

  /// Delivers `c` to the bound handlers, innermost first. Flags are not
  /// touched. Throws the matching ArithmeticError if no handler resumes.
  Value signal(const ArithmeticCondition& c) {
    for (const HandlerFrame* f = top_; f != nullptr; f = f->outer) {
      // A handler runs in the dynamic context of its binding: anything it
      // notifies is seen only by handlers outside it.
      TopScope scope(*this, f->outer);
      if (std::optional<Value> v = f->handler(c)) return std::move(*v);
    }
    throw_condition(c);
  }

  /// Binds a handler for the lifetime of the scope.
  class HandlerScope {
   public:
    HandlerScope(FpEnvironment& env, ConditionHandler h)
        : env_(env), frame_{std::move(h), env.top_} {
      env_.top_ = &frame_;
    }
    ~HandlerScope() { env_.top_ = frame_.outer; }
    HandlerScope(const HandlerScope&) = delete;
    HandlerScope& operator=(const HandlerScope&) = delete;

   private:
    FpEnvironment& env_;
    HandlerFrame frame_;
  };

 private:
  class TopScope {
   public:
    TopScope(FpEnvironment& env, const HandlerFrame* top) : env_(env), saved_(env.top_) {
      env_.top_ = top;
    }
    ~TopScope() { env_.top_ = saved_; }

   private:
    FpEnvironment& env_;
    const HandlerFrame* saved_;
  };

  IndicatorSet flags_;
  NotificationStyle style_ = NotificationStyle::error;
  RoundingContext rounding_;
  IndicatorSet mask_{Indicator::inexact};
  std::ostream* diagnostics_ = &std::cerr;
  const HandlerFrame* top_ = nullptr;
};

class StyleScope {
 public:
  StyleScope(FpEnvironment& env, NotificationStyle style) : env_(env), saved_(env.style()) {
    env_.set_style(style);
  }
  ~StyleScope() { env_.set_style(saved_); }
  StyleScope(const StyleScope&) = delete;
  StyleScope& operator=(const StyleScope&) = delete;

 private:
  FpEnvironment& env_;
  NotificationStyle saved_;
};

inline NotificationStyle current_style(const FpEnvironment& env) noexcept { return env.style(); }
inline void set_style(FpEnvironment& env, NotificationStyle s) noexcept { env.set_style(s); }

template <typename Body>
decltype(auto) with_style(FpEnvironment& env, NotificationStyle style, Body&& body) {
  StyleScope scope(env, style);
  return std::forward<Body>(body)();
}

template <typename Body>
decltype(auto) with_rounding(FpEnvironment& env, RoundingMode mode, Body&& body) {
  return with_rounding(env.rounding(), mode, std::forward<Body>(body));
}

inline EnvironmentSnapshot save_env(const FpEnvironment& env) noexcept { return env.save(); }
inline void clear_env(FpEnvironment& env) noexcept { env.clear(); }
inline void merge_env(FpEnvironment& env, const EnvironmentSnapshot& s) noexcept { env.merge(s); }

}  // namespace lia

#endif  // LIA_ENVIRONMENT_HPP_
