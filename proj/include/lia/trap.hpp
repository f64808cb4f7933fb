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

// Scoped trap construct: environment setup/teardown actions around a body,
// plus handler clauses that can clear indicators, re-notify, or resume the
// faulting operation with a continuation value.

#ifndef LIA_TRAP_HPP_
#define LIA_TRAP_HPP_

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "lia/environment.hpp"

namespace lia {

class TrapOptions {
 public:
  TrapOptions() = default;
  TrapOptions(NotificationStyle notify_by, bool save_before, bool clear_before, bool merge_after)
      : notify_by_(notify_by),
        save_before_(save_before),
        clear_before_(clear_before),
        merge_after_(merge_after) {
    if (merge_after_ && !save_before_) {
      throw std::invalid_argument("trap: :merge after requires :save before");
    }
  }

  NotificationStyle notify_by() const noexcept { return notify_by_; }
  bool save_before() const noexcept { return save_before_; }
  bool clear_before() const noexcept { return clear_before_; }
  bool merge_after() const noexcept { return merge_after_; }

 private:
  NotificationStyle notify_by_ = NotificationStyle::error;
  bool save_before_ = false;
  bool clear_before_ = false;
  bool merge_after_ = false;
};

/// Computes a replacement value from the condition being handled.
using ConditionThunk = std::function<Value(const ArithmeticCondition&)>;

namespace action {

/// Standard behavior for the kind: decline, letting outer handlers see it.
struct Default {};
/// Removes the handled kind's indicator.
struct Clear {};
/// Re-notifies the same condition to the handlers outside this trap.
struct Raise {};
/// Notifies a fresh condition; without a thunk it reuses the continuation.
struct RaiseNew {
  Indicator kind;
  ConditionThunk continuation;
};
/// Resumes the faulting operation; without a thunk, with its standard
/// continuation value.
struct Continue {
  ConditionThunk value;
};

}  // namespace action

using HandlerAction =
    std::variant<action::Default, action::Clear, action::Raise, action::RaiseNew, action::Continue>;

class HandlerClause {
 public:
  HandlerClause(Indicator matches, std::vector<HandlerAction> actions)
      : matches_(matches), actions_(std::move(actions)) {
    int continues = 0;
    for (const auto& a : actions_) continues += std::holds_alternative<action::Continue>(a);
    if (continues > 1) throw std::invalid_argument("trap: at most one :continue per clause");
  }

  Indicator matches() const noexcept { return matches_; }
  const std::vector<HandlerAction>& actions() const noexcept { return actions_; }

  /// Runs the actions in order. nullopt means the clause declined.
  std::optional<Value> run(FpEnvironment& env, const ArithmeticCondition& c) const {
    for (const auto& a : actions_) {
      if (std::holds_alternative<action::Default>(a)) return std::nullopt;
      if (std::holds_alternative<action::Clear>(a)) {
        env.clear_indicator(c.kind);
      } else if (std::holds_alternative<action::Raise>(a)) {
        return env.signal(c);
      } else if (const auto* fresh = std::get_if<action::RaiseNew>(&a)) {
        Value payload = fresh->continuation ? fresh->continuation(c) : c.continuation;
        return env.raise({fresh->kind, c.operation, c.operands, std::move(payload)});
      } else if (const auto* cont = std::get_if<action::Continue>(&a)) {
        return cont->value ? cont->value(c) : c.continuation;
      }
    }
    return std::nullopt;
  }

 private:
  Indicator matches_;
  std::vector<HandlerAction> actions_;
};

namespace detail {

class MergeOnExit {
 public:
  MergeOnExit(FpEnvironment& env, std::optional<EnvironmentSnapshot> snapshot, bool enabled)
      : env_(env), snapshot_(std::move(snapshot)), enabled_(enabled) {}
  ~MergeOnExit() {
    if (enabled_ && snapshot_) env_.merge(*snapshot_);
  }
  MergeOnExit(const MergeOnExit&) = delete;
  MergeOnExit& operator=(const MergeOnExit&) = delete;

 private:
  FpEnvironment& env_;
  std::optional<EnvironmentSnapshot> snapshot_;
  bool enabled_;
};

}  // namespace detail

/// Runs `body` under the trap's style with `clauses` bound. Before-actions
/// run save then clear; the after-merge runs on every exit.
template <typename Body>
decltype(auto) trap(FpEnvironment& env, const TrapOptions& options, Body&& body,
                    std::vector<HandlerClause> clauses = {}) {
  std::optional<EnvironmentSnapshot> saved;
  if (options.save_before()) saved = env.save();
  if (options.clear_before()) env.clear();
  detail::MergeOnExit merge(env, std::move(saved), options.merge_after());
  StyleScope style(env, options.notify_by());
  FpEnvironment::HandlerScope handler(
      env, [&env, clauses = std::move(clauses)](
               const ArithmeticCondition& c) -> std::optional<Value> {
        for (const HandlerClause& clause : clauses) {
          if (clause.matches() == c.kind) return clause.run(env, c);
        }
        return std::nullopt;
      });
  return std::forward<Body>(body)();
}

}  // namespace lia

#endif  // LIA_TRAP_HPP_
