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

#ifndef LIA_EVAL_HPP_
#define LIA_EVAL_HPP_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lia/environment.hpp"
#include "lia/expr.hpp"
#include "lia/interval.hpp"
#include "lia/ops.hpp"
#include "lia/trap.hpp"

namespace lia {

/// Operand of the wrong kind (e.g. a boolean added to a number).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalResult {
  Value value;
  IndicatorSet flags;
  NotificationStyle style;
  RoundingMode mode;
};

class Evaluator {
 public:
  explicit Evaluator(FpEnvironment& env) : env_(env) {}

  Value eval(const Expr& e) {
    return std::visit([this](const auto& node) { return eval_node(node); }, e.node);
  }

 private:
  Value eval_node(const Expr::Literal& l) { return l.value; }

  Value eval_node(const Expr::Symbol& s) {
    if (auto v = symbol_value(s.name)) return *v;
    throw EvalError("unknown symbol " + s.name);
  }

  Value eval_node(const Expr::Rounding& r) {
    return with_rounding(env_, r.mode, [&] { return eval(r.body.at(0)); });
  }

  Value eval_node(const Expr::Style& s) {
    return with_style(env_, s.style, [&] { return eval(s.body.at(0)); });
  }

  Value eval_node(const Expr::Trap& t) {
    std::vector<HandlerClause> clauses;
    for (const ClauseExpr& c : t.clauses) {
      std::vector<HandlerAction> actions;
      for (const ActionExpr& a : c.actions) actions.push_back(to_action(a));
      clauses.emplace_back(c.kind, std::move(actions));
    }
    return trap(env_, TrapOptions(t.notify_by, t.save, t.clear, t.merge),
                [&] { return eval(t.body.at(0)); }, std::move(clauses));
  }

  HandlerAction to_action(const ActionExpr& a) {
    ConditionThunk thunk;
    if (!a.value.empty()) {
      const Expr* body = &a.value[0];
      thunk = [this, body](const ArithmeticCondition&) { return eval(*body); };
    }
    switch (a.kind) {
      case ActionExpr::Kind::default_: return action::Default{};
      case ActionExpr::Kind::clear: return action::Clear{};
      case ActionExpr::Kind::raise: return action::Raise{};
      case ActionExpr::Kind::raise_new: return action::RaiseNew{a.raise_kind, std::move(thunk)};
      case ActionExpr::Kind::continue_: return action::Continue{std::move(thunk)};
    }
    return action::Default{};
  }

  static std::string_view kind_name(const Value& v) {
    if (std::holds_alternative<double>(v)) return "number";
    if (std::holds_alternative<Interval>(v)) return "interval";
    return "boolean";
  }

  double number(const Value& v, std::string_view op) {
    if (const double* x = std::get_if<double>(&v)) return *x;
    throw EvalError(std::string(op) + ": expected a number, got " + std::string(kind_name(v)));
  }

  Interval interval(const Value& v, std::string_view op) {
    if (const Interval* i = std::get_if<Interval>(&v)) return *i;
    if (const double* x = std::get_if<double>(&v)) return make_interval(env_, *x, *x);
    throw EvalError(std::string(op) + ": expected an interval, got " + std::string(kind_name(v)));
  }

  Value eval_node(const Expr::Apply& a) {
    const std::string_view name = op_info(a.op).name;
    std::vector<Value> args;
    args.reserve(a.args.size());
    for (const Expr& arg : a.args) args.push_back(eval(arg));

    switch (a.op) {
      case Op::add:
      case Op::sub:
      case Op::mul:
      case Op::div:
        return arithmetic(a, name, args);
      case Op::sqrt: {
        const double x = number(args[0], name);
        return lia_sqrt(env_, x, suffix_mode(a.suffix).value_or(env_.mode()));
      }
      case Op::eq:
      case Op::neq: {
        std::vector<double> xs;
        for (const Value& v : args) xs.push_back(number(v, name));
        return a.op == Op::eq ? lia_eq(env_, xs) : lia_neq(env_, xs);
      }
      case Op::interval:
        return make_interval(env_, number(args[0], name), number(args[1], name));
      case Op::radius:
        return radius(env_, interval(args[0], name));
      case Op::point:
        return is_point(env_, interval(args[0], name));
      case Op::member:
        return i_member(number(args[0], name), interval(args[1], name));
      case Op::subset:
        return i_subseteq(interval(args[0], name), interval(args[1], name));
    }
    throw EvalError("unsupported operator");
  }

  Value arithmetic(const Expr::Apply& a, std::string_view name, const std::vector<Value>& args) {
    const bool interval_form = std::holds_alternative<Interval>(args[0]) ||
                               std::holds_alternative<Interval>(args[1]);
    if (!interval_form) {
      const double x = number(args[0], name);
      const double y = number(args[1], name);
      const RoundingMode mode = suffix_mode(a.suffix).value_or(env_.mode());
      switch (a.op) {
        case Op::add: return lia_add(env_, x, y, mode);
        case Op::sub: return lia_sub(env_, x, y, mode);
        case Op::mul: return lia_mul(env_, x, y, mode);
        default: return lia_div(env_, x, y, mode);
      }
    }
    if (a.suffix != Suffix::none) {
      throw EvalError(std::string(name) + std::string(suffix_text(a.suffix)) +
                      ": interval operations are always rounded outward");
    }
    const Interval x = interval(args[0], name);
    const Interval y = interval(args[1], name);
    switch (a.op) {
      case Op::add: return i_add(env_, x, y);
      case Op::sub: return i_sub(env_, x, y);
      case Op::mul: return i_mul(env_, x, y);
      default: return i_div(env_, x, y);
    }
  }

  FpEnvironment& env_;
};

inline EvalResult evaluate(const Expr& e, FpEnvironment& env) {
  Value v = Evaluator(env).eval(e);
  return {std::move(v), env.flags(), env.style(), env.mode()};
}

}  // namespace lia

#endif  // LIA_EVAL_HPP_
