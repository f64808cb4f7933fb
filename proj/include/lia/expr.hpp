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

// S-expression surface language for driving the kernel.
//
//   expr    := number | true | false | symbol | (op[suffix] expr...)
//            | (rounding mode-kw expr)
//            | (with-notification-style style-kw expr)
//            | (trap-math (option...) expr clause...)
//   suffix  := .< | .<> | .>          (only on + - * / sqrt)
//   option  := :notify-by style-kw | :before (:save :clear) | :after (:merge)
//   clause  := (kind-kw [()] action...)
//   action  := :default | :clear | :raise | :continue
//            | (:continue expr) | (:raise kind-kw [expr])
//
// Numbers are decimal or hexadecimal-float literals; `;` starts a comment.

#ifndef LIA_EXPR_HPP_
#define LIA_EXPR_HPP_

#include <array>
#include <cerrno>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lia/environment.hpp"
#include "lia/format.hpp"
#include "lia/rounding.hpp"
#include "lia/trap.hpp"
#include "lia/value.hpp"

namespace lia {

enum class Op { add, sub, mul, div, sqrt, eq, neq, interval, radius, point, member, subset };
enum class Suffix { none, down, near, up };

struct OpInfo {
  Op op;
  std::string_view name;
  int min_args;
  int max_args;  // -1: unbounded
  bool takes_suffix;
};

inline constexpr std::array<OpInfo, 12> kOperators = {{
    {Op::add, "+", 2, 2, true},
    {Op::sub, "-", 2, 2, true},
    {Op::mul, "*", 2, 2, true},
    {Op::div, "/", 2, 2, true},
    {Op::sqrt, "sqrt", 1, 1, true},
    {Op::eq, "=", 1, -1, false},
    {Op::neq, "/=", 1, -1, false},
    {Op::interval, "interval", 2, 2, false},
    {Op::radius, "radius", 1, 1, false},
    {Op::point, "point?", 1, 1, false},
    {Op::member, "member?", 2, 2, false},
    {Op::subset, "subset?", 2, 2, false},
}};

constexpr const OpInfo& op_info(Op op) noexcept {
  for (const OpInfo& info : kOperators) {
    if (info.op == op) return info;
  }
  return kOperators[0];
}

constexpr std::string_view suffix_text(Suffix s) noexcept {
  switch (s) {
    case Suffix::down: return ".<";
    case Suffix::near: return ".<>";
    case Suffix::up: return ".>";
    case Suffix::none: break;
  }
  return "";
}

constexpr std::optional<RoundingMode> suffix_mode(Suffix s) noexcept {
  switch (s) {
    case Suffix::down: return RoundingMode::to_negative_infinity;
    case Suffix::near: return RoundingMode::to_nearest_even;
    case Suffix::up: return RoundingMode::to_positive_infinity;
    case Suffix::none: break;
  }
  return std::nullopt;
}

inline constexpr std::array<std::string_view, 8> kSymbols = {
    "pi", "e", "max-finite", "min-subnormal", "+inf", "-inf", "qnan", "snan"};

inline std::optional<double> symbol_value(std::string_view name) {
  if (name == "pi") return 3.141592653589793;
  if (name == "e") return 2.718281828459045;
  if (name == "max-finite") return kMaxFinite;
  if (name == "min-subnormal") return kMinSubnormal;
  if (name == "+inf") return kInfinity;
  if (name == "-inf") return -kInfinity;
  if (name == "qnan") return quiet_nan();
  if (name == "snan") return signaling_nan();
  return std::nullopt;
}

struct Expr;

struct ActionExpr {
  enum class Kind { default_, clear, raise, raise_new, continue_ };
  Kind kind = Kind::default_;
  Indicator raise_kind = Indicator::invalid;  // raise_new only
  std::vector<Expr> value;                     // 0 or 1 element

  friend bool operator==(const ActionExpr&, const ActionExpr&) = default;
};

struct ClauseExpr {
  Indicator kind;
  std::vector<ActionExpr> actions;

  friend bool operator==(const ClauseExpr&, const ClauseExpr&) = default;
};

struct Expr {
  struct Literal {
    Value value;
    friend bool operator==(const Literal& a, const Literal& b) { return same_value(a.value, b.value); }
  };
  struct Symbol {
    std::string name;
    friend bool operator==(const Symbol&, const Symbol&) = default;
  };
  struct Apply {
    Op op;
    Suffix suffix = Suffix::none;
    std::vector<Expr> args;
    friend bool operator==(const Apply&, const Apply&) = default;
  };
  struct Rounding {
    RoundingMode mode;
    std::vector<Expr> body;  // exactly one
    friend bool operator==(const Rounding&, const Rounding&) = default;
  };
  struct Style {
    NotificationStyle style;
    std::vector<Expr> body;  // exactly one
    friend bool operator==(const Style&, const Style&) = default;
  };
  struct Trap {
    NotificationStyle notify_by = NotificationStyle::error;
    bool save = false;
    bool clear = false;
    bool merge = false;
    std::vector<Expr> body;  // exactly one
    std::vector<ClauseExpr> clauses;
    friend bool operator==(const Trap&, const Trap&) = default;
  };

  std::variant<Literal, Symbol, Apply, Rounding, Style, Trap> node;

  friend bool operator==(const Expr&, const Expr&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

namespace detail {

struct SExpr {
  bool is_list = false;
  std::string atom;
  std::vector<SExpr> items;
  int line = 1;
  int column = 1;
};

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read_top() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    SExpr e = read();
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_, column_, message);
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (!at_end() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  SExpr read() {
    SExpr e;
    e.line = line_;
    e.column = column_;
    const char c = text_[pos_];
    if (c == ')') fail("unexpected ')'");
    if (c == '(') {
      advance();
      e.is_list = true;
      for (;;) {
        skip_space();
        if (at_end()) fail("unexpected end of input, expected ')'");
        if (text_[pos_] == ')') {
          advance();
          return e;
        }
        e.items.push_back(read());
      }
    }
    while (!at_end()) {
      const char d = text_[pos_];
      if (d == '(' || d == ')' || d == ';' || d == ' ' || d == '\t' || d == '\n' || d == '\r') {
        break;
      }
      e.atom += d;
      advance();
    }
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

inline std::optional<double> parse_number(const std::string& atom) {
  std::size_t i = 0;
  if (i < atom.size() && (atom[i] == '+' || atom[i] == '-')) ++i;
  if (i >= atom.size()) return std::nullopt;
  const char first = atom[i];
  if (!(first >= '0' && first <= '9') && first != '.') return std::nullopt;
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(atom.c_str(), &end);
  if (end != atom.c_str() + atom.size()) return std::nullopt;
  return v;
}

[[noreturn]] inline void fail_at(const SExpr& e, const std::string& message) {
  throw ParseError(e.line, e.column, message);
}

inline std::optional<RoundingMode> mode_keyword(std::string_view kw) {
  if (kw == ":positive-infinity") return RoundingMode::to_positive_infinity;
  if (kw == ":negative-infinity") return RoundingMode::to_negative_infinity;
  if (kw == ":nearest-even") return RoundingMode::to_nearest_even;
  if (kw == ":nearest") return RoundingMode::to_nearest;
  if (kw == ":zero") return RoundingMode::to_zero;
  return std::nullopt;
}

inline std::string_view mode_keyword(RoundingMode m) {
  switch (m) {
    case RoundingMode::to_positive_infinity: return ":positive-infinity";
    case RoundingMode::to_negative_infinity: return ":negative-infinity";
    case RoundingMode::to_nearest: return ":nearest";
    case RoundingMode::to_zero: return ":zero";
    default: break;
  }
  return ":nearest-even";
}

inline std::optional<NotificationStyle> style_keyword(std::string_view kw) {
  if (kw.size() < 2 || kw.front() != ':') return std::nullopt;
  return notification_style_from_string(kw.substr(1));
}

inline std::optional<Indicator> clause_kind_keyword(std::string_view kw) {
  if (kw == ":overflow") return Indicator::overflow;
  if (kw == ":underflow") return Indicator::underflow;
  if (kw == ":invalid") return Indicator::invalid;
  if (kw == ":divide-by-zero") return Indicator::divide_by_zero;
  return std::nullopt;
}

class Builder {
 public:
  Expr build(const SExpr& e) {
    if (!e.is_list) return atom(e);
    if (e.items.empty()) fail_at(e, "empty application");
    const SExpr& head = e.items.front();
    if (head.is_list) fail_at(head, "operator must be a symbol");
    if (head.atom == "rounding") return rounding(e);
    if (head.atom == "with-notification-style") return style(e);
    if (head.atom == "trap-math") return trap(e);
    return apply(e);
  }

 private:
  Expr atom(const SExpr& e) {
    if (auto v = parse_number(e.atom)) {
      if (is_infinite(*v)) fail_at(e, "number out of range " + e.atom);
      return {Expr::Literal{*v}};
    }
    if (e.atom == "true") return {Expr::Literal{true}};
    if (e.atom == "false") return {Expr::Literal{false}};
    for (std::string_view s : kSymbols) {
      if (s == e.atom) return {Expr::Symbol{e.atom}};
    }
    if (!e.atom.empty() && e.atom.front() == ':') fail_at(e, "unexpected keyword " + e.atom);
    fail_at(e, "unknown symbol " + e.atom);
  }

  Expr apply(const SExpr& e) {
    std::string_view name = e.items.front().atom;
    Suffix suffix = Suffix::none;
    for (Suffix s : {Suffix::near, Suffix::down, Suffix::up}) {
      const std::string_view t = suffix_text(s);
      if (name.size() > t.size() && name.ends_with(t)) {
        suffix = s;
        name.remove_suffix(t.size());
        break;
      }
    }
    const OpInfo* info = nullptr;
    for (const OpInfo& candidate : kOperators) {
      if (candidate.name == name) info = &candidate;
    }
    if (info == nullptr) fail_at(e.items.front(), "unknown operator " + e.items.front().atom);
    if (suffix != Suffix::none && !info->takes_suffix) {
      fail_at(e.items.front(), "operator " + std::string(name) + " takes no rounding suffix");
    }
    const int argc = static_cast<int>(e.items.size()) - 1;
    if (argc < info->min_args || (info->max_args >= 0 && argc > info->max_args)) {
      std::string expected = std::to_string(info->min_args);
      if (info->max_args < 0) expected = "at least " + expected;
      fail_at(e, "arity mismatch: " + e.items.front().atom + " expects " + expected +
                     " argument(s), got " + std::to_string(argc));
    }
    Expr::Apply out{info->op, suffix, {}};
    for (std::size_t i = 1; i < e.items.size(); ++i) out.args.push_back(build(e.items[i]));
    return {std::move(out)};
  }

  Expr rounding(const SExpr& e) {
    if (e.items.size() != 3) fail_at(e, "rounding expects a mode keyword and one body");
    const SExpr& kw = e.items[1];
    const auto mode = kw.is_list ? std::nullopt : mode_keyword(kw.atom);
    if (!mode) fail_at(kw, "unknown rounding mode " + kw.atom);
    return {Expr::Rounding{*mode, {build(e.items[2])}}};
  }

  Expr style(const SExpr& e) {
    if (e.items.size() != 3) {
      fail_at(e, "with-notification-style expects a style keyword and one body");
    }
    const SExpr& kw = e.items[1];
    const auto s = kw.is_list ? std::nullopt : style_keyword(kw.atom);
    if (!s) fail_at(kw, "unknown notification style " + kw.atom);
    return {Expr::Style{*s, {build(e.items[2])}}};
  }

  Expr trap(const SExpr& e) {
    if (e.items.size() < 3 || !e.items[1].is_list) {
      fail_at(e, "trap-math expects an option list and a body");
    }
    Expr::Trap t;
    options(e.items[1], t);
    t.body.push_back(build(e.items[2]));
    for (std::size_t i = 3; i < e.items.size(); ++i) t.clauses.push_back(clause(e.items[i]));
    return {std::move(t)};
  }

  void options(const SExpr& list, Expr::Trap& t) {
    const auto& items = list.items;
    std::size_t i = 0;
    auto is_option = [](const SExpr& s) {
      return !s.is_list && (s.atom == ":notify-by" || s.atom == ":before" || s.atom == ":after");
    };
    // Collects the actions after :before / :after, either grouped in a list
    // or as the keywords that follow up to the next option.
    auto actions = [&](const SExpr& owner) {
      std::vector<const SExpr*> out;
      if (i < items.size() && items[i].is_list) {
        for (const SExpr& a : items[i].items) out.push_back(&a);
        ++i;
      } else {
        while (i < items.size() && !is_option(items[i])) out.push_back(&items[i++]);
      }
      if (out.empty()) fail_at(owner, owner.atom + " expects at least one action");
      return out;
    };
    while (i < items.size()) {
      const SExpr& key = items[i++];
      if (key.is_list) fail_at(key, "expected a trap option keyword");
      if (key.atom == ":notify-by") {
        if (i >= items.size() || items[i].is_list) fail_at(key, ":notify-by expects a style");
        const auto s = style_keyword(items[i].atom);
        if (!s) fail_at(items[i], "unknown notification style " + items[i].atom);
        t.notify_by = *s;
        ++i;
      } else if (key.atom == ":before") {
        for (const SExpr* a : actions(key)) {
          if (!a->is_list && a->atom == ":save") t.save = true;
          else if (!a->is_list && a->atom == ":clear") t.clear = true;
          else fail_at(*a, ":before accepts :save and :clear");
        }
      } else if (key.atom == ":after") {
        for (const SExpr* a : actions(key)) {
          if (!a->is_list && a->atom == ":merge") t.merge = true;
          else fail_at(*a, ":after accepts :merge");
        }
      } else {
        fail_at(key, "unknown trap option " + key.atom);
      }
    }
    if (t.merge && !t.save) fail_at(list, ":merge after requires :save before");
  }

  ClauseExpr clause(const SExpr& e) {
    if (!e.is_list || e.items.empty() || e.items[0].is_list) {
      fail_at(e, "handler clause must be (kind action...)");
    }
    const auto kind = clause_kind_keyword(e.items[0].atom);
    if (!kind) fail_at(e.items[0], "unknown condition kind " + e.items[0].atom);
    ClauseExpr c{*kind, {}};
    std::size_t i = 1;
    if (i < e.items.size() && e.items[i].is_list && e.items[i].items.empty()) ++i;
    int continues = 0;
    for (; i < e.items.size(); ++i) {
      const SExpr& a = e.items[i];
      ActionExpr act;
      if (!a.is_list) {
        if (a.atom == ":default") act.kind = ActionExpr::Kind::default_;
        else if (a.atom == ":clear") act.kind = ActionExpr::Kind::clear;
        else if (a.atom == ":raise") act.kind = ActionExpr::Kind::raise;
        else if (a.atom == ":continue") act.kind = ActionExpr::Kind::continue_;
        else fail_at(a, "unknown handler action " + a.atom);
      } else if (!a.items.empty() && !a.items[0].is_list && a.items[0].atom == ":continue") {
        if (a.items.size() != 2) fail_at(a, "(:continue expr) takes exactly one expression");
        act.kind = ActionExpr::Kind::continue_;
        act.value.push_back(build(a.items[1]));
      } else if (!a.items.empty() && !a.items[0].is_list && a.items[0].atom == ":raise") {
        if (a.items.size() < 2 || a.items.size() > 3 || a.items[1].is_list) {
          fail_at(a, "(:raise kind [expr]) expected");
        }
        const auto k = clause_kind_keyword(a.items[1].atom);
        if (!k) fail_at(a.items[1], "unknown condition kind " + a.items[1].atom);
        act.kind = ActionExpr::Kind::raise_new;
        act.raise_kind = *k;
        if (a.items.size() == 3) act.value.push_back(build(a.items[2]));
      } else {
        fail_at(a, "unknown handler action");
      }
      if (act.kind == ActionExpr::Kind::continue_ && ++continues > 1) {
        fail_at(a, "at most one :continue per clause");
      }
      c.actions.push_back(std::move(act));
    }
    return c;
  }
};

}  // namespace detail

inline Expr parse(std::string_view text) {
  return detail::Builder{}.build(detail::Reader(text).read_top());
}

inline std::string_view clause_keyword(Indicator k) {
  switch (k) {
    case Indicator::overflow: return ":overflow";
    case Indicator::underflow: return ":underflow";
    case Indicator::invalid: return ":invalid";
    case Indicator::divide_by_zero: return ":divide-by-zero";
    case Indicator::inexact: return ":inexact";
  }
  return ":invalid";
}

/// Canonical text; parse(render(e)) == e for every parsed e.
inline std::string render(const Expr& e) {
  struct Visitor {
    std::string operator()(const Expr::Literal& l) const {
      if (const Interval* i = std::get_if<Interval>(&l.value)) {
        return "(interval " + render_decimal(i->low) + " " + render_decimal(i->high) + ")";
      }
      return render_compact(l.value);
    }
    std::string operator()(const Expr::Symbol& s) const { return s.name; }
    std::string operator()(const Expr::Apply& a) const {
      std::string out = "(" + std::string(op_info(a.op).name) + std::string(suffix_text(a.suffix));
      for (const Expr& arg : a.args) out += " " + render(arg);
      return out + ")";
    }
    std::string operator()(const Expr::Rounding& r) const {
      return "(rounding " + std::string(detail::mode_keyword(r.mode)) + " " + render(r.body.at(0)) +
             ")";
    }
    std::string operator()(const Expr::Style& s) const {
      return "(with-notification-style :" + std::string(to_string(s.style)) + " " +
             render(s.body.at(0)) + ")";
    }
    std::string operator()(const Expr::Trap& t) const {
      std::string out = "(trap-math (:notify-by :" + std::string(to_string(t.notify_by));
      if (t.save || t.clear) {
        out += " :before (";
        if (t.save) out += ":save";
        if (t.save && t.clear) out += " ";
        if (t.clear) out += ":clear";
        out += ")";
      }
      if (t.merge) out += " :after (:merge)";
      out += ") " + render(t.body.at(0));
      for (const ClauseExpr& c : t.clauses) {
        out += " (" + std::string(clause_keyword(c.kind)) + " ()";
        for (const ActionExpr& a : c.actions) {
          switch (a.kind) {
            case ActionExpr::Kind::default_: out += " :default"; break;
            case ActionExpr::Kind::clear: out += " :clear"; break;
            case ActionExpr::Kind::raise: out += " :raise"; break;
            case ActionExpr::Kind::continue_:
              out += a.value.empty() ? " :continue" : " (:continue " + render(a.value[0]) + ")";
              break;
            case ActionExpr::Kind::raise_new:
              out += " (:raise " + std::string(clause_keyword(a.raise_kind));
              if (!a.value.empty()) out += " " + render(a.value[0]);
              out += ")";
              break;
          }
        }
        out += ")";
      }
      return out + ")";
    }
  };
  return std::visit(Visitor{}, e.node);
}

}  // namespace lia

#endif  // LIA_EXPR_HPP_
