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

// lia: expression evaluator, REPL and conformance report.
//
// Exit status: 0 success, 1 parse/evaluation error or unhandled error-style
// notification, 2 abort under the terminating style.

#include <unistd.h>

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "lia/lia.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTerminated = 2;

const std::map<std::string, lia::NotificationStyle> kStyles = {
    {"recording", lia::NotificationStyle::recording},
    {"error", lia::NotificationStyle::error},
    {"terminating", lia::NotificationStyle::terminating},
};

const std::map<std::string, lia::RoundingMode> kModes = {
    {"nearest-even", lia::RoundingMode::to_nearest_even},
    {"up", lia::RoundingMode::to_positive_infinity},
    {"down", lia::RoundingMode::to_negative_infinity},
    {"zero", lia::RoundingMode::to_zero},
};

void dump_env(const lia::FpEnvironment& env) {
  std::cout << "flags: " << lia::to_string(env.flags()) << "\n";
  std::cout << "mode: " << lia::to_string(env.mode()) << "\n";
}

// Evaluates one line of input. Returns an exit status; Terminated propagates.
int run_one(const std::string& text, lia::FpEnvironment& env, bool dump) {
  try {
    const lia::Expr expr = lia::parse(text);
    const lia::EvalResult r = lia::evaluate(expr, env);
    std::cout << lia::render_value(r.value) << "\n";
    if (dump) dump_env(env);
    return kExitOk;
  } catch (const lia::ParseError& e) {
    std::cerr << e.what() << "\n";
  } catch (const lia::ArithmeticError& e) {
    std::cerr << "error: unhandled " << e.what() << "\n";
  } catch (const lia::EvalError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const lia::ContinuationTypeError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitError;
}

int run_repl(lia::FpEnvironment& env, bool dump) {
  const bool interactive = ::isatty(STDIN_FILENO) != 0;
  std::string line;
  for (;;) {
    if (interactive) std::cout << "lia> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line == ":quit") break;
    if (line == ":env") {
      dump_env(env);
      continue;
    }
    run_one(line, env, dump);
  }
  return kExitOk;
}

std::string conformance_json(const lia::ConformanceDescriptor& d) {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : lia::report_entries(d)) {
    if (v == "true" || v == "false") j[k] = v == "true";
    else j[k] = v;
  }
  return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed-rounding arithmetic, notification styles and intervals"};
  app.require_subcommand(1);

  std::string style_name = "error";
  std::string mode_name = "nearest-even";
  bool dump = false;
  std::string text;

  auto add_env_options = [&](CLI::App* cmd) {
    cmd->add_option("--style", style_name, "Notification style: recording, error, terminating")
        ->check(CLI::IsMember(kStyles));
    cmd->add_option("--rounding", mode_name, "Rounding mode: nearest-even, up, down, zero")
        ->check(CLI::IsMember(kModes));
    cmd->add_flag("--dump-env", dump, "Print flags and mode after each value");
  };

  CLI::App* eval_cmd = app.add_subcommand("eval", "Evaluate one expression");
  eval_cmd->add_option("expr", text, "Expression, e.g. \"(+.< pi pi)\"")->required();
  add_env_options(eval_cmd);

  CLI::App* repl_cmd = app.add_subcommand("repl", "Read-eval-print loop sharing one environment");
  add_env_options(repl_cmd);

  CLI::App* conf_cmd = app.add_subcommand("conformance", "Print the conformance report");
  bool flat = true;
  bool json = false;
  conf_cmd->add_flag("--flat", flat, "Flat name: value report (default)");
  conf_cmd->add_flag("--json", json, "Structured JSON report");

  CLI11_PARSE(app, argc, argv);

  if (conf_cmd->parsed()) {
    const lia::ConformanceDescriptor d = lia::describe_conformance();
    std::cout << (json ? conformance_json(d) + "\n" : lia::serialize_flat(d));
    return kExitOk;
  }

  lia::FpEnvironment env;
  env.set_style(kStyles.at(style_name));
  env.set_mode(kModes.at(mode_name));
  try {
    if (eval_cmd->parsed()) return run_one(text, env, dump);
    return run_repl(env, dump);
  } catch (const lia::Terminated&) {
    // The diagnostic line was already written to stderr by the environment.
    return kExitTerminated;
  }
}
