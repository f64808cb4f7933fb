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

// Compliance introspection. Each provides-... capability is established by
// a small self-test probe rather than asserted; lia1-compliance is always
// the conjunction of the provides-... predicates.

#ifndef LIA_CONFORMANCE_HPP_
#define LIA_CONFORMANCE_HPP_

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lia/environment.hpp"
#include "lia/fp_core.hpp"
#include "lia/ops.hpp"
#include "lia/rounding.hpp"
#include "lia/trap.hpp"

namespace lia {

struct ConformanceDescriptor {
  bool lia_subset_available = false;
  bool lia1_subset_available = false;
  bool lia2_subset_available = false;
  bool lia3_subset_available = false;
  bool provides_infinities = false;
  bool provides_nans = false;
  bool provides_rounding_modes = false;
  bool provides_floating_point_environment = false;
  bool provides_nacf = false;
  bool provides_nri = false;
  bool provides_ntm = false;
  bool lia2_compliance = false;
  bool cl_package_uses_lia = false;
  bool lia3_compliance = false;
  bool iec60559_binary64 = false;
  std::string fma_strategy;
  bool to_nearest_alias = true;
  IndicatorSet notification_mask;

  bool lia1_compliance() const noexcept {
    return provides_infinities && provides_nans && provides_rounding_modes &&
           provides_floating_point_environment && provides_nacf && provides_nri &&
           provides_ntm;
  }

  friend bool operator==(const ConformanceDescriptor&, const ConformanceDescriptor&) = default;
};

namespace probe {

inline bool infinities() {
  FpEnvironment env;
  env.set_style(NotificationStyle::recording);
  return lia_div(env, 1.0, 0.0) == kInfinity && lia_add(env, kMaxFinite, kMaxFinite) == kInfinity &&
         classify(-kInfinity) == FloatClass::negative_infinity;
}

inline bool nans() {
  FpEnvironment env;
  env.set_style(NotificationStyle::recording);
  const bool quiet_silent = is_quiet_nan(lia_add(env, quiet_nan(), 1.0)) && env.flags().empty();
  const bool signaling_flags = is_quiet_nan(lia_mul(env, signaling_nan(), 1.0)) &&
                               env.test_indicator(Indicator::invalid);
  return classify(signaling_nan()) == FloatClass::signaling_nan && quiet_silent && signaling_flags;
}

// Exact doubling is mode-independent; 0.1 + 0.2 is bracketed by adjacent doubles.
inline bool rounding_modes() {
  const double pi = 3.141592653589793;
  const double twice = add_dir(pi, pi, RoundingMode::to_nearest_even);
  for (auto m : {RoundingMode::to_zero, RoundingMode::to_positive_infinity,
                 RoundingMode::to_negative_infinity, RoundingMode::to_nearest_even}) {
    if (to_bits(add_dir(pi, pi, m)) != to_bits(twice)) return false;
  }
  const double down = add_down(0.1, 0.2);
  const double up = add_up(0.1, 0.2);
  const double near = add_near(0.1, 0.2);
  return next_up(down) == up && (near == down || near == up) &&
         sqrt_down(2.0) < sqrt_up(2.0) && next_up(sqrt_down(2.0)) == sqrt_up(2.0);
}

inline bool floating_point_environment() {
  FpEnvironment env;
  env.set_style(NotificationStyle::recording);
  lia_div(env, 1.0, 0.0);
  const EnvironmentSnapshot s = env.save();
  env.clear();
  if (!env.flags().empty()) return false;
  lia_mul(env, kMaxFinite, 2.0);
  env.merge(s);
  return env.test_indicator(Indicator::divide_by_zero) && env.test_indicator(Indicator::overflow);
}

inline bool nri() {
  FpEnvironment env;
  env.set_style(NotificationStyle::recording);
  return lia_div(env, -1.0, 0.0) == -kInfinity && env.test_indicator(Indicator::divide_by_zero);
}

inline bool nacf() {
  FpEnvironment env;
  const double v = trap(env, TrapOptions{}, [&] { return lia_div(env, 1.0, 0.0) + 1.0; },
                        {HandlerClause(Indicator::divide_by_zero,
                                       {action::Continue{[](const ArithmeticCondition&) {
                                         return Value{41.0};
                                       }}})});
  bool unhandled_escapes = false;
  try {
    lia_div(env, 1.0, 0.0);
  } catch (const DivisionByZero&) {
    unhandled_escapes = true;
  }
  return v == 42.0 && unhandled_escapes;
}

inline bool ntm() {
  FpEnvironment env;
  std::ostringstream sink;
  env.set_diagnostic_stream(sink);
  env.set_style(NotificationStyle::terminating);
  try {
    lia_div(env, 1.0, 0.0);
  } catch (const Terminated&) {
    return sink.str().rfind("LIA-NTM: ", 0) == 0;
  }
  return false;
}

}  // namespace probe

/// Evaluates the descriptor from build configuration and self-test probes.
inline ConformanceDescriptor describe_conformance() {
  ConformanceDescriptor d;
  d.lia_subset_available = true;
  d.lia1_subset_available = true;
  d.lia2_subset_available = true;  // the directed sqrt family
  d.lia3_subset_available = false;
  d.provides_infinities = probe::infinities();
  d.provides_nans = probe::nans();
  d.provides_rounding_modes = probe::rounding_modes();
  d.provides_floating_point_environment = probe::floating_point_environment();
  d.provides_nacf = d.provides_floating_point_environment && probe::nacf();
  d.provides_nri = probe::nri();
  d.provides_ntm = probe::ntm();
  d.lia2_compliance = false;
  d.cl_package_uses_lia = false;
  d.lia3_compliance = false;
  d.iec60559_binary64 = std::numeric_limits<double>::is_iec559;
  d.fma_strategy = std::string(to_string(kFmaStrategy));
  d.to_nearest_alias = true;
  d.notification_mask = FpEnvironment{}.notification_mask();
  return d;
}

/// Key/value pairs sorted by key, the order used by the flat report.
inline std::vector<std::pair<std::string, std::string>> report_entries(
    const ConformanceDescriptor& d) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  std::vector<std::pair<std::string, std::string>> out = {
      {"cl-package-uses-lia", b(d.cl_package_uses_lia)},
      {"fma-strategy", d.fma_strategy},
      {"iec60559-binary64", b(d.iec60559_binary64)},
      {"lia-subset-available", b(d.lia_subset_available)},
      {"lia1-compliance", b(d.lia1_compliance())},
      {"lia1-subset-available", b(d.lia1_subset_available)},
      {"lia2-compliance", b(d.lia2_compliance)},
      {"lia2-subset-available", b(d.lia2_subset_available)},
      {"lia3-compliance", b(d.lia3_compliance)},
      {"lia3-subset-available", b(d.lia3_subset_available)},
      {"notification-mask", to_string(d.notification_mask)},
      {"provides-floating-point-environment", b(d.provides_floating_point_environment)},
      {"provides-infinities", b(d.provides_infinities)},
      {"provides-nacf", b(d.provides_nacf)},
      {"provides-nans", b(d.provides_nans)},
      {"provides-nri", b(d.provides_nri)},
      {"provides-ntm", b(d.provides_ntm)},
      {"provides-rounding-modes", b(d.provides_rounding_modes)},
      {"to-nearest-alias", b(d.to_nearest_alias)},
  };
  std::sort(out.begin(), out.end());
  return out;
}

/// One `name: value` line per entry, sorted by name.
inline std::string serialize_flat(const ConformanceDescriptor& d) {
  std::string out;
  for (const auto& [k, v] : report_entries(d)) out += k + ": " + v + "\n";
  return out;
}

class ReportParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inverse of serialize_flat. Rejects missing or unknown keys, and reports
/// whose lia1-compliance line disagrees with the provides-... lines.
inline ConformanceDescriptor parse_flat(std::string_view text) {
  std::map<std::string, std::string, std::less<>> kv;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (line.empty()) continue;
    const std::size_t colon = line.find(": ");
    if (colon == std::string_view::npos) {
      throw ReportParseError("line " + std::to_string(line_no) + ": expected 'name: value'");
    }
    auto [it, fresh] = kv.emplace(std::string(line.substr(0, colon)),
                                  std::string(line.substr(colon + 2)));
    if (!fresh) throw ReportParseError("duplicate key " + it->first);
  }
  auto take = [&](std::string_view key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ReportParseError("missing key " + std::string(key));
    std::string v = std::move(it->second);
    kv.erase(it);
    return v;
  };
  auto flag = [&](std::string_view key) {
    const std::string v = take(key);
    if (v == "true") return true;
    if (v == "false") return false;
    throw ReportParseError(std::string(key) + ": expected true or false, got " + v);
  };

  ConformanceDescriptor d;
  d.cl_package_uses_lia = flag("cl-package-uses-lia");
  d.fma_strategy = take("fma-strategy");
  d.iec60559_binary64 = flag("iec60559-binary64");
  d.lia_subset_available = flag("lia-subset-available");
  const bool stated_compliance = flag("lia1-compliance");
  d.lia1_subset_available = flag("lia1-subset-available");
  d.lia2_compliance = flag("lia2-compliance");
  d.lia2_subset_available = flag("lia2-subset-available");
  d.lia3_compliance = flag("lia3-compliance");
  d.lia3_subset_available = flag("lia3-subset-available");
  const std::string mask = take("notification-mask");
  if (mask != "none") {
    std::size_t start = 0;
    while (start <= mask.size()) {
      std::size_t end = mask.find(", ", start);
      if (end == std::string::npos) end = mask.size();
      const auto k = indicator_from_string(std::string_view(mask).substr(start, end - start));
      if (!k) throw ReportParseError("notification-mask: unknown indicator");
      d.notification_mask.insert(*k);
      start = end + 2;
    }
  }
  d.provides_floating_point_environment = flag("provides-floating-point-environment");
  d.provides_infinities = flag("provides-infinities");
  d.provides_nacf = flag("provides-nacf");
  d.provides_nans = flag("provides-nans");
  d.provides_nri = flag("provides-nri");
  d.provides_ntm = flag("provides-ntm");
  d.provides_rounding_modes = flag("provides-rounding-modes");
  d.to_nearest_alias = flag("to-nearest-alias");
  if (!kv.empty()) throw ReportParseError("unknown key " + kv.begin()->first);
  if (stated_compliance != d.lia1_compliance()) {
    throw ReportParseError("lia1-compliance disagrees with the provides-... entries");
  }
  if (d.provides_nacf && !d.provides_floating_point_environment) {
    throw ReportParseError("provides-nacf requires provides-floating-point-environment");
  }
  return d;
}

}  // namespace lia

#endif  // LIA_CONFORMANCE_HPP_
