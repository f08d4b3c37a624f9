// Copyright 2026 The wreathgen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WF_COMMANDS_HPP
#define WF_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "wf/config.hpp"

namespace wf {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char *kToolVersion = "0.1.0";

/// Command-line overrides applied on top of the config.
struct CommandOptions {
  std::optional<std::uint64_t> cap;
  std::optional<Mode> mode;
  /// Restricts the command to one named tower, run, iso check, bound or group.
  std::optional<std::string> selector;
};

struct CommandOutput {
  int exit_code = kExitPass;
  /// Machine-readable report (tool version, config hash, per-entry results).
  nlohmann::json report;
  /// Human-readable summary for stdout.
  std::string text;
};

/// The known command names, in help order.
const std::vector<std::string> &command_names();

/// Dispatches one of command_names(). Config-level problems (unknown
/// selector, empty section) are thrown as ConfigError; failures inside a run
/// are recorded in the report and set exit_code to kExitFail.
CommandOutput run_command(const std::string &command, const Config &cfg,
                          const CommandOptions &opt);

CommandOutput cmd_build(const Config &cfg, const CommandOptions &opt);
CommandOutput cmd_gens(const Config &cfg, const CommandOptions &opt);
CommandOutput cmd_verify(const Config &cfg, const CommandOptions &opt);
CommandOutput cmd_iso(const Config &cfg, const CommandOptions &opt);
CommandOutput cmd_bound(const Config &cfg, const CommandOptions &opt);
CommandOutput cmd_hypotheses(const Config &cfg, const CommandOptions &opt);

}  // namespace wf

#endif  // WF_COMMANDS_HPP
