// Copyright 2026 The kerrgkp Authors
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

#ifndef KERRGKP_CLI_COMMANDS_H
#define KERRGKP_CLI_COMMANDS_H

#include <optional>
#include <string>

#include "kerrgkp/cli/config.h"

namespace kerrgkp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 1;
inline constexpr int kExitNumeric = 2;

struct CommandResult {
    std::string text;  // CSV or report
    std::optional<std::string> sidecar;  // baseline profiles
    int exit_code = kExitOk;
};

CommandResult cmd_fig3(const ExperimentConfig &config, int jobs);
CommandResult cmd_fig4(const ExperimentConfig &config, int jobs);
CommandResult cmd_meanfid(const ExperimentConfig &config, int jobs);
CommandResult cmd_oracle_check(const ExperimentConfig &config, int jobs);
CommandResult cmd_baseline(const ExperimentConfig &config, int jobs);

/// Dispatches on the subcommand name (fig3, fig4, meanfid, oracle-check, baseline).
CommandResult run_command(const std::string &name, const ExperimentConfig &config, int jobs);

/// '#' metadata lines shared by every output file.
std::string metadata_header(const std::string &command, const ExperimentConfig &config);

const char *tool_version();

}  // namespace kerrgkp::cli

#endif
