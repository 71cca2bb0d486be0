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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kerrgkp/cli/commands.h"

namespace {

using namespace kerrgkp::cli;

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ConfigError("cannot write '" + path + "'");
    }
    f << text;
    if (!f) {
        throw ConfigError("failed writing '" + path + "'");
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"GKP state generation by cross-Kerr interaction with a Fock-state ancilla"};
    app.set_version_flag("--version", std::string(tool_version()));
    std::string command;
    std::optional<std::string> config_path;
    std::optional<std::string> out_path;
    std::vector<std::string> overrides;
    int jobs = 1;
    bool literal_hermite = false;
    app.add_option("command", command, "fig3 | fig4 | meanfid | oracle-check | baseline")
        ->required()
        ->check(CLI::IsMember({"fig3", "fig4", "meanfid", "oracle-check", "baseline"}));
    app.add_option("--config", config_path, "YAML config file");
    app.add_option("--out", out_path, "Output path (default: stdout)");
    app.add_option("--override", overrides, "KEY=VALUE applied on top of the config, e.g. fig3.m=3")
        ->take_all()
        ->allow_extra_args(false);
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 1024));
    app.add_flag("--debug-literal-hermite", literal_hermite,
                 "oracle-check: use Hermite order t instead of 2t (must fail)");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (literal_hermite) {
            overrides.push_back("oracle_check.hermite_order=literal");
        }
        auto config = load_config(config_path, overrides);
        auto result = run_command(command, config, jobs);
        if (out_path) {
            write_file(*out_path, result.text);
        } else {
            std::cout << result.text << std::flush;
        }
        if (result.sidecar) {
            std::optional<std::string> side = config.baseline.profiles_out;
            if (!side && out_path) {
                side = *out_path + ".profiles.csv";
            }
            if (side) {
                write_file(*side, *result.sidecar);
            }
        }
        return result.exit_code;
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception &e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitNumeric;
    }
}
