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

#ifndef KERRGKP_CLI_CONFIG_H
#define KERRGKP_CLI_CONFIG_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kerrgkp/baseline.h"
#include "kerrgkp/gauss_comb.h"
#include "kerrgkp/metrics.h"

namespace kerrgkp::cli {

class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct Fig3Config {
    std::vector<double> levels_db{7, 8, 9, 10, 11};
    int m = 2;
    std::vector<double> x;  // default -0.3..0.3 step 0.01
    double delta = 0;
    SlopePattern slope_pattern = SlopePattern::kGeometric;
    FidelityTarget target = FidelityTarget::kIdeal;
};

struct Fig4Config {
    std::vector<double> levels_db{7, 8, 9, 10, 11};
    int m = 2;
    double x = 0;
    std::vector<double> delta;  // default 0..0.05 step 0.0025
    SlopePattern slope_pattern = SlopePattern::kGeometric;
    FidelityTarget target = FidelityTarget::kIdeal;
};

struct MeanFidConfig {
    std::vector<double> levels_db{10, 11, 12};
    int m = 3;
    std::vector<double> v_up;  // default 0.005..0.4 step 0.005
    double delta = 0;
    FidelityTarget target = FidelityTarget::kIdeal;
};

struct ToyOracleConfig {
    int m = 1;
    double level_db = 7;
    double beta = 4;
    double gamma = 2;
    int dim = 128;
    std::vector<double> x{-0.7, 0, 0.3};
    double tolerance = 1e-6;
};

struct OracleCheckConfig {
    std::vector<int> m{1, 2, 3};
    std::vector<double> levels_db{7, 10, 12};
    std::vector<double> x{-0.15, -0.05, 0, 0.05, 0.15};
    double beta_min = 1e4;
    double tolerance = 1e-9;
    HermiteOrder hermite_order = HermiteOrder::kEven;
    ToyOracleConfig toy;
    double schmidt_tolerance = 1e-12;
};

struct BaselineCase {
    double tau;
    double alpha;
    double x;
};

struct BaselineConfig {
    std::vector<BaselineCase> cases{{2, 2, 0}, {0, 2, 0}};
    EtaWeighting weighting = EtaWeighting::kPrinted;
    std::vector<double> q_grid;  // default -8..8 step 0.005
    std::vector<double> p_grid;  // default -10..170 step 0.01
    double fourier_tolerance = 1e-6;
    std::optional<std::string> profiles_out;
};

struct ExperimentConfig {
    Fig3Config fig3;
    Fig4Config fig4;
    MeanFidConfig meanfid;
    OracleCheckConfig oracle_check;
    BaselineConfig baseline;
};

/// Parses YAML text. Unknown keys, malformed values and unordered grids raise ConfigError
/// with the offending key path and line.
ExperimentConfig parse_config(const std::string &yaml_text, const std::vector<std::string> &overrides = {});
ExperimentConfig load_config(const std::optional<std::string> &path, const std::vector<std::string> &overrides = {});

/// Canonical YAML of one section, used for hashing and echoing.
std::string canonical_section(const ExperimentConfig &config, const std::string &section);

std::uint64_t fnv1a64(const std::string &data);

}  // namespace kerrgkp::cli

#endif
