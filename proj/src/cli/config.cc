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

#include "kerrgkp/cli/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

namespace kerrgkp::cli {

namespace {

std::string where(const YAML::Node &node) {
    auto mark = node.Mark();
    if (mark.is_null() || mark.line < 0) {
        return " (from --override)";
    }
    return fmt::format(" (line {})", mark.line + 1);
}

[[noreturn]] void fail(const std::string &path, const std::string &what, const YAML::Node &node) {
    throw ConfigError(fmt::format("{}: {}{}", path, what, where(node)));
}

void check_keys(const YAML::Node &node, const std::string &path, const std::set<std::string> &allowed) {
    if (!node.IsMap()) {
        fail(path, "expected a mapping", node);
    }
    for (const auto &kv : node) {
        auto key = kv.first.as<std::string>();
        if (!allowed.contains(key)) {
            fail(path.empty() ? key : path + "." + key, "unknown key", kv.first);
        }
    }
}

template <typename T>
T scalar(const YAML::Node &node, const std::string &path, const char *type) {
    if (!node.IsScalar()) {
        fail(path, std::string("expected ") + type, node);
    }
    try {
        return node.as<T>();
    } catch (const YAML::BadConversion &) {
        fail(path, std::string("expected ") + type + ", got '" + node.Scalar() + "'", node);
    }
}

double real(const YAML::Node &node, const std::string &path) {
    double v = scalar<double>(node, path, "a number");
    if (!std::isfinite(v)) {
        fail(path, "must be finite", node);
    }
    return v;
}

double positive(const YAML::Node &node, const std::string &path) {
    double v = real(node, path);
    if (!(v > 0)) {
        fail(path, "must be positive", node);
    }
    return v;
}

int integer(const YAML::Node &node, const std::string &path, int lo, int hi) {
    int v = scalar<int>(node, path, "an integer");
    if (v < lo || v > hi) {
        fail(path, fmt::format("must lie in [{}, {}]", lo, hi), node);
    }
    return v;
}

void check_increasing(const std::vector<double> &values, const std::string &path, const YAML::Node &node) {
    if (values.empty()) {
        fail(path, "grid is empty", node);
    }
    for (size_t i = 1; i < values.size(); i++) {
        if (!(values[i] > values[i - 1])) {
            fail(path, "grid must be strictly increasing", node);
        }
    }
}

std::vector<double> uniform(double start, double stop, double step) {
    std::vector<double> out;
    auto n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    for (long i = 0; i <= n; i++) {
        double v = start + static_cast<double>(i) * step;
        // Snap away accumulated rounding so that printed grid values stay short.
        out.push_back(std::round(v * 1e12) / 1e12);
    }
    return out;
}

/// Either an explicit list or {start, stop, step}.
std::vector<double> grid(const YAML::Node &node, const std::string &path) {
    std::vector<double> out;
    if (node.IsSequence()) {
        for (size_t i = 0; i < node.size(); i++) {
            out.push_back(real(node[i], fmt::format("{}[{}]", path, i)));
        }
    } else if (node.IsMap()) {
        check_keys(node, path, {"start", "stop", "step"});
        for (const char *k : {"start", "stop", "step"}) {
            if (!node[k]) {
                fail(path, std::string("missing '") + k + "'", node);
            }
        }
        double start = real(node["start"], path + ".start");
        double stop = real(node["stop"], path + ".stop");
        double step = positive(node["step"], path + ".step");
        if (stop < start) {
            fail(path, "stop must be >= start", node);
        }
        if ((stop - start) / step > 1e7) {
            fail(path, "grid has too many points", node);
        }
        out = uniform(start, stop, step);
    } else {
        fail(path, "expected a list or {start, stop, step}", node);
    }
    check_increasing(out, path, node);
    return out;
}

std::vector<int> int_list(const YAML::Node &node, const std::string &path, int lo, int hi) {
    if (!node.IsSequence()) {
        fail(path, "expected a list", node);
    }
    std::vector<int> out;
    for (size_t i = 0; i < node.size(); i++) {
        out.push_back(integer(node[i], fmt::format("{}[{}]", path, i), lo, hi));
    }
    if (out.empty()) {
        fail(path, "list is empty", node);
    }
    for (size_t i = 1; i < out.size(); i++) {
        if (out[i] <= out[i - 1]) {
            fail(path, "list must be strictly increasing", node);
        }
    }
    return out;
}

template <typename E>
E choice(const YAML::Node &node, const std::string &path, std::initializer_list<std::pair<const char *, E>> options) {
    auto s = scalar<std::string>(node, path, "a string");
    std::string names;
    for (const auto &[name, value] : options) {
        if (s == name) {
            return value;
        }
        names += names.empty() ? name : std::string(", ") + name;
    }
    fail(path, "expected one of " + names + ", got '" + s + "'", node);
}

SlopePattern slope_pattern(const YAML::Node &node, const std::string &path) {
    return choice<SlopePattern>(node, path,
                                {{"geometric", SlopePattern::kGeometric}, {"printed", SlopePattern::kPrinted}});
}

FidelityTarget target(const YAML::Node &node, const std::string &path) {
    return choice<FidelityTarget>(node, path, {{"ideal", FidelityTarget::kIdeal}, {"finite", FidelityTarget::kFinite}});
}

constexpr int kMaxM = 50;

void parse_fig3(const YAML::Node &n, Fig3Config &c) {
    check_keys(n, "fig3", {"levels_db", "m", "x", "delta", "slope_pattern", "target"});
    if (n["levels_db"]) c.levels_db = grid(n["levels_db"], "fig3.levels_db");
    if (n["m"]) c.m = integer(n["m"], "fig3.m", 0, kMaxM);
    if (n["x"]) c.x = grid(n["x"], "fig3.x");
    if (n["delta"]) c.delta = real(n["delta"], "fig3.delta");
    if (n["slope_pattern"]) c.slope_pattern = slope_pattern(n["slope_pattern"], "fig3.slope_pattern");
    if (n["target"]) c.target = target(n["target"], "fig3.target");
}

void parse_fig4(const YAML::Node &n, Fig4Config &c) {
    check_keys(n, "fig4", {"levels_db", "m", "x", "delta", "slope_pattern", "target"});
    if (n["levels_db"]) c.levels_db = grid(n["levels_db"], "fig4.levels_db");
    if (n["m"]) c.m = integer(n["m"], "fig4.m", 0, kMaxM);
    if (n["x"]) c.x = real(n["x"], "fig4.x");
    if (n["delta"]) c.delta = grid(n["delta"], "fig4.delta");
    if (n["slope_pattern"]) c.slope_pattern = slope_pattern(n["slope_pattern"], "fig4.slope_pattern");
    if (n["target"]) c.target = target(n["target"], "fig4.target");
}

void parse_meanfid(const YAML::Node &n, MeanFidConfig &c) {
    check_keys(n, "meanfid", {"levels_db", "m", "v_up", "delta", "target"});
    if (n["levels_db"]) c.levels_db = grid(n["levels_db"], "meanfid.levels_db");
    if (n["m"]) c.m = integer(n["m"], "meanfid.m", 0, kMaxM);
    if (n["v_up"]) c.v_up = grid(n["v_up"], "meanfid.v_up");
    if (n["delta"]) c.delta = real(n["delta"], "meanfid.delta");
    if (n["target"]) c.target = target(n["target"], "meanfid.target");
    if (c.v_up.front() <= 0) {
        fail("meanfid.v_up", "window bounds must be positive", n["v_up"]);
    }
}

void parse_toy(const YAML::Node &n, ToyOracleConfig &c) {
    check_keys(n, "oracle_check.toy", {"m", "level_db", "beta", "gamma", "dim", "x", "tolerance"});
    if (n["m"]) c.m = integer(n["m"], "oracle_check.toy.m", 0, 3);
    if (n["level_db"]) c.level_db = real(n["level_db"], "oracle_check.toy.level_db");
    if (n["beta"]) c.beta = positive(n["beta"], "oracle_check.toy.beta");
    if (n["gamma"]) c.gamma = real(n["gamma"], "oracle_check.toy.gamma");
    if (n["dim"]) c.dim = integer(n["dim"], "oracle_check.toy.dim", 8, kMaxHermiteOrder + 1);
    if (n["x"]) c.x = grid(n["x"], "oracle_check.toy.x");
    if (n["tolerance"]) c.tolerance = positive(n["tolerance"], "oracle_check.toy.tolerance");
}

void parse_oracle(const YAML::Node &n, OracleCheckConfig &c) {
    check_keys(n, "oracle_check",
               {"m", "levels_db", "x", "beta_min", "tolerance", "hermite_order", "toy", "schmidt_tolerance"});
    if (n["m"]) c.m = int_list(n["m"], "oracle_check.m", 0, kMaxM);
    if (n["levels_db"]) c.levels_db = grid(n["levels_db"], "oracle_check.levels_db");
    if (n["x"]) c.x = grid(n["x"], "oracle_check.x");
    if (n["beta_min"]) c.beta_min = positive(n["beta_min"], "oracle_check.beta_min");
    if (n["tolerance"]) c.tolerance = positive(n["tolerance"], "oracle_check.tolerance");
    if (n["schmidt_tolerance"]) c.schmidt_tolerance = positive(n["schmidt_tolerance"], "oracle_check.schmidt_tolerance");
    if (n["hermite_order"]) {
        c.hermite_order = choice<HermiteOrder>(n["hermite_order"], "oracle_check.hermite_order",
                                               {{"even", HermiteOrder::kEven}, {"literal", HermiteOrder::kLiteral}});
    }
    if (n["toy"]) parse_toy(n["toy"], c.toy);
}

void parse_baseline(const YAML::Node &n, BaselineConfig &c) {
    check_keys(n, "baseline", {"cases", "weighting", "q_grid", "p_grid", "fourier_tolerance", "profiles_out"});
    if (n["cases"]) {
        const auto &cs = n["cases"];
        if (!cs.IsSequence() || cs.size() == 0) {
            fail("baseline.cases", "expected a nonempty list", cs);
        }
        c.cases.clear();
        for (size_t i = 0; i < cs.size(); i++) {
            auto path = fmt::format("baseline.cases[{}]", i);
            check_keys(cs[i], path, {"tau", "alpha", "x"});
            BaselineCase bc{2, 2, 0};
            if (cs[i]["tau"]) bc.tau = real(cs[i]["tau"], path + ".tau");
            if (cs[i]["alpha"]) bc.alpha = positive(cs[i]["alpha"], path + ".alpha");
            if (cs[i]["x"]) bc.x = real(cs[i]["x"], path + ".x");
            c.cases.push_back(bc);
        }
    }
    if (n["weighting"]) {
        c.weighting = choice<EtaWeighting>(n["weighting"], "baseline.weighting",
                                           {{"printed", EtaWeighting::kPrinted}, {"physical", EtaWeighting::kPhysical}});
    }
    if (n["q_grid"]) c.q_grid = grid(n["q_grid"], "baseline.q_grid");
    if (n["p_grid"]) c.p_grid = grid(n["p_grid"], "baseline.p_grid");
    if (n["fourier_tolerance"]) c.fourier_tolerance = positive(n["fourier_tolerance"], "baseline.fourier_tolerance");
    if (n["profiles_out"]) c.profiles_out = scalar<std::string>(n["profiles_out"], "baseline.profiles_out", "a path");
    if (c.q_grid.size() < 3 || c.p_grid.size() < 3) {
        fail("baseline", "profile grids need at least three points", n);
    }
}

void set_path(YAML::Node node, const std::vector<std::string> &parts, size_t i, const YAML::Node &value) {
    if (i + 1 == parts.size()) {
        node[parts[i]] = value;
        return;
    }
    YAML::Node child = node[parts[i]];
    if (child.IsDefined() && !child.IsNull() && !child.IsMap()) {
        throw ConfigError(fmt::format("override path '{}' runs through a non-mapping value", parts[i]));
    }
    set_path(child, parts, i + 1, value);
}

void apply_override(YAML::Node &root, const std::string &spec) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0) {
        throw ConfigError("override '" + spec + "' is not KEY=VALUE");
    }
    std::string key = spec.substr(0, eq);
    std::vector<std::string> parts;
    std::stringstream ss(key);
    for (std::string part; std::getline(ss, part, '.');) {
        if (part.empty()) {
            throw ConfigError("override key '" + key + "' has an empty component");
        }
        parts.push_back(part);
    }
    YAML::Node value;
    try {
        value = YAML::Load(spec.substr(eq + 1));
    } catch (const YAML::Exception &e) {
        throw ConfigError("override '" + key + "': " + e.msg);
    }
    set_path(root, parts, 0, value);
}

void emit_list(YAML::Emitter &out, const std::vector<double> &v) {
    out << YAML::Flow << YAML::BeginSeq;
    for (double d : v) {
        out << fmt::format("{:.17g}", d);
    }
    out << YAML::EndSeq;
}

std::string num(double d) {
    return fmt::format("{:.17g}", d);
}

const char *name(SlopePattern p) {
    return p == SlopePattern::kGeometric ? "geometric" : "printed";
}
const char *name(FidelityTarget t) {
    return t == FidelityTarget::kIdeal ? "ideal" : "finite";
}

}  // namespace

ExperimentConfig parse_config(const std::string &yaml_text, const std::vector<std::string> &overrides) {
    YAML::Node root;
    try {
        root = YAML::Load(yaml_text);
    } catch (const YAML::ParserException &e) {
        throw ConfigError(fmt::format("malformed YAML (line {}): {}", e.mark.line + 1, e.msg));
    }
    if (root.IsNull() || !root.IsDefined()) {
        root = YAML::Node(YAML::NodeType::Map);
    }
    if (!root.IsMap()) {
        throw ConfigError("config root must be a mapping");
    }
    for (const auto &o : overrides) {
        apply_override(root, o);
    }
    check_keys(root, "", {"fig3", "fig4", "meanfid", "oracle_check", "baseline"});

    ExperimentConfig c;
    c.fig3.x = uniform(-0.3, 0.3, 0.01);
    c.fig4.delta = uniform(0, 0.05, 0.0025);
    c.meanfid.v_up = uniform(0.005, 0.4, 0.005);
    c.baseline.q_grid = uniform(-8, 8, 0.005);
    c.baseline.p_grid = uniform(-10, 170, 0.01);
    if (root["fig3"]) parse_fig3(root["fig3"], c.fig3);
    if (root["fig4"]) parse_fig4(root["fig4"], c.fig4);
    if (root["meanfid"]) parse_meanfid(root["meanfid"], c.meanfid);
    if (root["oracle_check"]) parse_oracle(root["oracle_check"], c.oracle_check);
    if (root["baseline"]) parse_baseline(root["baseline"], c.baseline);
    return c;
}

ExperimentConfig load_config(const std::optional<std::string> &path, const std::vector<std::string> &overrides) {
    if (!path) {
        return parse_config("", overrides);
    }
    std::ifstream in(*path);
    if (!in) {
        throw ConfigError("cannot read config file '" + *path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), overrides);
}

std::string canonical_section(const ExperimentConfig &c, const std::string &section) {
    YAML::Emitter out;
    out << YAML::BeginMap << YAML::Key << section << YAML::Value << YAML::BeginMap;
    if (section == "fig3") {
        out << YAML::Key << "levels_db" << YAML::Value;
        emit_list(out, c.fig3.levels_db);
        out << YAML::Key << "m" << YAML::Value << c.fig3.m;
        out << YAML::Key << "x" << YAML::Value;
        emit_list(out, c.fig3.x);
        out << YAML::Key << "delta" << YAML::Value << num(c.fig3.delta);
        out << YAML::Key << "slope_pattern" << YAML::Value << name(c.fig3.slope_pattern);
        out << YAML::Key << "target" << YAML::Value << name(c.fig3.target);
    } else if (section == "fig4") {
        out << YAML::Key << "levels_db" << YAML::Value;
        emit_list(out, c.fig4.levels_db);
        out << YAML::Key << "m" << YAML::Value << c.fig4.m;
        out << YAML::Key << "x" << YAML::Value << num(c.fig4.x);
        out << YAML::Key << "delta" << YAML::Value;
        emit_list(out, c.fig4.delta);
        out << YAML::Key << "slope_pattern" << YAML::Value << name(c.fig4.slope_pattern);
        out << YAML::Key << "target" << YAML::Value << name(c.fig4.target);
    } else if (section == "meanfid") {
        out << YAML::Key << "levels_db" << YAML::Value;
        emit_list(out, c.meanfid.levels_db);
        out << YAML::Key << "m" << YAML::Value << c.meanfid.m;
        out << YAML::Key << "v_up" << YAML::Value;
        emit_list(out, c.meanfid.v_up);
        out << YAML::Key << "delta" << YAML::Value << num(c.meanfid.delta);
        out << YAML::Key << "target" << YAML::Value << name(c.meanfid.target);
    } else if (section == "oracle_check") {
        const auto &o = c.oracle_check;
        out << YAML::Key << "m" << YAML::Value << YAML::Flow << o.m;
        out << YAML::Key << "levels_db" << YAML::Value;
        emit_list(out, o.levels_db);
        out << YAML::Key << "x" << YAML::Value;
        emit_list(out, o.x);
        out << YAML::Key << "beta_min" << YAML::Value << num(o.beta_min);
        out << YAML::Key << "tolerance" << YAML::Value << num(o.tolerance);
        out << YAML::Key << "schmidt_tolerance" << YAML::Value << num(o.schmidt_tolerance);
        out << YAML::Key << "hermite_order" << YAML::Value
            << (o.hermite_order == HermiteOrder::kEven ? "even" : "literal");
        out << YAML::Key << "toy" << YAML::Value << YAML::BeginMap;
        out << YAML::Key << "m" << YAML::Value << o.toy.m;
        out << YAML::Key << "level_db" << YAML::Value << num(o.toy.level_db);
        out << YAML::Key << "beta" << YAML::Value << num(o.toy.beta);
        out << YAML::Key << "gamma" << YAML::Value << num(o.toy.gamma);
        out << YAML::Key << "dim" << YAML::Value << o.toy.dim;
        out << YAML::Key << "x" << YAML::Value;
        emit_list(out, o.toy.x);
        out << YAML::Key << "tolerance" << YAML::Value << num(o.toy.tolerance);
        out << YAML::EndMap;
    } else if (section == "baseline") {
        const auto &b = c.baseline;
        out << YAML::Key << "cases" << YAML::Value << YAML::BeginSeq;
        for (const auto &bc : b.cases) {
            out << YAML::Flow << YAML::BeginMap << YAML::Key << "tau" << YAML::Value << num(bc.tau) << YAML::Key
                << "alpha" << YAML::Value << num(bc.alpha) << YAML::Key << "x" << YAML::Value << num(bc.x)
                << YAML::EndMap;
        }
        out << YAML::EndSeq;
        out << YAML::Key << "weighting" << YAML::Value
            << (b.weighting == EtaWeighting::kPrinted ? "printed" : "physical");
        out << YAML::Key << "q_grid" << YAML::Value;
        emit_list(out, b.q_grid);
        out << YAML::Key << "p_grid" << YAML::Value;
        emit_list(out, b.p_grid);
        out << YAML::Key << "fourier_tolerance" << YAML::Value << num(b.fourier_tolerance);
    } else {
        throw ConfigError("unknown section '" + section + "'");
    }
    out << YAML::EndMap << YAML::EndMap;
    return out.c_str();
}

std::uint64_t fnv1a64(const std::string &data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace kerrgkp::cli
