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

#include <atomic>
#include <sstream>
#include <stdexcept>

#include "gtest/gtest.h"
#include "kerrgkp/cli/commands.h"
#include "kerrgkp/cli/config.h"
#include "kerrgkp/cli/parallel.h"

using namespace kerrgkp;
using namespace kerrgkp::cli;

namespace {

std::string error_of(const std::string &yaml, const std::vector<std::string> &overrides = {}) {
    try {
        parse_config(yaml, overrides);
    } catch (const ConfigError &e) {
        return e.what();
    }
    return "";
}

std::vector<std::string> lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) {
        out.push_back(l);
    }
    return out;
}

std::vector<std::string> data_lines(const std::string &text) {
    std::vector<std::string> out;
    for (auto &l : lines(text)) {
        if (!l.empty() && l[0] != '#') {
            out.push_back(l);
        }
    }
    return out;
}

}  // namespace

TEST(config, defaults) {
    auto c = parse_config("");
    EXPECT_EQ(c.fig3.x.size(), 61u);
    EXPECT_NEAR(c.fig3.x.front(), -0.3, 1e-15);
    EXPECT_NEAR(c.fig3.x.back(), 0.3, 1e-15);
    EXPECT_EQ(c.fig3.levels_db.size() * c.fig3.x.size(), 305u);
    EXPECT_EQ(c.fig4.delta.size(), 21u);
    EXPECT_EQ(c.meanfid.v_up.size(), 80u);
    EXPECT_EQ(c.meanfid.m, 3);
    EXPECT_EQ(c.baseline.cases.size(), 2u);
}

TEST(config, parses_sections_and_grids) {
    auto c = parse_config(
        "fig3:\n"
        "  m: 3\n"
        "  x: {start: -0.1, stop: 0.1, step: 0.05}\n"
        "  slope_pattern: printed\n"
        "meanfid:\n"
        "  v_up: [0.1, 0.2]\n");
    EXPECT_EQ(c.fig3.m, 3);
    ASSERT_EQ(c.fig3.x.size(), 5u);
    EXPECT_EQ(c.fig3.x[2], 0);
    EXPECT_EQ(c.fig3.slope_pattern, SlopePattern::kPrinted);
    EXPECT_EQ(c.meanfid.v_up, (std::vector<double>{0.1, 0.2}));
}

TEST(config, unknown_key_reports_path_and_line) {
    auto msg = error_of("fig3:\n  m: 2\n  levles_db: [7]\n");
    EXPECT_NE(msg.find("fig3.levles_db"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 3"), std::string::npos) << msg;
    EXPECT_NE(error_of("fig5: {}\n"), "");
}

TEST(config, rejects_bad_values) {
    EXPECT_NE(error_of("fig3:\n  x: [0.1, 0.0]\n"), "");
    EXPECT_NE(error_of("fig3:\n  m: two\n"), "");
    EXPECT_NE(error_of("fig3:\n  target: perfect\n"), "");
    EXPECT_NE(error_of("meanfid:\n  v_up: [0.0, 0.1]\n"), "");
    EXPECT_NE(error_of("fig3: [\n"), "");
    EXPECT_NE(error_of("fig3:\n  x: {start: 0, stop: 1}\n"), "");
}

TEST(config, overrides) {
    auto c = parse_config("fig3:\n  m: 1\n", {"fig3.m=3", "oracle_check.hermite_order=literal", "fig4.delta=[0, 0.01]"});
    EXPECT_EQ(c.fig3.m, 3);
    EXPECT_EQ(c.oracle_check.hermite_order, HermiteOrder::kLiteral);
    EXPECT_EQ(c.fig4.delta, (std::vector<double>{0, 0.01}));
    auto msg = error_of("", {"fig3.mm=3"});
    EXPECT_NE(msg.find("override"), std::string::npos) << msg;
    EXPECT_NE(error_of("", {"fig3.m"}), "");
}

TEST(config, hash_is_stable_and_section_local) {
    auto a = parse_config("");
    auto b = parse_config("fig3:\n  m: 2\n");
    auto c = parse_config("", {"fig4.x=0.1"});
    EXPECT_EQ(canonical_section(a, "fig3"), canonical_section(b, "fig3"));
    EXPECT_EQ(canonical_section(a, "fig3"), canonical_section(c, "fig3"));
    EXPECT_NE(canonical_section(a, "fig4"), canonical_section(c, "fig4"));
    EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
    EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
    EXPECT_THROW(canonical_section(a, "fig9"), ConfigError);
}

TEST(parallel_map, ordered_results) {
    for (int jobs : {1, 3, 8}) {
        auto r = parallel_map(100, jobs, [](size_t i) { return static_cast<int>(i * i); });
        ASSERT_EQ(r.size(), 100u);
        for (size_t i = 0; i < r.size(); i++) {
            EXPECT_EQ(r[i], static_cast<int>(i * i));
        }
    }
}

TEST(parallel_map, rethrows_lowest_failure) {
    auto run = [](int jobs) {
        try {
            parallel_map(50, jobs, [](size_t i) {
                if (i == 7 || i == 30) {
                    throw std::runtime_error(std::to_string(i));
                }
                return 0;
            });
        } catch (const std::runtime_error &e) {
            return std::string(e.what());
        }
        return std::string();
    };
    EXPECT_EQ(run(1), "7");
    EXPECT_EQ(run(8), "7");
}

TEST(commands, fig3_table_shape_and_jobs_determinism) {
    auto c = parse_config("");
    auto one = cmd_fig3(c, 1);
    auto many = cmd_fig3(c, 8);
    EXPECT_EQ(one.text, many.text);
    EXPECT_EQ(one.exit_code, kExitOk);
    auto rows = data_lines(one.text);
    ASSERT_EQ(rows.size(), 306u);
    EXPECT_EQ(rows[0], "s_db,m,x,F,p_exact,p_paper");
    auto head = lines(one.text);
    EXPECT_EQ(head[0].rfind("# kerrgkp ", 0), 0u);
    EXPECT_EQ(head[1], "# command: fig3");
    EXPECT_EQ(head[2].rfind("# config_hash: ", 0), 0u);
}

TEST(commands, fig4_zero_delta_matches_fig3_origin) {
    auto c = parse_config("", {"fig3.x=[0.0]", "fig4.delta=[0.0, 0.02]"});
    auto f3 = data_lines(cmd_fig3(c, 2).text);
    auto f4 = data_lines(cmd_fig4(c, 2).text);
    ASSERT_EQ(f3.size(), 6u);
    ASSERT_EQ(f4.size(), 11u);
    for (size_t i = 0; i < 5; i++) {
        auto fid3 = f3[i + 1].substr(0, f3[i + 1].rfind(',', f3[i + 1].rfind(',') - 1));
        fid3 = fid3.substr(fid3.rfind(',') + 1);
        auto fid4 = f4[1 + 2 * i].substr(f4[1 + 2 * i].rfind(',') + 1);
        EXPECT_EQ(fid3, fid4) << i;
    }
}

TEST(commands, meanfid_success_nondecreasing) {
    auto c = parse_config("", {"meanfid.levels_db=[10]", "meanfid.v_up={start: 0.05, stop: 0.4, step: 0.05}"});
    auto rows = data_lines(cmd_meanfid(c, 4).text);
    double prev = 0;
    for (size_t i = 1; i < rows.size(); i++) {
        std::vector<std::string> f;
        std::istringstream in(rows[i]);
        for (std::string s; std::getline(in, s, ',');) {
            f.push_back(s);
        }
        double p = std::stod(f[3]);
        EXPECT_GE(p, prev);
        prev = p;
    }
}

TEST(commands, oracle_check_negative_control_fails) {
    auto small = std::vector<std::string>{"oracle_check.m=[2]", "oracle_check.levels_db=[10]",
                                          "oracle_check.x=[0.0, 0.1]"};
    auto ok = cmd_oracle_check(parse_config("", small), 2);
    EXPECT_EQ(ok.exit_code, kExitOk);
    EXPECT_NE(ok.text.find("# result: PASS"), std::string::npos);
    small.push_back("oracle_check.hermite_order=literal");
    auto bad = cmd_oracle_check(parse_config("", small), 2);
    EXPECT_EQ(bad.exit_code, kExitNumeric);
    EXPECT_NE(bad.text.find("# result: FAIL"), std::string::npos);
}

TEST(commands, unknown_command) {
    EXPECT_THROW(run_command("fig5", parse_config(""), 1), ConfigError);
}
