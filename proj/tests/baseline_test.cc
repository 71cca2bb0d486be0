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

#include "kerrgkp/baseline.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "kerrgkp/gauss_comb.h"
#include "test_util.h"

using namespace kerrgkp;
using kerrgkp::testing::mp;

namespace {

double trapezoid(const std::vector<double> &f, const std::vector<double> &g) {
    double s = 0;
    for (size_t i = 1; i < g.size(); i++) {
        s += 0.5 * (f[i] + f[i - 1]) * (g[i] - g[i - 1]);
    }
    return s;
}

std::vector<double> density(const std::vector<cplx> &f) {
    std::vector<double> d;
    for (auto v : f) {
        d.push_back(std::norm(v));
    }
    return d;
}

}  // namespace

TEST(eta_n, closed_forms) {
    BaselineParams p;
    p.alpha = 1.5;
    p.x = 0.3;
    EXPECT_NEAR(eta_n(p, 0), 2.25 * std::exp(0.5 * (2.25 + 0.09)), 1e-13);
    p.x = 0;
    EXPECT_EQ(eta_n(p, 1), 0);
}

TEST(eta_n, high_precision_value) {
    BaselineParams p;
    p.alpha = 2;
    p.x = 0.4;
    int n = 5;
    mp x = p.x;
    mp ref = mp(4) * kerrgkp::testing::hermite_mp(n, x) / (pow(mp(2), mp(n) / 2) * kerrgkp::testing::factorial_mp(n)) *
             exp((mp(4) + x * x) / 2);
    double r = static_cast<double>(ref);
    EXPECT_NEAR(eta_n(p, n), r, 1e-12 * std::abs(r));
    p.weighting = EtaWeighting::kPhysical;
    EXPECT_NEAR(eta_n(p, n), r * 8, 1e-12 * std::abs(r * 8));
}

TEST(eta_n, index_checks) {
    BaselineParams p;
    EXPECT_THROW(eta_n(p, -1), std::invalid_argument);
    EXPECT_THROW(eta_n(p, p.cutoff() + 1), std::invalid_argument);
    p.n_max = 300;
    EXPECT_THROW(p.cutoff(), UnsupportedOrderError);
}

TEST(uniform_grid, endpoints) {
    auto g = uniform_grid(-1, 1, 0.25);
    ASSERT_EQ(g.size(), 9u);
    EXPECT_EQ(g.front(), -1);
    EXPECT_NEAR(g.back(), 1, 1e-15);
    EXPECT_THROW(uniform_grid(1, 0, 0.1), std::invalid_argument);
}

TEST(conventional_wavefn, normalized_on_grid) {
    BaselineParams p;
    auto q = uniform_grid(-8, 8, 0.005);
    auto pg = uniform_grid(-10, 170, 0.01);
    EXPECT_NEAR(trapezoid(density(conventional_wavefn_q(p, q)), q), 1, 1e-8);
    EXPECT_NEAR(trapezoid(density(conventional_wavefn_p(p, pg)), pg), 1, 1e-8);
}

TEST(conventional_wavefn, zero_slope_is_single_gaussian) {
    BaselineParams p;
    p.tau = 0;
    auto q = uniform_grid(-8, 8, 0.01);
    auto f = conventional_wavefn_q(p, q);
    double c = std::pow(std::numbers::pi, -0.25);
    for (size_t i = 0; i < q.size(); i += 97) {
        EXPECT_NEAR(std::abs(f[i]), c * std::exp(-0.5 * q[i] * q[i]), 1e-10);
    }
    EXPECT_THROW(peak_spacing(density(f), q), InsufficientPeaksError);
}

TEST(conventional_wavefn, peak_spacings) {
    BaselineParams p;
    auto pg = uniform_grid(-10, 170, 0.01);
    double sp = peak_spacing(density(conventional_wavefn_p(p, pg)), pg);
    EXPECT_NEAR(sp, 4 * std::numbers::pi, 0.01);
    auto q = uniform_grid(-8, 8, 0.005);
    double sq = peak_spacing(density(conventional_wavefn_q(p, q)), q);
    EXPECT_LT(std::abs(sq - 0.5), 0.01);
    EXPECT_GT(std::abs(sq - std::sqrt(std::numbers::pi)), 0.5 * std::sqrt(std::numbers::pi));
}

TEST(conventional_wavefn, fourier_consistency) {
    BaselineParams p;
    auto q = uniform_grid(-8, 8, 0.005);
    auto pg = uniform_grid(-10, 170, 0.01);
    EXPECT_LE(fourier_consistency(p, q, pg), 1e-6);
    p.weighting = EtaWeighting::kPhysical;
    EXPECT_LE(fourier_consistency(p, q, pg), 1e-6);
}

TEST(peak_spacing, gkp_comb) {
    auto g = gkp_finite(3, squeeze_convert(10));
    auto grid = uniform_grid(-10, 10, 0.005);
    std::vector<double> prof;
    for (double x : grid) {
        prof.push_back(std::norm(g.evaluate(x)));
    }
    EXPECT_NEAR(peak_spacing(prof, grid), 2 * std::sqrt(std::numbers::pi), 0.005);
}

TEST(peak_spacing, rejects_mismatched_input) {
    EXPECT_THROW(peak_spacing({1, 2}, {0, 1, 2}), std::invalid_argument);
}
