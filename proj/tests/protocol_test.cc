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

#include "kerrgkp/protocol.h"

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"
#include "test_util.h"

using namespace kerrgkp;
using kerrgkp::testing::mp;
using kerrgkp::testing::simpson;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

ProtocolParams toy_params() {
    ProtocolParams p;
    p.m = 1;
    p.squeeze = SqueezeParams::from_db(7);
    p.beta = 4;
    p.gamma = 2;
    p.delta_mode = DeltaMode::kFromBeta;
    return p;
}

ProtocolParams large_beta(int m, double s_db) {
    auto p = ProtocolParams::with_defaults(m, s_db);
    p.delta_mode = DeltaMode::kFromBeta;
    return p;
}

}  // namespace

TEST(ancilla_coefficients, high_precision_magnitudes) {
    double kappa2 = 0.07;
    auto spec = ancilla_coefficients(3, kappa2);
    ASSERT_EQ(spec.coeffs.size(), 7u);
    mp norm = 0;
    std::vector<mp> ref;
    for (int t = 0; t <= 6; t++) {
        mp k = t - 3;
        mp c = exp(-2 * boost::math::constants::pi<mp>() * kappa2 * k * k) *
               sqrt(pow(mp(2), 2 * t) * kerrgkp::testing::factorial_mp(2 * t)) / kerrgkp::testing::hermite_mp(2 * t, 0);
        ref.push_back(c);
        norm += c * c;
    }
    for (int t = 0; t <= 6; t++) {
        double r = static_cast<double>(ref[t]);
        EXPECT_NEAR(spec.coeffs[t], r, 1e-13 * std::abs(r)) << t;
        EXPECT_EQ(spec.coeffs[t] > 0, t % 2 == 0);
    }
    EXPECT_NEAR(spec.norm, static_cast<double>(1 / sqrt(norm)), 1e-14);
}

TEST(ancilla_coefficients, normalized_and_trivial_cases) {
    auto spec = ancilla_coefficients(2, 0.1);
    double s = 0;
    for (int t = 0; t <= 4; t++) {
        s += std::pow(spec.amplitude(t), 2);
    }
    EXPECT_NEAR(s, 1, 1e-14);
    auto zero = ancilla_coefficients(0, 0.1);
    ASSERT_EQ(zero.coeffs.size(), 1u);
    EXPECT_NEAR(zero.amplitude(0), 1, 1e-15);
    EXPECT_THROW(ancilla_coefficients(51, 0.1), UnsupportedOrderError);
}

TEST(delta_error, high_precision_value) {
    double beta = 1000;
    double gamma = 4 * kSqrtPi;
    mp s = mp(gamma) / (2 * mp(beta));
    double ref = static_cast<double>(mp(beta) * (1 - sqrt(1 - s * s)));
    EXPECT_NEAR(delta_error(beta, gamma, 2), ref, 1e-15 * ref);
}

TEST(delta_error, limits_and_errors) {
    EXPECT_EQ(delta_error(10, 0, 2), 0);
    // beta * delta -> gamma^2 / (2 m^2) for large beta.
    double gamma = 4 * kSqrtPi;
    EXPECT_NEAR(1e6 * delta_error(1e6, gamma, 2), gamma * gamma / 8, 1e-8);
    EXPECT_THROW(delta_error(1, gamma, 2), GeometryError);
    EXPECT_THROW(delta_error(-1, gamma, 2), GeometryError);
    ProtocolParams p;
    p.m = 2;
    p.beta = 1;
    p.gamma = gamma;
    EXPECT_THROW(p.rotation(), GeometryError);
}

TEST(phase_matched_beta, multiple_of_two_sqrt_pi) {
    double b = phase_matched_beta(1e4);
    EXPECT_GE(b, 1e4);
    EXPECT_LT(b - 2 * kSqrtPi, 1e4);
    double k = b / (2 * kSqrtPi);
    EXPECT_NEAR(k, std::round(k), 1e-9);
}

TEST(branch_oracle, centers_and_residual_slopes) {
    auto p = large_beta(2, 10);
    double delta = p.delta();
    auto comb = run_branch_oracle(p, 0);
    ASSERT_EQ(comb.peaks().size(), 5u);
    for (int t = 0; t <= 4; t++) {
        int k = t - 2;
        const auto &pk = comb.peaks()[t];
        // Finite beta leaves a second-order center shift.
        EXPECT_NEAR(pk.center, 2 * k * kSqrtPi, 1e-6) << t;
        EXPECT_NEAR(pk.phase_slope, delta * (1 - k * k), 1e-9) << t;
        EXPECT_NEAR(pk.width2, p.squeeze.delta2, 1e-12);
    }
}

TEST(branch_oracle, matches_analytic_model) {
    for (int m : {1, 2, 3}) {
        for (double x : {-0.15, 0.0, 0.3}) {
            auto p = large_beta(m, 9);
            EXPECT_GT(comb_fidelity(run_analytic(p, x), run_branch_oracle(p, x)), 1 - 1e-9) << m << " " << x;
        }
    }
}

TEST(branch_oracle, printed_slope_pattern_is_distinguishable) {
    auto p = large_beta(2, 10);
    p.delta_mode = DeltaMode::kForced;
    p.forced_delta = 0.05;
    auto geo = run_analytic(p, 0);
    p.model.slope_pattern = SlopePattern::kPrinted;
    EXPECT_LT(comb_fidelity(geo, run_analytic(p, 0)), 1 - 1e-4);
}

TEST(branch_oracle, no_interaction_returns_input) {
    ProtocolParams p;
    p.m = 2;
    p.squeeze = SqueezeParams::from_db(8);
    auto out = run_branch_oracle(p, 0.4);
    GaussianComb input({{1, 0, p.squeeze.delta2, 0}});
    EXPECT_GT(comb_fidelity(out, input), 1 - 1e-14);
}

TEST(fock_oracle, no_interaction_returns_input) {
    ProtocolParams p;
    p.m = 1;
    p.squeeze = SqueezeParams::from_db(7);
    auto r = run_fock_oracle(p, 0.0, {64, 0});
    EXPECT_GT(fock_fidelity(r.state, squeezed_vacuum(p.squeeze.r(), 64)), 1 - 1e-12);
}

TEST(fock_oracle, matches_branch_oracle_on_toy_geometry) {
    auto p = toy_params();
    for (double x : {-0.7, 0.0, 0.3}) {
        auto f = run_fock_oracle(p, x, {128, 0});
        auto b = run_branch_oracle(p, x);
        EXPECT_GT(fock_fidelity(f.state, to_fock(b.normalized(), 128)), 1 - 1e-6) << x;
        EXPECT_NEAR(f.density, b.norm_squared(), 1e-9) << x;
    }
}

TEST(fock_oracle, kerr_pair_without_displacement_disentangles) {
    auto p = toy_params();
    p.theta = p.rotation();
    p.beta = 0;
    auto sv = fock_pre_measurement(p, {128, 0}).schmidt_coefficients();
    EXPECT_NEAR(sv[0], 1, 1e-12);
    EXPECT_LT(sv[1], 1e-12);
}

TEST(fock_oracle, rejects_small_ancilla_space) {
    EXPECT_THROW(fock_pre_measurement(toy_params(), {64, 3}), TruncationError);
}

TEST(homodyne_density, without_ancilla_is_vacuum_density) {
    ProtocolParams p;
    p.m = 0;
    for (double x : {0.0, 0.5, -1.2}) {
        EXPECT_NEAR(homodyne_density(p, x), std::pow(quad_amplitude(0, x), 2), 1e-15);
    }
}

TEST(homodyne_density, integrates_to_one) {
    for (int m : {1, 2, 3}) {
        auto p = large_beta(m, 10);
        double total = simpson([&](double x) { return homodyne_density(p, x); }, -12, 12, 4000);
        EXPECT_NEAR(total, 1, 1e-6) << m;
        double orth = simpson([&](double x) { return homodyne_density_orthogonal(p, x); }, -12, 12, 4000);
        EXPECT_NEAR(orth, 1, 1e-6) << m;
    }
}

TEST(homodyne_density, equals_branch_oracle_norm) {
    auto p = large_beta(2, 11);
    for (double x : {-0.4, 0.0, 0.1, 0.9}) {
        double ref = run_branch_oracle(p, x).norm_squared();
        EXPECT_NEAR(homodyne_density(p, x), ref, 1e-10 * std::max(ref, 1e-3)) << x;
    }
}

TEST(homodyne_density, even_in_outcome) {
    auto p = large_beta(3, 12);
    EXPECT_NEAR(homodyne_density(p, 0.37), homodyne_density(p, -0.37), 1e-15);
}
