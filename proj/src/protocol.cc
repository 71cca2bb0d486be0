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
#include <string>

#include "kerrgkp/gaussian_state.h"

namespace kerrgkp {

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

void check_m(int m) {
    if (m < 0) {
        throw std::invalid_argument("m must be >= 0");
    }
    if (4 * m > kMaxHermiteOrder) {
        throw UnsupportedOrderError("m=" + std::to_string(m) + " needs ancilla Fock order above " +
                                    std::to_string(kMaxHermiteOrder));
    }
}

}  // namespace

AncillaSpec ancilla_coefficients(int m, double kappa2) {
    check_m(m);
    if (!(kappa2 > 0) || !std::isfinite(kappa2)) {
        throw std::invalid_argument("kappa2 must be positive and finite");
    }
    AncillaSpec spec{m, 0, {}};
    double total = 0;
    for (int t = 0; t <= 2 * m; t++) {
        double k = t - m;
        // |sqrt(2^{2t} (2t)!) / H_{2t}(0)| = 2^t t! / sqrt((2t)!)
        double log_mag = -2 * std::numbers::pi * kappa2 * k * k + t * std::numbers::ln2 + std::lgamma(t + 1.0) -
                         0.5 * std::lgamma(2 * t + 1.0);
        double c = std::exp(log_mag);
        if (!(c > 0) || !std::isfinite(c)) {
            throw std::overflow_error("ancilla coefficient t=" + std::to_string(t) + " not representable");
        }
        spec.coeffs.push_back(t % 2 == 0 ? c : -c);
        total += c * c;
    }
    spec.norm = 1 / std::sqrt(total);
    return spec;
}

double delta_error(double beta, double gamma, int m) {
    if (m <= 0 || !(beta > 0)) {
        throw GeometryError("delta_error needs m >= 1 and beta > 0");
    }
    double s = gamma / (m * beta);
    if (!(std::abs(s) <= 1)) {
        throw GeometryError("gamma / (m beta) exceeds 1");
    }
    // beta (1 - cos theta) written without cancellation.
    return beta * s * s / (1 + std::sqrt(1 - s * s));
}

double phase_matched_beta(double beta_min) {
    if (!(beta_min > 0) || !std::isfinite(beta_min)) {
        throw std::invalid_argument("beta_min must be positive and finite");
    }
    return 2 * kSqrtPi * std::ceil(beta_min / (2 * kSqrtPi));
}

ProtocolParams ProtocolParams::with_defaults(int m, double s_db, double beta_min) {
    ProtocolParams p;
    p.squeeze = SqueezeParams::from_db(s_db);
    p.m = m;
    p.gamma = 2 * m * kSqrtPi;
    p.beta = phase_matched_beta(beta_min);
    return p;
}

double ProtocolParams::rotation() const {
    if (theta) {
        return *theta;
    }
    if (m == 0 || (gamma == 0 && beta == 0)) {
        return 0;
    }
    if (!(beta > 0)) {
        throw GeometryError("beta must be positive to derive the rotation");
    }
    double s = gamma / (m * beta);
    if (!(std::abs(s) <= 1)) {
        throw GeometryError("gamma / (m beta) exceeds 1");
    }
    return std::asin(s);
}

double ProtocolParams::delta() const {
    if (delta_mode == DeltaMode::kForced) {
        return forced_delta;
    }
    return delta_error(beta, gamma, m);
}

cplx ProtocolParams::d1() const {
    double th = rotation();
    double q = -beta * std::sin(m * th);
    double p = -beta * std::cos(m * th);
    return cplx(q, p) / std::numbers::sqrt2;
}

cplx ProtocolParams::d2() const {
    return cplx(0, beta * std::cos(rotation())) / std::numbers::sqrt2;
}

GaussianComb run_analytic(const ProtocolParams &params, double x) {
    check_m(params.m);
    return generated_comb(params.m, params.squeeze, x, params.delta(), params.model);
}

GaussianComb run_branch_oracle(const ProtocolParams &params, double x) {
    auto anc = ancilla_coefficients(params.m, params.squeeze.kappa2);
    double th = params.rotation();
    cplx a1 = params.d1();
    cplx a2 = params.d2();
    auto psi = quad_amplitudes(4 * params.m, x);
    auto input = GaussianPureState::squeezed_vacuum(params.squeeze.r());
    std::vector<Peak> peaks;
    for (int t = 0; t <= 2 * params.m; t++) {
        // Ancilla |2t> turns the cross-Kerr exp(-i (theta/2) n_s n_a) into a rotation by t theta.
        auto s = input.rotated(t * th).displaced(a1).rotated(-t * th).displaced(a2);
        peaks.push_back(s.as_peak(anc.amplitude(t) * psi[2 * t]));
    }
    return GaussianComb(std::move(peaks));
}

JointFockVector fock_pre_measurement(const ProtocolParams &params, FockOracleDims dims) {
    auto anc = ancilla_coefficients(params.m, params.squeeze.kappa2);
    int dim_anc = dims.ancilla > 0 ? dims.ancilla : 4 * params.m + 1;
    if (dim_anc < 4 * params.m + 1) {
        throw TruncationError("ancilla truncation below 4m+1", 4 * params.m + 1);
    }
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(dim_anc);
    for (int t = 0; t <= 2 * params.m; t++) {
        a[2 * t] = anc.amplitude(t);
    }
    auto joint = JointFockVector::product(squeezed_vacuum(params.squeeze.r(), dims.signal), FockVector(a));
    double th = params.rotation();
    joint = cross_kerr(joint, th / 2);
    joint = displace(joint, Mode::kA, params.d1());
    return cross_kerr(joint, -th / 2);
}

FockOracleResult run_fock_oracle(const ProtocolParams &params, double x, FockOracleDims dims) {
    auto joint = fock_pre_measurement(params, dims);
    auto [state, weight] = homodyne_project(joint, Mode::kB, x);
    if (!(weight > 0)) {
        throw std::domain_error("outcome has zero density");
    }
    auto out = displace(state, params.d2());
    return {out.normalized(), weight};
}

std::vector<Peak> analytic_branches(const ProtocolParams &params) {
    check_m(params.m);
    double delta = params.delta();
    const auto &sp = params.squeeze;
    SlopePattern pattern = params.model.slope_pattern;
    double unit = std::pow(std::numbers::pi * sp.delta2, -0.25);
    std::vector<Peak> out;
    for (int t = 0; t <= 2 * params.m; t++) {
        int k = t - params.m;
        out.push_back({std::polar(unit, peak_phase(k, delta, pattern)), 2 * k * kSqrtPi, sp.delta2,
                       peak_slope(k, delta, pattern)});
    }
    return out;
}

double homodyne_density(const ProtocolParams &params, double x) {
    auto anc = ancilla_coefficients(params.m, params.squeeze.kappa2);
    auto branches = analytic_branches(params);
    auto psi = quad_amplitudes(4 * params.m, x);
    int n = 2 * params.m + 1;
    std::vector<double> v(n);
    for (int t = 0; t < n; t++) {
        v[t] = anc.amplitude(t) * psi[2 * t];
    }
    double p = 0;
    for (int t = 0; t < n; t++) {
        p += v[t] * v[t];
        for (int u = t + 1; u < n; u++) {
            p += 2 * v[t] * v[u] * overlap(branches[t], branches[u]).real();
        }
    }
    return p;
}

double homodyne_density_orthogonal(const ProtocolParams &params, double x) {
    auto anc = ancilla_coefficients(params.m, params.squeeze.kappa2);
    auto psi = quad_amplitudes(4 * params.m, x);
    double p = 0;
    for (int t = 0; t <= 2 * params.m; t++) {
        double v = anc.amplitude(t) * psi[2 * t];
        p += v * v;
    }
    return p;
}

}  // namespace kerrgkp
