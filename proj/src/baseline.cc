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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace kerrgkp {

namespace {

constexpr double kPoissonTail = 1e-12;

void check_params(const BaselineParams &p) {
    if (!(p.alpha > 0) || !std::isfinite(p.alpha)) {
        throw std::invalid_argument("alpha must be positive and finite");
    }
    if (!std::isfinite(p.tau) || !std::isfinite(p.x)) {
        throw std::invalid_argument("tau and x must be finite");
    }
}

void check_grid(const std::vector<double> &grid) {
    if (grid.size() < 2) {
        throw std::invalid_argument("grid needs at least two points");
    }
    for (size_t i = 0; i < grid.size(); i++) {
        if (!std::isfinite(grid[i]) || (i > 0 && !(grid[i] > grid[i - 1]))) {
            throw std::invalid_argument("grid must be finite and increasing");
        }
    }
}

std::vector<double> trapezoid_weights(const std::vector<double> &grid) {
    std::vector<double> w(grid.size(), 0);
    for (size_t i = 0; i + 1 < grid.size(); i++) {
        double h = grid[i + 1] - grid[i];
        w[i] += h / 2;
        w[i + 1] += h / 2;
    }
    return w;
}

void normalize_on(std::vector<cplx> &f, const std::vector<double> &grid) {
    auto w = trapezoid_weights(grid);
    double n = 0;
    for (size_t i = 0; i < f.size(); i++) {
        n += std::norm(f[i]) * w[i];
    }
    if (!(n > 0)) {
        throw std::domain_error("wavefunction vanishes on the grid");
    }
    double s = 1 / std::sqrt(n);
    for (auto &v : f) {
        v *= s;
    }
}

std::vector<double> etas(const BaselineParams &p) {
    std::vector<double> e;
    for (int n = 0; n <= p.cutoff(); n++) {
        e.push_back(eta_n(p, n));
    }
    return e;
}

}  // namespace

int BaselineParams::cutoff() const {
    if (n_max > 0) {
        if (n_max > kMaxHermiteOrder) {
            throw UnsupportedOrderError("n_max above " + std::to_string(kMaxHermiteOrder));
        }
        return n_max;
    }
    // Smallest n whose Poisson(alpha^2) tail beyond n is below kPoissonTail.
    double lam = alpha * alpha;
    double term = std::exp(-lam);
    double cumulative = term;
    int n = 0;
    while (1 - cumulative >= kPoissonTail) {
        n++;
        term *= lam / n;
        cumulative += term;
        if (n > kMaxHermiteOrder) {
            throw TruncationError("Poisson tail for alpha=" + std::to_string(alpha) + " needs n_max above limit",
                                  kMaxHermiteOrder);
        }
        if (term < 1e-300 && n > lam) {
            break;
        }
    }
    return n;
}

double eta_n(const BaselineParams &params, int n) {
    check_params(params);
    if (n < 0 || n > params.cutoff()) {
        throw std::invalid_argument("eta_n index outside [0, n_max]");
    }
    double x = params.x;
    double psi = quad_amplitude(n, x);
    if (psi == 0) {
        return 0;
    }
    // log|H_n(x)| from the normalized amplitude <x|n>.
    double log_h = std::log(std::abs(psi)) + 0.25 * std::log(std::numbers::pi) +
                   0.5 * (n * std::numbers::ln2 + std::lgamma(n + 1.0)) + 0.5 * x * x;
    double log_pref = params.weighting == EtaWeighting::kPrinted ? 2 * std::log(params.alpha)
                                                                 : n * std::log(params.alpha);
    double log_eta =
        log_pref + log_h - 0.5 * n * std::numbers::ln2 - std::lgamma(n + 1.0) + 0.5 * (params.alpha * params.alpha + x * x);
    if (log_eta > 700) {
        throw std::overflow_error("eta_n overflows");
    }
    return std::copysign(std::exp(log_eta), psi);
}

std::vector<double> uniform_grid(double lo, double hi, double step) {
    if (!(step > 0) || !(hi > lo) || !std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("grid needs lo < hi and step > 0");
    }
    auto n = static_cast<size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> g(n);
    for (size_t i = 0; i < n; i++) {
        g[i] = lo + static_cast<double>(i) * step;
    }
    return g;
}

std::vector<cplx> conventional_wavefn_q(const BaselineParams &params, const std::vector<double> &q_grid) {
    check_params(params);
    check_grid(q_grid);
    auto e = etas(params);
    double w = std::numbers::pi * params.tau;
    std::vector<cplx> f(q_grid.size());
    for (size_t i = 0; i < q_grid.size(); i++) {
        double q = q_grid[i];
        cplx s = 0;
        for (size_t n = 0; n < e.size(); n++) {
            s += e[n] * std::polar(1.0, w * static_cast<double>(n) * q);
        }
        f[i] = std::exp(-0.5 * q * q) * s;
    }
    normalize_on(f, q_grid);
    return f;
}

std::vector<cplx> conventional_wavefn_p(const BaselineParams &params, const std::vector<double> &p_grid) {
    check_params(params);
    check_grid(p_grid);
    auto e = etas(params);
    double w = std::numbers::pi * params.tau;
    std::vector<cplx> f(p_grid.size());
    for (size_t i = 0; i < p_grid.size(); i++) {
        double s = 0;
        for (size_t n = 0; n < e.size(); n++) {
            double d = p_grid[i] - w * static_cast<double>(n);
            s += e[n] * std::exp(-0.5 * d * d);
        }
        f[i] = s;
    }
    normalize_on(f, p_grid);
    return f;
}

double fourier_consistency(const BaselineParams &params, const std::vector<double> &q_grid,
                           const std::vector<double> &p_grid) {
    auto fq = conventional_wavefn_q(params, q_grid);
    auto fp = conventional_wavefn_p(params, p_grid);
    auto wq = trapezoid_weights(q_grid);
    auto wp = trapezoid_weights(p_grid);
    double inv = 1 / std::sqrt(2 * std::numbers::pi);
    double dist = 0;
    for (size_t j = 0; j < p_grid.size(); j++) {
        double p = p_grid[j];
        cplx s = 0;
        for (size_t i = 0; i < q_grid.size(); i++) {
            s += fq[i] * wq[i] * std::polar(1.0, -p * q_grid[i]);
        }
        dist += std::norm(inv * s - fp[j]) * wp[j];
    }
    return std::sqrt(dist);
}

double peak_spacing(const std::vector<double> &profile, const std::vector<double> &grid) {
    if (profile.size() != grid.size()) {
        throw std::invalid_argument("profile and grid differ in length");
    }
    if (profile.size() < 3) {
        throw InsufficientPeaksError("profile too short for peak detection");
    }
    double top = *std::max_element(profile.begin(), profile.end());
    std::vector<double> peaks;
    for (size_t i = 1; i + 1 < profile.size(); i++) {
        if (profile[i] >= 0.1 * top && profile[i] > profile[i - 1] && profile[i] >= profile[i + 1]) {
            peaks.push_back(grid[i]);
        }
    }
    if (peaks.size() < 2) {
        throw InsufficientPeaksError("fewer than two peaks above 10% of the maximum");
    }
    std::vector<double> gaps;
    for (size_t i = 1; i < peaks.size(); i++) {
        gaps.push_back(peaks[i] - peaks[i - 1]);
    }
    std::sort(gaps.begin(), gaps.end());
    size_t h = gaps.size() / 2;
    return gaps.size() % 2 == 1 ? gaps[h] : 0.5 * (gaps[h - 1] + gaps[h]);
}

}  // namespace kerrgkp
