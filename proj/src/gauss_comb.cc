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

#include "kerrgkp/gauss_comb.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace kerrgkp {

namespace {

constexpr double kPi = std::numbers::pi;
const double kSqrtPi = std::sqrt(kPi);

double envelope(double q, const SqueezeParams &sp) {
    return std::exp(-0.5 * sp.kappa2 * q * q);
}

void check_squeeze(const SqueezeParams &sp) {
    if (!(sp.sigma2 > 0) || !std::isfinite(sp.sigma2)) {
        throw std::invalid_argument("squeezing variance must be positive and finite");
    }
}

GaussianComb comb_from_offsets(int k_lo, int k_hi, double shift, const SqueezeParams &sp) {
    std::vector<Peak> peaks;
    for (int k = k_lo; k <= k_hi; k++) {
        double q = 2 * k * kSqrtPi + shift;
        peaks.push_back({envelope(q, sp), q, sp.delta2, 0});
    }
    return GaussianComb(std::move(peaks)).normalized();
}

}  // namespace

SqueezeParams SqueezeParams::from_db(double s_db) {
    if (!std::isfinite(s_db)) {
        throw std::invalid_argument("squeezing level must be finite");
    }
    double sigma2 = 0.5 * std::pow(10.0, -s_db / 10);
    return {s_db, sigma2, 2 * sigma2, 2 * sigma2};
}

double SqueezeParams::r() const {
    return -0.5 * std::log(2 * sigma2);
}

SqueezeParams squeeze_convert(double s_db) {
    return SqueezeParams::from_db(s_db);
}

double squeeze_db(double sigma2) {
    if (!(sigma2 > 0)) {
        throw std::invalid_argument("variance must be positive");
    }
    return -10 * std::log10(2 * sigma2);
}

GaussianComb::GaussianComb(std::vector<Peak> peaks) : peaks_(std::move(peaks)) {
    for (const auto &p : peaks_) {
        if (!(p.width2 > 0) || !std::isfinite(p.width2)) {
            throw std::invalid_argument("peak width must be positive and finite");
        }
        if (!std::isfinite(p.center) || !std::isfinite(p.phase_slope) || !std::isfinite(p.weight.real()) ||
            !std::isfinite(p.weight.imag())) {
            throw std::invalid_argument("peak parameters must be finite");
        }
    }
}

double GaussianComb::norm_squared() const {
    return overlap(*this, *this).real();
}

GaussianComb GaussianComb::normalized() const {
    double n = norm_squared();
    if (!(n > 0)) {
        throw std::domain_error("cannot normalize a comb with zero norm");
    }
    return scaled(1 / std::sqrt(n));
}

GaussianComb GaussianComb::scaled(cplx factor) const {
    auto peaks = peaks_;
    for (auto &p : peaks) {
        p.weight *= factor;
    }
    return GaussianComb(std::move(peaks));
}

cplx GaussianComb::evaluate(double q) const {
    cplx total = 0;
    for (const auto &p : peaks_) {
        double d = q - p.center;
        total += p.weight * std::exp(-d * d / (2 * p.width2)) * std::polar(1.0, -p.phase_slope * q);
    }
    return total;
}

std::pair<double, double> GaussianComb::support(double sigmas) const {
    if (peaks_.empty()) {
        return {0, 0};
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const auto &p : peaks_) {
        double w = sigmas * std::sqrt(p.width2);
        lo = std::min(lo, p.center - w);
        hi = std::max(hi, p.center + w);
    }
    return {lo, hi};
}

cplx overlap(const Peak &a, const Peak &b) {
    double w1 = a.width2;
    double w2 = b.width2;
    double ws = w1 + w2;
    double dc = a.center - b.center;
    double ds = a.phase_slope - b.phase_slope;
    double re = -dc * dc / (2 * ws) - ds * ds * w1 * w2 / (2 * ws);
    double im = ds * (a.center * w2 + b.center * w1) / ws;
    double pref = std::sqrt(2 * kPi * w1 * w2 / ws);
    return std::conj(a.weight) * b.weight * pref * std::exp(re) * std::polar(1.0, im);
}

cplx overlap(const GaussianComb &a, const GaussianComb &b) {
    cplx total = 0;
    for (const auto &pa : a.peaks()) {
        for (const auto &pb : b.peaks()) {
            total += overlap(pa, pb);
        }
    }
    return total;
}

double comb_fidelity(const GaussianComb &a, const GaussianComb &b) {
    double na = a.norm_squared();
    double nb = b.norm_squared();
    if (!(na > 0) || !(nb > 0)) {
        throw std::domain_error("fidelity with a zero-norm comb");
    }
    return std::norm(overlap(a, b)) / (na * nb);
}

GaussianComb gkp_finite(int m, const SqueezeParams &sp, Logical logical) {
    if (m < 0) {
        throw std::invalid_argument("m must be >= 0");
    }
    check_squeeze(sp);
    if (logical == Logical::kZero) {
        return comb_from_offsets(-m, m, 0, sp);
    }
    return comb_from_offsets(-m, m, kSqrtPi, sp);
}

GaussianComb gkp_ideal(const SqueezeParams &sp, Logical logical, double cutoff) {
    check_squeeze(sp);
    if (!(cutoff > 0 && cutoff < 1)) {
        throw std::invalid_argument("cutoff must lie in (0, 1)");
    }
    double q_max = std::sqrt(2 * std::log(1 / cutoff) / sp.kappa2);
    int k_max = static_cast<int>(std::ceil(q_max / (2 * kSqrtPi))) + 1;
    if (logical == Logical::kZero) {
        return comb_from_offsets(-k_max, k_max, 0, sp);
    }
    return comb_from_offsets(-k_max - 1, k_max, kSqrtPi, sp);
}

double hermite_ratio(int n, double x) {
    if (n % 2 != 0) {
        throw std::invalid_argument("hermite_ratio needs an even order");
    }
    return std::exp(0.5 * x * x) * quad_amplitude(n, x) / quad_amplitude(n, 0);
}

double peak_slope(int k, double delta, SlopePattern pattern) {
    if (pattern == SlopePattern::kGeometric) {
        return delta * (1 - k * k);
    }
    if (k % 2 != 0) {
        return 0;
    }
    return (k / 2) % 2 == 0 ? delta : -delta;
}

double peak_phase(int k, double delta, SlopePattern pattern) {
    if (pattern == SlopePattern::kPrinted) {
        return 0;
    }
    return kSqrtPi * delta * k * (1 - 4.0 * k * k) / 3;
}

GaussianComb generated_comb(int m, const SqueezeParams &sp, double x, double delta, CombModel model) {
    if (m < 0) {
        throw std::invalid_argument("m must be >= 0");
    }
    check_squeeze(sp);
    if (!std::isfinite(x) || !std::isfinite(delta)) {
        throw std::invalid_argument("outcome and delta must be finite");
    }
    std::vector<Peak> peaks;
    for (int t = 0; t <= 2 * m; t++) {
        int k = t - m;
        double q = 2 * k * kSqrtPi;
        double w;
        if (model.hermite_order == HermiteOrder::kEven) {
            w = hermite_ratio(2 * t, x);
        } else {
            // Same ancilla weight but with the Fock amplitude of order t.
            w = std::exp(0.5 * x * x) * quad_amplitude(t, x) / quad_amplitude(2 * t, 0);
        }
        cplx weight = envelope(q, sp) * w * std::polar(1.0, peak_phase(k, delta, model.slope_pattern));
        peaks.push_back({weight, q, sp.delta2, peak_slope(k, delta, model.slope_pattern)});
    }
    GaussianComb comb(std::move(peaks));
    if (!(comb.norm_squared() > 0)) {
        throw std::domain_error("heralded comb vanishes for this outcome");
    }
    return comb.normalized();
}

FockVector to_fock(const GaussianComb &comb, int dim) {
    if (dim < 1 || dim > kMaxHermiteOrder + 1) {
        throw std::invalid_argument("to_fock dim outside [1, 201]");
    }
    Eigen::VectorXcd amps = Eigen::VectorXcd::Zero(dim);
    if (comb.empty()) {
        return FockVector(std::move(amps));
    }
    auto [lo, hi] = comb.support(14);
    using Integrator = boost::math::quadrature::gauss_kronrod<double, 61>;
    // Integrate peak by peak so each panel holds one smooth bump.
    std::vector<double> edges;
    std::vector<double> centers;
    for (const auto &p : comb.peaks()) {
        centers.push_back(p.center);
    }
    std::sort(centers.begin(), centers.end());
    edges.push_back(lo);
    for (size_t i = 0; i + 1 < centers.size(); i++) {
        double mid = 0.5 * (centers[i] + centers[i + 1]);
        if (mid > edges.back()) {
            edges.push_back(mid);
        }
    }
    edges.push_back(hi);
    for (int n = 0; n < dim; n++) {
        double re = 0;
        double im = 0;
        for (size_t e = 0; e + 1 < edges.size(); e++) {
            re += Integrator::integrate(
                [&](double q) { return quad_amplitude(n, q) * comb.evaluate(q).real(); }, edges[e], edges[e + 1], 12,
                1e-13);
            im += Integrator::integrate(
                [&](double q) { return quad_amplitude(n, q) * comb.evaluate(q).imag(); }, edges[e], edges[e + 1], 12,
                1e-13);
        }
        amps[n] = {re, im};
    }
    double norm = comb.norm_squared();
    if (amps.squaredNorm() < norm * (1 - kTailTolerance)) {
        throw TruncationError("comb does not fit in " + std::to_string(dim) + " Fock states",
                              std::min(2 * dim, kMaxHermiteOrder + 1));
    }
    return FockVector(std::move(amps));
}

}  // namespace kerrgkp
