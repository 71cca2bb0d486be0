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

#include "kerrgkp/gaussian_state.h"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kerrgkp {

GaussianPureState GaussianPureState::squeezed_vacuum(double r) {
    if (!std::isfinite(r) || r < 0) {
        throw std::invalid_argument("squeezing parameter must be finite and >= 0");
    }
    return {0, 0, r};
}

GaussianPureState GaussianPureState::rotated(double phi) const {
    return {phase_, alpha_ * std::polar(1.0, -phi), xi_ * std::polar(1.0, -2 * phi)};
}

GaussianPureState GaussianPureState::displaced(cplx beta) const {
    // D(beta) D(alpha) = exp(i Im(beta alpha^*)) D(alpha + beta).
    return {phase_ + std::imag(beta * std::conj(alpha_)), alpha_ + beta, xi_};
}

double GaussianPureState::q_mean() const {
    return std::numbers::sqrt2 * alpha_.real();
}

double GaussianPureState::p_mean() const {
    return std::numbers::sqrt2 * alpha_.imag();
}

cplx GaussianPureState::wavefunction(double q) const {
    double q0 = q_mean();
    double p0 = p_mean();
    double r = std::abs(xi_);
    cplx e = r == 0 ? cplx(1) : xi_ / r;
    cplx den = std::cosh(r) - e * std::sinh(r);
    cplx num = std::cosh(r) + e * std::sinh(r);
    double u = q - q0;
    cplx sq = std::pow(std::numbers::pi, -0.25) / std::sqrt(den) * std::exp(-0.5 * u * u * num / den);
    return std::polar(1.0, phase_ - 0.5 * q0 * p0 + p0 * q) * sq;
}

Peak GaussianPureState::as_peak(cplx amplitude) const {
    double r = std::abs(xi_);
    if (std::abs(xi_.imag()) > 1e-9 * std::max(1.0, r) || xi_.real() < 0) {
        throw std::domain_error("state is not squeezed along q");
    }
    double q0 = q_mean();
    double p0 = p_mean();
    cplx w = amplitude * std::polar(std::pow(std::numbers::pi, -0.25) * std::exp(0.5 * r), phase_ - 0.5 * q0 * p0);
    return {w, q0, std::exp(-2 * r), -p0};
}

}  // namespace kerrgkp
