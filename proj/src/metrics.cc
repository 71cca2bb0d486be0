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

#include "kerrgkp/metrics.h"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>

namespace kerrgkp {

namespace {

using Integrator = boost::math::quadrature::gauss_kronrod<double, 31>;
constexpr unsigned kMaxDepth = 20;
constexpr double kRelTol = 1e-11;

GaussianComb make_target(const ProtocolParams &p, FidelityTarget target) {
    if (target == FidelityTarget::kIdeal) {
        return gkp_ideal(p.squeeze);
    }
    return gkp_finite(p.m, p.squeeze);
}

// Beyond this |x| every <x|2t> with t <= 2m is negligible.
double outcome_extent(int m) {
    return std::sqrt(2.0 * 4 * m + 1) + 12;
}

double integrate(const auto &f, double a, double b) {
    return Integrator::integrate(f, a, b, kMaxDepth, kRelTol);
}

}  // namespace

FidelityModel::FidelityModel(ProtocolParams params, FidelityTarget target)
    : params_(std::move(params)), target_(make_target(params_, target)) {
}

double FidelityModel::fidelity(double x) const {
    return comb_fidelity(target_, run_analytic(params_, x));
}

double FidelityModel::density(double x, DensityModel model) const {
    if (model == DensityModel::kExact) {
        return homodyne_density(params_, x);
    }
    return homodyne_density_orthogonal(params_, x);
}

RunRecord FidelityModel::run(double x) const {
    auto state = run_analytic(params_, x);
    double f = comb_fidelity(target_, state);
    return {x, std::abs(x) <= params_.v_up, std::move(state), density(x), f};
}

std::vector<FidelityPoint> fidelity_curve(const ProtocolParams &params, const std::vector<double> &xs,
                                          FidelityTarget target) {
    FidelityModel model(params, target);
    std::vector<FidelityPoint> out;
    out.reserve(xs.size());
    for (double x : xs) {
        out.push_back({x, model.fidelity(x), model.density(x), model.density(x, DensityModel::kOrthogonal)});
    }
    return out;
}

std::vector<DeltaPoint> delta_sensitivity(const ProtocolParams &params, const std::vector<double> &deltas, double x,
                                          FidelityTarget target) {
    auto p = params;
    p.delta_mode = DeltaMode::kForced;
    auto target_comb = make_target(p, target);
    std::vector<DeltaPoint> out;
    for (double d : deltas) {
        p.forced_delta = d;
        out.push_back({d, comb_fidelity(target_comb, run_analytic(p, x))});
    }
    return out;
}

double success_probability(const ProtocolParams &params, double v_up, DensityModel model) {
    if (!(v_up >= 0)) {
        throw std::invalid_argument("v_up must be >= 0");
    }
    auto p = [&](double x) {
        return model == DensityModel::kExact ? homodyne_density(params, x) : homodyne_density_orthogonal(params, x);
    };
    double extent = outcome_extent(params.m);
    double inside = integrate(p, 0, std::min(v_up, extent));
    double total = inside + (v_up < extent ? integrate(p, v_up, extent) : 0);
    return inside / total;
}

double mean_fidelity(const ProtocolParams &params, double v_up, FidelityTarget target) {
    if (!(v_up > 0)) {
        throw std::invalid_argument("acceptance window must have v_up > 0");
    }
    FidelityModel fm(params, target);
    double num = integrate([&](double x) { return fm.fidelity(x) * fm.density(x); }, 0, v_up);
    double den = integrate([&](double x) { return fm.density(x); }, 0, v_up);
    return num / den;
}

std::vector<SelectionPoint> selection_curve(const ProtocolParams &params, const std::vector<double> &v_ups,
                                            FidelityTarget target) {
    std::vector<SelectionPoint> out;
    for (double v : v_ups) {
        out.push_back({v, success_probability(params, v), mean_fidelity(params, v, target)});
    }
    return out;
}

double window_for_success(const ProtocolParams &params, double p_target) {
    if (!(p_target > 0 && p_target < 1)) {
        throw std::invalid_argument("target probability must lie in (0, 1)");
    }
    auto f = [&](double v) { return success_probability(params, v) - p_target; };
    std::uintmax_t iters = 200;
    auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, outcome_extent(params.m), f(0.0),
                                                      1 - p_target, boost::math::tools::eps_tolerance<double>(45),
                                                      iters);
    return 0.5 * (lo + hi);
}

double misidentify_prob(double sigma2) {
    if (!(sigma2 > 0) || !std::isfinite(sigma2)) {
        throw std::invalid_argument("variance must be positive and finite");
    }
    return std::erfc(std::sqrt(std::numbers::pi) / 2 / std::sqrt(2 * sigma2));
}

}  // namespace kerrgkp
