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

#ifndef KERRGKP_GAUSS_COMB_H
#define KERRGKP_GAUSS_COMB_H

#include <complex>
#include <vector>

#include "kerrgkp/fock.h"

namespace kerrgkp {

/// Squeezing level expressed in every convention used by the code.
/// sigma2 is the q variance of the squeezed vacuum, delta2 = kappa2 = 2 sigma2.
struct SqueezeParams {
    double s_db;
    double sigma2;
    double delta2;
    double kappa2;

    static SqueezeParams from_db(double s_db);
    /// Squeezing parameter r with e^{-2r}/2 = sigma2.
    double r() const;
};

SqueezeParams squeeze_convert(double s_db);
double squeeze_db(double sigma2);

/// One Gaussian peak: weight * exp(-(q - center)^2 / (2 width2)) * exp(-i phase_slope q).
struct Peak {
    cplx weight;
    double center;
    double width2;
    double phase_slope;
};

/// A superposition of Gaussian peaks, stored without implicit normalization.
class GaussianComb {
   public:
    GaussianComb() = default;
    explicit GaussianComb(std::vector<Peak> peaks);

    const std::vector<Peak> &peaks() const {
        return peaks_;
    }
    bool empty() const {
        return peaks_.empty();
    }

    double norm_squared() const;
    GaussianComb normalized() const;
    GaussianComb scaled(cplx factor) const;
    cplx evaluate(double q) const;

    /// Smallest interval holding every peak out to `sigmas` standard deviations.
    std::pair<double, double> support(double sigmas = 12) const;

   private:
    std::vector<Peak> peaks_;
};

/// <a|b> for unnormalized combs, in closed form.
cplx overlap(const GaussianComb &a, const GaussianComb &b);
cplx overlap(const Peak &a, const Peak &b);

/// |<a|b>|^2 / (<a|a><b|b>).
double comb_fidelity(const GaussianComb &a, const GaussianComb &b);

enum class Logical { kZero, kOne };

/// 2m+1 peaks at 2k sqrt(pi) (kZero) or (2k+1) sqrt(pi) (kOne), k = -m..m, under
/// the envelope exp(-kappa2 q^2 / 2). Normalized.
GaussianComb gkp_finite(int m, const SqueezeParams &sp, Logical logical = Logical::kZero);

/// Same envelope with the peak sum continued until its weights drop below
/// `cutoff` relative to the centre. Normalized.
GaussianComb gkp_ideal(const SqueezeParams &sp, Logical logical = Logical::kZero, double cutoff = 1e-12);

/// Hermite order attached to ancilla index t in the heralded weights.
enum class HermiteOrder {
    kEven,     // order 2t, the Fock index of the ancilla component
    kLiteral,  // order t; only for negative-control checks
};

/// How the residual displacement error shows up across peaks.
enum class SlopePattern {
    kGeometric,  // slope delta (1 - k^2) plus the matching per-peak phase
    kPrinted,    // slope +-delta on even k, zero on odd k, no extra phase
};

struct CombModel {
    SlopePattern slope_pattern = SlopePattern::kGeometric;
    HermiteOrder hermite_order = HermiteOrder::kEven;
};

/// Heralded signal state for outcome x and residual delta, normalized.
GaussianComb generated_comb(int m, const SqueezeParams &sp, double x, double delta, CombModel model = {});

/// Per-peak phase slope for offset k = t - m.
double peak_slope(int k, double delta, SlopePattern pattern);
/// Extra per-peak phase for offset k = t - m.
double peak_phase(int k, double delta, SlopePattern pattern);

/// H_n(x) / H_n(0) for even n.
double hermite_ratio(int n, double x);

/// Fock amplitudes <n|comb> for n < dim, by adaptive quadrature.
FockVector to_fock(const GaussianComb &comb, int dim);

}  // namespace kerrgkp

#endif
