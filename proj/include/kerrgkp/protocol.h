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

#ifndef KERRGKP_PROTOCOL_H
#define KERRGKP_PROTOCOL_H

#include <optional>
#include <vector>

#include "kerrgkp/fock.h"
#include "kerrgkp/gauss_comb.h"

namespace kerrgkp {

class GeometryError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Ancilla superposition N sum_t c_t |2t>, t = 0..2m.
struct AncillaSpec {
    int m;
    double norm;                // N
    std::vector<double> coeffs;  // c_t, alternating in sign

    /// N c_t.
    double amplitude(int t) const {
        return norm * coeffs[t];
    }
};

/// c_t = exp(-2 pi kappa2 (t-m)^2) sqrt(2^{2t} (2t)!) / H_{2t}(0), evaluated in log space.
AncillaSpec ancilla_coefficients(int m, double kappa2);

/// Residual displacement beta (1 - sqrt(1 - (gamma / (m beta))^2)).
double delta_error(double beta, double gamma, int m);

/// Smallest beta >= beta_min that is a multiple of 2 sqrt(pi). At such radii the
/// branch phases picked up on the displacement circle are multiples of 2 pi.
double phase_matched_beta(double beta_min);

enum class DeltaMode {
    kFromBeta,  // residual from the displacement geometry
    kForced,    // residual pinned to `forced_delta`
};

struct ProtocolParams {
    SqueezeParams squeeze = SqueezeParams::from_db(10);
    int m = 2;
    double beta = 0;   // radius of the displacement circle, |D1|
    double gamma = 0;  // nominal q offset of the outermost branch, 2 m sqrt(pi) when set by default
    std::optional<double> theta;  // rotation per ancilla step; derived from beta and gamma when unset
    DeltaMode delta_mode = DeltaMode::kForced;
    double forced_delta = 0;
    double v_up = 0.16;  // acceptance window |x| <= v_up
    CombModel model;

    /// Defaults used by the figure commands: gamma = 2 m sqrt(pi) and a phase-matched beta.
    static ProtocolParams with_defaults(int m, double s_db, double beta_min = 1e4);

    /// Rotation angle theta applied to the signal per unit of ancilla index t.
    double rotation() const;
    double delta() const;
    /// First displacement, (q, p) = beta (-sin(m theta), -cos(m theta)), as alpha = (q + i p) / sqrt2.
    cplx d1() const;
    /// Second displacement, a pure p shift of beta cos(theta).
    cplx d2() const;
};

/// Heralded signal for outcome x from the peak-sum model. Normalized.
GaussianComb run_analytic(const ProtocolParams &params, double x);

/// Branch-resolved Gaussian propagation: every ancilla component is carried
/// through Kerr, displacement, inverse Kerr and the final shift as an exact
/// Gaussian. Peaks are weighted by N c_t <x|2t>, so the comb is unnormalized
/// and its squared norm is the outcome density p(x).
GaussianComb run_branch_oracle(const ProtocolParams &params, double x);

struct FockOracleResult {
    FockVector state;  // normalized heralded signal
    double density;    // outcome density p(x)
};

struct FockOracleDims {
    int signal = 128;
    int ancilla = 0;  // 0 picks 4m + 1
};

/// Joint state of signal (mode A) and ancilla (mode B) right before the homodyne.
JointFockVector fock_pre_measurement(const ProtocolParams &params, FockOracleDims dims = {});

/// Direct simulation in a truncated two-mode Fock space.
FockOracleResult run_fock_oracle(const ProtocolParams &params, double x, FockOracleDims dims = {});

/// Normalized per-branch peaks (t = 0..2m) for the peak-sum model.
std::vector<Peak> analytic_branches(const ProtocolParams &params);

/// p(x) = sum_{t,t'} v_t v_t' <b_t|b_t'> with v_t = N c_t <x|2t> and unit branches b_t.
double homodyne_density(const ProtocolParams &params, double x);

/// Orthogonal-branch approximation sum_t N^2 c_t^2 |<x|2t>|^2.
double homodyne_density_orthogonal(const ProtocolParams &params, double x);

}  // namespace kerrgkp

#endif
