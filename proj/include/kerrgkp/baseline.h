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

#ifndef KERRGKP_BASELINE_H
#define KERRGKP_BASELINE_H

#include <stdexcept>
#include <vector>

#include "kerrgkp/fock.h"

namespace kerrgkp {

/// Weight convention for the coherent-state ancilla in the conventional scheme.
enum class EtaWeighting {
    kPrinted,   // alpha^2 H_n(x) / (2^{n/2} n!)
    kPhysical,  // alpha^n H_n(x) / (2^{n/2} n!)
};

/// Conventional cross-Kerr scheme: coherent ancilla, homodyne outcome x, phase slope tau.
struct BaselineParams {
    double tau = 2;
    double alpha = 2;
    double x = 0;
    int n_max = 0;  // 0 picks a cutoff from the Poisson tail of alpha^2
    EtaWeighting weighting = EtaWeighting::kPrinted;

    int cutoff() const;
};

/// eta_n = rho_n exp((alpha^2 + x^2) / 2), evaluated in log space.
double eta_n(const BaselineParams &params, int n);

/// Uniform grid lo, lo + step, ..., up to hi inclusive.
std::vector<double> uniform_grid(double lo, double hi, double step);

/// Wavefunctions normalized on their own grid (trapezoid sum of |.|^2 dq = 1).
std::vector<cplx> conventional_wavefn_q(const BaselineParams &params, const std::vector<double> &q_grid);
std::vector<cplx> conventional_wavefn_p(const BaselineParams &params, const std::vector<double> &p_grid);

/// L2 distance between the Fourier transform of the sampled q wavefunction and
/// the p wavefunction, both on the given grids.
double fourier_consistency(const BaselineParams &params, const std::vector<double> &q_grid,
                           const std::vector<double> &p_grid);

class InsufficientPeaksError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// Median spacing of local maxima above 10% of the global maximum.
double peak_spacing(const std::vector<double> &profile, const std::vector<double> &grid);

}  // namespace kerrgkp

#endif
