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

#ifndef KERRGKP_GAUSSIAN_STATE_H
#define KERRGKP_GAUSSIAN_STATE_H

#include "kerrgkp/gauss_comb.h"

namespace kerrgkp {

/// Pure Gaussian state e^{i phase} D(alpha) S(xi) |0>, with
/// S(xi) = exp((xi^* a^2 - xi a^dag^2) / 2) and alpha = (q + i p) / sqrt2.
/// Phases are accumulated exactly so that branches can be interfered.
class GaussianPureState {
   public:
    static GaussianPureState squeezed_vacuum(double r);

    /// Applies exp(-i phi n).
    GaussianPureState rotated(double phi) const;
    /// Applies D(beta) on the left.
    GaussianPureState displaced(cplx beta) const;

    double phase() const {
        return phase_;
    }
    cplx alpha() const {
        return alpha_;
    }
    cplx xi() const {
        return xi_;
    }
    double q_mean() const;
    double p_mean() const;

    cplx wavefunction(double q) const;

    /// The state times `amplitude`, as a comb peak. Needs a q-squeezed xi (real, >= 0).
    Peak as_peak(cplx amplitude) const;

   private:
    GaussianPureState(double phase, cplx alpha, cplx xi) : phase_(phase), alpha_(alpha), xi_(xi) {
    }
    double phase_;
    cplx alpha_;
    cplx xi_;
};

}  // namespace kerrgkp

#endif
