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

#ifndef KERRGKP_METRICS_H
#define KERRGKP_METRICS_H

#include <vector>

#include "kerrgkp/protocol.h"

namespace kerrgkp {

enum class FidelityTarget {
    kIdeal,   // unbounded peak sum under the Gaussian envelope
    kFinite,  // the same 2m+1 peaks as the heralded state
};

enum class DensityModel {
    kExact,       // includes branch overlaps, integrates to one
    kOrthogonal,  // drops branch overlaps
};

struct RunRecord {
    double x;
    bool accepted;  // |x| <= v_up
    GaussianComb state;
    double density;
    double fidelity;
};

/// Fidelity of the heralded state against a fixed target, plus outcome densities.
class FidelityModel {
   public:
    explicit FidelityModel(ProtocolParams params, FidelityTarget target = FidelityTarget::kIdeal);

    const ProtocolParams &params() const {
        return params_;
    }
    const GaussianComb &target() const {
        return target_;
    }

    double fidelity(double x) const;
    double density(double x, DensityModel model = DensityModel::kExact) const;
    RunRecord run(double x) const;

   private:
    ProtocolParams params_;
    GaussianComb target_;
};

struct FidelityPoint {
    double x;
    double fidelity;
    double p_exact;
    double p_orthogonal;
};

std::vector<FidelityPoint> fidelity_curve(const ProtocolParams &params, const std::vector<double> &xs,
                                          FidelityTarget target = FidelityTarget::kIdeal);

struct DeltaPoint {
    double delta;
    double fidelity;
};

/// Fidelity at outcome x while sweeping a forced residual delta.
std::vector<DeltaPoint> delta_sensitivity(const ProtocolParams &params, const std::vector<double> &deltas,
                                          double x = 0, FidelityTarget target = FidelityTarget::kIdeal);

/// Probability that |x| <= v_up.
double success_probability(const ProtocolParams &params, double v_up, DensityModel model = DensityModel::kExact);

/// Probability-weighted mean fidelity over |x| <= v_up.
double mean_fidelity(const ProtocolParams &params, double v_up, FidelityTarget target = FidelityTarget::kIdeal);

struct SelectionPoint {
    double v_up;
    double p_success;
    double mean_fidelity;
};

std::vector<SelectionPoint> selection_curve(const ProtocolParams &params, const std::vector<double> &v_ups,
                                            FidelityTarget target = FidelityTarget::kIdeal);

/// Window half-width whose success probability equals `p_target`.
double window_for_success(const ProtocolParams &params, double p_target);

/// Probability that a Gaussian shift of variance sigma2 exceeds sqrt(pi)/2.
double misidentify_prob(double sigma2);

}  // namespace kerrgkp

#endif
