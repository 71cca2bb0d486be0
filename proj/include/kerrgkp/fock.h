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

#ifndef KERRGKP_FOCK_H
#define KERRGKP_FOCK_H

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace kerrgkp {

using cplx = std::complex<double>;

/// Largest Hermite order accepted by the position-amplitude evaluators.
inline constexpr int kMaxHermiteOrder = 200;

/// Default bound on the probability mass held by the last few Fock entries.
inline constexpr double kTailTolerance = 1e-6;

class UnsupportedOrderError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a truncated Fock space cannot hold a state. Carries a suggested dimension.
class TruncationError : public std::runtime_error {
   public:
    TruncationError(const std::string &what, int suggested_dim)
        : std::runtime_error(what), suggested_dim(suggested_dim) {
    }
    int suggested_dim;
};

/// Position-space amplitude <x|n> with hbar = 1 (vacuum variance 1/2).
double quad_amplitude(int n, double x);

/// All amplitudes <x|k> for k = 0..n_max.
std::vector<double> quad_amplitudes(int n_max, double x);

enum class Mode { kA, kB };

/// Single-mode state in a truncated Fock basis.
class FockVector {
   public:
    FockVector() = default;
    explicit FockVector(Eigen::VectorXcd amps);

    static FockVector basis(int dim, int n);

    int dim() const {
        return static_cast<int>(amps_.size());
    }
    const Eigen::VectorXcd &amps() const {
        return amps_;
    }
    cplx operator[](int n) const {
        return amps_[n];
    }

    double norm_squared() const;
    FockVector normalized() const;

    /// Probability mass in the last `count` basis entries.
    double tail_mass(int count = 4) const;

   private:
    Eigen::VectorXcd amps_;
};

/// Two-mode state; rows index mode A, columns index mode B.
class JointFockVector {
   public:
    JointFockVector() = default;
    explicit JointFockVector(Eigen::MatrixXcd amps);

    static JointFockVector product(const FockVector &a, const FockVector &b);

    int dim_a() const {
        return static_cast<int>(amps_.rows());
    }
    int dim_b() const {
        return static_cast<int>(amps_.cols());
    }
    const Eigen::MatrixXcd &amps() const {
        return amps_;
    }
    double norm_squared() const;

    /// Schmidt coefficients in decreasing order (sum of squares = norm).
    std::vector<double> schmidt_coefficients() const;

   private:
    Eigen::MatrixXcd amps_;
};

/// Squeezed vacuum S(r)|0> squeezed in q (q variance e^{-2r}/2).
FockVector squeezed_vacuum(double r, int dim);

/// Displacement D(alpha) = exp(alpha a^dag - alpha^* a) in the truncated space.
FockVector displace(const FockVector &state, cplx alpha);
JointFockVector displace(const JointFockVector &state, Mode mode, cplx alpha);

/// Cross-Kerr phase exp(-i theta n_a n_b).
JointFockVector cross_kerr(const JointFockVector &state, double theta);

struct HomodyneResult {
    FockVector state;  // unnormalized conditional state of the other mode
    double weight;     // its squared norm, the outcome density
};

/// Projects `mode` of the joint state onto the position eigenstate |x>.
HomodyneResult homodyne_project(const JointFockVector &state, Mode mode, double x);

/// |<a|b>|^2 / (<a|a><b|b>).
double fock_fidelity(const FockVector &a, const FockVector &b);

/// Variance of q for a normalized state.
double q_variance(const FockVector &state);

}  // namespace kerrgkp

#endif
