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

#include "kerrgkp/fock.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <unsupported/Eigen/MatrixFunctions>

namespace kerrgkp {

namespace {

// Missing probability mass allowed when truncating a squeezed vacuum.
constexpr double kSqueezeTailTolerance = 1e-8;

void check_order(int n) {
    if (n < 0 || n > kMaxHermiteOrder) {
        throw UnsupportedOrderError(
            "Hermite order " + std::to_string(n) + " outside [0, " + std::to_string(kMaxHermiteOrder) + "]");
    }
}

void check_finite(const auto &m) {
    if (!m.allFinite()) {
        throw std::invalid_argument("Fock amplitudes must be finite");
    }
}

Eigen::MatrixXcd displacement_matrix(int dim, cplx alpha) {
    Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; n++) {
        double s = std::sqrt(static_cast<double>(n));
        gen(n, n - 1) = alpha * s;           // alpha a^dag
        gen(n - 1, n) = -std::conj(alpha) * s;  // -alpha^* a
    }
    return gen.exp();
}

int suggested_displaced_dim(int dim, cplx alpha) {
    double a = std::abs(alpha);
    return dim + static_cast<int>(std::ceil(a * a + 8 * a)) + 8;
}

}  // namespace

double quad_amplitude(int n, double x) {
    check_order(n);
    return quad_amplitudes(n, x)[n];
}

std::vector<double> quad_amplitudes(int n_max, double x) {
    check_order(n_max);
    std::vector<double> psi(n_max + 1);
    psi[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
    if (n_max >= 1) {
        psi[1] = std::numbers::sqrt2 * x * psi[0];
    }
    for (int n = 1; n < n_max; n++) {
        psi[n + 1] = std::sqrt(2.0 / (n + 1)) * x * psi[n] - std::sqrt(static_cast<double>(n) / (n + 1)) * psi[n - 1];
    }
    return psi;
}

FockVector::FockVector(Eigen::VectorXcd amps) : amps_(std::move(amps)) {
    if (amps_.size() == 0) {
        throw std::invalid_argument("FockVector needs dim >= 1");
    }
    check_finite(amps_);
}

FockVector FockVector::basis(int dim, int n) {
    if (n < 0 || n >= dim) {
        throw std::invalid_argument("basis index outside truncation");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v[n] = 1;
    return FockVector(std::move(v));
}

double FockVector::norm_squared() const {
    return amps_.squaredNorm();
}

FockVector FockVector::normalized() const {
    double n = amps_.norm();
    if (n == 0) {
        throw std::domain_error("cannot normalize a zero vector");
    }
    return FockVector(amps_ / n);
}

double FockVector::tail_mass(int count) const {
    count = std::min(count, dim());
    return amps_.tail(count).squaredNorm();
}

JointFockVector::JointFockVector(Eigen::MatrixXcd amps) : amps_(std::move(amps)) {
    if (amps_.size() == 0) {
        throw std::invalid_argument("JointFockVector needs dims >= 1");
    }
    check_finite(amps_);
}

JointFockVector JointFockVector::product(const FockVector &a, const FockVector &b) {
    return JointFockVector(a.amps() * b.amps().transpose());
}

double JointFockVector::norm_squared() const {
    return amps_.squaredNorm();
}

std::vector<double> JointFockVector::schmidt_coefficients() const {
    Eigen::BDCSVD<Eigen::MatrixXcd> svd(amps_);
    auto s = svd.singularValues();
    return {s.data(), s.data() + s.size()};
}

FockVector squeezed_vacuum(double r, int dim) {
    if (!std::isfinite(r) || r < 0) {
        throw std::invalid_argument("squeezing parameter must be finite and >= 0");
    }
    if (dim < 1) {
        throw std::invalid_argument("dim must be >= 1");
    }
    double t = std::tanh(r);
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    double c = 1 / std::sqrt(std::cosh(r));
    double missing = 0;
    double cumulative = 0;
    int needed_dim = -1;
    // Walk the even amplitudes past the truncation to measure the mass left out.
    for (int k = 0; k < 100000000; k++) {
        int n = 2 * k;
        cumulative += c * c;
        if (n < dim) {
            v[n] = c;
        } else {
            missing += c * c;
        }
        if (needed_dim < 0 && 1 - cumulative <= kSqueezeTailTolerance) {
            needed_dim = n + 1;
        }
        if (n >= dim && needed_dim >= 0 && c * c < 1e-30) {
            break;
        }
        c *= -t * std::sqrt((2.0 * k + 1) / (2.0 * k + 2));
    }
    if (missing > kSqueezeTailTolerance) {
        throw TruncationError("squeezed vacuum with r=" + std::to_string(r) + " loses mass " +
                                  std::to_string(missing) + " at dim " + std::to_string(dim),
                              needed_dim);
    }
    return FockVector(std::move(v));
}

FockVector displace(const FockVector &state, cplx alpha) {
    FockVector out(displacement_matrix(state.dim(), alpha) * state.amps());
    if (out.tail_mass() > kTailTolerance * out.norm_squared()) {
        throw TruncationError("displaced state leaks past dim " + std::to_string(state.dim()),
                              suggested_displaced_dim(state.dim(), alpha));
    }
    return out;
}

JointFockVector displace(const JointFockVector &state, Mode mode, cplx alpha) {
    Eigen::MatrixXcd m;
    int dim;
    double tail;
    if (mode == Mode::kA) {
        dim = state.dim_a();
        m = displacement_matrix(dim, alpha) * state.amps();
        tail = m.bottomRows(std::min(4, dim)).squaredNorm();
    } else {
        dim = state.dim_b();
        m = state.amps() * displacement_matrix(dim, alpha).transpose();
        tail = m.rightCols(std::min(4, dim)).squaredNorm();
    }
    if (tail > kTailTolerance * m.squaredNorm()) {
        throw TruncationError("displaced mode leaks past dim " + std::to_string(dim),
                              suggested_displaced_dim(dim, alpha));
    }
    return JointFockVector(std::move(m));
}

JointFockVector cross_kerr(const JointFockVector &state, double theta) {
    Eigen::MatrixXcd m = state.amps();
    for (int b = 0; b < m.cols(); b++) {
        for (int a = 0; a < m.rows(); a++) {
            m(a, b) *= std::polar(1.0, -theta * a * b);
        }
    }
    return JointFockVector(std::move(m));
}

HomodyneResult homodyne_project(const JointFockVector &state, Mode mode, double x) {
    const auto &m = state.amps();
    int dim = mode == Mode::kA ? state.dim_a() : state.dim_b();
    auto psi = quad_amplitudes(dim - 1, x);
    Eigen::Map<const Eigen::VectorXd> p(psi.data(), dim);
    Eigen::VectorXcd out;
    if (mode == Mode::kA) {
        out = m.transpose() * p.cast<cplx>();
    } else {
        out = m * p.cast<cplx>();
    }
    double w = out.squaredNorm();
    return {FockVector(std::move(out)), w};
}

double fock_fidelity(const FockVector &a, const FockVector &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("fidelity between states of different dimension");
    }
    double na = a.norm_squared();
    double nb = b.norm_squared();
    if (na == 0 || nb == 0) {
        throw std::domain_error("fidelity with a zero vector");
    }
    return std::norm(a.amps().dot(b.amps())) / (na * nb);
}

double q_variance(const FockVector &state) {
    // Moments of the vector viewed as an element of the untruncated space.
    const auto &v = state.amps();
    int d = state.dim();
    cplx a1 = 0;
    cplx a2 = 0;
    double n_half = 0;
    for (int n = 0; n < d; n++) {
        n_half += std::norm(v[n]) * (n + 0.5);
        if (n + 1 < d) {
            a1 += std::conj(v[n]) * v[n + 1] * std::sqrt(n + 1.0);
        }
        if (n + 2 < d) {
            a2 += std::conj(v[n]) * v[n + 2] * std::sqrt((n + 1.0) * (n + 2.0));
        }
    }
    double norm = v.squaredNorm();
    double q1 = std::numbers::sqrt2 * a1.real() / norm;
    double q2 = (n_half + a2.real()) / norm;
    return q2 - q1 * q1;
}

}  // namespace kerrgkp
