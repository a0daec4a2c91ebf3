// Copyright 2026 The nmlab Authors
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


// Test-only helpers: seeded random states and independent reference
// computations that do not go through the library's code paths.

#ifndef NMLAB_TESTS_SUPPORT_HPP
#define NMLAB_TESTS_SUPPORT_HPP

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "nmlab/qcore.hpp"

namespace nmlab::testing {

using cd = std::complex<double>;

inline Eigen::MatrixXcd ginibre(std::mt19937_64 &rng, int dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::MatrixXcd g(dim, dim);
    for (int r = 0; r < dim; ++r) {
        for (int c = 0; c < dim; ++c) {
            g(r, c) = cd(n(rng), n(rng));
        }
    }
    return g;
}

/// Random full-rank mixed state (Hilbert-Schmidt measure).
inline qcore::DensityMatrix random_state(std::mt19937_64 &rng, int dim) {
    const Eigen::MatrixXcd g = ginibre(rng, dim);
    Eigen::MatrixXcd rho = g * g.adjoint();
    rho /= rho.trace().real();
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return qcore::DensityMatrix(rho);
}

inline Eigen::VectorXcd random_ket(std::mt19937_64 &rng, int dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    Eigen::VectorXcd v(dim);
    for (int k = 0; k < dim; ++k) {
        v(k) = cd(n(rng), n(rng));
    }
    return v.normalized();
}

/// Uniform point on the probability simplex of size 4.
inline std::array<double, 4> random_simplex(std::mt19937_64 &rng) {
    std::exponential_distribution<double> e(1.0);
    std::array<double, 4> q{};
    double s = 0;
    for (double &x : q) {
        x = e(rng);
        s += x;
    }
    for (double &x : q) {
        x /= s;
    }
    return q;
}

/// Pauli channel from weights via explicit Kraus conjugations, independent of
/// the Bloch-scaling implementation.
inline Eigen::MatrixXcd kraus_sum(const std::array<double, 4> &q, const Eigen::MatrixXcd &rho) {
    const std::array<Mat2, 4> p{qcore::pauli_i(), qcore::pauli_x(), qcore::pauli_y(), qcore::pauli_z()};
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(2, 2);
    for (size_t k = 0; k < 4; ++k) {
        out += q[k] * p[k] * rho * p[k].adjoint();
    }
    return out;
}

/// Concurrence of a pure two-qubit state: 2 |a d - b c|.
inline double pure_concurrence(const Eigen::VectorXcd &psi) {
    return 2.0 * std::abs(psi(0) * psi(3) - psi(1) * psi(2));
}

/// Binary entropy through natural logarithms.
inline double entropy_bits(double x) {
    auto term = [](double p) { return p > 0 ? -p * std::log(p) : 0.0; };
    return (term(x) + term(1.0 - x)) / std::numbers::ln2;
}

/// Golden-section maximization of f on [a, b].
inline double golden_max(const std::function<double(double)> &f, double a, double b, double tol = 1e-13) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    while (b - a > tol) {
        if (f(c) > f(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - g * (b - a);
        d = a + g * (b - a);
    }
    return f(0.5 * (a + b));
}

/// Total revival amplitude of f on [t0, t1]: the sum over rises of
/// (local max - preceding local min). Extrema are bracketed by a coarse scan
/// and refined by golden-section search.
inline double revival_sum(const std::function<double(double)> &f, double t0, double t1, int scan = 20000) {
    const double h = (t1 - t0) / scan;
    std::vector<double> v(static_cast<size_t>(scan) + 1);
    for (int k = 0; k <= scan; ++k) {
        v[static_cast<size_t>(k)] = f(t0 + h * k);
    }
    auto neg = [&](double t) { return -f(t); };
    double total = 0;
    double last_min = v[0];
    for (int k = 1; k < scan; ++k) {
        const size_t i = static_cast<size_t>(k);
        const double t = t0 + h * k;
        if (v[i] <= v[i - 1] && v[i] <= v[i + 1]) {
            last_min = -golden_max(neg, t - h, t + h);
        } else if (v[i] >= v[i - 1] && v[i] >= v[i + 1]) {
            total += std::max(0.0, golden_max(f, t - h, t + h) - last_min);
        }
    }
    return total;
}

}  // namespace nmlab::testing

#endif
