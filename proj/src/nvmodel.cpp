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


#include "nmlab/nvmodel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "nmlab/spectra.hpp"

namespace nmlab::nv {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

struct Branch {
    double weight;
    double rate;  // coherence rho_10 picks up exp(i rate t)
};

std::array<Branch, 2> nuclear_branches(const NVParams &params, const NuclearPrep &prep) {
    const double c = std::cos(0.5 * prep.phi);
    const double s = std::sin(0.5 * prep.phi);
    return {{{c * c, 0.5 * params.hyperfine}, {s * s, -0.5 * params.hyperfine}}};
}

Mat2 free_evolution(double rate, double t) {
    Mat2 v = Mat2::Identity();
    v(1, 1) = std::exp(kI * (rate * t));
    return v;
}

Mat2 conjugate(const Mat2 &u, const Mat2 &rho) { return u * rho * u.adjoint(); }

}  // namespace

EnvelopeShape envelope_shape_from_string(std::string_view s) {
    if (s == "gaussian") {
        return EnvelopeShape::Gaussian;
    }
    if (s == "exponential") {
        return EnvelopeShape::Exponential;
    }
    throw std::invalid_argument("envelope shape must be 'gaussian' or 'exponential'");
}

std::string_view to_string(EnvelopeShape s) { return s == EnvelopeShape::Gaussian ? "gaussian" : "exponential"; }

void NVParams::validate() const {
    if (!(hyperfine > 0.0)) {
        throw std::invalid_argument("NVParams: hyperfine coupling must be > 0");
    }
    if (!(envelope_T > 0.0)) {
        throw std::invalid_argument("NVParams: envelope_T must be > 0");
    }
}

double NVParams::envelope(double t) const {
    if (std::isinf(envelope_T)) {
        return 1.0;
    }
    const double u = t / envelope_T;
    return envelope_shape == EnvelopeShape::Gaussian ? std::exp(-u * u) : std::exp(-u);
}

void NuclearPrep::validate() const {
    if (!(phi >= 0.0 && phi <= kPi)) {
        throw std::invalid_argument("NuclearPrep: phi must be in [0, pi]");
    }
}

cd nv_kappa(const NVParams &params, const NuclearPrep &prep, double t) {
    params.validate();
    prep.validate();
    if (t < 0.0) {
        throw std::invalid_argument("nv_kappa: t must be >= 0");
    }
    cd acc = 0;
    for (const Branch &b : nuclear_branches(params, prep)) {
        acc += b.weight * std::exp(kI * (b.rate * t));
    }
    return params.envelope(t) * acc;
}

double bloch_magnitude(const NVParams &params, const NuclearPrep &prep, double t) {
    return std::abs(nv_kappa(params, prep, t));
}

std::vector<PhiNonMarkovianity> nm_measure_phi(const NVParams &params, std::span<const double> phi_grid,
                                               std::span<const double> t_grid) {
    if (phi_grid.empty() || t_grid.empty()) {
        throw std::invalid_argument("nm_measure_phi: grids must be nonempty");
    }
    std::vector<PhiNonMarkovianity> out;
    out.reserve(phi_grid.size());
    std::vector<double> r(t_grid.size());
    for (double phi : phi_grid) {
        const NuclearPrep prep{phi};
        for (size_t k = 0; k < t_grid.size(); ++k) {
            r[k] = bloch_magnitude(params, prep, t_grid[k]);
        }
        out.push_back({phi, spectra::blp_measure(r)});
    }
    return out;
}

std::string_view to_string(Gate g) {
    switch (g) {
        case Gate::U1:
            return "U1";
        case Gate::U2:
            return "U2";
        case Gate::U3:
            return "U3";
        case Gate::U4:
            return "U4";
    }
    return "?";
}

bool is_constant(Gate g) { return g == Gate::U1 || g == Gate::U2; }

Mat2 rotation(Axis axis, double angle) {
    const Mat2 sigma = axis == Axis::X ? qcore::pauli_x() : axis == Axis::Y ? qcore::pauli_y() : qcore::pauli_z();
    return std::cos(0.5 * angle) * Mat2::Identity() - kI * std::sin(0.5 * angle) * sigma;
}

Mat2 rdja_gate(Gate g) {
    double theta = 0;
    switch (g) {
        case Gate::U1:
            theta = 0;
            break;
        case Gate::U2:
            theta = 2 * kPi;
            break;
        case Gate::U3:
            theta = 3 * kPi;
            break;
        case Gate::U4:
            theta = kPi;
            break;
    }
    // Written left to right as (-pi/2)_x (theta)_y (-pi/2)_x; the product is
    // the same matrix product.
    return rotation(Axis::X, -kPi / 2) * rotation(Axis::Y, theta) * rotation(Axis::X, -kPi / 2);
}

double rdja_p0_noiseless(Gate g) {
    Eigen::Vector2cd psi(1, 0);
    psi = rotation(Axis::X, kPi / 2) * rdja_gate(g) * rotation(Axis::X, kPi / 2) * psi;
    return std::norm(psi(0));
}

void RDJAConfig::validate() const {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("RDJAConfig: t must be >= 0");
    }
    if (!(tau >= 0.0)) {
        throw std::invalid_argument("RDJAConfig: tau must be >= 0");
    }
}

double rdja_p0(const NVParams &params, const NuclearPrep &prep, const RDJAConfig &cfg) {
    params.validate();
    prep.validate();
    cfg.validate();
    Mat2 rho0 = Mat2::Zero();
    rho0(0, 0) = 1.0;
    const Mat2 after_gate = conjugate(rdja_gate(cfg.gate) * rotation(Axis::X, kPi / 2), rho0);

    // The nuclear spin is static during the sequence, so each population
    // branch evolves unitarily and the echo acts branch by branch.
    const Mat2 echo = rotation(Axis::Y, kPi);
    Mat2 rho = Mat2::Zero();
    for (const Branch &b : nuclear_branches(params, prep)) {
        Mat2 u = free_evolution(b.rate, cfg.t);
        if (cfg.dd_pulse) {
            u = free_evolution(b.rate, cfg.tau) * echo * u;
        }
        rho += b.weight * conjugate(u, after_gate);
    }
    const double env = params.envelope(cfg.dd_pulse ? cfg.t + cfg.tau : cfg.t);
    rho(0, 1) *= env;
    rho(1, 0) *= env;

    const Mat2 out = conjugate(rotation(Axis::X, kPi / 2), rho);
    return std::clamp(out(0, 0).real(), 0.0, 1.0);
}

cd rdja_kappa_eff(const NVParams &params, const NuclearPrep &prep, double t, double tau) {
    params.validate();
    prep.validate();
    cd acc = 0;
    for (const Branch &b : nuclear_branches(params, prep)) {
        acc += b.weight * std::exp(kI * (b.rate * (t - tau)));
    }
    return params.envelope(t + tau) * acc;
}

std::vector<RDJAPoint> rdja_success(const NVParams &params, const NuclearPrep &prep, double t,
                                    std::span<const double> tau_grid) {
    if (tau_grid.empty()) {
        throw std::invalid_argument("rdja_success: tau grid must be nonempty");
    }
    std::vector<RDJAPoint> out;
    out.reserve(tau_grid.size());
    for (double tau : tau_grid) {
        const double constant = rdja_p0(params, prep, {t, tau, Gate::U1, true});
        const double balanced = rdja_p0(params, prep, {t, tau, Gate::U3, true});
        out.push_back({tau, constant - balanced});
    }
    return out;
}

double rdja_contrast_no_dd(const NVParams &params, const NuclearPrep &prep, double t) {
    const double constant = rdja_p0(params, prep, {t, 0.0, Gate::U1, false});
    const double balanced = rdja_p0(params, prep, {t, 0.0, Gate::U3, false});
    return std::abs(constant - balanced);
}

}  // namespace nmlab::nv
