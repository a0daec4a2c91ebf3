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


#ifndef NMLAB_NVMODEL_HPP
#define NMLAB_NVMODEL_HPP

#include <complex>
#include <limits>
#include <numbers>
#include <span>
#include <string_view>
#include <vector>

#include "nmlab/qcore.hpp"

namespace nmlab::nv {

enum class EnvelopeShape { Gaussian, Exponential };

EnvelopeShape envelope_shape_from_string(std::string_view s);
std::string_view to_string(EnvelopeShape s);

/// Electron-spin dephasing parameters. The nitrogen nucleus is a two-level
/// system with hyperfine coupling `hyperfine`; every other environmental spin
/// is folded into a deterministic envelope env(t). `envelope_T = inf` gives
/// env == 1.
struct NVParams {
    double hyperfine = 2.0 * std::numbers::pi * 2.16;
    double envelope_T = 10.0 / 2.16;
    EnvelopeShape envelope_shape = EnvelopeShape::Gaussian;

    void validate() const;
    double envelope(double t) const;

    static NVParams noiseless(double hyperfine) {
        return {hyperfine, std::numeric_limits<double>::infinity(), EnvelopeShape::Gaussian};
    }
};

/// Nuclear spin rotated by `phi` from the polarized state: populations
/// cos^2(phi/2) and sin^2(phi/2).
struct NuclearPrep {
    double phi = 0;

    void validate() const;
};

std::complex<double> nv_kappa(const NVParams &params, const NuclearPrep &prep, double t);

/// |r(t)| for an equatorial Ramsey state; equals |nv_kappa|.
double bloch_magnitude(const NVParams &params, const NuclearPrep &prep, double t);

struct PhiNonMarkovianity {
    double phi = 0;
    double n_prime = 0;
};

/// BLP functional of r(t) on `t_grid` for each phi.
std::vector<PhiNonMarkovianity> nm_measure_phi(const NVParams &params, std::span<const double> phi_grid,
                                               std::span<const double> t_grid);

// Refined Deutsch-Jozsa protocol.

enum class Gate { U1, U2, U3, U4 };

std::string_view to_string(Gate g);
/// U1 and U2 encode constant functions, U3 and U4 balanced ones.
bool is_constant(Gate g);

enum class Axis { X, Y, Z };

/// exp(-i angle sigma_axis / 2).
Mat2 rotation(Axis axis, double angle);

/// (-pi/2)_x (theta)_y (-pi/2)_x with theta = 0, 2pi, 3pi, pi for U1..U4.
Mat2 rdja_gate(Gate g);

/// P0 of the ideal protocol: |0>, (pi/2)_x, gate, (pi/2)_x, measure.
double rdja_p0_noiseless(Gate g);

struct RDJAConfig {
    double t = 0;
    double tau = 0;
    Gate gate = Gate::U1;
    /// When false the readout happens at `t` with no echo pulse and `tau` is ignored.
    bool dd_pulse = true;

    void validate() const;
};

/// P0 after the gate, free evolution for t, an ideal pi_y echo pulse, free
/// evolution for tau, then the (pi/2)_x readout.
double rdja_p0(const NVParams &params, const NuclearPrep &prep, const RDJAConfig &cfg);

/// Decoherence factor seen by the readout: env(t+tau) [c^2 e^{iA(t-tau)/2} + s^2 e^{-iA(t-tau)/2}].
std::complex<double> rdja_kappa_eff(const NVParams &params, const NuclearPrep &prep, double t, double tau);

struct RDJAPoint {
    double tau = 0;
    double contrast = 0;
};

/// Contrast P0(U1) - P0(U3) along the tau sweep.
std::vector<RDJAPoint> rdja_success(const NVParams &params, const NuclearPrep &prep, double t,
                                    std::span<const double> tau_grid);

/// |P0(U1) - P0(U3)| when reading out at `t` without the echo pulse.
double rdja_contrast_no_dd(const NVParams &params, const NuclearPrep &prep, double t);

}  // namespace nmlab::nv

#endif
