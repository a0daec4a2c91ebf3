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


#ifndef NMLAB_SPECTRA_HPP
#define NMLAB_SPECTRA_HPP

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "nmlab/qcore.hpp"

namespace nmlab::spectra {

/// Phase factor used in the spectral integral: exp(i w dn t) for Angular,
/// exp(i 2 pi dn w t) for TwoPi. Only the product dn * t matters physically.
enum class FrequencyConvention { Angular, TwoPi };

/// Multiplier c such that the integrand phase is c * omega * t.
double phase_rate(double delta_n, FrequencyConvention conv);

/// Uniform grid of `n` points from `start` to `stop` inclusive.
std::vector<double> linspace(double start, double stop, int n);

/// Engineered environment: |g(w)|^2 and theta(w) on a uniform angular grid.
struct SpectralProfile {
    std::vector<double> omega;
    std::vector<double> density;
    std::vector<double> phase;

    size_t size() const { return omega.size(); }
    double step() const;
    /// Trapezoidal integral of the density.
    double norm() const;

    /// Throws std::invalid_argument unless sizes match, the grid is strictly
    /// increasing and uniform, density >= 0 and integrates to 1 within `norm_tol`.
    void validate(double norm_tol = 1e-8) const;
    /// Rescales the density to unit trapezoidal integral.
    void normalize();
};

/// Two Gaussian peaks of width sigma separated by delta_omega with heights
/// A1 = 1/(1+A_theta) (lower peak) and A2 = A_theta/(1+A_theta) (upper peak).
struct DoubleGaussianSpec {
    double a_theta = 0;
    double sigma = 1;
    double delta_omega = 0;
    double delta_n = 1;

    void validate() const;
    double weight_low() const { return 1.0 / (1.0 + a_theta); }
    double weight_high() const { return a_theta / (1.0 + a_theta); }
};

/// kappa(t) sampled on a uniform time grid.
struct DecoherenceTrajectory {
    std::vector<double> t;
    std::vector<std::complex<double>> kappa;

    size_t size() const { return t.size(); }
    std::vector<double> magnitudes() const;
};

inline constexpr int kDefaultQuadraturePoints = 4096;
inline constexpr double kDefaultHalfWidthSigmas = 6.0;

SpectralProfile gaussian_profile(double center, double sigma, int n_points = kDefaultQuadraturePoints,
                                 double half_width_sigmas = kDefaultHalfWidthSigmas);

/// Peaks at center -/+ delta_omega/2, theta = 0.
SpectralProfile double_gaussian_profile(const DoubleGaussianSpec &spec, double center = 0.0,
                                        int n_points = kDefaultQuadraturePoints,
                                        double half_width_sigmas = kDefaultHalfWidthSigmas);

/// Closed-form |kappa(t)| of the double-Gaussian spectrum.
double kappa_double_gaussian_mag(const DoubleGaussianSpec &spec, double t);

/// Closed-form complex kappa(t) of `double_gaussian_profile(spec, center)`
/// in the angular convention. Its magnitude is `kappa_double_gaussian_mag`.
std::complex<double> kappa_double_gaussian(const DoubleGaussianSpec &spec, double t, double center = 0.0);

/// Trapezoidal quadrature of  sum_w |g(w)|^2 e^{i theta(w)} e^{i c w t}.
std::complex<double> kappa_numeric(const SpectralProfile &profile, double delta_n, double t,
                                   FrequencyConvention conv = FrequencyConvention::Angular);

DecoherenceTrajectory kappa_trajectory(const SpectralProfile &profile, double delta_n, std::span<const double> t_grid,
                                       FrequencyConvention conv = FrequencyConvention::Angular);

/// Pure dephasing in the H/V basis: populations fixed, rho_HV -> conj(kappa) rho_HV,
/// rho_VH -> kappa rho_VH.
class DephasingMap {
   public:
    explicit DephasingMap(std::complex<double> kappa) : kappa_(kappa) {}

    std::complex<double> kappa() const { return kappa_; }
    qcore::DensityMatrix apply(const qcore::DensityMatrix &rho) const;
    /// Dephases the first qubit of a two-qubit state.
    qcore::DensityMatrix apply_one_sided(const qcore::DensityMatrix &rho) const;
    /// Equivalent Pauli channel; only defined for real kappa.
    qcore::PauliChannel as_pauli_channel() const;

   private:
    std::complex<double> kappa_;
};

inline constexpr double kKappaBoundTol = 1e-9;

/// Throws std::invalid_argument when |kappa| > 1 + 1e-9.
DephasingMap dephasing_channel(std::complex<double> kappa);

/// Discrete BLP functional: sum of increases of |kappa| between samples.
double blp_measure(const DecoherenceTrajectory &traj);
double blp_measure(std::span<const double> magnitudes);

struct SynthesisResult {
    SpectralProfile profile;
    double round_trip_error = 0;
    /// |kappa| at the last input sample.
    double tail_magnitude = 0;
    /// False when the round trip misses `tolerance` or the input has not decayed.
    bool realizable = true;
};

inline constexpr double kSynthesisTolerance = 1e-6;

/// Inverts kappa(t), t >= 0, onto the conjugate frequency grid.
///
/// kappa(-t) is taken as conj(kappa(t)), so G(w) is real and negative lobes
/// show up as phase = pi. The grid has 2N-1 points with step 2 pi / (c (2N-1) dt).
SynthesisResult synthesize_spectrum(const DecoherenceTrajectory &traj, double delta_n,
                                    FrequencyConvention conv = FrequencyConvention::Angular,
                                    double tolerance = kSynthesisTolerance);

// CSV interchange. Profiles use columns (omega, density, phase); trajectories
// use (t, re_kappa, im_kappa). Header row required.

std::string profile_to_csv(const SpectralProfile &profile);
std::string trajectory_to_csv(const DecoherenceTrajectory &traj);
SpectralProfile profile_from_csv(const std::string &text);
DecoherenceTrajectory trajectory_from_csv(const std::string &text);

}  // namespace nmlab::spectra

#endif
