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


#include "nmlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nmlab/csv.hpp"

namespace nmlab::spectra {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double gaussian_pdf(double x, double mu, double sigma) {
    const double u = (x - mu) / sigma;
    return std::exp(-0.5 * u * u) / (sigma * std::sqrt(kTwoPi));
}

// Grid step, or throws when `grid` is not strictly increasing and uniform.
double uniform_step(std::span<const double> grid, const char *what) {
    if (grid.size() < 2) {
        throw std::invalid_argument(std::string(what) + ": grid needs at least 2 points");
    }
    const double step = (grid.back() - grid.front()) / static_cast<double>(grid.size() - 1);
    if (!(step > 0.0)) {
        throw std::invalid_argument(std::string(what) + ": grid must be strictly increasing");
    }
    for (size_t k = 1; k < grid.size(); ++k) {
        const double d = grid[k] - grid[k - 1];
        if (!(d > 0.0) || std::abs(d - step) > 1e-6 * step) {
            throw std::invalid_argument(std::string(what) + ": grid must be uniform");
        }
    }
    return step;
}

double trapezoid_weight(size_t k, size_t n, double step) { return (k == 0 || k + 1 == n) ? 0.5 * step : step; }

}  // namespace

double phase_rate(double delta_n, FrequencyConvention conv) {
    return conv == FrequencyConvention::TwoPi ? kTwoPi * delta_n : delta_n;
}

std::vector<double> linspace(double start, double stop, int n) {
    if (n < 1) {
        throw std::invalid_argument("linspace: n must be >= 1");
    }
    std::vector<double> out(static_cast<size_t>(n));
    if (n == 1) {
        out[0] = start;
        return out;
    }
    const double step = (stop - start) / (n - 1);
    for (int k = 0; k < n; ++k) {
        out[static_cast<size_t>(k)] = start + step * k;
    }
    out.back() = stop;
    return out;
}

double SpectralProfile::step() const { return uniform_step(omega, "SpectralProfile"); }

double SpectralProfile::norm() const {
    const double h = step();
    double s = 0;
    for (size_t k = 0; k < density.size(); ++k) {
        s += trapezoid_weight(k, density.size(), h) * density[k];
    }
    return s;
}

void SpectralProfile::validate(double norm_tol) const {
    if (density.size() != omega.size() || phase.size() != omega.size()) {
        throw std::invalid_argument("SpectralProfile: omega, density and phase must have equal length");
    }
    uniform_step(omega, "SpectralProfile");
    for (double d : density) {
        if (!(d >= 0.0)) {
            throw std::invalid_argument("SpectralProfile: density must be >= 0");
        }
    }
    if (std::abs(norm() - 1.0) > norm_tol) {
        throw std::invalid_argument("SpectralProfile: density must integrate to 1");
    }
}

void SpectralProfile::normalize() {
    const double n = norm();
    if (!(n > 0.0)) {
        throw std::invalid_argument("SpectralProfile: density has zero integral");
    }
    for (double &d : density) {
        d /= n;
    }
}

void DoubleGaussianSpec::validate() const {
    if (!(a_theta >= 0.0)) {
        throw std::invalid_argument("DoubleGaussianSpec: A_theta must be >= 0");
    }
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("DoubleGaussianSpec: sigma must be > 0");
    }
    if (!(delta_omega >= 0.0)) {
        throw std::invalid_argument("DoubleGaussianSpec: delta_omega must be >= 0");
    }
    if (delta_n == 0.0) {
        throw std::invalid_argument("DoubleGaussianSpec: delta_n must be nonzero");
    }
}

std::vector<double> DecoherenceTrajectory::magnitudes() const {
    std::vector<double> out(kappa.size());
    std::transform(kappa.begin(), kappa.end(), out.begin(), [](cd k) { return std::abs(k); });
    return out;
}

SpectralProfile gaussian_profile(double center, double sigma, int n_points, double half_width_sigmas) {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("gaussian_profile: sigma must be > 0");
    }
    SpectralProfile p;
    p.omega = linspace(center - half_width_sigmas * sigma, center + half_width_sigmas * sigma, n_points);
    p.density.resize(p.omega.size());
    p.phase.assign(p.omega.size(), 0.0);
    for (size_t k = 0; k < p.omega.size(); ++k) {
        p.density[k] = gaussian_pdf(p.omega[k], center, sigma);
    }
    p.normalize();
    return p;
}

SpectralProfile double_gaussian_profile(const DoubleGaussianSpec &spec, double center, int n_points,
                                        double half_width_sigmas) {
    spec.validate();
    const double lo = center - 0.5 * spec.delta_omega;
    const double hi = center + 0.5 * spec.delta_omega;
    SpectralProfile p;
    p.omega = linspace(lo - half_width_sigmas * spec.sigma, hi + half_width_sigmas * spec.sigma, n_points);
    p.density.resize(p.omega.size());
    p.phase.assign(p.omega.size(), 0.0);
    for (size_t k = 0; k < p.omega.size(); ++k) {
        p.density[k] = spec.weight_low() * gaussian_pdf(p.omega[k], lo, spec.sigma) +
                       spec.weight_high() * gaussian_pdf(p.omega[k], hi, spec.sigma);
    }
    p.normalize();
    return p;
}

double kappa_double_gaussian_mag(const DoubleGaussianSpec &spec, double t) {
    spec.validate();
    if (t < 0.0) {
        throw std::invalid_argument("kappa_double_gaussian_mag: t must be >= 0");
    }
    const double x = spec.delta_n * t;
    const double a = spec.a_theta;
    const double envelope = std::exp(-0.5 * spec.sigma * spec.sigma * x * x) / (1.0 + a);
    const double radicand = std::max(0.0, 1.0 + a * a + 2.0 * a * std::cos(spec.delta_omega * x));
    return std::clamp(envelope * std::sqrt(radicand), 0.0, 1.0);
}

cd kappa_double_gaussian(const DoubleGaussianSpec &spec, double t, double center) {
    spec.validate();
    const double x = spec.delta_n * t;
    const double half = 0.5 * spec.delta_omega * x;
    const cd mix = spec.weight_low() * std::exp(-kI * half) + spec.weight_high() * std::exp(kI * half);
    return std::exp(kI * center * x) * std::exp(-0.5 * spec.sigma * spec.sigma * x * x) * mix;
}

cd kappa_numeric(const SpectralProfile &profile, double delta_n, double t, FrequencyConvention conv) {
    const double t_grid[1] = {t};
    return kappa_trajectory(profile, delta_n, t_grid, conv).kappa.front();
}

DecoherenceTrajectory kappa_trajectory(const SpectralProfile &profile, double delta_n, std::span<const double> t_grid,
                                       FrequencyConvention conv) {
    if (profile.density.size() != profile.omega.size() || profile.phase.size() != profile.omega.size()) {
        throw std::invalid_argument("kappa_numeric: omega, density and phase must have equal length");
    }
    const double h = uniform_step(profile.omega, "kappa_numeric");
    const size_t n = profile.omega.size();
    std::vector<cd> amp(n);
    for (size_t k = 0; k < n; ++k) {
        amp[k] = trapezoid_weight(k, n, h) * profile.density[k] * std::exp(kI * profile.phase[k]);
    }
    const double c = phase_rate(delta_n, conv);
    DecoherenceTrajectory traj;
    traj.t.assign(t_grid.begin(), t_grid.end());
    traj.kappa.reserve(t_grid.size());
    for (double t : t_grid) {
        cd acc = 0;
        for (size_t k = 0; k < n; ++k) {
            acc += amp[k] * std::exp(kI * (c * profile.omega[k] * t));
        }
        traj.kappa.push_back(acc);
    }
    return traj;
}

qcore::DensityMatrix DephasingMap::apply(const qcore::DensityMatrix &rho) const {
    if (rho.dim() != 2) {
        throw std::invalid_argument("DephasingMap::apply: expected a qubit state");
    }
    MatX m = rho.matrix();
    m(0, 1) *= std::conj(kappa_);
    m(1, 0) *= kappa_;
    return qcore::DensityMatrix::unchecked(std::move(m));
}

qcore::DensityMatrix DephasingMap::apply_one_sided(const qcore::DensityMatrix &rho) const {
    if (rho.dim() != 4) {
        throw std::invalid_argument("DephasingMap::apply_one_sided: expected a two-qubit state");
    }
    MatX m = rho.matrix();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const int a = r >> 1;
            const int a_prime = c >> 1;
            if (a == 0 && a_prime == 1) {
                m(r, c) *= std::conj(kappa_);
            } else if (a == 1 && a_prime == 0) {
                m(r, c) *= kappa_;
            }
        }
    }
    return qcore::DensityMatrix::unchecked(std::move(m));
}

qcore::PauliChannel DephasingMap::as_pauli_channel() const {
    if (kappa_.imag() != 0.0) {
        throw std::invalid_argument("DephasingMap::as_pauli_channel: kappa must be real");
    }
    return {kappa_.real(), kappa_.real(), 1.0};
}

DephasingMap dephasing_channel(cd kappa) {
    if (!(std::abs(kappa) <= 1.0 + kKappaBoundTol)) {
        throw std::invalid_argument("dephasing_channel: |kappa| exceeds 1 (unphysical)");
    }
    return DephasingMap(kappa);
}

double blp_measure(std::span<const double> magnitudes) {
    double total = 0;
    for (size_t k = 1; k < magnitudes.size(); ++k) {
        total += std::max(0.0, magnitudes[k] - magnitudes[k - 1]);
    }
    return total;
}

double blp_measure(const DecoherenceTrajectory &traj) {
    const std::vector<double> mags = traj.magnitudes();
    return blp_measure(mags);
}

SynthesisResult synthesize_spectrum(const DecoherenceTrajectory &traj, double delta_n, FrequencyConvention conv,
                                    double tolerance) {
    if (traj.kappa.size() != traj.t.size()) {
        throw std::invalid_argument("synthesize_spectrum: t and kappa must have equal length");
    }
    const double dt = uniform_step(traj.t, "synthesize_spectrum");
    if (std::abs(traj.t.front()) > 1e-12 * dt) {
        throw std::invalid_argument("synthesize_spectrum: time grid must start at t = 0");
    }
    if (std::abs(traj.kappa.front() - 1.0) > 1e-9) {
        throw std::invalid_argument("synthesize_spectrum: kappa(0) must equal 1");
    }
    if (delta_n == 0.0) {
        throw std::invalid_argument("synthesize_spectrum: delta_n must be nonzero");
    }
    const double c = phase_rate(delta_n, conv);
    const long n = static_cast<long>(traj.size());
    const long m = 2 * n - 1;
    const double d_omega = kTwoPi / (std::abs(c) * static_cast<double>(m) * dt);
    const double sign = c > 0 ? 1.0 : -1.0;

    // s_k for k in [-(n-1), n-1], Hermitian extension to negative times.
    auto sample = [&](long k) { return k >= 0 ? traj.kappa[static_cast<size_t>(k)] : std::conj(traj.kappa[static_cast<size_t>(-k)]); };

    std::vector<cd> twiddle(static_cast<size_t>(m));
    for (long k = 0; k < m; ++k) {
        twiddle[static_cast<size_t>(k)] = std::polar(1.0, -sign * kTwoPi * static_cast<double>(k) / static_cast<double>(m));
    }
    const double scale = 1.0 / (static_cast<double>(m) * d_omega);

    SynthesisResult result;
    SpectralProfile &p = result.profile;
    p.omega.resize(static_cast<size_t>(m));
    p.density.resize(static_cast<size_t>(m));
    p.phase.resize(static_cast<size_t>(m));
    std::vector<cd> g(static_cast<size_t>(m));
    double g_max = 0;
    for (long j = -(n - 1); j <= n - 1; ++j) {
        cd acc = 0;
        for (long k = -(n - 1); k <= n - 1; ++k) {
            const long idx = ((j * k) % m + m) % m;
            acc += sample(k) * twiddle[static_cast<size_t>(idx)];
        }
        const size_t out = static_cast<size_t>(j + n - 1);
        g[out] = scale * acc;
        p.omega[out] = static_cast<double>(j) * d_omega;
        g_max = std::max(g_max, std::abs(g[out]));
    }
    for (size_t k = 0; k < g.size(); ++k) {
        p.density[k] = std::abs(g[k]);
        // Round-off-level bins carry no phase information.
        p.phase[k] = p.density[k] > 1e-12 * g_max ? std::arg(g[k]) : 0.0;
    }
    p.normalize();

    const DecoherenceTrajectory back = kappa_trajectory(p, delta_n, traj.t, conv);
    double err = 0;
    for (size_t k = 0; k < traj.size(); ++k) {
        err = std::max(err, std::abs(back.kappa[k] - traj.kappa[k]));
    }
    result.round_trip_error = err;
    result.tail_magnitude = std::abs(traj.kappa.back());
    result.realizable = err <= tolerance && result.tail_magnitude < tolerance;
    return result;
}

std::string profile_to_csv(const SpectralProfile &profile) {
    csv::Writer w({"omega", "density", "phase"});
    for (size_t k = 0; k < profile.size(); ++k) {
        w.cell(profile.omega[k]).cell(profile.density[k]).cell(profile.phase[k]);
        w.end_row();
    }
    return w.str();
}

std::string trajectory_to_csv(const DecoherenceTrajectory &traj) {
    csv::Writer w({"t", "re_kappa", "im_kappa"});
    for (size_t k = 0; k < traj.size(); ++k) {
        w.cell(traj.t[k]).cell(traj.kappa[k].real()).cell(traj.kappa[k].imag());
        w.end_row();
    }
    return w.str();
}

SpectralProfile profile_from_csv(const std::string &text) {
    const csv::Table table = csv::parse(text);
    const size_t c_omega = table.column("omega");
    const size_t c_density = table.column("density");
    const size_t c_phase = table.column("phase");
    SpectralProfile p;
    for (const auto &row : table.rows) {
        p.omega.push_back(csv::parse_double(row[c_omega]));
        p.density.push_back(csv::parse_double(row[c_density]));
        p.phase.push_back(csv::parse_double(row[c_phase]));
    }
    return p;
}

DecoherenceTrajectory trajectory_from_csv(const std::string &text) {
    const csv::Table table = csv::parse(text);
    const size_t c_t = table.column("t");
    const size_t c_re = table.column("re_kappa");
    const size_t c_im = table.column("im_kappa");
    DecoherenceTrajectory traj;
    for (const auto &row : table.rows) {
        traj.t.push_back(csv::parse_double(row[c_t]));
        traj.kappa.emplace_back(csv::parse_double(row[c_re]), csv::parse_double(row[c_im]));
    }
    return traj;
}

}  // namespace nmlab::spectra
