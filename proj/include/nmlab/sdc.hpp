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


#ifndef NMLAB_SDC_HPP
#define NMLAB_SDC_HPP

#include <array>
#include <span>
#include <vector>

#include "nmlab/qcore.hpp"

namespace nmlab::sdc {

/// Zero-mean bivariate Gaussian over the two photon frequencies with equal
/// marginal widths `sigma` and correlation coefficient `k`.
struct CorrelatedSpectrum {
    double sigma = 1;
    double k = 0;
    double delta_n = 1;

    void validate() const;
};

enum class Pauli { I, X, Y, Z };

/// Local Pauli encodings Alice chooses from, uniformly.
struct EncodingScheme {
    std::vector<Pauli> encodings;

    static EncodingScheme four_state() { return {{Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}}; }
    /// The subset that avoids sigma_y.
    static EncodingScheme three_state() { return {{Pauli::I, Pauli::X, Pauli::Z}}; }
    /// Throws std::invalid_argument unless n is 3 or 4.
    static EncodingScheme with_states(int n);

    int n_states() const { return static_cast<int>(encodings.size()); }
};

/// exp(-dn^2 sigma^2 t^2 / 2).
double marginal_kappa(const CorrelatedSpectrum &spec, double t);

/// exp(-dn^2 sigma^2 (tA^2 + tB^2 + 2 K tA tB) / 2).
double joint_kappa(const CorrelatedSpectrum &spec, double t_a, double t_b);

/// Binary entropy in bits with H(0) = H(1) = 0.
double binary_entropy(double x);

/// 2 - H((1 + c_A^{2(1+K)}) / 2), with c_A^0 = 1.
double capacity(double c_a, double k);

/// Local dephasing of both photons for times (t_a, t_b) with the shared
/// frequency spectrum. Element (ab, a'b') is scaled by the characteristic
/// function at (dn (a - a') t_a, dn (b - b') t_b).
qcore::DensityMatrix correlated_dephasing(const qcore::DensityMatrix &rho, const CorrelatedSpectrum &spec, double t_a,
                                          double t_b);

/// Concurrence of Phi+ after Alice-side dephasing for t_a.
double concurrence_at_encoding(const CorrelatedSpectrum &spec, double t_a);

/// Row e: Bell-measurement distribution (Phi+, Phi-, Psi+, Psi-) for encoding e.
std::vector<std::array<double, 4>> bell_probability_table(const CorrelatedSpectrum &spec, double t_a, double t_b,
                                                          const EncodingScheme &scheme);

/// I(X:Y) in bits for a uniform input over the rows of `table`.
double mutual_information(std::span<const std::array<double, 4>> table);

/// Mutual information of the whole protocol in bits.
double simulate_protocol(const CorrelatedSpectrum &spec, double t_a, double t_b, const EncodingScheme &scheme);

struct Fig4Point {
    double t = 0;
    double c_a = 0;
    double mutual_information = 0;
};

/// Sweeps t_a over `t_grid`; Bob dephases for t_b = t_a, or not at all when
/// `bob_noise` is false.
std::vector<Fig4Point> fig4_curve(const CorrelatedSpectrum &spec, const EncodingScheme &scheme,
                                  std::span<const double> t_grid, bool bob_noise = true);

}  // namespace nmlab::sdc

#endif
