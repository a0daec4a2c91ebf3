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


#include "nmlab/sdc.hpp"

#include <cmath>
#include <stdexcept>

#include "nmlab/spectra.hpp"

namespace nmlab::sdc {

namespace {

Mat2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return qcore::pauli_i();
        case Pauli::X:
            return qcore::pauli_x();
        case Pauli::Y:
            return qcore::pauli_y();
        case Pauli::Z:
            return qcore::pauli_z();
    }
    return qcore::pauli_i();
}

Mat4 on_first(const Mat2 &a) {
    Mat4 out = Mat4::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * Mat2::Identity();
        }
    }
    return out;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace

void CorrelatedSpectrum::validate() const {
    if (!(sigma > 0.0)) {
        throw std::invalid_argument("CorrelatedSpectrum: sigma must be > 0");
    }
    if (!(k >= -1.0 && k <= 1.0)) {
        throw std::invalid_argument("CorrelatedSpectrum: K must be in [-1, 1]");
    }
}

EncodingScheme EncodingScheme::with_states(int n) {
    if (n == 4) {
        return four_state();
    }
    if (n == 3) {
        return three_state();
    }
    throw std::invalid_argument("EncodingScheme: n_states must be 3 or 4");
}

double marginal_kappa(const CorrelatedSpectrum &spec, double t) { return joint_kappa(spec, t, 0.0); }

double joint_kappa(const CorrelatedSpectrum &spec, double t_a, double t_b) {
    spec.validate();
    if (t_a < 0.0 || t_b < 0.0) {
        throw std::invalid_argument("joint_kappa: times must be >= 0");
    }
    const double s2 = spec.delta_n * spec.delta_n * spec.sigma * spec.sigma;
    // t_a^2 + t_b^2 + 2K t_a t_b >= 0 for |K| <= 1; clamp round-off at K = -1.
    const double q = std::max(0.0, t_a * t_a + t_b * t_b + 2.0 * spec.k * t_a * t_b);
    return std::exp(-0.5 * s2 * q);
}

double binary_entropy(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::invalid_argument("binary_entropy: x must be in [0, 1]");
    }
    return -xlog2x(x) - xlog2x(1.0 - x);
}

double capacity(double c_a, double k) {
    if (!(c_a >= 0.0 && c_a <= 1.0)) {
        throw std::invalid_argument("capacity: c_A must be in [0, 1]");
    }
    if (!(k >= -1.0 && k <= 1.0)) {
        throw std::invalid_argument("capacity: K must be in [-1, 1]");
    }
    const double exponent = 2.0 * (1.0 + k);
    const double power = exponent == 0.0 ? 1.0 : std::pow(c_a, exponent);
    return 2.0 - binary_entropy(0.5 * (1.0 + power));
}

qcore::DensityMatrix correlated_dephasing(const qcore::DensityMatrix &rho, const CorrelatedSpectrum &spec, double t_a,
                                          double t_b) {
    spec.validate();
    if (rho.dim() != 4) {
        throw std::invalid_argument("correlated_dephasing: expected a two-qubit state");
    }
    const double s2 = spec.delta_n * spec.delta_n * spec.sigma * spec.sigma;
    MatX m = rho.matrix();
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const double u = static_cast<double>((r >> 1) - (c >> 1)) * t_a;
            const double v = static_cast<double>((r & 1) - (c & 1)) * t_b;
            const double q = std::max(0.0, u * u + v * v + 2.0 * spec.k * u * v);
            m(r, c) *= std::exp(-0.5 * s2 * q);
        }
    }
    return qcore::DensityMatrix::unchecked(std::move(m));
}

double concurrence_at_encoding(const CorrelatedSpectrum &spec, double t_a) {
    const spectra::DephasingMap alice = spectra::dephasing_channel(marginal_kappa(spec, t_a));
    return qcore::concurrence(alice.apply_one_sided(qcore::bell_state(qcore::Bell::PhiPlus)));
}

std::vector<std::array<double, 4>> bell_probability_table(const CorrelatedSpectrum &spec, double t_a, double t_b,
                                                          const EncodingScheme &scheme) {
    // Bob's dephasing acts on photon 2 and commutes with Alice's encoding on
    // photon 1, so both dephasing stages are applied jointly before encoding;
    // the frequency correlation enters only through the joint characteristic
    // function.
    const qcore::DensityMatrix shared =
        correlated_dephasing(qcore::bell_state(qcore::Bell::PhiPlus), spec, t_a, t_b);
    std::vector<std::array<double, 4>> table;
    table.reserve(scheme.encodings.size());
    for (Pauli p : scheme.encodings) {
        const Mat4 u = on_first(pauli_matrix(p));
        const MatX encoded = u * shared.matrix() * u.adjoint();
        table.push_back(qcore::bell_populations(qcore::DensityMatrix::unchecked(encoded)));
    }
    return table;
}

double mutual_information(std::span<const std::array<double, 4>> table) {
    if (table.empty()) {
        throw std::invalid_argument("mutual_information: empty table");
    }
    const double px = 1.0 / static_cast<double>(table.size());
    std::array<double, 4> py{};
    double h_y_given_x = 0;
    for (const auto &row : table) {
        for (size_t y = 0; y < 4; ++y) {
            const double p = std::max(0.0, row[y]);
            py[y] += px * p;
            h_y_given_x -= px * xlog2x(p);
        }
    }
    double h_y = 0;
    for (double p : py) {
        h_y -= xlog2x(p);
    }
    return std::max(0.0, h_y - h_y_given_x);
}

double simulate_protocol(const CorrelatedSpectrum &spec, double t_a, double t_b, const EncodingScheme &scheme) {
    if (t_a < 0.0 || t_b < 0.0) {
        throw std::invalid_argument("simulate_protocol: times must be >= 0");
    }
    return mutual_information(bell_probability_table(spec, t_a, t_b, scheme));
}

std::vector<Fig4Point> fig4_curve(const CorrelatedSpectrum &spec, const EncodingScheme &scheme,
                                  std::span<const double> t_grid, bool bob_noise) {
    if (t_grid.empty()) {
        throw std::invalid_argument("fig4_curve: t grid must be nonempty");
    }
    std::vector<Fig4Point> out;
    out.reserve(t_grid.size());
    for (double t : t_grid) {
        out.push_back({t, concurrence_at_encoding(spec, t), simulate_protocol(spec, t, bob_noise ? t : 0.0, scheme)});
    }
    return out;
}

}  // namespace nmlab::sdc
