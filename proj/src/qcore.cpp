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


#include "nmlab/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace nmlab::qcore {

namespace {

constexpr cdouble kI{0.0, 1.0};

// Eigenvalues below this are treated as exact zeros before square roots are
// taken; Hermitian eigensolvers leave ~1e-16 noise on null directions.
constexpr double kRankClip = 1e-13;

MatX hermitian_part(const MatX &m) { return 0.5 * (m + m.adjoint()); }

Mat4 kron(const Mat2 &a, const Mat2 &b) {
    Mat4 out;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
        }
    }
    return out;
}

void require_dim(const DensityMatrix &rho, int dim, const char *what) {
    if (rho.dim() != dim) {
        throw std::invalid_argument(std::string(what) + ": expected a " + std::to_string(dim) + "x" +
                                    std::to_string(dim) + " density matrix, got dim " +
                                    std::to_string(rho.dim()));
    }
}

}  // namespace

Mat2 pauli_i() { return Mat2::Identity(); }

Mat2 pauli_x() {
    Mat2 m;
    m << 0, 1, 1, 0;
    return m;
}

Mat2 pauli_y() {
    Mat2 m;
    m << 0, -kI, kI, 0;
    return m;
}

Mat2 pauli_z() {
    Mat2 m;
    m << 1, 0, 0, -1;
    return m;
}

DensityMatrix::DensityMatrix(MatX m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || (m_.rows() != 2 && m_.rows() != 4)) {
        throw std::invalid_argument("DensityMatrix: dimension must be 2 or 4");
    }
    if (!is_valid()) {
        throw std::invalid_argument("DensityMatrix: matrix is not a valid state (Hermitian, unit trace, PSD)");
    }
}

DensityMatrix DensityMatrix::unchecked(MatX m) {
    if (m.rows() != m.cols() || (m.rows() != 2 && m.rows() != 4)) {
        throw std::invalid_argument("DensityMatrix: dimension must be 2 or 4");
    }
    return DensityMatrix(std::move(m), NoCheck{});
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
    return DensityMatrix(MatX::Identity(dim, dim) / static_cast<double>(dim));
}

DensityMatrix DensityMatrix::pure(const Eigen::VectorXcd &psi) {
    const double n = psi.norm();
    if (n == 0.0) {
        throw std::invalid_argument("DensityMatrix::pure: zero vector");
    }
    const Eigen::VectorXcd v = psi / n;
    return DensityMatrix(v * v.adjoint());
}

DensityMatrix DensityMatrix::from_bloch(double rx, double ry, double rz) {
    const MatX m = 0.5 * (pauli_i() + rx * pauli_x() + ry * pauli_y() + rz * pauli_z());
    return DensityMatrix(m);
}

bool DensityMatrix::is_valid(double herm_tol, double trace_tol, double psd_tol) const {
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > herm_tol) {
        return false;
    }
    if (std::abs(m_.trace() - 1.0) > trace_tol) {
        return false;
    }
    Eigen::SelfAdjointEigenSolver<MatX> es(hermitian_part(m_), Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -psd_tol;
}

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

BlochVector bloch_vector(const DensityMatrix &rho) {
    require_dim(rho, 2, "bloch_vector");
    const MatX &m = rho.matrix();
    return {2.0 * m(1, 0).real(), 2.0 * m(1, 0).imag(), (m(0, 0) - m(1, 1)).real()};
}

PauliChannel PauliChannel::from_weights(double q_i, double q_x, double q_y, double q_z) {
    return {q_i + q_x - q_y - q_z, q_i - q_x + q_y - q_z, q_i - q_x - q_y + q_z};
}

double PauliChannel::max_abs_eigenvalue() const { return std::max({std::abs(x), std::abs(y), std::abs(z)}); }

PauliChannel compose(const PauliChannel &second, const PauliChannel &first) {
    return {second.x * first.x, second.y * first.y, second.z * first.z};
}

double KrausWeights::min() const { return std::min({i, x, y, z}); }

double trace_distance(const DensityMatrix &a, const DensityMatrix &b) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("trace_distance: dimension mismatch");
    }
    Eigen::SelfAdjointEigenSolver<MatX> es(hermitian_part(a.matrix() - b.matrix()), Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double concurrence(const DensityMatrix &rho) {
    require_dim(rho, 4, "concurrence");
    // Wootters' lambdas are the singular values of tau = V^T (Y x Y) V where
    // rho = V V^dagger. Using the SVD avoids square roots of eigenvalues of
    // rho * rho_tilde, which amplify round-off on rank-deficient states.
    Eigen::SelfAdjointEigenSolver<MatX> es(hermitian_part(rho.matrix()));
    Eigen::Vector4d p = es.eigenvalues();
    MatX v = es.eigenvectors();
    for (int k = 0; k < 4; ++k) {
        const double pk = p(k) < kRankClip ? 0.0 : p(k);
        v.col(k) *= std::sqrt(pk);
    }
    Mat4 yy;
    yy << 0, 0, 0, -1,  //
        0, 0, 1, 0,     //
        0, 1, 0, 0,     //
        -1, 0, 0, 0;
    const MatX tau = v.transpose() * yy * v;
    Eigen::JacobiSVD<MatX> svd(tau);
    const Eigen::VectorXd s = svd.singularValues();  // descending
    return std::max(0.0, s(0) - s(1) - s(2) - s(3));
}

DensityMatrix apply_channel(const PauliChannel &ch, const DensityMatrix &rho) {
    require_dim(rho, 2, "apply_channel");
    const MatX &m = rho.matrix();
    const cdouble tr = m(0, 0) + m(1, 1);
    const cdouble dz = m(0, 0) - m(1, 1);
    // rho_10 = (r_x + i r_y)/2 and rho_01 = (r_x - i r_y)/2.
    const cdouble rx_half = 0.5 * (m(1, 0) + m(0, 1));
    const cdouble ry_half = 0.5 * (m(1, 0) - m(0, 1)) / kI;
    MatX out(2, 2);
    out(0, 0) = 0.5 * (tr + ch.z * dz);
    out(1, 1) = tr - out(0, 0);
    out(1, 0) = ch.x * rx_half + kI * ch.y * ry_half;
    out(0, 1) = ch.x * rx_half - kI * ch.y * ry_half;
    return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix apply_channel_one_sided(const PauliChannel &ch, const DensityMatrix &rho) {
    require_dim(rho, 4, "apply_channel_one_sided");
    const KrausWeights q = kraus_weights(ch);
    const std::array<std::pair<double, Mat2>, 4> terms{{
        {q.i, pauli_i()},
        {q.x, pauli_x()},
        {q.y, pauli_y()},
        {q.z, pauli_z()},
    }};
    MatX out = MatX::Zero(4, 4);
    for (const auto &[w, p] : terms) {
        if (w == 0.0) {
            continue;
        }
        const Mat4 k = kron(p, Mat2::Identity());
        out += w * k * rho.matrix() * k.adjoint();
    }
    return DensityMatrix::unchecked(std::move(out));
}

KrausWeights kraus_weights(const PauliChannel &ch) {
    return {
        (1 + ch.x + ch.y + ch.z) / 4,
        (1 + ch.x - ch.y - ch.z) / 4,
        (1 - ch.x + ch.y - ch.z) / 4,
        (1 - ch.x - ch.y + ch.z) / 4,
    };
}

Mat4 choi_matrix(const PauliChannel &ch) {
    Mat4 choi = Mat4::Zero();
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            MatX e = MatX::Zero(2, 2);
            e(i, j) = 1.0;
            // apply_channel is linear; the unchecked path accepts |i><j|.
            const MatX img = apply_channel(ch, DensityMatrix::unchecked(e)).matrix();
            choi.block<2, 2>(2 * i, 2 * j) = 0.5 * img;
        }
    }
    return choi;
}

bool is_cp(const PauliChannel &ch, double tol) { return kraus_weights(ch).min() >= -tol; }

bool is_positive(const PauliChannel &ch, double tol) {
    const bool analytic = ch.max_abs_eigenvalue() <= 1.0 + tol;
    bool grid_ok = true;
    for (const BlochVector &r : fibonacci_sphere(200)) {
        const DensityMatrix out = apply_channel(ch, DensityMatrix::from_bloch(r.x, r.y, r.z));
        Eigen::SelfAdjointEigenSolver<MatX> es(hermitian_part(out.matrix()), Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -tol) {
            grid_ok = false;
            break;
        }
    }
    return analytic && grid_ok;
}

PauliChannel divide_channels(const PauliChannel &later, const PauliChannel &earlier, double singular_threshold) {
    for (double e : earlier.eigenvalues()) {
        if (std::abs(e) <= singular_threshold) {
            throw SingularChannelError("divide_channels: earlier channel has an eigenvalue within " +
                                       std::to_string(singular_threshold) + " of zero");
        }
    }
    return {later.x / earlier.x, later.y / earlier.y, later.z / earlier.z};
}

Eigen::Vector4cd bell_vector(Bell b) {
    const double s = std::numbers::sqrt2 / 2;
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    switch (b) {
        case Bell::PhiPlus:
            v << s, 0, 0, s;
            break;
        case Bell::PhiMinus:
            v << s, 0, 0, -s;
            break;
        case Bell::PsiPlus:
            v << 0, s, s, 0;
            break;
        case Bell::PsiMinus:
            v << 0, s, -s, 0;
            break;
    }
    return v;
}

DensityMatrix bell_state(Bell b) { return DensityMatrix::pure(bell_vector(b)); }

DensityMatrix bell_diagonal(double w_phi_plus, double w_phi_minus, double w_psi_plus, double w_psi_minus) {
    const std::array<std::pair<double, Bell>, 4> terms{{
        {w_phi_plus, Bell::PhiPlus},
        {w_phi_minus, Bell::PhiMinus},
        {w_psi_plus, Bell::PsiPlus},
        {w_psi_minus, Bell::PsiMinus},
    }};
    MatX m = MatX::Zero(4, 4);
    for (const auto &[w, b] : terms) {
        const Eigen::Vector4cd v = bell_vector(b);
        m += w * v * v.adjoint();
    }
    return DensityMatrix(m);
}

std::array<double, 4> bell_populations(const DensityMatrix &rho) {
    require_dim(rho, 4, "bell_populations");
    std::array<double, 4> out{};
    const std::array<Bell, 4> order{Bell::PhiPlus, Bell::PhiMinus, Bell::PsiPlus, Bell::PsiMinus};
    for (size_t k = 0; k < order.size(); ++k) {
        const Eigen::Vector4cd v = bell_vector(order[k]);
        out[k] = (v.adjoint() * rho.matrix() * v)(0, 0).real();
    }
    return out;
}

std::vector<BlochVector> fibonacci_sphere(int n) {
    std::vector<BlochVector> pts;
    pts.reserve(static_cast<size_t>(n));
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int k = 0; k < n; ++k) {
        const double z = 1.0 - (2.0 * k + 1.0) / n;
        const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden * k;
        pts.push_back({rho * std::cos(phi), rho * std::sin(phi), z});
    }
    return pts;
}

}  // namespace nmlab::qcore
