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


#ifndef NMLAB_QCORE_HPP
#define NMLAB_QCORE_HPP

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace nmlab {

using cdouble = std::complex<double>;
using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using MatX = Eigen::MatrixXcd;

/// Raised when an intermediate map would require inverting a channel with a
/// (numerically) zero eigenvalue.
class SingularChannelError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

namespace qcore {

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kPredicateTol = 1e-10;
inline constexpr double kSingularThreshold = 1e-12;

/// Single-qubit Pauli matrices.
Mat2 pauli_i();
Mat2 pauli_x();
Mat2 pauli_y();
Mat2 pauli_z();

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2 or 4.
///
/// The checked constructor enforces the physical-state invariants. Maps that
/// are not positive can produce matrices outside the state space, so channel
/// application goes through `unchecked`, which keeps only the shape.
class DensityMatrix {
   public:
    explicit DensityMatrix(MatX m);

    static DensityMatrix unchecked(MatX m);
    static DensityMatrix maximally_mixed(int dim);
    /// Projector onto a normalized copy of `psi`.
    static DensityMatrix pure(const Eigen::VectorXcd &psi);
    static DensityMatrix from_bloch(double rx, double ry, double rz);

    int dim() const { return static_cast<int>(m_.rows()); }
    const MatX &matrix() const { return m_; }
    cdouble operator()(int r, int c) const { return m_(r, c); }

    /// True when Hermitian, unit trace and PSD within the given tolerances.
    bool is_valid(double herm_tol = kHermitianTol, double trace_tol = kTraceTol, double psd_tol = kPsdTol) const;

   private:
    struct NoCheck {};
    DensityMatrix(MatX m, NoCheck) : m_(std::move(m)) {}

    MatX m_;
};

struct BlochVector {
    double x = 0;
    double y = 0;
    double z = 0;

    double norm() const;
};

BlochVector bloch_vector(const DensityMatrix &rho);

/// Eigenvalues (lambda_x, lambda_y, lambda_z) of a unital Pauli-diagonal qubit
/// map; lambda_I is fixed at 1. Non-CP and non-positive maps are representable.
struct PauliChannel {
    double x = 1;
    double y = 1;
    double z = 1;

    static PauliChannel identity() { return {1, 1, 1}; }
    /// Channel rho -> sum_k w[k] P_k rho P_k with P = (I, X, Y, Z).
    static PauliChannel from_weights(double q_i, double q_x, double q_y, double q_z);

    std::array<double, 3> eigenvalues() const { return {x, y, z}; }
    double max_abs_eigenvalue() const;
};

/// Applies `first`, then `second`; eigenvalues multiply.
PauliChannel compose(const PauliChannel &second, const PauliChannel &first);

/// Choi eigenvalues of a Pauli-diagonal map, normalized to sum to 1.
struct KrausWeights {
    double i = 1;
    double x = 0;
    double y = 0;
    double z = 0;

    double min() const;
    double sum() const { return i + x + y + z; }
};

double trace_distance(const DensityMatrix &a, const DensityMatrix &b);

/// Wootters concurrence of a two-qubit state.
double concurrence(const DensityMatrix &rho);

DensityMatrix apply_channel(const PauliChannel &ch, const DensityMatrix &rho);

/// Applies `ch` to the first qubit of a two-qubit state, identity on the second.
DensityMatrix apply_channel_one_sided(const PauliChannel &ch, const DensityMatrix &rho);

KrausWeights kraus_weights(const PauliChannel &ch);

/// Explicit 4x4 Choi matrix (1/2) sum_ij |i><j| (x) ch(|i><j|).
Mat4 choi_matrix(const PauliChannel &ch);

bool is_cp(const PauliChannel &ch, double tol = kPredicateTol);

/// Positivity of a Pauli-diagonal map. The analytic criterion max|lambda| <= 1
/// decides; a deterministic 200-point Fibonacci sphere of pure inputs is
/// checked as well.
bool is_positive(const PauliChannel &ch, double tol = kPredicateTol);

/// Intermediate map `mu` with compose(mu, earlier) == later.
PauliChannel divide_channels(const PauliChannel &later, const PauliChannel &earlier,
                             double singular_threshold = kSingularThreshold);

/// Bell states in the computational basis |00>, |01>, |10>, |11>.
enum class Bell { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

Eigen::Vector4cd bell_vector(Bell b);
DensityMatrix bell_state(Bell b);

/// Mixture sum_k w[k] |B_k><B_k| with B = (Phi+, Phi-, Psi+, Psi-).
DensityMatrix bell_diagonal(double w_phi_plus, double w_phi_minus, double w_psi_plus, double w_psi_minus);

/// Overlaps <B_k|rho|B_k> in the order (Phi+, Phi-, Psi+, Psi-).
std::array<double, 4> bell_populations(const DensityMatrix &rho);

/// Pure states on a Fibonacci sphere; deterministic.
std::vector<BlochVector> fibonacci_sphere(int n);

}  // namespace qcore
}  // namespace nmlab

#endif
