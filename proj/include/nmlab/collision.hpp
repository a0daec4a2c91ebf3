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


#ifndef NMLAB_COLLISION_HPP
#define NMLAB_COLLISION_HPP

#include <array>
#include <string_view>

#include "nmlab/qcore.hpp"

namespace nmlab::collision {

/// Index of a collision operator: identity, sigma_x or sigma_z.
enum class Op { I = 0, X = 1, Z = 2 };

inline constexpr double kEpsilonMax = 0.5;
inline constexpr double kSingularEpsilon = 0.25;
inline constexpr double kSingularWindow = 1e-9;

/// p(i, j): probability that O_i acts in the first collision and O_j in the second.
struct JointProbabilities {
    std::array<std::array<double, 3>, 3> p{};

    double operator()(Op first, Op second) const {
        return p[static_cast<size_t>(first)][static_cast<size_t>(second)];
    }
    double sum() const;
    /// Marginal distribution (p_0, p_x, p_z) of the first-collision operator.
    std::array<double, 3> first_marginals() const;
};

/// Throws std::invalid_argument unless 0 <= eps <= 0.5.
void check_epsilon(double eps);

JointProbabilities joint_probabilities(double eps);

/// Map after the first collision: lambda = (1-2eps, 1-4eps, 1-2eps).
qcore::PauliChannel first_collision_channel(double eps);

/// Map after both collisions, summed over all operator pairs.
qcore::PauliChannel two_collision_channel(double eps);

/// Effective Pauli weights (q_I, q_x, q_y, q_z) of the two-collision map.
qcore::KrausWeights two_collision_weights(double eps);

/// Phi_{t2,t1} = Phi_{t2,0} o Phi_{t1,0}^{-1}. Throws SingularChannelError where
/// the first map is not invertible (eps = 0.25 and eps = 0.5).
qcore::PauliChannel intermediate_channel(double eps);

enum class Classification { Markovian, WeakNM, StrongNM, Singular };

std::string_view to_string(Classification c);

struct DivisibilityVerdict {
    Classification classification = Classification::Markovian;
    /// Smallest Choi eigenvalue of the intermediate map (NaN when Singular).
    double min_choi_eigenvalue = 0;
    /// max |mu_i| of the intermediate map; +inf when no intermediate map exists.
    double max_abs_bloch_eigenvalue = 0;
};

/// CP/P-divisibility class of the intermediate map at `eps`.
///
/// At eps = 0.25 the y component is 0/0 and the verdict is Singular. At
/// eps = 0.5 the first map kills x and z while the full map restores them, so
/// no intermediate map exists; this is reported as StrongNM with an infinite
/// Bloch eigenvalue, matching the divergent limit from below.
DivisibilityVerdict classify(double eps, double tol = qcore::kPredicateTol);

/// Weak-to-strong threshold by bisection on (0.25, 0.5).
double find_transition(double tol = 1e-12);

struct Entanglement {
    double c1 = 0;
    double c2 = 0;
};

/// Concurrence after one and two collisions with one half of Phi+ exposed.
Entanglement entanglement_dynamics(double eps);

}  // namespace nmlab::collision

#endif
