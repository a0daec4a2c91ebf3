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


#include "nmlab/collision.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace nmlab::collision {

namespace {

// Pauli index (0=I, 1=X, 2=Y, 3=Z) of the product O_second * O_first, up to phase.
int product_pauli(Op first, Op second) {
    if (first == second) {
        return 0;
    }
    if (first == Op::I) {
        return second == Op::X ? 1 : 3;
    }
    if (second == Op::I) {
        return first == Op::X ? 1 : 3;
    }
    return 2;  // XZ and ZX are proportional to Y
}

constexpr std::array<Op, 3> kOps{Op::I, Op::X, Op::Z};

}  // namespace

double JointProbabilities::sum() const {
    double s = 0;
    for (const auto &row : p) {
        for (double v : row) {
            s += v;
        }
    }
    return s;
}

std::array<double, 3> JointProbabilities::first_marginals() const {
    std::array<double, 3> m{};
    for (size_t i = 0; i < 3; ++i) {
        for (double v : p[i]) {
            m[i] += v;
        }
    }
    return m;
}

void check_epsilon(double eps) {
    if (!(eps >= 0.0 && eps <= kEpsilonMax)) {
        throw std::invalid_argument("epsilon must be in [0, 0.5], got " + std::to_string(eps));
    }
}

JointProbabilities joint_probabilities(double eps) {
    check_epsilon(eps);
    const double a = 1.0 - 2.0 * eps;
    JointProbabilities jp;
    auto set = [&](Op i, Op j, double v) { jp.p[static_cast<size_t>(i)][static_cast<size_t>(j)] = v; };
    set(Op::I, Op::I, a * a);
    set(Op::I, Op::X, a * eps);
    set(Op::I, Op::Z, a * eps);
    set(Op::X, Op::I, a * eps);
    set(Op::Z, Op::I, a * eps);
    set(Op::X, Op::Z, 0.0);
    set(Op::Z, Op::X, 0.0);
    set(Op::X, Op::X, 2.0 * eps * eps);
    set(Op::Z, Op::Z, 2.0 * eps * eps);
    return jp;
}

qcore::PauliChannel first_collision_channel(double eps) {
    const auto m = joint_probabilities(eps).first_marginals();
    return qcore::PauliChannel::from_weights(m[0], m[1], 0.0, m[2]);
}

qcore::KrausWeights two_collision_weights(double eps) {
    const JointProbabilities jp = joint_probabilities(eps);
    std::array<double, 4> q{};
    for (Op i : kOps) {
        for (Op j : kOps) {
            q[static_cast<size_t>(product_pauli(i, j))] += jp(i, j);
        }
    }
    return {q[0], q[1], q[2], q[3]};
}

qcore::PauliChannel two_collision_channel(double eps) {
    const qcore::KrausWeights q = two_collision_weights(eps);
    return qcore::PauliChannel::from_weights(q.i, q.x, q.y, q.z);
}

qcore::PauliChannel intermediate_channel(double eps) {
    check_epsilon(eps);
    if (std::abs(eps - kSingularEpsilon) <= kSingularWindow) {
        throw SingularChannelError("intermediate map undefined at epsilon = 0.25: first-collision map is singular");
    }
    return qcore::divide_channels(two_collision_channel(eps), first_collision_channel(eps));
}

std::string_view to_string(Classification c) {
    switch (c) {
        case Classification::Markovian:
            return "markovian";
        case Classification::WeakNM:
            return "weak";
        case Classification::StrongNM:
            return "strong";
        case Classification::Singular:
            return "singular";
    }
    return "unknown";
}

DivisibilityVerdict classify(double eps, double tol) {
    check_epsilon(eps);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (eps == 0.0) {
        return {Classification::Markovian, 0.0, 1.0};
    }
    if (std::abs(eps - kSingularEpsilon) <= kSingularWindow) {
        return {Classification::Singular, nan, nan};
    }
    const qcore::PauliChannel first = first_collision_channel(eps);
    const qcore::PauliChannel later = two_collision_channel(eps);
    const auto f = first.eigenvalues();
    const auto l = later.eigenvalues();
    bool indeterminate = false;
    bool divergent = false;
    for (size_t k = 0; k < 3; ++k) {
        if (std::abs(f[k]) <= qcore::kSingularThreshold) {
            (std::abs(l[k]) <= qcore::kSingularThreshold ? indeterminate : divergent) = true;
        }
    }
    if (divergent) {
        return {Classification::StrongNM, nan, std::numeric_limits<double>::infinity()};
    }
    if (indeterminate) {
        return {Classification::Singular, nan, nan};
    }
    const qcore::PauliChannel mu = qcore::divide_channels(later, first);
    DivisibilityVerdict v;
    v.min_choi_eigenvalue = qcore::kraus_weights(mu).min();
    v.max_abs_bloch_eigenvalue = mu.max_abs_eigenvalue();
    if (!qcore::is_positive(mu, tol)) {
        v.classification = Classification::StrongNM;
    } else if (!qcore::is_cp(mu, tol)) {
        v.classification = Classification::WeakNM;
    } else {
        v.classification = Classification::Markovian;
    }
    return v;
}

double find_transition(double tol) {
    // The x component of the intermediate map stays defined across eps = 1/4,
    // so the P-breaking predicate extends continuously onto the singular point.
    auto strong = [](double eps) {
        const double first_x = first_collision_channel(eps).x;
        const double later_x = two_collision_channel(eps).x;
        return std::abs(later_x) > std::abs(first_x);
    };
    double lo = kSingularEpsilon;
    double hi = kEpsilonMax;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (strong(mid) ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

Entanglement entanglement_dynamics(double eps) {
    const qcore::DensityMatrix phi_plus = qcore::bell_state(qcore::Bell::PhiPlus);
    const qcore::DensityMatrix after_one = qcore::apply_channel_one_sided(first_collision_channel(eps), phi_plus);
    const qcore::DensityMatrix after_two = qcore::apply_channel_one_sided(two_collision_channel(eps), phi_plus);
    return {qcore::concurrence(after_one), qcore::concurrence(after_two)};
}

}  // namespace nmlab::collision
