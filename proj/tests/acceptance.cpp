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


// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "nmlab/cli.hpp"
#include "nmlab/collision.hpp"
#include "nmlab/nvmodel.hpp"
#include "nmlab/qcore.hpp"
#include "nmlab/sdc.hpp"
#include "nmlab/spectra.hpp"
#include "test_support.hpp"

using namespace nmlab;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string &what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        } else if (!cond) {
            detail += "; " + what;
        }
    }
};

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(6);
    ss << v;
    return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<double> epsilon_grid() {
    std::vector<double> g;
    for (int k = 1; k <= 500; ++k) {
        g.push_back(k * 1e-3);
    }
    return g;
}

bool is_singular_point(double eps) { return std::abs(eps - 0.25) <= 1e-9; }

// 1
Outcome collision_transition() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const double eps_star = collision::find_transition();
    o.expect(std::abs(eps_star - 0.25) < 1e-9, "transition at " + fmt(eps_star));
    for (double eps : epsilon_grid()) {
        if (is_singular_point(eps)) {
            continue;
        }
        const auto expected = eps < 0.25 ? collision::Classification::WeakNM : collision::Classification::StrongNM;
        const auto got = collision::classify(eps).classification;
        o.expect(got == expected, "eps " + fmt(eps) + " classified " + std::string(collision::to_string(got)));
    }
    const double elapsed = seconds_since(start);
    o.expect(elapsed < 1.0, "runtime " + fmt(elapsed) + " s");
    if (o.ok) {
        o.detail = "eps* = " + fmt(eps_star) + ", runtime " + fmt(elapsed) + " s";
    }
    return o;
}

// One-sided two-collision map on Phi+ written out with explicit 4x4 operator products.
double brute_force_c2(double eps) {
    const auto p = collision::joint_probabilities(eps);
    const collision::Op ops[] = {collision::Op::I, collision::Op::X, collision::Op::Z};
    auto mat = [](collision::Op o) {
        return o == collision::Op::I ? qcore::pauli_i() : o == collision::Op::X ? qcore::pauli_x() : qcore::pauli_z();
    };
    const MatX phi = qcore::bell_state(qcore::Bell::PhiPlus).matrix();
    MatX out = MatX::Zero(4, 4);
    for (auto i : ops) {
        for (auto j : ops) {
            const Mat2 u2 = mat(j) * mat(i);
            Mat4 u = Mat4::Zero();
            for (int r = 0; r < 2; ++r) {
                for (int c = 0; c < 2; ++c) {
                    u.block<2, 2>(2 * r, 2 * c) = u2(r, c) * Mat2::Identity();
                }
            }
            out += p(i, j) * u * phi * u.adjoint();
        }
    }
    return qcore::concurrence(qcore::DensityMatrix::unchecked(out));
}

double brute_force_c1(double eps) {
    const auto m = collision::joint_probabilities(eps).first_marginals();
    const auto rho = qcore::bell_diagonal(m[0], m[2], m[1], 0.0);
    return qcore::concurrence(rho);
}

// 2
Outcome entanglement_witness() {
    Outcome o;
    double worst = 0;
    for (double eps : epsilon_grid()) {
        const double c1 = brute_force_c1(eps);
        const double c2 = brute_force_c2(eps);
        const auto e = collision::entanglement_dynamics(eps);
        o.expect(std::abs(e.c1 - c1) < 1e-12 && std::abs(e.c2 - c2) < 1e-12, "library vs brute force at " + fmt(eps));
        if (eps <= 0.25) {
            const double err = std::abs((c2 - c1) - 4 * eps * (4 * eps - 1));
            worst = std::max(worst, err);
            o.expect(err < 1e-12, "closed form off by " + fmt(err) + " at " + fmt(eps));
        }
        if (is_singular_point(eps)) {
            continue;
        }
        const bool strong = collision::classify(eps).classification == collision::Classification::StrongNM;
        const double d = c2 - c1;
        if (strong) {
            o.expect(d > 0, "C2 - C1 not positive in strong region at " + fmt(eps));
        } else {
            o.expect(d <= 0, "C2 - C1 positive outside strong region at " + fmt(eps));
        }
    }
    if (o.ok) {
        o.detail = "max closed-form deviation " + fmt(worst);
    }
    return o;
}

// 3
Outcome closed_form_vs_quadrature() {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const auto t = spectra::linspace(0, 6, 512);
    double worst = 0;
    for (const spectra::DoubleGaussianSpec spec :
         {spectra::DoubleGaussianSpec{1.0, 1.0, 4.0, 1.0}, spectra::DoubleGaussianSpec{0.33, 1.0, 4.0, 1.0},
          spectra::DoubleGaussianSpec{3.0, 0.6, 2.5, 1.3}}) {
        const auto profile = spectra::double_gaussian_profile(spec);
        const auto traj = spectra::kappa_trajectory(profile, spec.delta_n, t);
        for (size_t k = 0; k < t.size(); ++k) {
            worst = std::max(worst, std::abs(std::abs(traj.kappa[k]) - spectra::kappa_double_gaussian_mag(spec, t[k])));
        }
    }
    const double elapsed = seconds_since(start);
    o.expect(worst < 1e-6, "max deviation " + fmt(worst));
    o.expect(elapsed < 5.0, "runtime " + fmt(elapsed) + " s");
    if (o.ok) {
        o.detail = "max deviation " + fmt(worst) + ", runtime " + fmt(elapsed) + " s";
    }
    return o;
}

double blp_closed_form(const spectra::DoubleGaussianSpec &spec, int n) {
    std::vector<double> mags;
    for (double t : spectra::linspace(0, 8, n)) {
        mags.push_back(spectra::kappa_double_gaussian_mag(spec, t));
    }
    return spectra::blp_measure(mags);
}

// 4
Outcome blp_regimes() {
    Outcome o;
    const spectra::DoubleGaussianSpec flat{0.0, 1.0, 4.0, 1.0};
    const spectra::DoubleGaussianSpec beating{1.0, 1.0, 4.0, 1.0};
    for (int n : {201, 20001, 200001}) {
        o.expect(blp_closed_form(flat, n) == 0.0, "nonzero for A_theta = 0 at n = " + std::to_string(n));
    }
    const double coarse = blp_closed_form(beating, 200001);
    const double fine = blp_closed_form(beating, 400001);
    o.expect(coarse > 0, "no revivals for A_theta = 1");
    o.expect(std::abs(coarse - fine) < 1e-4, "refinement changed value by " + fmt(std::abs(coarse - fine)));
    if (o.ok) {
        o.detail = "N = " + fmt(fine) + ", refinement delta " + fmt(std::abs(coarse - fine));
    }
    return o;
}

// 5
Outcome synthesis_round_trip() {
    Outcome o;
    double worst = 0;
    struct Case {
        spectra::DoubleGaussianSpec spec;
        double center;
        spectra::FrequencyConvention conv;
    };
    const Case cases[] = {
        {{0.0, 1.0, 0.0, 1.0}, 0.0, spectra::FrequencyConvention::Angular},
        {{1.0, 1.0, 8.0, 1.0}, 0.0, spectra::FrequencyConvention::Angular},
        {{0.4, 0.8, 3.0, 0.5}, 1.5, spectra::FrequencyConvention::Angular},
        {{2.0, 1.0, 5.0, 0.2}, -0.7, spectra::FrequencyConvention::TwoPi},
    };
    for (const Case &c : cases) {
        const double rate = spectra::phase_rate(c.spec.delta_n, c.conv);
        // Sample until the envelope is below 1e-6 (sigma * rate * t = 6).
        const double t_end = 6.0 / (c.spec.sigma * std::abs(rate));
        spectra::DecoherenceTrajectory traj;
        traj.t = spectra::linspace(0, t_end, 240);
        for (double t : traj.t) {
            // Closed form at the equivalent angular time.
            spectra::DoubleGaussianSpec unit = c.spec;
            unit.delta_n = 1.0;
            traj.kappa.push_back(spectra::kappa_double_gaussian(unit, rate * t, c.center));
        }
        const auto res = spectra::synthesize_spectrum(traj, c.spec.delta_n, c.conv);
        const auto back = spectra::kappa_trajectory(res.profile, c.spec.delta_n, traj.t, c.conv);
        for (size_t k = 0; k < traj.size(); ++k) {
            worst = std::max(worst, std::abs(back.kappa[k] - traj.kappa[k]));
        }
        o.expect(res.realizable, "input flagged unrealizable");
    }
    o.expect(worst < 1e-6, "max round-trip error " + fmt(worst));
    if (o.ok) {
        o.detail = "max round-trip error " + fmt(worst);
    }
    return o;
}

// 6
Outcome superdense_coding() {
    Outcome o;
    const auto t = spectra::linspace(0, 4, 81);
    double worst_flat = 0;
    for (const auto &pt : sdc::fig4_curve({1.0, -1.0, 1.0}, sdc::EncodingScheme::four_state(), t)) {
        worst_flat = std::max(worst_flat, std::abs(pt.mutual_information - 2.0));
    }
    o.expect(worst_flat < 1e-6, "K = -1 curve deviates by " + fmt(worst_flat));
    for (double k : spectra::linspace(-1, 1, 21)) {
        const sdc::CorrelatedSpectrum spec{1.0, k, 1.0};
        const auto four = sdc::fig4_curve(spec, sdc::EncodingScheme::four_state(), t);
        const auto three = sdc::fig4_curve(spec, sdc::EncodingScheme::three_state(), t);
        for (size_t i = 0; i < t.size(); ++i) {
            const double cap = sdc::capacity(four[i].c_a, k);
            o.expect(four[i].mutual_information >= three[i].mutual_information, "4-state below 3-state");
            o.expect(four[i].mutual_information <= cap + 1e-9, "4-state MI above capacity");
            o.expect(three[i].mutual_information <= cap + 1e-9, "3-state MI above capacity");
        }
    }
    const double cap = sdc::capacity(0.5, 0.0);
    const double oracle = 2.0 - testing::entropy_bits(0.625);
    o.expect(std::abs(cap - 1.0456) < 1e-4, "capacity(0.5, 0) = " + fmt(cap));
    o.expect(std::abs(cap - oracle) < 1e-12, "capacity disagrees with entropy oracle");
    if (o.ok) {
        o.detail = "capacity(0.5, 0) = " + fmt(cap) + ", K = -1 deviation " + fmt(worst_flat);
    }
    return o;
}

// 7
Outcome rdja() {
    Outcome o;
    const double ideal = nv::rdja_p0_noiseless(nv::Gate::U1) - nv::rdja_p0_noiseless(nv::Gate::U3);
    o.expect(std::abs(ideal - 1.0) < 1e-15, "noiseless contrast " + fmt(ideal));

    const double a = 2 * kPi * 2.16;
    const nv::NVParams flat = nv::NVParams::noiseless(a);
    const double t = 0.6;
    const auto taus = spectra::linspace(0, 2 * t, 241);
    for (double phi : {0.0, kPi / 4, kPi / 2}) {
        const auto sweep = nv::rdja_success(flat, {phi}, t, taus);
        const auto best = std::max_element(sweep.begin(), sweep.end(),
                                           [](const auto &x, const auto &y) { return x.contrast < y.contrast; });
        o.expect(std::abs(best->tau - t) < 1e-12, "flat-envelope optimum at tau = " + fmt(best->tau));
        o.expect(std::abs(best->contrast - 1.0) < 1e-12, "flat-envelope peak " + fmt(best->contrast));
    }

    const nv::NVParams decaying{a, 10 * 2 * kPi / a, nv::EnvelopeShape::Gaussian};
    const nv::NuclearPrep prep{kPi / 2};
    const double t_read = kPi / a * 1.02;
    const double baseline = nv::rdja_contrast_no_dd(decaying, prep, t_read);
    double best = -1;
    for (const auto &pt : nv::rdja_success(decaying, prep, t_read, spectra::linspace(0, 2 * t_read, 201))) {
        best = std::max(best, pt.contrast);
    }
    o.expect(best > baseline, "delayed readout " + fmt(best) + " vs immediate " + fmt(baseline));
    if (o.ok) {
        o.detail = "delayed " + fmt(best) + " vs immediate " + fmt(baseline);
    }
    return o;
}

// 8
Outcome nv_model() {
    Outcome o;
    const double a = 2 * kPi * 2.16;
    const auto phis = spectra::linspace(0, kPi / 2, 41);
    for (double multiple : {10.0, 20.0, 50.0}) {
        for (auto shape : {nv::EnvelopeShape::Gaussian, nv::EnvelopeShape::Exponential}) {
            const nv::NVParams p{a, multiple * 2 * kPi / a, shape};
            const auto t = spectra::linspace(0, 2 * p.envelope_T, 8001);
            const auto res = nv::nm_measure_phi(p, phis, t);
            o.expect(res.front().n_prime == 0.0, "N'(0) = " + fmt(res.front().n_prime));
            for (size_t k = 1; k < res.size(); ++k) {
                o.expect(res[k].n_prime >= res[k - 1].n_prime, "N' decreases at phi = " + fmt(res[k].phi));
            }
        }
    }
    const auto plus = qcore::DensityMatrix::from_bloch(1, 0, 0);
    const auto minus = qcore::DensityMatrix::from_bloch(-1, 0, 0);
    const nv::NVParams p{a, 10 * 2 * kPi / a, nv::EnvelopeShape::Gaussian};
    double worst = 0;
    for (double phi : spectra::linspace(0, kPi, 13)) {
        for (double t : spectra::linspace(0, 5, 201)) {
            const auto map = spectra::dephasing_channel(nv::nv_kappa(p, {phi}, t));
            const double d = qcore::trace_distance(map.apply(plus), map.apply(minus));
            worst = std::max(worst, std::abs(d - nv::bloch_magnitude(p, {phi}, t)));
        }
    }
    o.expect(worst < 1e-12, "r(t) vs trace distance " + fmt(worst));
    if (o.ok) {
        o.detail = "r(t) vs trace distance " + fmt(worst);
    }
    return o;
}

// 9
Outcome qcore_properties() {
    Outcome o;
    std::mt19937_64 rng(20261017);
    for (int k = 0; k < 1000; ++k) {
        const int dim = k % 2 == 0 ? 2 : 4;
        const auto a = testing::random_state(rng, dim);
        const auto b = testing::random_state(rng, dim);
        const auto c = testing::random_state(rng, dim);
        const double ab = qcore::trace_distance(a, b);
        o.expect(ab >= 0 && ab <= 1 + 1e-12, "trace distance out of [0, 1]");
        o.expect(std::abs(ab - qcore::trace_distance(b, a)) < 1e-12, "trace distance not symmetric");
        o.expect(qcore::trace_distance(a, a) < 1e-12, "d(a, a) != 0");
        o.expect(ab <= qcore::trace_distance(a, c) + qcore::trace_distance(c, b) + 1e-10, "triangle inequality");
    }
    double worst_c = 0;
    for (int k = 0; k < 1000; ++k) {
        const auto q = testing::random_simplex(rng);
        const double expected = std::max(0.0, 2 * *std::max_element(q.begin(), q.end()) - 1);
        worst_c = std::max(worst_c, std::abs(qcore::concurrence(qcore::bell_diagonal(q[0], q[1], q[2], q[3])) - expected));
    }
    o.expect(worst_c < 1e-10, "Bell-diagonal concurrence off by " + fmt(worst_c));
    std::uniform_real_distribution<double> lam(-1.5, 1.5);
    for (int k = 0; k < 1000; ++k) {
        const qcore::PauliChannel ch{lam(rng), lam(rng), lam(rng)};
        const auto w = qcore::kraus_weights(ch);
        const auto back = qcore::PauliChannel::from_weights(w.i, w.x, w.y, w.z);
        o.expect(std::abs(back.x - ch.x) < 1e-12 && std::abs(back.y - ch.y) < 1e-12 && std::abs(back.z - ch.z) < 1e-12,
                 "Kraus round trip");
    }
    std::uniform_real_distribution<double> eps_dist(0, 0.5);
    double worst_op = 0;
    for (int k = 0; k < 20; ++k) {
        const double eps = eps_dist(rng);
        const auto rho = testing::random_state(rng, 2);
        const auto p = collision::joint_probabilities(eps);
        const collision::Op ops[] = {collision::Op::I, collision::Op::X, collision::Op::Z};
        auto mat = [](collision::Op op) {
            return op == collision::Op::I ? qcore::pauli_i() : op == collision::Op::X ? qcore::pauli_x() : qcore::pauli_z();
        };
        MatX expected = MatX::Zero(2, 2);
        for (auto i : ops) {
            for (auto j : ops) {
                const Mat2 u = mat(j) * mat(i);
                expected += p(i, j) * u * rho.matrix() * u.adjoint();
            }
        }
        const MatX got = qcore::apply_channel(collision::two_collision_channel(eps), rho).matrix();
        worst_op = std::max(worst_op, (got - expected).cwiseAbs().maxCoeff());
    }
    o.expect(worst_op < 1e-12, "operator-product oracle off by " + fmt(worst_op));
    if (o.ok) {
        o.detail = "concurrence " + fmt(worst_c) + ", operator products " + fmt(worst_op);
    }
    return o;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 10
Outcome cli_determinism() {
    Outcome o;
    const fs::path root = fs::temp_directory_path() / ("nmlab_acceptance_" + std::to_string(::getpid()));
    fs::remove_all(root);
    fs::create_directories(root);
    {
        spectra::DecoherenceTrajectory traj;
        traj.t = spectra::linspace(0, 8, 161);
        for (double t : traj.t) {
            traj.kappa.push_back(spectra::kappa_double_gaussian({1.0, 1.0, 4.0, 1.0}, t));
        }
        std::ofstream(root / "kappa.csv", std::ios::binary) << spectra::trajectory_to_csv(traj);
    }
    int files = 0;
    for (auto name : cli::scenario_names()) {
        const std::string n(name);
        const fs::path cfg = root / (n + ".json");
        std::ofstream(cfg, std::ios::binary) << cli::config_template(*cli::parse_scenario(name)).dump(2);
        for (const char *run : {"a", "b"}) {
            const std::string cmd = std::string(NMLAB_EXE) + " " + n + " --config " + cfg.string() + " --out " +
                                    (root / (n + "_" + run)).string() + " >/dev/null 2>&1";
            const int status = std::system(cmd.c_str());
            o.expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, n + " run failed");
        }
        for (const auto &entry : fs::directory_iterator(root / (n + "_a"))) {
            if (entry.path().extension() != ".csv") {
                continue;
            }
            ++files;
            const auto other = root / (n + "_b") / entry.path().filename();
            o.expect(slurp(entry.path()) == slurp(other), entry.path().filename().string() + " differs");
        }
    }
    o.expect(files >= 10, "only " + std::to_string(files) + " CSV files produced");
    fs::remove_all(root);
    if (o.ok) {
        o.detail = std::to_string(files) + " CSV files identical across two runs";
    }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"collision weak-to-strong transition", collision_transition},
        {"entanglement witness coincides with positivity breaking", entanglement_witness},
        {"double-Gaussian closed form matches quadrature", closed_form_vs_quadrature},
        {"revival measure regimes and grid stability", blp_regimes},
        {"spectral synthesis round trip", synthesis_round_trip},
        {"superdense coding with anti-correlated noise", superdense_coding},
        {"delayed readout in the Deutsch-Jozsa echo protocol", rdja},
        {"NV nuclear-angle non-Markovianity", nv_model},
        {"qcore property suite", qcore_properties},
        {"CLI determinism", cli_determinism},
    };
    int failed = 0;
    int index = 0;
    for (const auto &[name, fn] : criteria) {
        ++index;
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception &e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("[%s] %2d %s: %s\n", o.ok ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
