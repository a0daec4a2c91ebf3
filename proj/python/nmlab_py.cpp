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


// Python bindings for the nmlab core.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nmlab/collision.hpp"
#include "nmlab/nvmodel.hpp"
#include "nmlab/qcore.hpp"
#include "nmlab/sdc.hpp"
#include "nmlab/spectra.hpp"

namespace py = pybind11;
using namespace nmlab;

namespace {

spectra::FrequencyConvention conv(bool two_pi) {
    return two_pi ? spectra::FrequencyConvention::TwoPi : spectra::FrequencyConvention::Angular;
}

qcore::DensityMatrix state(const MatX &m) { return qcore::DensityMatrix(m); }

}  // namespace

PYBIND11_MODULE(_nmlab, m) {
    m.doc() = "Engineered qubit decoherence: channels, spectra, collision model, NV and superdense-coding models";

    py::register_exception<SingularChannelError>(m, "SingularChannelError", PyExc_ValueError);

    // qcore
    py::class_<qcore::PauliChannel>(m, "PauliChannel")
        .def(py::init<double, double, double>(), py::arg("x") = 1.0, py::arg("y") = 1.0, py::arg("z") = 1.0)
        .def_readwrite("x", &qcore::PauliChannel::x)
        .def_readwrite("y", &qcore::PauliChannel::y)
        .def_readwrite("z", &qcore::PauliChannel::z)
        .def_static("from_weights", &qcore::PauliChannel::from_weights, py::arg("q_i"), py::arg("q_x"),
                    py::arg("q_y"), py::arg("q_z"))
        .def("eigenvalues", &qcore::PauliChannel::eigenvalues)
        .def("__repr__", [](const qcore::PauliChannel &c) {
            return "PauliChannel(" + std::to_string(c.x) + ", " + std::to_string(c.y) + ", " + std::to_string(c.z) +
                   ")";
        });

    m.def("compose", &qcore::compose, py::arg("second"), py::arg("first"));
    m.def(
        "kraus_weights",
        [](const qcore::PauliChannel &ch) {
            const auto w = qcore::kraus_weights(ch);
            return std::array<double, 4>{w.i, w.x, w.y, w.z};
        },
        py::arg("channel"), "Pauli weights (q_I, q_x, q_y, q_z).");
    m.def("choi_matrix", &qcore::choi_matrix, py::arg("channel"));
    m.def("is_cp", &qcore::is_cp, py::arg("channel"), py::arg("tol") = qcore::kPredicateTol);
    m.def("is_positive", &qcore::is_positive, py::arg("channel"), py::arg("tol") = qcore::kPredicateTol);
    m.def("divide_channels", &qcore::divide_channels, py::arg("later"), py::arg("earlier"),
          py::arg("singular_threshold") = qcore::kSingularThreshold);
    m.def(
        "trace_distance", [](const MatX &a, const MatX &b) { return qcore::trace_distance(state(a), state(b)); },
        py::arg("rho"), py::arg("sigma"));
    m.def(
        "concurrence", [](const MatX &rho) { return qcore::concurrence(state(rho)); }, py::arg("rho"));
    m.def(
        "apply_channel",
        [](const qcore::PauliChannel &ch, const MatX &rho) { return qcore::apply_channel(ch, state(rho)).matrix(); },
        py::arg("channel"), py::arg("rho"));
    m.def(
        "apply_channel_one_sided",
        [](const qcore::PauliChannel &ch, const MatX &rho) {
            return qcore::apply_channel_one_sided(ch, state(rho)).matrix();
        },
        py::arg("channel"), py::arg("rho"));
    m.def(
        "bell_diagonal",
        [](double a, double b, double c, double d) { return qcore::bell_diagonal(a, b, c, d).matrix(); },
        py::arg("phi_plus"), py::arg("phi_minus"), py::arg("psi_plus"), py::arg("psi_minus"));

    // collision
    py::enum_<collision::Classification>(m, "Classification")
        .value("MARKOVIAN", collision::Classification::Markovian)
        .value("WEAK", collision::Classification::WeakNM)
        .value("STRONG", collision::Classification::StrongNM)
        .value("SINGULAR", collision::Classification::Singular);

    py::class_<collision::DivisibilityVerdict>(m, "DivisibilityVerdict")
        .def_readonly("classification", &collision::DivisibilityVerdict::classification)
        .def_readonly("min_choi_eigenvalue", &collision::DivisibilityVerdict::min_choi_eigenvalue)
        .def_readonly("max_abs_bloch_eigenvalue", &collision::DivisibilityVerdict::max_abs_bloch_eigenvalue)
        .def_property_readonly("label", [](const collision::DivisibilityVerdict &v) {
            return std::string(collision::to_string(v.classification));
        });

    m.def(
        "joint_probabilities",
        [](double eps) { return collision::joint_probabilities(eps).p; }, py::arg("epsilon"),
        "3x3 nested list p[i][j] over operators (I, X, Z).");
    m.def("first_collision_channel", &collision::first_collision_channel, py::arg("epsilon"));
    m.def("two_collision_channel", &collision::two_collision_channel, py::arg("epsilon"));
    m.def("intermediate_channel", &collision::intermediate_channel, py::arg("epsilon"));
    m.def("classify", &collision::classify, py::arg("epsilon"), py::arg("tol") = qcore::kPredicateTol);
    m.def("find_transition", &collision::find_transition, py::arg("tol") = 1e-12);
    m.def(
        "entanglement_dynamics",
        [](double eps) {
            const auto e = collision::entanglement_dynamics(eps);
            return std::pair{e.c1, e.c2};
        },
        py::arg("epsilon"));

    // spectra
    py::class_<spectra::DoubleGaussianSpec>(m, "DoubleGaussianSpec")
        .def(py::init([](double a, double sigma, double dw, double dn) {
                 spectra::DoubleGaussianSpec s{a, sigma, dw, dn};
                 s.validate();
                 return s;
             }),
             py::arg("a_theta"), py::arg("sigma"), py::arg("delta_omega"), py::arg("delta_n") = 1.0)
        .def_readonly("a_theta", &spectra::DoubleGaussianSpec::a_theta)
        .def_readonly("sigma", &spectra::DoubleGaussianSpec::sigma)
        .def_readonly("delta_omega", &spectra::DoubleGaussianSpec::delta_omega)
        .def_readonly("delta_n", &spectra::DoubleGaussianSpec::delta_n);

    m.def("kappa_double_gaussian_mag", &spectra::kappa_double_gaussian_mag, py::arg("spec"), py::arg("t"));
    m.def("kappa_double_gaussian", &spectra::kappa_double_gaussian, py::arg("spec"), py::arg("t"),
          py::arg("center") = 0.0);
    m.def(
        "double_gaussian_profile",
        [](const spectra::DoubleGaussianSpec &spec, double center, int n) {
            const auto p = spectra::double_gaussian_profile(spec, center, n);
            return py::make_tuple(p.omega, p.density, p.phase);
        },
        py::arg("spec"), py::arg("center") = 0.0, py::arg("n_points") = spectra::kDefaultQuadraturePoints,
        "(omega, density, phase) lists.");
    m.def(
        "kappa_trajectory",
        [](std::vector<double> omega, std::vector<double> density, std::vector<double> phase, double dn,
           std::vector<double> t, bool two_pi) {
            const spectra::SpectralProfile p{std::move(omega), std::move(density), std::move(phase)};
            return spectra::kappa_trajectory(p, dn, t, conv(two_pi)).kappa;
        },
        py::arg("omega"), py::arg("density"), py::arg("phase"), py::arg("delta_n"), py::arg("t"),
        py::arg("two_pi") = false);
    m.def(
        "blp_measure", [](const std::vector<double> &mags) { return spectra::blp_measure(mags); },
        py::arg("magnitudes"));
    m.def(
        "synthesize_spectrum",
        [](std::vector<double> t, std::vector<std::complex<double>> kappa, double dn, bool two_pi) {
            const spectra::DecoherenceTrajectory traj{std::move(t), std::move(kappa)};
            const auto r = spectra::synthesize_spectrum(traj, dn, conv(two_pi));
            py::dict d;
            d["omega"] = r.profile.omega;
            d["density"] = r.profile.density;
            d["phase"] = r.profile.phase;
            d["round_trip_error"] = r.round_trip_error;
            d["tail_magnitude"] = r.tail_magnitude;
            d["realizable"] = r.realizable;
            return d;
        },
        py::arg("t"), py::arg("kappa"), py::arg("delta_n"), py::arg("two_pi") = false);

    // nvmodel
    py::enum_<nv::Gate>(m, "Gate")
        .value("U1", nv::Gate::U1)
        .value("U2", nv::Gate::U2)
        .value("U3", nv::Gate::U3)
        .value("U4", nv::Gate::U4);

    py::class_<nv::NVParams>(m, "NVParams")
        .def(py::init([](double a, double env_t, const std::string &shape) {
                 nv::NVParams p{a, env_t, nv::envelope_shape_from_string(shape)};
                 p.validate();
                 return p;
             }),
             py::arg("hyperfine") = nv::NVParams{}.hyperfine, py::arg("envelope_T") = nv::NVParams{}.envelope_T,
             py::arg("envelope_shape") = "gaussian")
        .def_readonly("hyperfine", &nv::NVParams::hyperfine)
        .def_readonly("envelope_T", &nv::NVParams::envelope_T)
        .def("envelope", &nv::NVParams::envelope, py::arg("t"));

    m.def(
        "nv_kappa", [](const nv::NVParams &p, double phi, double t) { return nv::nv_kappa(p, {phi}, t); },
        py::arg("params"), py::arg("phi"), py::arg("t"));
    m.def(
        "bloch_magnitude", [](const nv::NVParams &p, double phi, double t) { return nv::bloch_magnitude(p, {phi}, t); },
        py::arg("params"), py::arg("phi"), py::arg("t"));
    m.def(
        "nm_measure_phi",
        [](const nv::NVParams &p, const std::vector<double> &phi, const std::vector<double> &t) {
            std::vector<std::pair<double, double>> out;
            for (const auto &x : nv::nm_measure_phi(p, phi, t)) {
                out.emplace_back(x.phi, x.n_prime);
            }
            return out;
        },
        py::arg("params"), py::arg("phi"), py::arg("t"));
    m.def("rdja_p0_noiseless", &nv::rdja_p0_noiseless, py::arg("gate"));
    m.def(
        "rdja_p0",
        [](const nv::NVParams &p, double phi, double t, double tau, nv::Gate g, bool dd) {
            return nv::rdja_p0(p, {phi}, {t, tau, g, dd});
        },
        py::arg("params"), py::arg("phi"), py::arg("t"), py::arg("tau"), py::arg("gate"), py::arg("dd_pulse") = true);
    m.def(
        "rdja_success",
        [](const nv::NVParams &p, double phi, double t, const std::vector<double> &tau) {
            std::vector<std::pair<double, double>> out;
            for (const auto &x : nv::rdja_success(p, {phi}, t, tau)) {
                out.emplace_back(x.tau, x.contrast);
            }
            return out;
        },
        py::arg("params"), py::arg("phi"), py::arg("t"), py::arg("tau"));
    m.def(
        "rdja_contrast_no_dd",
        [](const nv::NVParams &p, double phi, double t) { return nv::rdja_contrast_no_dd(p, {phi}, t); },
        py::arg("params"), py::arg("phi"), py::arg("t"));

    // sdc
    m.def("capacity", &sdc::capacity, py::arg("c_a"), py::arg("k"));
    m.def("binary_entropy", &sdc::binary_entropy, py::arg("x"));
    m.def(
        "joint_kappa",
        [](double sigma, double k, double dn, double ta, double tb) { return sdc::joint_kappa({sigma, k, dn}, ta, tb); },
        py::arg("sigma"), py::arg("k"), py::arg("delta_n"), py::arg("t_a"), py::arg("t_b"));
    m.def(
        "concurrence_at_encoding",
        [](double sigma, double k, double dn, double ta) { return sdc::concurrence_at_encoding({sigma, k, dn}, ta); },
        py::arg("sigma"), py::arg("k"), py::arg("delta_n"), py::arg("t_a"));
    m.def(
        "simulate_protocol",
        [](double sigma, double k, double dn, double ta, double tb, int n_states) {
            return sdc::simulate_protocol({sigma, k, dn}, ta, tb, sdc::EncodingScheme::with_states(n_states));
        },
        py::arg("sigma"), py::arg("k"), py::arg("delta_n"), py::arg("t_a"), py::arg("t_b"), py::arg("n_states") = 4);
}
