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


#include "nmlab/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <Eigen/Core>

#include "nmlab/collision.hpp"
#include "nmlab/csv.hpp"
#include "nmlab/nvmodel.hpp"
#include "nmlab/sdc.hpp"
#include "nmlab/spectra.hpp"

namespace nmlab::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

constexpr std::array<std::pair<Scenario, std::string_view>, 8> kScenarios{{
    {Scenario::Fig1, "fig1"},
    {Scenario::Fig2, "fig2"},
    {Scenario::Fig3, "fig3"},
    {Scenario::Fig4, "fig4"},
    {Scenario::Fig5, "fig5"},
    {Scenario::Fig6, "fig6"},
    {Scenario::Classify, "classify"},
    {Scenario::Synth, "synth"},
}};

class IoError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Collects violations while reading typed values out of the parameter object.
class Checker {
   public:
    explicit Checker(const json &params) : params_(params) {}

    std::vector<Violation> take() { return std::move(violations_); }

    void fail(const std::string &key, const std::string &message) { violations_.push_back({key, message}); }

    std::optional<double> number(const std::string &key) {
        if (!present(key)) {
            return std::nullopt;
        }
        const json &v = params_.at(key);
        if (!v.is_number()) {
            fail(key, "must be a number");
            return std::nullopt;
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            fail(key, "must be finite");
            return std::nullopt;
        }
        return d;
    }

    std::optional<long> integer(const std::string &key) {
        if (!present(key)) {
            return std::nullopt;
        }
        const json &v = params_.at(key);
        if (!v.is_number_integer()) {
            fail(key, "must be an integer");
            return std::nullopt;
        }
        return v.get<long>();
    }

    std::optional<std::vector<double>> numbers(const std::string &key) {
        if (!present(key)) {
            return std::nullopt;
        }
        const json &v = params_.at(key);
        if (!v.is_array() || v.empty()) {
            fail(key, "must be a nonempty array of numbers");
            return std::nullopt;
        }
        std::vector<double> out;
        for (const json &e : v) {
            if (!e.is_number() || !std::isfinite(e.get<double>())) {
                fail(key, "must be a nonempty array of numbers");
                return std::nullopt;
            }
            out.push_back(e.get<double>());
        }
        return out;
    }

    std::optional<std::string> string(const std::string &key) {
        if (!present(key)) {
            return std::nullopt;
        }
        const json &v = params_.at(key);
        if (!v.is_string()) {
            fail(key, "must be a string");
            return std::nullopt;
        }
        return v.get<std::string>();
    }

    std::optional<bool> boolean(const std::string &key) {
        if (!present(key)) {
            return std::nullopt;
        }
        const json &v = params_.at(key);
        if (!v.is_boolean()) {
            fail(key, "must be true or false");
            return std::nullopt;
        }
        return v.get<bool>();
    }

    void require(bool ok, const std::string &key, const std::string &message) {
        if (!ok) {
            fail(key, message);
        }
    }

   private:
    bool present(const std::string &key) {
        if (!params_.contains(key)) {
            fail(key, "required key is missing");
            return false;
        }
        return true;
    }

    const json &params_;
    std::vector<Violation> violations_;
};

template <typename T>
bool holds(const std::optional<T> &v, auto pred) {
    return !v || pred(*v);
}

void check_time_grid(Checker &c, const std::string &prefix) {
    const auto lo = c.number(prefix + "_min");
    const auto hi = c.number(prefix + "_max");
    const auto n = c.integer(prefix + "_points");
    c.require(holds(lo, [](double v) { return v >= 0; }), prefix + "_min", prefix + " must be >= 0");
    if (lo && hi) {
        c.require(*hi > *lo, prefix + "_max", prefix + "_max must be > " + prefix + "_min");
    }
    c.require(holds(n, [](long v) { return v >= 2 && v <= 1000000; }), prefix + "_points",
              prefix + "_points must be in [2, 1000000]");
}

void check_nv(Checker &c) {
    const auto a = c.number("hyperfine");
    const auto env_t = c.number("envelope_T");
    const auto shape = c.string("envelope_shape");
    c.require(holds(a, [](double v) { return v > 0; }), "hyperfine", "hyperfine must be > 0");
    c.require(holds(env_t, [](double v) { return v > 0; }), "envelope_T", "envelope_T must be > 0");
    c.require(holds(shape, [](const std::string &s) { return s == "gaussian" || s == "exponential"; }),
              "envelope_shape", "envelope_shape must be 'gaussian' or 'exponential'");
}

bool phi_ok(double v) { return v >= 0 && v <= std::numbers::pi; }

void check_synthesis(Checker &c) {
    const auto input = c.string("input");
    const auto dn = c.number("delta_n");
    c.boolean("two_pi_convention");
    c.require(holds(input, [](const std::string &s) { return !s.empty(); }), "input", "input path must be nonempty");
    c.require(holds(dn, [](double v) { return v != 0; }), "delta_n", "delta_n must be nonzero");
}

std::vector<double> time_grid(const json &p, const std::string &prefix) {
    return spectra::linspace(p.at(prefix + "_min").get<double>(), p.at(prefix + "_max").get<double>(),
                             p.at(prefix + "_points").get<int>());
}

nv::NVParams nv_params(const json &p) {
    return {p.at("hyperfine").get<double>(), p.at("envelope_T").get<double>(),
            nv::envelope_shape_from_string(p.at("envelope_shape").get<std::string>())};
}

// Decimal-grid sweep; rounding keeps values such as 0.26 exact in the output.
std::vector<double> decimal_sweep(double lo, double hi, double step) {
    const long n = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        const double v = std::round((lo + static_cast<double>(i) * step) * 1e12) / 1e12;
        out.push_back(std::min(v, hi));
    }
    return out;
}

struct ScenarioOutput {
    std::vector<std::pair<std::string, std::string>> files;
    json results = json::object();
};

std::string read_file(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read input file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

spectra::DecoherenceTrajectory load_trajectory(const RunConfig &cfg) {
    fs::path input = cfg.parameters.at("input").get<std::string>();
    if (input.is_relative()) {
        input = cfg.base_dir / input;
    }
    return spectra::trajectory_from_csv(read_file(input));
}

spectra::FrequencyConvention convention(const json &p) {
    return p.at("two_pi_convention").get<bool>() ? spectra::FrequencyConvention::TwoPi
                                                 : spectra::FrequencyConvention::Angular;
}

ScenarioOutput run_fig1(const json &p) {
    const auto t = time_grid(p, "t");
    csv::Writer w({"t", "A_theta", "kappa_mag"});
    json blp = json::array();
    for (double a : p.at("A_theta").get<std::vector<double>>()) {
        const spectra::DoubleGaussianSpec spec{a, p.at("sigma").get<double>(), p.at("delta_omega").get<double>(),
                                               p.at("delta_n").get<double>()};
        std::vector<double> mags;
        mags.reserve(t.size());
        for (double ti : t) {
            mags.push_back(spectra::kappa_double_gaussian_mag(spec, ti));
            w.cell(ti).cell(a).cell(mags.back());
            w.end_row();
        }
        blp.push_back({{"A_theta", a}, {"blp", spectra::blp_measure(mags)}});
    }
    return {{{"fig1.csv", w.str()}}, {{"blp_measure", blp}}};
}

ScenarioOutput run_fig2(const json &p) {
    const auto eps = decimal_sweep(p.at("epsilon_min").get<double>(), p.at("epsilon_max").get<double>(),
                                   p.at("epsilon_step").get<double>());
    csv::Writer w({"epsilon", "C1", "C2", "C2_minus_C1", "classification"});
    for (double e : eps) {
        const auto ent = collision::entanglement_dynamics(e);
        const auto verdict = collision::classify(e);
        w.cell(e).cell(ent.c1).cell(ent.c2).cell(ent.c2 - ent.c1).cell(collision::to_string(verdict.classification));
        w.end_row();
    }
    return {{{"fig2.csv", w.str()}}, {{"transition_epsilon", collision::find_transition()}}};
}

ScenarioOutput run_fig3(const json &p) {
    const nv::NVParams params = nv_params(p);
    const auto t = time_grid(p, "t");
    csv::Writer bloch({"t", "phi", "r"});
    for (double phi : p.at("phi").get<std::vector<double>>()) {
        for (double ti : t) {
            bloch.cell(ti).cell(phi).cell(nv::bloch_magnitude(params, {phi}, ti));
            bloch.end_row();
        }
    }
    const auto phis = spectra::linspace(0.0, std::numbers::pi, p.at("phi_scan_points").get<int>());
    csv::Writer nm({"phi", "N_prime"});
    for (const auto &pt : nv::nm_measure_phi(params, phis, t)) {
        nm.cell(pt.phi).cell(pt.n_prime);
        nm.end_row();
    }
    return {{{"fig3_bloch.csv", bloch.str()}, {"fig3_nm.csv", nm.str()}}, json::object()};
}

ScenarioOutput run_fig4(const json &p) {
    const sdc::CorrelatedSpectrum spec{p.at("sigma").get<double>(), p.at("K").get<double>(),
                                       p.at("delta_n").get<double>()};
    const auto t = time_grid(p, "t");
    const auto four = sdc::EncodingScheme::four_state();
    const auto three = sdc::EncodingScheme::three_state();
    const auto mi4 = sdc::fig4_curve(spec, four, t, true);
    const auto mi3 = sdc::fig4_curve(spec, three, t, true);
    const auto alice4 = sdc::fig4_curve(spec, four, t, false);
    const auto alice3 = sdc::fig4_curve(spec, three, t, false);
    csv::Writer w({"t", "c_A", "capacity", "MI_4state", "MI_3state", "MI_4state_alice_only", "MI_3state_alice_only"});
    for (size_t k = 0; k < t.size(); ++k) {
        w.cell(t[k]).cell(mi4[k].c_a).cell(sdc::capacity(mi4[k].c_a, spec.k));
        w.cell(mi4[k].mutual_information).cell(mi3[k].mutual_information);
        w.cell(alice4[k].mutual_information).cell(alice3[k].mutual_information);
        w.end_row();
    }
    return {{{"fig4.csv", w.str()}}, json::object()};
}

ScenarioOutput run_fig5(const json &p) {
    const nv::NVParams params = nv_params(p);
    const nv::NuclearPrep prep{p.at("phi").get<double>()};
    const double t = p.at("t").get<double>();
    const auto taus = time_grid(p, "tau");
    csv::Writer w({"tau", "P0_U1", "P0_U2", "P0_U3", "P0_U4", "contrast"});
    double best_tau = taus.front();
    double best = -2.0;
    for (double tau : taus) {
        std::array<double, 4> p0{};
        const std::array<nv::Gate, 4> gates{nv::Gate::U1, nv::Gate::U2, nv::Gate::U3, nv::Gate::U4};
        for (size_t g = 0; g < gates.size(); ++g) {
            p0[g] = nv::rdja_p0(params, prep, {t, tau, gates[g], true});
        }
        const double contrast = p0[0] - p0[2];
        if (contrast > best) {
            best = contrast;
            best_tau = tau;
        }
        w.cell(tau).cell(p0[0]).cell(p0[1]).cell(p0[2]).cell(p0[3]).cell(contrast);
        w.end_row();
    }
    json results{{"contrast_no_dd", nv::rdja_contrast_no_dd(params, prep, t)},
                 {"best_tau", best_tau},
                 {"best_contrast", best}};
    return {{{"fig5.csv", w.str()}}, results};
}

ScenarioOutput run_synthesis(const RunConfig &cfg, bool simulate) {
    const json &p = cfg.parameters;
    const auto target = load_trajectory(cfg);
    const double dn = p.at("delta_n").get<double>();
    const auto conv = convention(p);
    const auto synth = spectra::synthesize_spectrum(target, dn, conv);
    json results{{"round_trip_error", synth.round_trip_error},
                 {"realizable", synth.realizable},
                 {"tail_magnitude", synth.tail_magnitude},
                 {"omega_points", synth.profile.size()}};
    if (!simulate) {
        return {{{"spectrum.csv", spectra::profile_to_csv(synth.profile)}}, results};
    }
    const auto simulated = spectra::kappa_trajectory(synth.profile, dn, target.t, conv);
    csv::Writer w({"t", "target_abs", "simulated_abs", "simulated_re", "simulated_im"});
    for (size_t k = 0; k < target.size(); ++k) {
        w.cell(target.t[k]).cell(std::abs(target.kappa[k])).cell(std::abs(simulated.kappa[k]));
        w.cell(simulated.kappa[k].real()).cell(simulated.kappa[k].imag());
        w.end_row();
    }
    results["blp_target"] = spectra::blp_measure(target);
    results["blp_simulated"] = spectra::blp_measure(simulated);
    return {{{"fig6_spectrum.csv", spectra::profile_to_csv(synth.profile)}, {"fig6_kappa.csv", w.str()}}, results};
}

std::vector<double> epsilon_list(const json &p) {
    const json &e = p.at("epsilon");
    return e.is_array() ? e.get<std::vector<double>>() : std::vector<double>{e.get<double>()};
}

ScenarioOutput run_classify(const json &p) {
    const auto eps = epsilon_list(p);
    for (double e : eps) {
        if (std::abs(e - collision::kSingularEpsilon) <= collision::kSingularWindow) {
            throw SingularChannelError(
                "epsilon = 0.25: the first-collision map has a zero eigenvalue, so the intermediate map is undefined");
        }
    }
    csv::Writer w({"epsilon", "classification", "min_choi_eigenvalue", "max_abs_bloch_eigenvalue"});
    for (double e : eps) {
        const auto v = collision::classify(e);
        w.cell(e).cell(collision::to_string(v.classification)).cell(v.min_choi_eigenvalue);
        w.cell(v.max_abs_bloch_eigenvalue);
        w.end_row();
    }
    return {{{"classify.csv", w.str()}}, json::object()};
}

ScenarioOutput execute(const RunConfig &cfg) {
    const json &p = cfg.parameters;
    switch (cfg.scenario) {
        case Scenario::Fig1:
            return run_fig1(p);
        case Scenario::Fig2:
            return run_fig2(p);
        case Scenario::Fig3:
            return run_fig3(p);
        case Scenario::Fig4:
            return run_fig4(p);
        case Scenario::Fig5:
            return run_fig5(p);
        case Scenario::Fig6:
            return run_synthesis(cfg, true);
        case Scenario::Synth:
            return run_synthesis(cfg, false);
        case Scenario::Classify:
            return run_classify(p);
    }
    throw std::logic_error("unknown scenario");
}

std::string sha256_hex(const std::string &data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("sha256 failed");
    }
    static constexpr char kHex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; ++k) {
        out += kHex[md[k] >> 4];
        out += kHex[md[k] & 0xF];
    }
    return out;
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

void write_file(const fs::path &path, const std::string &data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << data;
    out.flush();
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

void report(std::ostream &err, std::string_view kind, const std::string &message,
            const std::vector<Violation> &violations = {}) {
    json j{{"error", kind}, {"message", message}};
    if (!violations.empty()) {
        json v = json::array();
        for (const Violation &x : violations) {
            v.push_back({{"key", x.key}, {"message", x.message}});
        }
        j["violations"] = v;
    }
    err << j.dump() << '\n';
}

}  // namespace

std::optional<Scenario> parse_scenario(std::string_view name) {
    for (const auto &[s, n] : kScenarios) {
        if (n == name) {
            return s;
        }
    }
    return std::nullopt;
}

std::string_view to_string(Scenario s) {
    for (const auto &[sc, n] : kScenarios) {
        if (sc == s) {
            return n;
        }
    }
    return "unknown";
}

std::vector<std::string_view> scenario_names() {
    std::vector<std::string_view> out;
    for (const auto &entry : kScenarios) {
        out.push_back(entry.second);
    }
    return out;
}

std::vector<Violation> validate(const RunConfig &config) {
    const json &p = config.parameters;
    if (!p.is_object()) {
        return {{"<root>", "config must be a JSON object"}};
    }
    Checker c(p);
    switch (config.scenario) {
        case Scenario::Fig1: {
            const auto a = c.numbers("A_theta");
            const auto sigma = c.number("sigma");
            const auto dw = c.number("delta_omega");
            const auto dn = c.number("delta_n");
            c.require(holds(a, [](const std::vector<double> &v) {
                          return std::all_of(v.begin(), v.end(), [](double x) { return x >= 0; });
                      }),
                      "A_theta", "A_theta values must be >= 0");
            c.require(holds(sigma, [](double v) { return v > 0; }), "sigma", "sigma must be > 0");
            c.require(holds(dw, [](double v) { return v >= 0; }), "delta_omega", "delta_omega must be >= 0");
            c.require(holds(dn, [](double v) { return v != 0; }), "delta_n", "delta_n must be nonzero");
            check_time_grid(c, "t");
            break;
        }
        case Scenario::Fig2: {
            const auto lo = c.number("epsilon_min");
            const auto hi = c.number("epsilon_max");
            const auto step = c.number("epsilon_step");
            c.require(holds(lo, [](double v) { return v >= 0; }), "epsilon_min", "epsilon must be >= 0");
            c.require(holds(hi, [](double v) { return v <= 0.5; }), "epsilon_max", "epsilon must be <= 0.5");
            c.require(holds(step, [](double v) { return v > 0; }), "epsilon_step", "epsilon_step must be > 0");
            if (lo && hi) {
                c.require(*hi >= *lo, "epsilon_max", "epsilon_max must be >= epsilon_min");
            }
            if (lo && hi && step && *step > 0 && *hi >= *lo) {
                c.require((*hi - *lo) / *step <= 1e6, "epsilon_step", "sweep exceeds 1000000 points");
            }
            break;
        }
        case Scenario::Fig3: {
            check_nv(c);
            const auto phi = c.numbers("phi");
            c.require(holds(phi, [](const std::vector<double> &v) { return std::all_of(v.begin(), v.end(), phi_ok); }),
                      "phi", "phi values must be in [0, pi]");
            const auto scan = c.integer("phi_scan_points");
            c.require(holds(scan, [](long v) { return v >= 2 && v <= 100000; }), "phi_scan_points",
                      "phi_scan_points must be in [2, 100000]");
            check_time_grid(c, "t");
            break;
        }
        case Scenario::Fig4: {
            const auto sigma = c.number("sigma");
            const auto k = c.number("K");
            const auto dn = c.number("delta_n");
            c.require(holds(sigma, [](double v) { return v > 0; }), "sigma", "sigma must be > 0");
            c.require(holds(k, [](double v) { return v >= -1 && v <= 1; }), "K", "K in [-1, 1]");
            c.require(holds(dn, [](double v) { return v != 0; }), "delta_n", "delta_n must be nonzero");
            check_time_grid(c, "t");
            break;
        }
        case Scenario::Fig5: {
            check_nv(c);
            const auto phi = c.number("phi");
            const auto t = c.number("t");
            c.require(holds(phi, phi_ok), "phi", "phi must be in [0, pi]");
            c.require(holds(t, [](double v) { return v >= 0; }), "t", "t must be >= 0");
            check_time_grid(c, "tau");
            break;
        }
        case Scenario::Fig6:
        case Scenario::Synth:
            check_synthesis(c);
            break;
        case Scenario::Classify: {
            if (!p.contains("epsilon")) {
                c.fail("epsilon", "required key is missing");
                break;
            }
            const json &e = p.at("epsilon");
            std::vector<double> values;
            bool ok = true;
            if (e.is_number()) {
                values.push_back(e.get<double>());
            } else if (e.is_array() && !e.empty()) {
                for (const json &x : e) {
                    ok = ok && x.is_number();
                    if (x.is_number()) {
                        values.push_back(x.get<double>());
                    }
                }
            } else {
                ok = false;
            }
            if (!ok) {
                c.fail("epsilon", "must be a number or a nonempty array of numbers");
                break;
            }
            for (double v : values) {
                if (!(v >= 0.0)) {
                    c.fail("epsilon", "epsilon must be >= 0");
                    break;
                }
                if (!(v <= 0.5)) {
                    c.fail("epsilon", "epsilon must be <= 0.5");
                    break;
                }
            }
            break;
        }
    }
    return c.take();
}

int run(const RunConfig &config, std::ostream &err) {
    const std::vector<Violation> violations = validate(config);
    if (!violations.empty()) {
        report(err, "config", "invalid configuration for scenario '" + std::string(to_string(config.scenario)) + "'",
               violations);
        return kExitConfig;
    }
    try {
        const ScenarioOutput out = execute(config);

        std::error_code ec;
        fs::create_directories(config.output_path, ec);
        if (ec || !fs::is_directory(config.output_path)) {
            throw IoError("cannot create output directory '" + config.output_path.string() + "'");
        }
        json outputs = json::array();
        for (const auto &[name, data] : out.files) {
            write_file(config.output_path / name, data);
            const auto rows = static_cast<long>(std::count(data.begin(), data.end(), '\n')) - 1;
            outputs.push_back({{"file", name}, {"sha256", sha256_hex(data)}, {"rows", rows}});
        }
        json manifest{
            {"scenario", to_string(config.scenario)},
            {"parameters", config.parameters},
            {"versions",
             {{"nmlab", kVersion},
              {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                            std::to_string(EIGEN_MINOR_VERSION)},
              {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                    std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                    std::to_string(NLOHMANN_JSON_VERSION_PATCH)}}},
            {"outputs", outputs},
            {"results", out.results},
            {"created_utc", utc_now()},
        };
        write_file(config.output_path / (std::string(to_string(config.scenario)) + ".manifest.json"),
                   manifest.dump(2) + "\n");
        return kExitOk;
    } catch (const SingularChannelError &e) {
        report(err, "singular", e.what());
        return kExitSingular;
    } catch (const IoError &e) {
        report(err, "io", e.what());
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        report(err, "config", e.what(), {{"input", e.what()}});
        return kExitConfig;
    } catch (const std::exception &e) {
        report(err, "internal", e.what());
        return kExitInternal;
    }
}

json config_template(Scenario s) {
    const double a = 2.0 * std::numbers::pi * 2.16;
    switch (s) {
        case Scenario::Fig1:
            return {{"A_theta", {0.0, 0.33, 1.0}}, {"sigma", 1.0}, {"delta_omega", 4.0}, {"delta_n", 1.0},
                    {"t_min", 0.0},                {"t_max", 6.0}, {"t_points", 601}};
        case Scenario::Fig2:
            return {{"epsilon_min", 0.0}, {"epsilon_max", 0.5}, {"epsilon_step", 0.005}};
        case Scenario::Fig3:
            return {{"hyperfine", a},
                    {"envelope_T", 10.0 / 2.16},
                    {"envelope_shape", "gaussian"},
                    {"phi", {0.0, std::numbers::pi / 4, std::numbers::pi / 2}},
                    {"phi_scan_points", 31},
                    {"t_min", 0.0},
                    {"t_max", 5.0},
                    {"t_points", 1001}};
        case Scenario::Fig4:
            return {{"sigma", 1.0}, {"K", -1.0}, {"delta_n", 1.0}, {"t_min", 0.0}, {"t_max", 3.0}, {"t_points", 31}};
        case Scenario::Fig5:
            return {{"hyperfine", a},
                    {"envelope_T", 10.0 / 2.16},
                    {"envelope_shape", "gaussian"},
                    {"phi", std::numbers::pi / 2},
                    {"t", 1.0},
                    {"tau_min", 0.0},
                    {"tau_max", 2.0},
                    {"tau_points", 401}};
        case Scenario::Fig6:
        case Scenario::Synth:
            return {{"input", "kappa.csv"}, {"delta_n", 1.0}, {"two_pi_convention", false}};
        case Scenario::Classify:
            return {{"epsilon", {0.1, 0.3}}};
    }
    return json::object();
}

}  // namespace nmlab::cli
