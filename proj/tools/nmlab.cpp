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


// nmlab: figure-data generator for the engineered-dephasing models.
//
//   nmlab <scenario> --config <file.json> --out <dir>
//   nmlab <scenario> --config <file.json> --validate
//   nmlab template <scenario>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nmlab/cli.hpp"

namespace {

using nlohmann::json;
namespace cli = nmlab::cli;

void print_error(std::string_view kind, const std::string &message) {
    std::cerr << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Engineered qubit decoherence: figure data, divisibility classification, spectral synthesis"};
    app.set_version_flag("--version", cli::kVersion);

    std::string scenario_name;
    std::string template_name;
    std::string config_path;
    std::string out_dir;
    bool validate_only = false;

    std::string names;
    for (auto n : cli::scenario_names()) {
        names += (names.empty() ? "" : ", ") + std::string(n);
    }
    app.add_option("scenario", scenario_name, "One of: " + names + "; or 'template'")->required();
    app.add_option("name", template_name, "Scenario name (template only)");
    app.add_option("--config", config_path, "JSON parameter file");
    app.add_option("--out", out_dir, "Output directory");
    app.add_flag("--validate", validate_only, "Only check the config; print violations as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitConfig;
    }

    if (scenario_name == "template") {
        const auto s = cli::parse_scenario(template_name);
        if (!s) {
            print_error("config", "unknown scenario '" + template_name + "'");
            return cli::kExitConfig;
        }
        std::cout << cli::config_template(*s).dump(2) << '\n';
        return cli::kExitOk;
    }

    const auto scenario = cli::parse_scenario(scenario_name);
    if (!scenario) {
        print_error("config", "unknown scenario '" + scenario_name + "'; expected one of: " + names);
        return cli::kExitConfig;
    }
    if (config_path.empty()) {
        print_error("config", "--config is required");
        return cli::kExitConfig;
    }
    if (out_dir.empty() && !validate_only) {
        print_error("config", "--out is required");
        return cli::kExitConfig;
    }

    std::ifstream in(config_path, std::ios::binary);
    if (!in) {
        print_error("io", "cannot read config file '" + config_path + "'");
        return cli::kExitIo;
    }
    std::stringstream text;
    text << in.rdbuf();

    cli::RunConfig config;
    config.scenario = *scenario;
    config.output_path = out_dir;
    config.base_dir = std::filesystem::path(config_path).parent_path();
    try {
        config.parameters = json::parse(text.str());
    } catch (const json::parse_error &e) {
        print_error("config", std::string("config is not valid JSON: ") + e.what());
        return cli::kExitConfig;
    }

    if (validate_only) {
        json out = json::array();
        for (const auto &v : cli::validate(config)) {
            out.push_back({{"key", v.key}, {"message", v.message}});
        }
        std::cout << out.dump() << '\n';
        return out.empty() ? cli::kExitOk : cli::kExitConfig;
    }
    return cli::run(config, std::cerr);
}
