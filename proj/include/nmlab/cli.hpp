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


#ifndef NMLAB_CLI_HPP
#define NMLAB_CLI_HPP

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace nmlab::cli {

inline constexpr const char *kVersion = "0.1.0";

inline constexpr int kExitOk = 0;
/// Unexpected failure; not part of the documented contract.
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitSingular = 4;

enum class Scenario { Fig1, Fig2, Fig3, Fig4, Fig5, Fig6, Classify, Synth };

std::optional<Scenario> parse_scenario(std::string_view name);
std::string_view to_string(Scenario s);
std::vector<std::string_view> scenario_names();

struct RunConfig {
    Scenario scenario = Scenario::Fig1;
    nlohmann::json parameters = nlohmann::json::object();
    std::filesystem::path output_path;
    /// Relative input paths in `parameters` resolve against this directory.
    std::filesystem::path base_dir;
};

struct Violation {
    std::string key;
    std::string message;
};

/// Every reason `run` would exit with kExitConfig before touching the filesystem.
std::vector<Violation> validate(const RunConfig &config);

/// Executes a scenario, writing CSV files and `<scenario>.manifest.json` into
/// `config.output_path`. Errors are reported on `err` as one JSON object.
int run(const RunConfig &config, std::ostream &err);

/// Complete parameter set for a scenario, used by `nmlab template`.
nlohmann::json config_template(Scenario s);

}  // namespace nmlab::cli

#endif
