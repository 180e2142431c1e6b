// Copyright 2026 The pmgauss Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


/**
 * @file config.hpp
 * Parameter resolution for the command-line tool: unit-suffixed values, the
 * flat key = value config file, and the flag > config > default precedence.
 */
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "pmgauss/model.hpp"

namespace pmgauss::cli {

/// Unreadable input or unwritable output (exit code 4).
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Plain number; `what` names the quantity in error messages.
double parse_number(std::string_view text, std::string_view what);

/// Seconds, with an optional s, ms, us or ns suffix.
double parse_time(std::string_view text);

/// Meters, with an optional m, mm, um or nm suffix.
double parse_length(std::string_view text);

/// Like parse_length, plus "inf" for a fully coherent source.
CoherenceLength parse_coherence_length(std::string_view text);

using ConfigMap = std::map<std::string, std::string>;

/// Reads `key = value` lines. Blank lines and lines starting with '#' are
/// skipped; unknown keys and malformed lines are rejected.
ConfigMap parse_config(std::string_view text);
ConfigMap read_config_file(const std::filesystem::path& path);

/// Raw flag values, one per config key.
using Overrides = std::map<std::string, std::string>;

/// Keys accepted in a config file and as flag overrides.
inline constexpr std::string_view kConfigKeys[] = {
    "mass_kg",  "sigma0_m",          "ell0_m",          "gamma", "lambda_m2s",
    "temperature_k", "m_air_kg", "number_density_m3", "molecule_size_m", "t_s",
};

struct Defaults {
    double lambda = 1e15;
    double t = 50e-6;
};

struct Parameters {
    ProbeSpec probe;
    GasProperties gas;
    EnvironmentSpec env;
    double t;

    nlohmann::json to_json() const;
};

/// Flags override the config file, which overrides `defaults` and the
/// fullerene scenario. Giving both lambda_m2s and temperature_k is an error.
Parameters resolve_parameters(const ConfigMap& config, const Overrides& flags,
                              const Defaults& defaults = {});

} // namespace pmgauss::cli
