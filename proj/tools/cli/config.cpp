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


#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "pmgauss/constants.hpp"
#include "pmgauss/error.hpp"
#include "pmgauss/thermometry.hpp"

namespace pmgauss::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

struct Unit {
    std::string_view suffix;
    int exponent; // power of ten
};

/// Shifts the decimal exponent in the text so "10us" parses exactly as "10e-6".
double parse_scaled(std::string_view number, int exponent, std::string_view what) {
    const auto e = number.find_first_of("eE");
    int shift = exponent;
    if (e != std::string_view::npos) {
        std::string_view tail = number.substr(e + 1);
        if (!tail.empty() && tail.front() == '+') {
            tail.remove_prefix(1);
        }
        int given = 0;
        const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), given);
        if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
            throw InvalidArgument(fmt::format("invalid {}: '{}'", what, number));
        }
        shift += given;
        number = number.substr(0, e);
    }
    if (number.empty()) {
        throw InvalidArgument(fmt::format("invalid {}: '{}'", what, number));
    }
    return parse_number(fmt::format("{}e{}", number, shift), what);
}

double parse_with_units(std::string_view text, std::string_view what,
                        std::initializer_list<Unit> units) {
    const std::string_view body = trim(text);
    for (const Unit& u : units) {
        if (body.size() > u.suffix.size() && body.ends_with(u.suffix)) {
            return parse_scaled(trim(body.substr(0, body.size() - u.suffix.size())), u.exponent, what);
        }
    }
    return parse_number(body, what);
}

const ConfigMap::mapped_type* lookup(const ConfigMap& config, const Overrides& flags,
                                     const std::string& key) {
    if (auto it = flags.find(key); it != flags.end()) {
        return &it->second;
    }
    if (auto it = config.find(key); it != config.end()) {
        return &it->second;
    }
    return nullptr;
}

} // namespace

double parse_number(std::string_view text, std::string_view what) {
    const std::string_view body = trim(text);
    double value = 0.0;
    const char* begin = body.data();
    const char* end = body.data() + body.size();
    if (!body.empty() && *begin == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || body.empty() || !std::isfinite(value)) {
        throw InvalidArgument(fmt::format("invalid {}: '{}'", what, text));
    }
    return value;
}

double parse_time(std::string_view text) {
    return parse_with_units(text, "time", {{"ns", -9}, {"us", -6}, {"ms", -3}, {"s", 0}});
}

double parse_length(std::string_view text) {
    return parse_with_units(text, "length", {{"nm", -9}, {"um", -6}, {"mm", -3}, {"m", 0}});
}

CoherenceLength parse_coherence_length(std::string_view text) {
    const std::string_view body = trim(text);
    if (body == "inf" || body == "infinity") {
        return CoherenceLength::fully_coherent();
    }
    return CoherenceLength::finite(parse_length(body));
}

ConfigMap parse_config(std::string_view text) {
    ConfigMap out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string_view content = trim(line);
        if (content.empty() || content.front() == '#') {
            continue;
        }
        const auto eq = content.find('=');
        if (eq == std::string_view::npos) {
            throw InvalidArgument(fmt::format("config line {}: expected key = value", number));
        }
        const std::string key{trim(content.substr(0, eq))};
        const std::string value{trim(content.substr(eq + 1))};
        if (std::find(std::begin(kConfigKeys), std::end(kConfigKeys), key) == std::end(kConfigKeys)) {
            throw InvalidArgument(fmt::format("config line {}: unknown key '{}'", number, key));
        }
        if (value.empty()) {
            throw InvalidArgument(fmt::format("config line {}: empty value for '{}'", number, key));
        }
        out[key] = value;
    }
    return out;
}

ConfigMap read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(fmt::format("cannot read config file '{}'", path.string()));
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_config(text.str());
}

Parameters resolve_parameters(const ConfigMap& config, const Overrides& flags,
                              const Defaults& defaults) {
    for (const auto& [key, value] : flags) {
        if (std::find(std::begin(kConfigKeys), std::end(kConfigKeys), key) == std::end(kConfigKeys)) {
            throw InvalidArgument(fmt::format("unknown parameter '{}'", key));
        }
    }
    auto get = [&](const char* key) { return lookup(config, flags, key); };

    const auto& base = pmgauss::fullerene;
    const double mass = get("mass_kg") ? parse_number(*get("mass_kg"), "mass_kg") : base.mass_kg;
    const double sigma0 = get("sigma0_m") ? parse_length(*get("sigma0_m")) : base.sigma0_m;
    const CoherenceLength ell0 = get("ell0_m") ? parse_coherence_length(*get("ell0_m"))
                                               : CoherenceLength::finite(base.ell0_m);
    const double gamma = get("gamma") ? parse_number(*get("gamma"), "gamma") : 0.0;

    GasProperties gas = GasProperties::fullerene_scenario();
    if (get("m_air_kg")) {
        gas.m_air_kg = parse_number(*get("m_air_kg"), "m_air_kg");
    }
    if (get("number_density_m3")) {
        gas.number_density_m3 = parse_number(*get("number_density_m3"), "number_density_m3");
    }
    if (get("molecule_size_m")) {
        gas.molecule_size_m = parse_length(*get("molecule_size_m"));
    }
    gas.validate();

    const bool has_lambda = get("lambda_m2s") != nullptr;
    const bool has_temperature = get("temperature_k") != nullptr;
    if (has_lambda && has_temperature) {
        throw InvalidArgument("give either lambda_m2s or temperature_k, not both");
    }
    EnvironmentSpec env{defaults.lambda};
    if (has_lambda) {
        env = EnvironmentSpec{parse_number(*get("lambda_m2s"), "lambda_m2s")};
    } else if (has_temperature) {
        env = EnvironmentSpec::from_gas({parse_number(*get("temperature_k"), "temperature_k"), gas});
    }

    const double t = get("t_s") ? parse_time(*get("t_s")) : defaults.t;
    if (!(t > 0.0)) {
        throw InvalidArgument(fmt::format("time must be > 0, got {}", t));
    }
    return {ProbeSpec{mass, sigma0, ell0, gamma}, gas, env, t};
}

nlohmann::json Parameters::to_json() const {
    nlohmann::json j;
    j["mass_kg"] = probe.mass();
    j["sigma0_m"] = probe.sigma0();
    if (probe.ell0().is_fully_coherent()) {
        j["ell0_m"] = "inf";
    } else {
        j["ell0_m"] = probe.ell0().meters();
    }
    j["gamma"] = probe.gamma();
    j["lambda_m2s"] = env.lambda();
    if (env.gas()) {
        j["temperature_k"] = env.gas()->temperature_k;
    } else {
        j["temperature_k_equivalent"] = thermometry::temperature_from_lambda(env.lambda(), gas);
    }
    j["m_air_kg"] = gas.m_air_kg;
    j["number_density_m3"] = gas.number_density_m3;
    j["molecule_size_m"] = gas.molecule_size_m;
    j["t_s"] = t;
    return j;
}

} // namespace pmgauss::cli
