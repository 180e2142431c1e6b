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


#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pmgauss/constants.hpp"
#include "pmgauss/model.hpp"

namespace pmgauss::testing {

inline double rel_diff(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
    }
    return out;
}

/// Seeded draws over the physical parameter box used by property tests.
class ParameterSampler {
  public:
    explicit ParameterSampler(std::uint64_t seed) : rng_(seed) {}

    double gamma() { return std::uniform_real_distribution<double>(-150.0, 150.0)(rng_); }
    double nonnegative_gamma() { return std::uniform_real_distribution<double>(0.0, 150.0)(rng_); }
    double lambda() { return std::pow(10.0, std::uniform_real_distribution<double>(10.0, 23.0)(rng_)); }
    double time() { return std::pow(10.0, std::uniform_real_distribution<double>(-8.0, -3.0)(rng_)); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    ProbeSpec probe() {
        const double mass = uniform(0.3, 3.0) * 1.2e-24;
        const double sigma0 = uniform(0.3, 3.0) * 7.8e-9;
        const bool coherent = uniform(0.0, 1.0) < 0.2;
        const auto ell0 = coherent ? CoherenceLength::fully_coherent()
                                   : CoherenceLength::finite(uniform(0.2, 5.0) * 5e-8);
        return {mass, sigma0, ell0, gamma()};
    }

  private:
    std::mt19937_64 rng_;
};

/// SI second moments <x^2>, <{x,p}>/2, <p^2> obtained by RK4 integration of
///   d<x^2>/dt = 2 C / m,  dC/dt = <p^2> / m,  d<p^2>/dt = 2 hbar^2 Lambda
/// from the initial correlated state, then mapped to scaled quadratures.
struct ScaledMoments {
    long double sxx, sxp, spp;
};

inline ScaledMoments integrate_moments(const ProbeSpec& probe, double lambda, double t,
                                       int steps = 2000) {
    using L = long double;
    const L hbar = constants::hbar;
    const L m = probe.mass();
    const L s0 = probe.sigma0();
    const L g = probe.gamma();
    L y[3] = {s0 * s0 / 2, hbar * g / 2,
              hbar * hbar * (1 + g * g) / (2 * s0 * s0) + hbar * hbar * L(probe.ell0().inverse_square())};
    const L diffusion = 2 * hbar * hbar * L(lambda);
    auto rhs = [&](const L* v, L* d) {
        d[0] = 2 * v[1] / m;
        d[1] = v[2] / m;
        d[2] = diffusion;
    };
    const L h = L(t) / steps;
    for (int i = 0; i < steps; ++i) {
        L k1[3], k2[3], k3[3], k4[3], tmp[3];
        rhs(y, k1);
        for (int j = 0; j < 3; ++j) tmp[j] = y[j] + h / 2 * k1[j];
        rhs(tmp, k2);
        for (int j = 0; j < 3; ++j) tmp[j] = y[j] + h / 2 * k2[j];
        rhs(tmp, k3);
        for (int j = 0; j < 3; ++j) tmp[j] = y[j] + h * k3[j];
        rhs(tmp, k4);
        for (int j = 0; j < 3; ++j) y[j] += h / 6 * (k1[j] + 2 * k2[j] + 2 * k3[j] + k4[j]);
    }
    return {2 * y[0] / (s0 * s0), 2 * y[1] / hbar, 2 * s0 * s0 * y[2] / (hbar * hbar)};
}

/// Minimal CSV reader for the tool's own output (no quoted fields).
struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (header[i] == name) {
                return i;
            }
        }
        throw std::out_of_range("no column " + name);
    }
    double number(std::size_t row, const std::string& name) const {
        return std::stod(rows.at(row).at(column(name)));
    }
};

inline Csv parse_csv(const std::string& text) {
    Csv csv;
    std::istringstream in(text);
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        std::vector<std::string> fields;
        std::stringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) {
            fields.push_back(field);
        }
        if (!line.empty() && line.back() == ',') {
            fields.emplace_back();
        }
        if (first) {
            csv.header = std::move(fields);
            first = false;
        } else {
            csv.rows.push_back(std::move(fields));
        }
    }
    return csv;
}

} // namespace pmgauss::testing
