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

#include "pmgauss/thermometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "pmgauss/constants.hpp"
#include "pmgauss/error.hpp"
#include "pmgauss/fisher.hpp"
#include "pmgauss/numerics.hpp"

namespace pmgauss::thermometry {

namespace {

/// Lambda / (k_B T)^(3/2).
double coupling_per_thermal_energy(const GasProperties& gas) {
    gas.validate();
    const double hbar = constants::hbar;
    return 8.0 / (3.0 * hbar * hbar) * std::sqrt(2.0 * constants::pi * gas.m_air_kg) *
           gas.number_density_m3 * gas.molecule_size_m * gas.molecule_size_m;
}

void require_coupling(const EnvironmentSpec& env) {
    if (!(env.lambda() > 0.0)) {
        throw InvalidArgument("Lambda must be > 0 for a purity-rate maximum");
    }
}

} // namespace

double lambda_from_temperature(double temperature_k, const GasProperties& gas) {
    if (!(temperature_k >= 0.0) || !std::isfinite(temperature_k)) {
        throw InvalidArgument(
            fmt::format("temperature must be finite and >= 0, got {}", temperature_k));
    }
    const double thermal = constants::boltzmann * temperature_k;
    return coupling_per_thermal_energy(gas) * thermal * std::sqrt(thermal);
}

double temperature_from_lambda(double lambda, const GasProperties& gas) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidArgument(fmt::format("Lambda must be finite and >= 0, got {}", lambda));
    }
    return std::cbrt(std::pow(lambda / coupling_per_thermal_energy(gas), 2.0)) /
           constants::boltzmann;
}

std::optional<double> decoherence_time(double lambda, double delta_x) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidArgument(fmt::format("Lambda must be finite and >= 0, got {}", lambda));
    }
    if (!(delta_x > 0.0) || !std::isfinite(delta_x)) {
        throw InvalidArgument(fmt::format("separation must be finite and > 0, got {}", delta_x));
    }
    if (lambda == 0.0) {
        return std::nullopt;
    }
    return 1.0 / (lambda * delta_x * delta_x);
}

double relative_purity_rate(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    if (!(t > 0.0)) {
        throw InvalidArgument(fmt::format("time must be > 0, got {}", t));
    }
    // mu = D^-1/2, so |dmu/dt| / mu = |dD/dt| / (2 D).
    const PurityBracket b = purity_bracket(probe, env, t);
    return std::abs(b.d_time) / (2.0 * b.value);
}

double tau_max_exact(const ProbeSpec& probe, const EnvironmentSpec& env,
                     const TauMaxSearch& search) {
    require_coupling(env);
    if (!(search.t_min > 0.0) || !(search.t_max > search.t_min) || search.scan_points < 3) {
        throw InvalidArgument("tau_max search needs 0 < t_min < t_max and >= 3 scan points");
    }
    const double lo = std::log(search.t_min);
    const double hi = std::log(search.t_max);
    const int n = search.scan_points;
    auto rate = [&](double log_t) { return relative_purity_rate(probe, env, std::exp(log_t)); };

    std::vector<double> grid(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        grid[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    std::size_t best = 0;
    double best_rate = -1.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double r = rate(grid[i]);
        if (r > best_rate) {
            best_rate = r;
            best = i;
        }
    }
    if (best == 0 || best + 1 == grid.size()) {
        throw NumericalError(fmt::format(
            "no interior maximum of the relative purity rate in [{}, {}] s", search.t_min,
            search.t_max));
    }
    return std::exp(numerics::golden_section_maximize(rate, grid[best - 1], grid[best + 1],
                                                      search.relative_tolerance));
}

double tau_max_approx(const ProbeSpec& probe, const EnvironmentSpec& env) {
    require_coupling(env);
    const double tau = tau0(probe);
    const double g = probe.gamma();
    const double s2 = probe.sigma0() * probe.sigma0();
    return std::cbrt(3.0 * tau * tau / (2.0 * (1.0 + g * g) * env.lambda() * s2));
}

double tgi(const ProbeSpec& probe, const EnvironmentSpec& env) {
    const double reference = tau_max_exact(probe.with_gamma(0.0), env);
    return 10.0 * std::log10(reference / tau_max_exact(probe, env));
}

double tgi_approx(double gamma) { return 10.0 / 3.0 * std::log10(1.0 + gamma * gamma); }

Saturation qfi_saturation(const ProbeSpec& probe, const EnvironmentSpec& env,
                          const SaturationSearch& search) {
    require_coupling(env);
    if (!(search.t_min > 0.0) || !(search.plateau_time > search.t_min) || search.points < 2) {
        throw InvalidArgument("saturation search needs 0 < t_min < plateau_time and >= 2 points");
    }
    const double lambda_sq = env.lambda() * env.lambda();
    auto scaled_qfi = [&](double t) {
        return lambda_sq * fisher::qfi_analytic(fisher::EstimationTarget::Lambda, probe, env, t);
    };
    const double plateau = scaled_qfi(search.plateau_time);
    const double ratio = std::log(search.plateau_time / search.t_min);
    for (int i = 0; i < search.points; ++i) {
        const double t = search.t_min * std::exp(ratio * i / (search.points - 1));
        if (scaled_qfi(t) >= search.fraction * plateau) {
            return {plateau, t};
        }
    }
    return {plateau, search.plateau_time};
}

std::vector<TgiRow> build_table1(const ProbeSpec& probe, double lambda,
                                 std::span<const double> gammas) {
    const EnvironmentSpec env{lambda};
    require_coupling(env);
    const double reference = tau_max_exact(probe.with_gamma(0.0), env);

    std::vector<TgiRow> rows;
    rows.reserve(gammas.size());
    for (const double gamma : gammas) {
        try {
            const ProbeSpec p = probe.with_gamma(gamma);
            const double tau = tau_max_exact(p, env);
            rows.push_back({
                gamma,
                tau,
                purity_exact(p, env, tau),
                relative_purity_rate(p, env, tau),
                lambda * lambda * fisher::qfi_analytic(fisher::EstimationTarget::Lambda, p, env, tau),
                10.0 * std::log10(reference / tau),
            });
        } catch (const NumericalError& e) {
            throw NumericalError(fmt::format("gamma = {}: {}", gamma, e.what()));
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(fmt::format("gamma = {}: {}", gamma, e.what()));
        }
    }
    return rows;
}

} // namespace pmgauss::thermometry
