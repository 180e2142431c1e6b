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
 * @file thermometry.hpp
 * Coupling/temperature conversion, decoherence timescale, the relative purity
 * rate and its maximiser tau_max, and the Temporal Gain of Information.
 */
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pmgauss/model.hpp"

namespace pmgauss::thermometry {

/// Lambda = (8 / 3 hbar^2) sqrt(2 pi m_air) (k_B T)^(3/2) N w^2.
double lambda_from_temperature(double temperature_k, const GasProperties& gas);

/// Inverse of lambda_from_temperature.
double temperature_from_lambda(double lambda, const GasProperties& gas);

/// 1 / (Lambda dx^2). std::nullopt means no decoherence (Lambda = 0).
std::optional<double> decoherence_time(double lambda, double delta_x);

/// (1/mu) |d mu / dt| in s^-1.
double relative_purity_rate(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

struct TauMaxSearch {
    double t_min = 1e-9;
    double t_max = 1e-2;
    int scan_points = 200;
    double relative_tolerance = 1e-6;
};

/// Interaction time maximising the relative purity rate, from a log-spaced
/// scan followed by golden-section refinement in log t.
double tau_max_exact(const ProbeSpec& probe, const EnvironmentSpec& env,
                     const TauMaxSearch& search = {});

/// [3 tau0^2 / (2 (1 + gamma^2) Lambda sigma0^2)]^(1/3).
double tau_max_approx(const ProbeSpec& probe, const EnvironmentSpec& env);

/// -10 log10[tau_max(gamma) / tau_max(0)] in dB.
double tgi(const ProbeSpec& probe, const EnvironmentSpec& env);

/// (10/3) log10(1 + gamma^2) in dB.
double tgi_approx(double gamma);

struct TgiRow {
    double gamma;
    double tau_max;              // s
    double purity_at_tau_max;
    double relative_purity_rate; // s^-1
    double lambda_sq_qfi;
    double tgi_db;
};

struct SaturationSearch {
    double fraction = 0.95;
    double t_min = 1e-7;
    /// Lambda^2 F_Lambda at this time is taken as the plateau.
    double plateau_time = 1.0;
    int points = 4000;
};

struct Saturation {
    double plateau;
    /// First point of a log grid over [t_min, plateau_time] where Lambda^2 F_Lambda
    /// reaches fraction * plateau.
    double time;
};

Saturation qfi_saturation(const ProbeSpec& probe, const EnvironmentSpec& env,
                          const SaturationSearch& search = {});

/// One row per gamma, in input order.
std::vector<TgiRow> build_table1(const ProbeSpec& probe, double lambda,
                                 std::span<const double> gammas);

} // namespace pmgauss::thermometry
