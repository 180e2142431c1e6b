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


#include "commands.hpp"

#include <cmath>
#include <cstdint>
#include <iostream>

#include <fmt/format.h>

#include "pmgauss/error.hpp"
#include "pmgauss/fisher.hpp"
#include "pmgauss/lens.hpp"
#include "pmgauss/thermometry.hpp"
#include "reference.hpp"

namespace pmgauss::cli {

using fisher::EstimationTarget;

namespace {

EstimationTarget parse_target(const std::string& name) {
    if (name == "gamma") {
        return EstimationTarget::Gamma;
    }
    if (name == "lambda") {
        return EstimationTarget::Lambda;
    }
    throw InvalidArgument(fmt::format("unknown target '{}' (expected gamma or lambda)", name));
}

/// Unit suffix for a Fisher information column.
std::string fisher_unit(EstimationTarget target) {
    return target == EstimationTarget::Gamma ? "" : "_m4s2";
}

bool is_reference_probe(const ProbeSpec& probe) {
    const auto reference = ProbeSpec::fullerene();
    return probe.mass() == reference.mass() && probe.sigma0() == reference.sigma0() &&
           probe.ell0() == reference.ell0();
}

const ReferenceRow* reference_row(double gamma) {
    for (const auto& row : kReferenceTable) {
        if (row.gamma == gamma) {
            return &row;
        }
    }
    return nullptr;
}

} // namespace

Parameters Context::parameters(const Defaults& defaults) const {
    const ConfigMap config = global.config.empty() ? ConfigMap{} : read_config_file(global.config);
    return resolve_parameters(config, overrides, defaults);
}

void Context::emit(const Table& table, const std::optional<Chart>& chart,
                   const nlohmann::json& parameters) const {
    std::string content;
    if (global.format == "svg") {
        if (!chart) {
            throw InvalidArgument(fmt::format("'{}' has no chart; use --format csv", command));
        }
        content = to_svg(*chart);
    } else {
        content = to_csv(table);
    }
    Manifest manifest(command, arguments);
    manifest.set_parameters(parameters);
    if (global.out.empty() || global.out == "-") {
        out << content;
        out.flush();
        manifest.add_output("-");
        if (!global.quiet) {
            err << manifest.finish().dump(2) << '\n';
        }
        return;
    }
    write_file(global.out, content);
    manifest.add_output(global.out);
    write_file(global.out + ".manifest.json", manifest.finish().dump(2) + "\n");
    note(fmt::format("wrote {}", global.out));
}

void Context::note(const std::string& message) const {
    if (!global.quiet) {
        err << message << '\n';
    }
}

std::vector<double> sweep_axis(const SweepRequest& request) {
    if (request.axis != "gamma" && request.axis != "lambda" && request.axis != "time") {
        throw InvalidArgument(
            fmt::format("unknown axis '{}' (expected gamma, lambda or time)", request.axis));
    }
    if (request.scale != "linear" && request.scale != "log") {
        throw InvalidArgument(fmt::format("unknown scale '{}' (expected linear or log)", request.scale));
    }
    if (request.points < 2) {
        throw InvalidArgument("a sweep needs at least 2 points");
    }
    if (request.min.empty() || request.max.empty()) {
        throw InvalidArgument("a sweep needs --min and --max");
    }
    auto parse = [&](const std::string& text) {
        return request.axis == "time" ? parse_time(text) : parse_number(text, request.axis);
    };
    const double lo = parse(request.min);
    const double hi = parse(request.max);
    const bool log = request.scale == "log";
    if (log && !(lo > 0.0 && hi > 0.0)) {
        throw InvalidArgument("a log axis needs min > 0 and max > 0");
    }
    if (request.axis == "lambda" && lo < 0.0) {
        throw InvalidArgument("Lambda must be >= 0");
    }
    if (request.axis == "time" && !(lo > 0.0)) {
        throw InvalidArgument("time axis needs min > 0");
    }

    std::vector<double> values(static_cast<std::size_t>(request.points));
    const int last = request.points - 1;
    for (int i = 0; i <= last; ++i) {
        const double u = static_cast<double>(i) / last;
        values[static_cast<std::size_t>(i)] =
            log ? lo * std::pow(hi / lo, u) : lo + (hi - lo) * u;
    }
    values.front() = lo;
    values.back() = hi;
    return values;
}

void cmd_sweep(const Context& ctx, const SweepRequest& request) {
    const bool purity_only = request.target == "purity";
    const EstimationTarget target = purity_only ? EstimationTarget::Gamma : parse_target(request.target);
    const auto values = sweep_axis(request);
    const Parameters base = ctx.parameters();

    const std::string axis_column = request.axis == "gamma"    ? "gamma"
                                    : request.axis == "lambda" ? "lambda_m2s"
                                                               : "t_s";
    const std::string unit = fisher_unit(target);
    Table table;
    table.header = {axis_column, "purity", "relative_purity_rate_per_s"};
    if (!purity_only) {
        for (const char* name : {"qfi_analytic", "qfi_numeric", "qfi_covariance_term",
                                 "qfi_purity_term", "cfi_closed"}) {
            table.header.push_back(name + unit);
        }
        if (target == EstimationTarget::Lambda) {
            table.header.push_back("lambda_sq_qfi");
            table.header.push_back("lambda_sq_cfi");
        }
    }
    table.header.push_back("temperature_k");

    Series series{purity_only ? "purity" : "qfi_analytic" + unit, {}, {}};
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        ProbeSpec probe = base.probe;
        EnvironmentSpec env = base.env;
        double t = base.t;
        if (request.axis == "gamma") {
            probe = probe.with_gamma(v);
        } else if (request.axis == "lambda") {
            env = EnvironmentSpec{v};
        } else {
            t = v;
        }
        try {
            std::vector<Cell> row{v, purity_exact(probe, env, t),
                                  thermometry::relative_purity_rate(probe, env, t)};
            double plotted = std::get<double>(row[1]);
            if (!purity_only) {
                const auto analytic = fisher::qfi_analytic_terms(target, probe, env, t);
                const double numeric = fisher::qfi_numeric(target, probe, env, t);
                const double cfi = fisher::cfi_closed(target, probe, env, t);
                row.insert(row.end(), {analytic.total(), numeric, analytic.covariance_term,
                                       analytic.purity_term, cfi});
                if (target == EstimationTarget::Lambda) {
                    const double l2 = env.lambda() * env.lambda();
                    row.insert(row.end(), {l2 * analytic.total(), l2 * cfi});
                }
                plotted = analytic.total();
            }
            row.push_back(thermometry::temperature_from_lambda(env.lambda(), base.gas));
            table.add_row(std::move(row));
            series.x.push_back(v);
            series.y.push_back(plotted);
        } catch (const NumericalError& e) {
            throw NumericalError(fmt::format("row {} ({} = {}): {}", i + 1, request.axis, v, e.what()));
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(fmt::format("row {} ({} = {}): {}", i + 1, request.axis, v, e.what()));
        }
    }

    Chart chart{fmt::format("{} sweep", request.target), axis_column, series.name,
                request.scale == "log", false, {series}};
    nlohmann::json params = base.to_json();
    params["sweep"] = {{"target", request.target}, {"axis", request.axis},
                       {"min", values.front()},    {"max", values.back()},
                       {"points", request.points}, {"scale", request.scale}};
    ctx.emit(table, chart, params);
}

void cmd_table1(const Context& ctx, const Table1Request& request) {
    const Parameters p = ctx.parameters({.lambda = kReferenceLambda});
    std::vector<double> gammas = request.gammas;
    if (gammas.empty()) {
        for (const auto& row : kReferenceTable) {
            gammas.push_back(row.gamma);
        }
    }
    const double lambda = p.env.lambda();
    const auto rows = thermometry::build_table1(p.probe, lambda, gammas);
    const bool comparable = lambda == kReferenceLambda && is_reference_probe(p.probe);

    Table table;
    table.header = {"gamma",
                    "tau_max_s",
                    "purity_at_tau_max",
                    "relative_purity_rate_per_s",
                    "lambda_sq_qfi",
                    "tgi_db",
                    "tgi_approx_db",
                    "residual_tau_max_rel",
                    "residual_purity",
                    "residual_rate_rel",
                    "residual_lambda_sq_qfi_rel",
                    "residual_tgi_db"};
    for (const auto& r : rows) {
        std::vector<Cell> row{r.gamma,        r.tau_max,        r.purity_at_tau_max,
                              r.relative_purity_rate, r.lambda_sq_qfi, r.tgi_db,
                              thermometry::tgi_approx(r.gamma)};
        const ReferenceRow* ref = comparable ? reference_row(r.gamma) : nullptr;
        if (ref) {
            row.insert(row.end(), {r.tau_max / (ref->tau_max_us * 1e-6) - 1.0,
                                   r.purity_at_tau_max - ref->purity,
                                   r.relative_purity_rate / ref->relative_purity_rate - 1.0,
                                   r.lambda_sq_qfi / ref->lambda_sq_qfi - 1.0,
                                   r.tgi_db - ref->tgi_db});
        } else {
            row.insert(row.end(), 5, std::string{});
        }
        table.add_row(std::move(row));
    }

    nlohmann::json params = p.to_json();
    params["gammas"] = gammas;
    if (request.pretty) {
        std::string text = fmt::format("{:>8} {:>12} {:>8} {:>12} {:>10} {:>9} {:>10}\n", "gamma",
                                       "tau_max/us", "mu", "rate/s^-1", "L^2 F", "TGI/dB",
                                       "approx/dB");
        for (const auto& r : rows) {
            text += fmt::format("{:>8g} {:>12.4f} {:>8.4f} {:>12.1f} {:>10.4f} {:>9.3f} {:>10.3f}\n",
                                r.gamma, r.tau_max * 1e6, r.purity_at_tau_max,
                                r.relative_purity_rate, r.lambda_sq_qfi, r.tgi_db,
                                thermometry::tgi_approx(r.gamma));
        }
        ctx.out << text;
        return;
    }
    Chart chart{"tau_max", "gamma", "tau_max_s", false, true, {{"tau_max", {}, {}}}};
    for (const auto& r : rows) {
        chart.series[0].x.push_back(r.gamma);
        chart.series[0].y.push_back(r.tau_max);
    }
    ctx.emit(table, chart, params);
}

void cmd_convert(const Context& ctx, const ConvertRequest& request) {
    if (request.to_lambda.has_value() == request.to_temp.has_value()) {
        throw InvalidArgument("give exactly one of --to-lambda or --to-temp");
    }
    const Parameters p = ctx.parameters();
    double temperature = 0.0;
    double lambda = 0.0;
    if (request.to_lambda) {
        temperature = *request.to_lambda;
        lambda = thermometry::lambda_from_temperature(temperature, p.gas);
    } else {
        lambda = *request.to_temp;
        temperature = thermometry::temperature_from_lambda(lambda, p.gas);
    }
    Table table;
    table.header = {"temperature_k", "lambda_m2s", "m_air_kg", "number_density_m3",
                    "molecule_size_m"};
    table.add_row({temperature, lambda, p.gas.m_air_kg, p.gas.number_density_m3,
                   p.gas.molecule_size_m});
    ctx.note(fmt::format("gas: m_air = {} kg, N = {} m^-3, w = {} m", p.gas.m_air_kg,
                         p.gas.number_density_m3, p.gas.molecule_size_m));
    nlohmann::json params = {{"m_air_kg", p.gas.m_air_kg},
                             {"number_density_m3", p.gas.number_density_m3},
                             {"molecule_size_m", p.gas.molecule_size_m},
                             {"direction", request.to_lambda ? "temperature_to_lambda"
                                                             : "lambda_to_temperature"}};
    ctx.emit(table, std::nullopt, params);
}

void cmd_lens(const Context& ctx, const LensRequest& request) {
    const Parameters p = ctx.parameters();
    const lens::LensSpec spec{parse_number(request.omega0, "omega0"), parse_length(request.wavelength),
                              parse_number(request.detuning, "detuning"),
                              parse_number(request.v_cm, "v_cm"), parse_time(request.t_int)};
    spec.validate();
    const double x = parse_length(request.x);
    const double z = parse_length(request.z);
    const auto potential = lens::optical_potential(spec, x, z);

    Table table;
    table.header = {"x_m", "z_m", "rabi_rad_s", "potential_full_rad_s", "potential_harmonic_rad_s",
                    "de_broglie_m", "focal_length_m", "gamma"};
    std::vector<Cell> row{x,
                          z,
                          lens::rabi_profile(spec, x, z),
                          potential.full,
                          potential.harmonic,
                          lens::de_broglie(p.probe.mass(), spec.v_cm),
                          lens::focal_length(spec, p.probe.mass())};
    if (request.curvature_radius) {
        row.emplace_back(lens::gamma_from_curvature(p.probe.mass(), spec.v_cm,
                                                    parse_length(*request.curvature_radius),
                                                    p.probe.sigma0()));
    } else {
        row.emplace_back(std::string{});
    }
    table.add_row(std::move(row));

    nlohmann::json params = {{"omega0_rad_s", spec.omega0},   {"wavelength_m", spec.wavelength},
                             {"detuning_rad_s", spec.detuning}, {"v_cm_m_s", spec.v_cm},
                             {"t_int_s", spec.t_int},           {"mass_kg", p.probe.mass()},
                             {"sigma0_m", p.probe.sigma0()}};
    ctx.emit(table, std::nullopt, params);
}

void cmd_purity(const Context& ctx, const PointRequest& request) {
    const Parameters p = ctx.parameters();
    const auto cov = covariance(p.probe, p.env, p.t);
    const auto kernel = kernel_params(p.probe, p.env, p.t);
    Table table;
    table.header = {"t_s",          "purity_exact", "purity_approx", "purity_covariance",
                    "purity_kernel", "sxx",         "sxp",           "spp",
                    "relative_purity_rate_per_s", "decoherence_time_s"};
    std::vector<Cell> row{p.t,
                          purity_exact(p.probe, p.env, p.t),
                          purity_approx(p.probe, p.env, p.t),
                          purity_from_covariance(cov),
                          kernel_purity(kernel),
                          to_double(cov.sxx),
                          to_double(cov.sxp),
                          to_double(cov.spp),
                          thermometry::relative_purity_rate(p.probe, p.env, p.t)};
    std::optional<double> tau_dec;
    if (request.delta_x) {
        tau_dec = thermometry::decoherence_time(p.env.lambda(), parse_length(*request.delta_x));
    }
    row.push_back(tau_dec ? Cell{*tau_dec} : Cell{std::string{}});
    table.add_row(std::move(row));
    ctx.emit(table, std::nullopt, p.to_json());
}

void cmd_qfi(const Context& ctx, const PointRequest& request) {
    const EstimationTarget target = parse_target(request.target);
    const Parameters p = ctx.parameters();
    const auto analytic = fisher::qfi_analytic_terms(target, p.probe, p.env, p.t);
    const double numeric = fisher::qfi_numeric(target, p.probe, p.env, p.t);
    const std::string unit = fisher_unit(target);

    Table table;
    table.header = {"target", "qfi_analytic" + unit, "qfi_numeric" + unit,
                    "qfi_covariance_term" + unit, "qfi_purity_term" + unit, "cramer_rao_bound",
                    "lambda_sq_qfi"};
    std::vector<Cell> row{request.target, analytic.total(), numeric, analytic.covariance_term,
                          analytic.purity_term};
    if (analytic.total() > 0.0) {
        row.emplace_back(fisher::cramer_rao_bound(analytic.total(), request.repeats));
    } else {
        row.emplace_back(std::string{});
    }
    if (target == EstimationTarget::Lambda) {
        row.emplace_back(p.env.lambda() * p.env.lambda() * analytic.total());
    } else {
        row.emplace_back(std::string{});
    }
    table.add_row(std::move(row));
    nlohmann::json params = p.to_json();
    params["target"] = request.target;
    params["repeats"] = request.repeats;
    ctx.emit(table, std::nullopt, params);
}

void cmd_cfi(const Context& ctx, const PointRequest& request) {
    const EstimationTarget target = parse_target(request.target);
    const Parameters p = ctx.parameters();
    const double closed = fisher::cfi_closed(target, p.probe, p.env, p.t);
    const auto oracles = fisher::cfi_quadrature(target, p.probe, p.env, p.t);
    const double qfi = fisher::qfi_analytic(target, p.probe, p.env, p.t);
    const std::string unit = fisher_unit(target);

    Table table;
    table.header = {"target", "cfi_closed" + unit, "cfi_quadrature" + unit,
                    "cfi_gaussian_identity" + unit, "quadrature_error" + unit, "qfi_analytic" + unit,
                    "cfi_over_qfi"};
    table.add_row({request.target, closed, oracles.quadrature, oracles.gaussian_identity,
                   oracles.quadrature_error, qfi, closed / qfi});
    nlohmann::json params = p.to_json();
    params["target"] = request.target;
    ctx.emit(table, std::nullopt, params);
}

void cmd_tgi(const Context& ctx) {
    const Parameters p = ctx.parameters();
    const double tau = thermometry::tau_max_exact(p.probe, p.env);
    Table table;
    table.header = {"gamma",         "lambda_m2s",        "tau_max_s", "tau_max_approx_s",
                    "purity_at_tau_max", "tgi_db", "tgi_approx_db"};
    table.add_row({p.probe.gamma(), p.env.lambda(), tau, thermometry::tau_max_approx(p.probe, p.env),
                   purity_exact(p.probe, p.env, tau), thermometry::tgi(p.probe, p.env),
                   thermometry::tgi_approx(p.probe.gamma())});
    ctx.emit(table, std::nullopt, p.to_json());
}

} // namespace pmgauss::cli
