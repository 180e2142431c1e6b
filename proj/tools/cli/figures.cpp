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


#include <cmath>
#include <filesystem>
#include <functional>

#include <fmt/format.h>

#include "commands.hpp"
#include "pmgauss/error.hpp"
#include "pmgauss/fisher.hpp"
#include "pmgauss/thermometry.hpp"
#include "reference.hpp"

namespace pmgauss::cli {

using fisher::EstimationTarget;

namespace {

struct Panel {
    std::string name;
    Table table;
    Chart chart;
};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
    }
    return out;
}

std::vector<double> logspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    }
    return out;
}

/// (1/mu) |dmu/dgamma| and (1/mu) |dmu/dLambda|.
double relative_gamma_derivative(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    return std::abs(purity_gradient(probe, env, t).d_gamma) / purity_exact(probe, env, t);
}

double relative_lambda_derivative(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    return std::abs(purity_gradient(probe, env, t).d_lambda) / purity_exact(probe, env, t);
}

/// QFI, CFI and purity against gamma at fixed Lambda and t.
Panel gamma_panel(const std::string& name, const ProbeSpec& probe, double lambda, double t,
                  EstimationTarget target, const std::vector<double>& gammas) {
    const EnvironmentSpec env{lambda};
    const bool scaled = target == EstimationTarget::Lambda;
    const double l2 = lambda * lambda;
    Panel panel{name, {}, {}};
    panel.table.header = {"gamma", scaled ? "lambda_sq_qfi" : "qfi_gamma",
                          scaled ? "lambda_sq_cfi" : "cfi_gamma", "purity",
                          "relative_gamma_derivative"};
    Series qfi{panel.table.header[1], {}, {}};
    Series cfi{panel.table.header[2], {}, {}};
    for (const double g : gammas) {
        const ProbeSpec p = probe.with_gamma(g);
        const double q = fisher::qfi_analytic(target, p, env, t) * (scaled ? l2 : 1.0);
        const double c = fisher::cfi_closed(target, p, env, t) * (scaled ? l2 : 1.0);
        panel.table.add_row({g, q, c, purity_exact(p, env, t), relative_gamma_derivative(p, env, t)});
        qfi.x.push_back(g);
        qfi.y.push_back(q);
        cfi.x.push_back(g);
        cfi.y.push_back(c);
    }
    panel.chart = {fmt::format("{}: Lambda = {:g} m^-2 s^-1, t = {:g} s", name, lambda, t), "gamma",
                   "Fisher information", false, false, {qfi, cfi}};
    return panel;
}

std::vector<Panel> fig2(const ProbeSpec& probe) {
    const auto gammas = linspace(-10.0, 10.0, 401);
    std::vector<Panel> out;
    const char* labels[] = {"fig2a", "fig2b", "fig2c", "fig2d"};
    const double lambdas[] = {0.0, 1e20, 1e22, 1e23};
    for (int i = 0; i < 4; ++i) {
        out.push_back(gamma_panel(labels[i], probe, lambdas[i], 1e-6, EstimationTarget::Gamma, gammas));
    }
    return out;
}

std::vector<Panel> fig3(const ProbeSpec& probe) {
    const auto gammas = linspace(-150.0, 150.0, 301);
    return {gamma_panel("fig3a", probe, 1e15, 50e-6, EstimationTarget::Lambda, gammas),
            gamma_panel("fig3b", probe, 1e21, 50e-6, EstimationTarget::Lambda, gammas)};
}

std::vector<Panel> fig4(const ProbeSpec& probe) {
    const EnvironmentSpec env{1e15};
    const double l2 = env.lambda() * env.lambda();
    const auto times = logspace(1e-7, 1e-2, 401);
    Panel curves{"fig4", {}, {}};
    curves.table.header = {"gamma", "t_s", "lambda_sq_qfi", "purity", "relative_purity_rate_per_s"};
    curves.chart = {"fig4: Lambda = 1e15 m^-2 s^-1", "t_s", "lambda_sq_qfi", true, false, {}};
    Panel saturation{"fig4_saturation", {}, {}};
    saturation.table.header = {"gamma", "plateau_lambda_sq_qfi", "t95_s", "tau_max_s"};
    saturation.chart = {"fig4: 95% saturation time", "gamma", "t95_s", false, true, {{"t95", {}, {}}}};
    for (const double g : {0.0, 10.0, 50.0}) {
        const ProbeSpec p = probe.with_gamma(g);
        Series s{fmt::format("gamma = {:g}", g), {}, {}};
        for (const double t : times) {
            const double q = l2 * fisher::qfi_analytic(EstimationTarget::Lambda, p, env, t);
            curves.table.add_row({g, t, q, purity_exact(p, env, t),
                                  thermometry::relative_purity_rate(p, env, t)});
            s.x.push_back(t);
            s.y.push_back(q);
        }
        curves.chart.series.push_back(std::move(s));
        const auto sat = thermometry::qfi_saturation(p, env);
        saturation.table.add_row({g, sat.plateau, sat.time, thermometry::tau_max_exact(p, env)});
        saturation.chart.series[0].x.push_back(g);
        saturation.chart.series[0].y.push_back(sat.time);
    }
    return {curves, saturation};
}

std::vector<Panel> fig5(const ProbeSpec& probe) {
    Panel curve{"fig5_curve", {}, {}};
    curve.table.header = {"gamma", "tgi_approx_db"};
    Series approx{"approximate", {}, {}};
    for (const double g : linspace(-150.0, 150.0, 301)) {
        curve.table.add_row({g, thermometry::tgi_approx(g)});
        approx.x.push_back(g);
        approx.y.push_back(thermometry::tgi_approx(g));
    }
    Panel points{"fig5_points", {}, {}};
    points.table.header = {"gamma", "tau_max_s", "tgi_db", "tgi_approx_db", "difference_db"};
    Series exact{"exact", {}, {}};
    std::vector<double> gammas;
    for (const auto& row : kReferenceTable) {
        gammas.push_back(row.gamma);
    }
    for (const auto& r : thermometry::build_table1(probe, kReferenceLambda, gammas)) {
        const double a = thermometry::tgi_approx(r.gamma);
        points.table.add_row({r.gamma, r.tau_max, r.tgi_db, a, r.tgi_db - a});
        exact.x.push_back(r.gamma);
        exact.y.push_back(r.tgi_db);
    }
    curve.chart = {"fig5: TGI", "gamma", "TGI (dB)", false, false, {approx, exact}};
    points.chart = curve.chart;
    return {curve, points};
}

std::vector<Panel> fig_d(const ProbeSpec& probe) {
    const EnvironmentSpec env{1e22};
    const auto gammas = linspace(-10.0, 10.0, 41);
    const auto times = logspace(1e-7, 1e-4, 31);
    Panel panel{"figD", {}, {}};
    panel.table.header = {"gamma", "t_s", "qfi_gamma", "purity", "relative_gamma_derivative"};
    panel.chart = {"figD: Lambda = 1e22 m^-2 s^-1", "gamma", "qfi_gamma", false, false, {}};
    for (std::size_t k = 0; k < times.size(); ++k) {
        const double t = times[k];
        const bool plotted = k % 10 == 0;
        Series s{fmt::format("t = {:.3g} s", t), {}, {}};
        for (const double g : gammas) {
            const ProbeSpec p = probe.with_gamma(g);
            const double q = fisher::qfi_analytic(EstimationTarget::Gamma, p, env, t);
            panel.table.add_row({g, t, q, purity_exact(p, env, t), relative_gamma_derivative(p, env, t)});
            s.x.push_back(g);
            s.y.push_back(q);
        }
        if (plotted) {
            panel.chart.series.push_back(std::move(s));
        }
    }
    return {panel};
}

std::vector<Panel> fig_e(const ProbeSpec& probe) {
    const double t = 50e-6;
    const auto lambdas = logspace(1e13, 1e23, 201);
    Panel panel{"figE", {}, {}};
    panel.table.header = {"gamma", "lambda_m2s", "lambda_sq_qfi", "purity",
                          "relative_lambda_derivative_m2s"};
    panel.chart = {"figE: t = 50 us", "lambda_m2s", "lambda_sq_qfi", true, false, {}};
    for (const double g : {-10.0, 0.0, 5.0}) {
        const ProbeSpec p = probe.with_gamma(g);
        Series s{fmt::format("gamma = {:g}", g), {}, {}};
        for (const double lambda : lambdas) {
            const EnvironmentSpec env{lambda};
            const double q =
                lambda * lambda * fisher::qfi_analytic(EstimationTarget::Lambda, p, env, t);
            panel.table.add_row(
                {g, lambda, q, purity_exact(p, env, t), relative_lambda_derivative(p, env, t)});
            s.x.push_back(lambda);
            s.y.push_back(q);
        }
        panel.chart.series.push_back(std::move(s));
    }
    return {panel};
}

} // namespace

void cmd_figures(const Context& ctx, const FiguresRequest& request) {
    const std::map<std::string, std::function<std::vector<Panel>(const ProbeSpec&)>> presets{
        {"fig2", fig2}, {"fig3", fig3}, {"fig4", fig4},
        {"fig5", fig5}, {"figD", fig_d}, {"figE", fig_e},
    };
    std::vector<std::string> selected;
    if (request.preset == "all") {
        for (const auto& [name, fn] : presets) {
            selected.push_back(name);
        }
    } else if (presets.count(request.preset)) {
        selected.push_back(request.preset);
    } else {
        throw InvalidArgument(fmt::format(
            "unknown preset '{}' (expected fig2, fig3, fig4, fig5, figD, figE or all)", request.preset));
    }

    const Parameters p = ctx.parameters();
    const std::filesystem::path dir = ctx.global.out.empty() ? "figures" : ctx.global.out;
    Manifest manifest(ctx.command, ctx.arguments);
    nlohmann::json params = p.to_json();
    params["preset"] = request.preset;
    params["note"] = "Lambda and t are fixed per panel by the preset; other entries apply";
    manifest.set_parameters(params);

    for (const auto& name : selected) {
        for (const Panel& panel : presets.at(name)(p.probe)) {
            const auto csv = dir / (panel.name + ".csv");
            write_file(csv, to_csv(panel.table));
            manifest.add_output(csv.string());
            if (ctx.global.format == "svg") {
                const auto svg = dir / (panel.name + ".svg");
                write_file(svg, to_svg(panel.chart));
                manifest.add_output(svg.string());
            }
        }
    }
    write_file(dir / "manifest.json", manifest.finish().dump(2) + "\n");
    ctx.note(fmt::format("wrote {} preset(s) to {}", selected.size(), dir.string()));
}

} // namespace pmgauss::cli
