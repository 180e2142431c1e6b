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


#include "app.hpp"

#include <iostream>
#include <span>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "pmgauss/error.hpp"
#include "version.hpp"

namespace pmgauss::cli {

namespace {

struct ParameterFlag {
    const char* flag;
    const char* key;
    const char* help;
};

constexpr ParameterFlag kProbeFlags[] = {
    {"--mass", "mass_kg", "Probe mass in kg"},
    {"--sigma0", "sigma0_m", "Initial width (m, or with mm/um/nm suffix)"},
    {"--ell0", "ell0_m", "Coherence length (m, suffixed, or inf)"},
    {"--gamma", "gamma", "Position-momentum correlation parameter"},
};

constexpr ParameterFlag kEnvironmentFlags[] = {
    {"--lambda", "lambda_m2s", "Scattering constant in m^-2 s^-1"},
    {"--temperature", "temperature_k", "Gas temperature in K (sets Lambda)"},
    {"--t", "t_s", "Interaction time (s, or with ms/us/ns suffix)"},
};

constexpr ParameterFlag kGasFlags[] = {
    {"--m-air", "m_air_kg", "Gas molecule mass in kg"},
    {"--number-density", "number_density_m3", "Gas number density in m^-3"},
    {"--molecule-size", "molecule_size_m", "Gas molecule size (m or suffixed)"},
};

void add_flags(CLI::App* app, Overrides& overrides, std::span<const ParameterFlag> flags) {
    for (const auto& f : flags) {
        const std::string key = f.key;
        app->add_option_function<std::string>(
            f.flag, [&overrides, key](const std::string& value) { overrides[key] = value; },
            f.help);
    }
}

void add_physics_flags(CLI::App* app, Overrides& overrides) {
    add_flags(app, overrides, kProbeFlags);
    add_flags(app, overrides, kEnvironmentFlags);
    add_flags(app, overrides, kGasFlags);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Fisher information and thermometry for correlated Gaussian matter-wave probes",
                 "pmgauss"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    Overrides overrides;
    app.add_option("--config", global.config, "Key = value parameter file");
    app.add_option("--out", global.out, "Output file (figures: output directory); '-' is stdout");
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"csv", "svg"}));
    app.add_flag("--quiet", global.quiet, "Suppress notes and the stderr manifest");

    SweepRequest sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep gamma, Lambda or time");
    sweep_cmd->add_option("--target", sweep.target, "purity, gamma or lambda")
        ->check(CLI::IsMember({"purity", "gamma", "lambda"}));
    sweep_cmd->add_option("--axis", sweep.axis, "gamma, lambda or time")
        ->check(CLI::IsMember({"gamma", "lambda", "time"}));
    sweep_cmd->add_option("--min", sweep.min, "Axis start")->required();
    sweep_cmd->add_option("--max", sweep.max, "Axis end")->required();
    sweep_cmd->add_option("--points", sweep.points, "Number of points (>= 2)");
    sweep_cmd->add_option("--scale", sweep.scale, "linear or log")
        ->check(CLI::IsMember({"linear", "log"}));
    add_physics_flags(sweep_cmd, overrides);

    Table1Request table1;
    auto* table1_cmd = app.add_subcommand("table1", "Thermometry table with reference residuals");
    table1_cmd->add_option("--gammas", table1.gammas, "Comma-separated gamma values")
        ->delimiter(',');
    table1_cmd->add_flag("--pretty", table1.pretty, "Aligned text instead of CSV");
    add_physics_flags(table1_cmd, overrides);

    ConvertRequest convert;
    auto* convert_cmd = app.add_subcommand("convert", "Temperature <-> Lambda");
    convert_cmd->add_option("--to-lambda", convert.to_lambda, "Temperature in K");
    convert_cmd->add_option("--to-temp", convert.to_temp, "Lambda in m^-2 s^-1");
    add_flags(convert_cmd, overrides, kGasFlags);

    FiguresRequest figures;
    auto* figures_cmd = app.add_subcommand("figures", "Write figure data sets");
    figures_cmd->add_option("--preset", figures.preset, "fig2, fig3, fig4, fig5, figD, figE or all");
    add_flags(figures_cmd, overrides, kProbeFlags);
    add_flags(figures_cmd, overrides, kGasFlags);

    LensRequest lens;
    auto* lens_cmd = app.add_subcommand("lens", "Standing-wave atom lens calculators");
    lens_cmd->add_option("--omega0", lens.omega0, "Peak Rabi frequency in rad/s")->required();
    lens_cmd->add_option("--wavelength", lens.wavelength, "Laser wavelength")->required();
    lens_cmd->add_option("--detuning", lens.detuning, "Detuning in rad/s");
    lens_cmd->add_option("--v-cm", lens.v_cm, "Centre-of-mass speed in m/s")->required();
    lens_cmd->add_option("--t-int", lens.t_int, "Interaction time")->required();
    lens_cmd->add_option("--x", lens.x, "Transverse position");
    lens_cmd->add_option("--z", lens.z, "Longitudinal position");
    lens_cmd->add_option("--curvature-radius", lens.curvature_radius,
                         "Wavefront curvature radius (R > 0 diverging)");
    add_flags(lens_cmd, overrides, kProbeFlags);

    PointRequest point;
    auto* purity_cmd = app.add_subcommand("purity", "Purity and covariance at one point");
    purity_cmd->add_option("--delta-x", point.delta_x, "Separation for the decoherence time");
    add_physics_flags(purity_cmd, overrides);

    auto* qfi_cmd = app.add_subcommand("qfi", "Quantum Fisher information at one point");
    auto* cfi_cmd = app.add_subcommand("cfi", "Position-readout Fisher information at one point");
    for (auto* cmd : {qfi_cmd, cfi_cmd}) {
        cmd->add_option("--target", point.target, "gamma or lambda")
            ->check(CLI::IsMember({"gamma", "lambda"}));
        add_physics_flags(cmd, overrides);
    }
    qfi_cmd->add_option("--repeats", point.repeats, "Repetitions for the Cramer-Rao bound")
        ->check(CLI::PositiveNumber);

    auto* tgi_cmd = app.add_subcommand("tgi", "tau_max and temporal gain of information");
    add_physics_flags(tgi_cmd, overrides);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    auto* chosen = app.get_subcommands().front();
    Context ctx{global, overrides, chosen->get_name(), args, out, err};
    try {
        if (chosen == sweep_cmd) {
            cmd_sweep(ctx, sweep);
        } else if (chosen == table1_cmd) {
            cmd_table1(ctx, table1);
        } else if (chosen == convert_cmd) {
            cmd_convert(ctx, convert);
        } else if (chosen == figures_cmd) {
            cmd_figures(ctx, figures);
        } else if (chosen == lens_cmd) {
            cmd_lens(ctx, lens);
        } else if (chosen == purity_cmd) {
            cmd_purity(ctx, point);
        } else if (chosen == qfi_cmd) {
            cmd_qfi(ctx, point);
        } else if (chosen == cfi_cmd) {
            cmd_cfi(ctx, point);
        } else {
            cmd_tgi(ctx);
        }
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const IoError& e) {
        err << "i/o error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitOk;
}

} // namespace pmgauss::cli
