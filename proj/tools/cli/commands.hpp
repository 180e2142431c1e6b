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
 * @file commands.hpp
 * Subcommand implementations. Each writes its table through Context::emit,
 * which also produces the run manifest.
 */
#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "output.hpp"

namespace pmgauss::cli {

struct GlobalOptions {
    std::string config;
    std::string out;
    std::string format = "csv";
    bool quiet = false;
};

struct Context {
    GlobalOptions global;
    Overrides overrides;
    std::string command;
    std::vector<std::string> arguments;
    std::ostream& out;
    std::ostream& err;

    Parameters parameters(const Defaults& defaults = {}) const;

    /// Writes `table` (or `chart` for --format svg) to --out or stdout and the
    /// manifest next to it (stderr when writing to stdout).
    void emit(const Table& table, const std::optional<Chart>& chart,
              const nlohmann::json& parameters) const;

    void note(const std::string& message) const;
};

struct SweepRequest {
    std::string target = "gamma"; // purity | gamma | lambda
    std::string axis = "gamma";   // gamma | lambda | time
    std::string min;
    std::string max;
    int points = 101;
    std::string scale = "linear"; // linear | log
};

/// Values along the sweep axis; validates the request.
std::vector<double> sweep_axis(const SweepRequest& request);

void cmd_sweep(const Context& ctx, const SweepRequest& request);

struct Table1Request {
    std::vector<double> gammas;
    bool pretty = false;
};
void cmd_table1(const Context& ctx, const Table1Request& request);

struct ConvertRequest {
    std::optional<double> to_lambda; // temperature in K
    std::optional<double> to_temp;   // Lambda in m^-2 s^-1
};
void cmd_convert(const Context& ctx, const ConvertRequest& request);

struct LensRequest {
    std::string omega0;
    std::string wavelength;
    std::string detuning = "0";
    std::string v_cm;
    std::string t_int;
    std::string x = "0";
    std::string z = "0";
    std::optional<std::string> curvature_radius;
};
void cmd_lens(const Context& ctx, const LensRequest& request);

struct PointRequest {
    std::string target = "gamma";
    std::uint64_t repeats = 1;
    std::optional<std::string> delta_x;
};
void cmd_purity(const Context& ctx, const PointRequest& request);
void cmd_qfi(const Context& ctx, const PointRequest& request);
void cmd_cfi(const Context& ctx, const PointRequest& request);
void cmd_tgi(const Context& ctx);

struct FiguresRequest {
    std::string preset = "all";
};
void cmd_figures(const Context& ctx, const FiguresRequest& request);

} // namespace pmgauss::cli
