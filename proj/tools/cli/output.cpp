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


#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>

#include <fmt/format.h>

#include "config.hpp"
#include "pmgauss/constants.hpp"
#include "version.hpp"

namespace pmgauss::cli {

namespace {

std::string csv_field(const Cell& cell) {
    if (const double* v = std::get_if<double>(&cell)) {
        return fmt::format("{:.17g}", *v);
    }
    const auto& text = std::get<std::string>(cell);
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') {
            quoted += '"';
        }
        quoted += c;
    }
    return quoted + '"';
}

std::string xml_escape(const std::string& text) {
    std::string out;
    for (char c : text) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

struct Axis {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    bool log = false;

    double map(double v) const { return log ? std::log10(v) : v; }
    void include(double v) {
        if (!std::isfinite(v) || (log && !(v > 0.0))) {
            return;
        }
        lo = std::min(lo, map(v));
        hi = std::max(hi, map(v));
    }
    void finalize() {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        } else if (hi == lo) {
            lo -= 0.5;
            hi += 0.5;
        }
    }
    double unit(double v) const { return (map(v) - lo) / (hi - lo); }
    std::string label(double u) const {
        const double v = lo + u * (hi - lo);
        return log ? fmt::format("1e{:.3g}", v) : fmt::format("{:.4g}", v);
    }
};

} // namespace

void Table::add_row(std::vector<Cell> row) { rows.push_back(std::move(row)); }

std::string to_csv(const Table& table) {
    std::string out;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out += (i ? "," : "") + csv_field(table.header[i]);
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out += (i ? "," : "") + csv_field(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_svg(const Chart& chart) {
    constexpr double width = 640, height = 420, left = 80, right = 160, top = 40, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    Axis ax{.log = chart.log_x};
    Axis ay{.log = chart.log_y};
    for (const auto& s : chart.series) {
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (std::isfinite(s.y[i])) {
                ax.include(s.x[i]);
                ay.include(s.y[i]);
            }
        }
    }
    ax.finalize();
    ay.finalize();

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        width, height);
    out += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", width, height);
    out += fmt::format("<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                       left + plot_w / 2, xml_escape(chart.title));
    out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                       "stroke=\"black\"/>\n",
                       left, top, plot_w, plot_h);
    for (int k = 0; k <= 4; ++k) {
        const double u = k / 4.0;
        out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n",
                           left + u * plot_w, top + plot_h + 18, ax.label(u));
        out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{}</text>\n",
                           left - 6, top + (1 - u) * plot_h + 4, ay.label(u));
    }
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                       left + plot_w / 2, height - 16, xml_escape(chart.x_label));
    out += fmt::format("<text x=\"16\" y=\"{}\" text-anchor=\"middle\" "
                       "transform=\"rotate(-90 16 {})\">{}</text>\n",
                       top + plot_h / 2, top + plot_h / 2, xml_escape(chart.y_label));

    for (std::size_t n = 0; n < chart.series.size(); ++n) {
        const auto& s = chart.series[n];
        const char* colour = kPalette[n % std::size(kPalette)];
        std::string points;
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            const bool drawable = std::isfinite(s.x[i]) && std::isfinite(s.y[i]) &&
                                  (!ax.log || s.x[i] > 0) && (!ay.log || s.y[i] > 0);
            if (!drawable) {
                continue;
            }
            points += fmt::format("{:.2f},{:.2f} ", left + ax.unit(s.x[i]) * plot_w,
                                  top + (1 - ay.unit(s.y[i])) * plot_h);
        }
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
                           "points=\"{}\"/>\n",
                           colour, points);
        const double ly = top + 14 + 18.0 * static_cast<double>(n);
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" "
                           "stroke-width=\"2\"/>\n",
                           width - right + 12, ly - 4, width - right + 32, ly - 4, colour);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", width - right + 38, ly,
                           xml_escape(s.name));
    }
    out += "</svg>\n";
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path(), ec);
        if (ec) {
            throw IoError(fmt::format("cannot create directory '{}': {}",
                                      path.parent_path().string(), ec.message()));
        }
    }
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) {
        throw IoError(fmt::format("cannot write '{}'", path.string()));
    }
}

Manifest::Manifest(std::string command, std::vector<std::string> arguments)
    : command_(std::move(command)), arguments_(std::move(arguments)),
      start_(std::chrono::steady_clock::now()) {}

nlohmann::json Manifest::finish() const {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
    nlohmann::json j;
    j["tool"] = "pmgauss";
    j["version"] = kVersion;
    j["command"] = command_;
    j["arguments"] = arguments_;
    j["constants"] = {
        {"hbar_js", constants::hbar},
        {"planck_js", constants::planck},
        {"boltzmann_jk", constants::boltzmann},
    };
    j["parameters"] = parameters_;
    j["outputs"] = outputs_;
    j["wall_clock_s"] = elapsed.count();
    return j;
}

} // namespace pmgauss::cli
