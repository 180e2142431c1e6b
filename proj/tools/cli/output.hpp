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
 * @file output.hpp
 * CSV tables, minimal SVG line charts and the run manifest.
 */
#pragma once

#include <chrono>
#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace pmgauss::cli {

/// A number, or text (an empty string leaves the field blank).
using Cell = std::variant<double, std::string>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void add_row(std::vector<Cell> row);
};

/// Header row, then one line per row; numbers use 17 significant digits,
/// fields containing ',', '"' or a newline are quoted. Lines end in '\n'.
std::string to_csv(const Table& table);

struct Series {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct Chart {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;
};

std::string to_svg(const Chart& chart);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_file(const std::filesystem::path& path, const std::string& content);

/// Provenance record written next to every output.
class Manifest {
  public:
    Manifest(std::string command, std::vector<std::string> arguments);

    void set_parameters(nlohmann::json parameters) { parameters_ = std::move(parameters); }
    void add_output(const std::string& path) { outputs_.push_back(path); }

    /// Stamps the wall-clock duration since construction.
    nlohmann::json finish() const;

  private:
    std::string command_;
    std::vector<std::string> arguments_;
    nlohmann::json parameters_ = nlohmann::json::object();
    std::vector<std::string> outputs_;
    std::chrono::steady_clock::time_point start_;
};

} // namespace pmgauss::cli
