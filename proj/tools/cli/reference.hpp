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
 * @file reference.hpp
 * Reference values of the fullerene thermometry table at Lambda = 1e15
 * m^-2 s^-1, used for residual columns and acceptance checks.
 */
#pragma once

#include <array>

namespace pmgauss::cli {

struct ReferenceRow {
    double gamma;
    double tau_max_us;
    double purity;
    double relative_purity_rate;
    double lambda_sq_qfi;
    double tgi_db;
};

inline constexpr double kReferenceLambda = 1e15;

inline constexpr std::array<ReferenceRow, 7> kReferenceTable{{
    {-50.0, 17.1, 0.563, 58488.0, 0.246, 11.28},
    {-25.0, 27.2, 0.563, 36861.0, 0.247, 9.24},
    {-1.0, 183.2, 0.563, 5472.0, 0.247, 0.97},
    {0.0, 228.4, 0.563, 4377.0, 0.247, 0.0},
    {35.0, 21.7, 0.563, 46117.0, 0.247, 10.22},
    {70.0, 13.7, 0.563, 73191.0, 0.248, 12.23},
    {150.0, 8.2, 0.563, 121646.0, 0.247, 14.45},
}};

} // namespace pmgauss::cli
