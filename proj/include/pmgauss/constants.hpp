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

namespace pmgauss::constants {

inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double planck = 6.62607015e-34;     // J s
inline constexpr double boltzmann = 1.380649e-23;    // J / K
inline constexpr double pi = 3.14159265358979323846;

} // namespace pmgauss::constants

namespace pmgauss {

/// Reference scenario: C60 fullerene molecules crossing a dilute air bath.
struct FullereneDefaults {
    double mass_kg = 1.2e-24;
    double sigma0_m = 7.8e-9;
    double ell0_m = 5.0e-8;
    double molecule_size_m = 7e-10;
    double m_air_kg = 5.0e-26;
    double number_density_m3 = 1e12;
};

inline constexpr FullereneDefaults fullerene{};

} // namespace pmgauss
