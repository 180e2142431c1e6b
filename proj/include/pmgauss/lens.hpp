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
 * @file lens.hpp
 * Standing-wave atom lens: Rabi profile, optical potential, focal length and
 * the map from wavefront curvature to the correlation parameter gamma.
 *
 * Frequencies and potentials are angular frequencies (energy / hbar).
 */
#pragma once

namespace pmgauss::lens {

struct LensSpec {
    double omega0;     // peak Rabi frequency, rad/s
    double wavelength; // m
    double detuning;   // rad/s
    double v_cm;       // m/s
    double t_int;      // s

    /// Throws InvalidArgument unless omega0, wavelength, v_cm and t_int are > 0.
    void validate() const;
    double wavenumber() const;
};

/// Omega0 cos(2 pi x / lambda) exp(-pi z^2 / (v_cm t_int)^2).
double rabi_profile(const LensSpec& lens, double x, double z);

struct OpticalPotential {
    /// -sqrt(Omega^2 + delta^2) / 2.
    double full;
    /// Omega0 k^2 x^2 (1 + delta^2 / Omega0^2) / 4.
    double harmonic;
};

OpticalPotential optical_potential(const LensSpec& lens, double x, double z);

/// h / (m v).
double de_broglie(double mass_kg, double v_cm);

/// lambda^2 sqrt(1 + delta^2 / Omega0^2) / (pi Omega0 t_int lambda_dB).
double focal_length(const LensSpec& lens, double mass_kg);

/// gamma = m v sigma0^2 / (hbar R), from matching the lens phase
/// m v x^2 / (2 hbar R) to gamma x^2 / (2 sigma0^2). R > 0 (diverging) gives gamma > 0.
double gamma_from_curvature(double mass_kg, double v_cm, double curvature_radius_m,
                            double sigma0_m);

} // namespace pmgauss::lens
