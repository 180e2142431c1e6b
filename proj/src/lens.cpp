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


#include "pmgauss/lens.hpp"

#include <cmath>

#include <fmt/format.h>

#include "pmgauss/constants.hpp"
#include "pmgauss/error.hpp"

namespace pmgauss::lens {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidArgument(fmt::format("{} must be finite and > 0, got {}", name, value));
    }
}

} // namespace

void LensSpec::validate() const {
    require_positive(omega0, "omega0");
    require_positive(wavelength, "wavelength");
    require_positive(v_cm, "v_cm");
    require_positive(t_int, "t_int");
    if (!std::isfinite(detuning)) {
        throw InvalidArgument("detuning must be finite");
    }
}

double LensSpec::wavenumber() const { return 2.0 * constants::pi / wavelength; }

double rabi_profile(const LensSpec& lens, double x, double z) {
    lens.validate();
    const double width = lens.v_cm * lens.t_int;
    return lens.omega0 * std::cos(lens.wavenumber() * x) *
           std::exp(-constants::pi * z * z / (width * width));
}

OpticalPotential optical_potential(const LensSpec& lens, double x, double z) {
    const double rabi = rabi_profile(lens, x, z);
    const double k = lens.wavenumber();
    const double ratio = lens.detuning / lens.omega0;
    return {-0.5 * std::hypot(rabi, lens.detuning),
            0.25 * lens.omega0 * k * k * x * x * (1.0 + ratio * ratio)};
}

double de_broglie(double mass_kg, double v_cm) {
    require_positive(mass_kg, "mass");
    require_positive(v_cm, "v_cm");
    return constants::planck / (mass_kg * v_cm);
}

double focal_length(const LensSpec& lens, double mass_kg) {
    lens.validate();
    const double ratio = lens.detuning / lens.omega0;
    return lens.wavelength * lens.wavelength * std::sqrt(1.0 + ratio * ratio) /
           (constants::pi * lens.omega0 * lens.t_int * de_broglie(mass_kg, lens.v_cm));
}

double gamma_from_curvature(double mass_kg, double v_cm, double curvature_radius_m,
                            double sigma0_m) {
    require_positive(mass_kg, "mass");
    require_positive(v_cm, "v_cm");
    require_positive(sigma0_m, "sigma0");
    if (curvature_radius_m == 0.0 || std::isnan(curvature_radius_m)) {
        throw InvalidArgument("curvature radius must be nonzero");
    }
    return mass_kg * v_cm * sigma0_m * sigma0_m / (constants::hbar * curvature_radius_m);
}

} // namespace pmgauss::lens
