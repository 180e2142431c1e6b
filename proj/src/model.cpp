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

#include "pmgauss/model.hpp"

#include <cmath>

#include <fmt/format.h>

#include "detail/reduced.hpp"
#include "pmgauss/constants.hpp"
#include "pmgauss/error.hpp"
#include "pmgauss/thermometry.hpp"

namespace pmgauss {

namespace {

void require_time(double t) {
    if (!std::isfinite(t) || t < 0.0) {
        throw InvalidArgument(fmt::format("time must be finite and >= 0, got {}", t));
    }
}

} // namespace

CoherenceLength CoherenceLength::finite(double meters) {
    if (!(meters > 0.0) || !std::isfinite(meters)) {
        throw InvalidArgument(fmt::format("coherence length must be finite and > 0, got {}", meters));
    }
    CoherenceLength out;
    out.meters_ = meters;
    return out;
}

double CoherenceLength::meters() const {
    if (!meters_) {
        throw InvalidArgument("fully coherent source has no finite coherence length");
    }
    return *meters_;
}

double CoherenceLength::inverse_square() const noexcept {
    return meters_ ? 1.0 / (*meters_ * *meters_) : 0.0;
}

ProbeSpec::ProbeSpec(double mass_kg, double sigma0_m, CoherenceLength ell0, double gamma)
    : mass_(mass_kg), sigma0_(sigma0_m), ell0_(ell0), gamma_(gamma) {
    if (!(mass_kg > 0.0) || !std::isfinite(mass_kg)) {
        throw InvalidArgument(fmt::format("mass must be finite and > 0, got {}", mass_kg));
    }
    if (!(sigma0_m > 0.0) || !std::isfinite(sigma0_m)) {
        throw InvalidArgument(fmt::format("sigma0 must be finite and > 0, got {}", sigma0_m));
    }
    if (!std::isfinite(gamma)) {
        throw InvalidArgument("gamma must be finite");
    }
}

ProbeSpec ProbeSpec::fullerene(double gamma) {
    return {pmgauss::fullerene.mass_kg, pmgauss::fullerene.sigma0_m,
            CoherenceLength::finite(pmgauss::fullerene.ell0_m), gamma};
}

GasProperties GasProperties::fullerene_scenario() noexcept {
    return {pmgauss::fullerene.m_air_kg, pmgauss::fullerene.number_density_m3,
            pmgauss::fullerene.molecule_size_m};
}

void GasProperties::validate() const {
    if (!(m_air_kg > 0.0) || !(number_density_m3 > 0.0) || !(molecule_size_m > 0.0)) {
        throw InvalidArgument("gas mass, number density and molecule size must all be > 0");
    }
}

EnvironmentSpec::EnvironmentSpec(double lambda) : lambda_(lambda) {
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw InvalidArgument(fmt::format("Lambda must be finite and >= 0, got {}", lambda));
    }
}

EnvironmentSpec EnvironmentSpec::from_gas(const ScatteringGas& gas) {
    EnvironmentSpec env{thermometry::lambda_from_temperature(gas.temperature_k, gas.properties)};
    env.gas_ = gas;
    return env;
}

double tau0(const ProbeSpec& probe) { return detail::tau0_in<double>(probe); }

KernelParams kernel_params(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    if (!(t > 0.0)) {
        throw InvalidArgument("kernel undefined at t=0");
    }
    const double m = probe.mass();
    const double hbar = constants::hbar;
    const double s2 = probe.sigma0() * probe.sigma0();
    const double s4 = s2 * s2;
    const double inv_l2 = probe.ell0().inverse_square();
    const double g = probe.gamma();
    const double lt = env.lambda() * t;

    const double chirp = m / (2.0 * hbar * t) + g / (2.0 * s2);
    const double b_sq = 1.0 / (4.0 * s4) + inv_l2 / (2.0 * s2) + chirp * chirp + lt / (3.0 * s2);

    const double a1 = m * m / (8.0 * hbar * hbar * t * t * s2 * b_sq);
    // Second bracket carries 1/sigma0^2; with 1/(2 sigma0^2) the kernel
    // would disagree with the second moments and the closed-form purity.
    const double a2 = m * m / (4.0 * hbar * hbar * t * t * b_sq) * (inv_l2 / 2.0 + lt) +
                      lt / (12.0 * s2 * b_sq) * (lt + 1.0 / s2 + 2.0 * inv_l2) +
                      m * env.lambda() * g / (4.0 * hbar * s2 * b_sq) +
                      lt * g * g / (12.0 * s4 * b_sq);
    const double a3 = m / (4.0 * hbar * t * s2 * b_sq) * (lt + 1.0 / (2.0 * s2) + inv_l2) +
                      m * g / (8.0 * hbar * t * s2 * b_sq) * (m / (hbar * t) + g / s2);
    return {a1, a2, a3, b_sq, std::sqrt(2.0 * a1 / constants::pi)};
}

double kernel_purity(const KernelParams& kernel) {
    return std::sqrt(kernel.a1 / (kernel.a1 + 2.0 * kernel.a2));
}

double diagonal_density(const KernelParams& kernel, double x) {
    return kernel.n_t * std::exp(-2.0 * kernel.a1 * x * x);
}

CovarianceMatrix covariance(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    require_time(t);
    return detail::scaled_covariance(detail::reduce<Wide>(probe, env, t));
}

PurityBracket purity_bracket(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    require_time(t);
    const auto r = detail::reduce<double>(probe, env, t);
    const double tau = tau0(probe);
    const double excess = detail::bracket_excess(r);
    const double coupling_per_lambda = probe.sigma0() * probe.sigma0() * tau;
    return {1.0 + excess, excess, detail::bracket_d_gamma(r),
            detail::bracket_d_coupling(r) * coupling_per_lambda, detail::bracket_d_s(r) / tau};
}

double purity_exact(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    return 1.0 / std::sqrt(purity_bracket(probe, env, t).value);
}

double purity_approx(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    require_time(t);
    const auto r = detail::reduce<double>(probe, env, t);
    const double g = probe.gamma();
    const double cubic = 4.0 / 3.0 * r.coupling * (g * g + 1.0) * r.s * r.s * r.s;
    return 1.0 / std::sqrt(1.0 + cubic);
}

double purity_from_covariance(const CovarianceMatrix& cov) {
    constexpr double tolerance = 1e-9;
    const Wide det = cov.det();
    if (det < Wide(1.0 - tolerance)) {
        throw InvalidArgument(
            fmt::format("unphysical covariance: det = {} < 1", to_double(det)));
    }
    if (det <= Wide(1.0)) {
        return 1.0;
    }
    return to_double(Wide(1) / sqrt(det));
}

double position_density_variance(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    const auto cov = covariance(probe, env, t);
    return probe.sigma0() * probe.sigma0() * to_double(cov.sxx) / 2.0;
}

PurityGradient purity_gradient(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    const auto b = purity_bracket(probe, env, t);
    // d(D^-1/2) = -D^-3/2 dD / 2
    const double factor = -0.5 / (b.value * std::sqrt(b.value));
    return {factor * b.d_gamma, factor * b.d_lambda, factor * b.d_time};
}

double pearson_from_gamma(double gamma) { return gamma / std::sqrt(1.0 + gamma * gamma); }

double gamma_from_pearson(double r) {
    if (!(std::abs(r) < 1.0)) {
        throw InvalidArgument("correlation magnitude must be < 1");
    }
    return r / std::sqrt(1.0 - r * r);
}

} // namespace pmgauss
