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
 * @file model.hpp
 * Probe and environment descriptions, the evolved Gaussian density kernel,
 * second-moment dynamics and purity of a position-momentum correlated wave
 * packet in a Markovian scattering bath.
 *
 * Units are SI throughout. The covariance matrix uses dimensionless
 * quadratures (x / sigma0, p sigma0 / hbar) scaled so that a pure state has
 * unit determinant, hence det = 1 / purity^2.
 */
#pragma once

#include <optional>

#include "pmgauss/wide.hpp"

namespace pmgauss {

/// Transverse coherence length of the source. A perfectly collimated source
/// is represented explicitly rather than by a large number so that every
/// 1/ell0^2 term drops out exactly.
class CoherenceLength {
  public:
    static CoherenceLength finite(double meters);
    static CoherenceLength fully_coherent() noexcept { return CoherenceLength{}; }

    bool is_fully_coherent() const noexcept { return !meters_.has_value(); }

    /// Throws InvalidArgument for a fully coherent source.
    double meters() const;

    /// 1 / ell0^2, exactly zero for a fully coherent source.
    double inverse_square() const noexcept;

    friend bool operator==(const CoherenceLength&, const CoherenceLength&) = default;

  private:
    CoherenceLength() = default;
    std::optional<double> meters_;
};

/// The matter-wave probe: mass, initial width, source coherence and the
/// position-momentum correlation parameter gamma.
class ProbeSpec {
  public:
    ProbeSpec(double mass_kg, double sigma0_m, CoherenceLength ell0, double gamma);

    /// Fullerene defaults (m = 1.2e-24 kg, sigma0 = 7.8 nm, ell0 = 50 nm).
    static ProbeSpec fullerene(double gamma = 0.0);

    double mass() const noexcept { return mass_; }
    double sigma0() const noexcept { return sigma0_; }
    const CoherenceLength& ell0() const noexcept { return ell0_; }
    double gamma() const noexcept { return gamma_; }

    ProbeSpec with_gamma(double gamma) const { return {mass_, sigma0_, ell0_, gamma}; }
    ProbeSpec with_mass(double mass_kg) const { return {mass_kg, sigma0_, ell0_, gamma_}; }
    ProbeSpec with_sigma0(double sigma0_m) const { return {mass_, sigma0_m, ell0_, gamma_}; }
    ProbeSpec with_ell0(CoherenceLength ell0) const { return {mass_, sigma0_, ell0, gamma_}; }

  private:
    double mass_;
    double sigma0_;
    CoherenceLength ell0_;
    double gamma_;
};

/// Properties of the scattering gas that, together with a temperature,
/// fix the effective coupling Lambda.
struct GasProperties {
    double m_air_kg;
    double number_density_m3;
    double molecule_size_m;

    static GasProperties fullerene_scenario() noexcept;
    void validate() const;
};

struct ScatteringGas {
    double temperature_k;
    GasProperties properties;
};

/// Scattering environment, described by the effective coupling Lambda
/// (m^-2 s^-1) and optionally the microscopic gas it was derived from.
class EnvironmentSpec {
  public:
    explicit EnvironmentSpec(double lambda);
    static EnvironmentSpec from_gas(const ScatteringGas& gas);
    static EnvironmentSpec vacuum() { return EnvironmentSpec{0.0}; }

    double lambda() const noexcept { return lambda_; }
    const std::optional<ScatteringGas>& gas() const noexcept { return gas_; }

    EnvironmentSpec with_lambda(double lambda) const { return EnvironmentSpec{lambda}; }

  private:
    double lambda_;
    std::optional<ScatteringGas> gas_;
};

/// Coefficients of the evolved density kernel
/// rho(x, x') = n_t exp(-A x^2 - conj(A) x'^2 + C x x'),
/// A = a1 + a2 - i a3, C = 2 a2.
struct KernelParams {
    double a1;   // m^-2
    double a2;   // m^-2
    double a3;   // m^-2
    double b_sq; // m^-4
    double n_t;  // m^-1
};

/// Symmetric 2x2 second-moment matrix in scaled quadrature units.
template <class Real> struct BasicCovariance {
    Real sxx;
    Real sxp;
    Real spp;

    Real det() const { return sxx * spp - sxp * sxp; }
    BasicCovariance adjugate() const { return {spp, -sxp, sxx}; }
};

using CovarianceMatrix = BasicCovariance<Wide>;

/// Tr{[adj(s) ds]^2} for symmetric s and ds.
template <class Real>
Real trace_adjugate_product_squared(const BasicCovariance<Real>& s,
                                    const BasicCovariance<Real>& ds) {
    const Real a00 = s.spp * ds.sxx - s.sxp * ds.sxp;
    const Real a01 = s.spp * ds.sxp - s.sxp * ds.spp;
    const Real a10 = s.sxx * ds.sxp - s.sxp * ds.sxx;
    const Real a11 = s.sxx * ds.spp - s.sxp * ds.sxp;
    return a00 * a00 + Real(2) * a01 * a10 + a11 * a11;
}

/// The purity bracket D = mu^-2 and its first derivatives.
struct PurityBracket {
    double value;     // D >= 1
    double excess;    // D - 1, summed without cancellation against the 1
    double d_gamma;   // dD/dgamma
    double d_lambda;  // dD/dLambda, s m^2
    double d_time;    // dD/dt, s^-1
};

/// m sigma0^2 / hbar: the time over which the packet spreads by its own width.
double tau0(const ProbeSpec& probe);

/// Kernel coefficients of the evolved state. Requires t > 0.
KernelParams kernel_params(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

/// Purity implied by the kernel, sqrt(a1 / (a1 + 2 a2)).
double kernel_purity(const KernelParams& kernel);

/// rho(x, x, t) = n_t exp(-2 a1 x^2).
double diagonal_density(const KernelParams& kernel, double x);

/// Scaled covariance at time t >= 0.
CovarianceMatrix covariance(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

PurityBracket purity_bracket(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

/// Exact purity, bracket^(-1/2).
double purity_exact(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

/// Purity keeping only the cubic-in-t decay term.
double purity_approx(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

/// det(cov)^(-1/2). Determinants within 1e-9 below one are treated as pure;
/// anything lower throws InvalidArgument ("unphysical covariance").
double purity_from_covariance(const CovarianceMatrix& cov);

/// Variance (m^2) of the zero-mean Gaussian position density at time t.
double position_density_variance(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

/// Analytic derivatives of the exact purity.
struct PurityGradient {
    double d_gamma;
    double d_lambda;
    double d_time;
};
PurityGradient purity_gradient(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

double pearson_from_gamma(double gamma);
double gamma_from_pearson(double r);

} // namespace pmgauss
