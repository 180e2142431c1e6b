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
 * @file fisher.hpp
 * Quantum and classical Fisher information for the correlation parameter
 * gamma and the coupling Lambda.
 *
 * Two independent routes are provided for each quantity:
 *  - QFI: closed form in terms of purity and the Phi polynomials
 *    (qfi_analytic) versus the single-mode Gaussian formula evaluated with
 *    numerically differentiated covariance and purity (qfi_numeric).
 *  - CFI of a position readout: closed form in B^2 (cfi_closed) versus
 *    quadrature of the Fisher integrand and the Gaussian variance identity
 *    (cfi_quadrature).
 */
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "pmgauss/model.hpp"

namespace pmgauss::fisher {

enum class EstimationTarget { Gamma, Lambda };

std::string_view to_string(EstimationTarget target);

/// Coefficients of Phi_Theta = sum_k coefficient_k Lambda^k / (denominator tau0^4).
///
/// For gamma: coefficient_k = C_k / ell0^2 and denominator 72.
/// For Lambda: coefficient_k = Z_k / ell0^4 and denominator 18.
/// Dividing out the coherence length keeps a fully coherent source finite.
///
/// Phi itself equals Tr{[adj(s) ds]^2} for the unscaled second moments
/// (pure-state determinant 1/4); see kTraceConventionFactor.
struct PhiCoefficients {
    EstimationTarget target;
    std::array<double, 3> coefficients;
    /// 2 (sigma0/ell0)^2 + gamma^2 + 1, for the Lambda target only.
    std::optional<double> big_gamma;
    double value;
};

/// Tr{[adj(s) ds]^2} in the scaled (det = mu^-2) convention is 16 Phi:
/// both the adjugate and the derivative pick up a factor 2.
inline constexpr double kTraceConventionFactor = 16.0;

PhiCoefficients phi_gamma(const ProbeSpec& probe, const EnvironmentSpec& env, double t);
PhiCoefficients phi_lambda(const ProbeSpec& probe, const EnvironmentSpec& env, double t);

/// The two parts of the QFI: the covariance term and the purity-change term.
struct QfiTerms {
    double covariance_term;
    double purity_term;
    double total() const { return covariance_term + purity_term; }
};

QfiTerms qfi_analytic_terms(EstimationTarget target, const ProbeSpec& probe,
                            const EnvironmentSpec& env, double t);

/// Closed-form QFI, in units of Theta^-2.
double qfi_analytic(EstimationTarget target, const ProbeSpec& probe, const EnvironmentSpec& env,
                    double t);

/// Finite-difference settings for the numerical routes.
struct StepPolicy {
    /// Base step is relative_step * max(|Theta|, scale).
    double relative_step = 1e-4;
    double gamma_scale = 1.0;
    double lambda_scale = 1e12;
    /// Number of step halvings in the Richardson tableau.
    int levels = 2;
    double tolerance = 1e-6;

    double base_step(EstimationTarget target, double theta) const;
};

QfiTerms qfi_numeric_terms(EstimationTarget target, const ProbeSpec& probe,
                           const EnvironmentSpec& env, double t, const StepPolicy& policy = {});

/// Gaussian QFI with the covariance and purity derivatives taken by
/// Richardson-extrapolated central differences in quad precision.
double qfi_numeric(EstimationTarget target, const ProbeSpec& probe, const EnvironmentSpec& env,
                   double t, const StepPolicy& policy = {});

/// Closed-form CFI of a position measurement:
///   gamma:  (m/(hbar t) + gamma/sigma0^2)^2 / (8 sigma0^4 B^4)
///   Lambda: t^2 / (18 sigma0^4 B^4)
double cfi_closed(EstimationTarget target, const ProbeSpec& probe, const EnvironmentSpec& env,
                  double t);

struct CfiOracles {
    /// Adaptive quadrature of (dP/dTheta)^2 / P over +-12 standard deviations.
    double quadrature;
    /// (dV/dTheta)^2 / (2 V^2) for the Gaussian position density of variance V.
    double gaussian_identity;
    /// Estimated absolute quadrature error.
    double quadrature_error;
};

CfiOracles cfi_quadrature(EstimationTarget target, const ProbeSpec& probe,
                          const EnvironmentSpec& env, double t, const StepPolicy& policy = {});

/// 1 / sqrt(N F).
double cramer_rao_bound(double fisher_information, std::uint64_t repeats);

struct FisherResult {
    double qfi_analytic;
    double qfi_numeric;
    double cfi_closed;
    double cfi_quadrature;
    double cfi_gaussian_identity;
    double purity;
    double purity_derivative;
};

FisherResult fisher_report(EstimationTarget target, const ProbeSpec& probe,
                           const EnvironmentSpec& env, double t);

} // namespace pmgauss::fisher
