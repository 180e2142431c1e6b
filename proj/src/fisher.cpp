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

#include "pmgauss/fisher.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <fmt/format.h>

#include "detail/reduced.hpp"
#include "pmgauss/constants.hpp"
#include "pmgauss/error.hpp"
#include "pmgauss/numerics.hpp"

namespace pmgauss::fisher {

namespace {

void require_positive_time(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) {
        throw InvalidArgument(fmt::format("time must be finite and > 0, got {}", t));
    }
}

double theta_of(EstimationTarget target, const ProbeSpec& probe, const EnvironmentSpec& env) {
    return target == EstimationTarget::Gamma ? probe.gamma() : env.lambda();
}

/// Reduced variables with the estimated parameter replaced by `theta`.
detail::Reduced<Wide> reduce_at(EstimationTarget target, const ProbeSpec& probe,
                                const EnvironmentSpec& env, double t, const Wide& theta) {
    if (target == EstimationTarget::Gamma) {
        return detail::reduce<Wide>(probe, theta, Wide(env.lambda()), Wide(t));
    }
    return detail::reduce<Wide>(probe, Wide(probe.gamma()), theta, Wide(t));
}

template <class Real> bool settled(const numerics::DerivativeEstimate<Real>& d,
                                   const StepPolicy& policy) {
    // Absolute floor: error negligible against |f| over the parameter's own scale.
    return numerics::converged(d, Real(policy.tolerance),
                               Real(policy.tolerance * policy.relative_step));
}

constexpr double kPureExcess = 1e-25;
constexpr double kQuadratureHalfWidth = 12.0;
constexpr double kQuadratureTolerance = 1e-10;
constexpr double kTailTolerance = 1e-8;

} // namespace

std::string_view to_string(EstimationTarget target) {
    return target == EstimationTarget::Gamma ? "gamma" : "lambda";
}

PhiCoefficients phi_gamma(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    require_positive_time(t);
    const double tau = tau0(probe);
    const double s2 = probe.sigma0() * probe.sigma0();
    const double kappa = s2 * probe.ell0().inverse_square();
    const double g = probe.gamma();
    const double r = tau / t;
    const double spread = 1.0 + g * g + 2.0 * kappa;
    const double t3 = t * t * t;

    const std::array<double, 3> c{
        9.0 * std::pow(tau, 4) * (1.0 + 2.0 * kappa),
        12.0 * s2 * tau * tau * t3 * (spread + 3.0 * g * r + 3.0 * r * r),
        32.0 * s2 * s2 * t3 * t3 * (g * g + 3.0 * g * r + 21.0 / 8.0 * r * r),
    };
    const double lambda = env.lambda();
    const double value = (c[0] + lambda * (c[1] + lambda * c[2])) / (72.0 * std::pow(tau, 4));
    return {EstimationTarget::Gamma, c, std::nullopt, value};
}

PhiCoefficients phi_lambda(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    require_positive_time(t);
    const double tau = tau0(probe);
    const double s2 = probe.sigma0() * probe.sigma0();
    const double kappa = s2 * probe.ell0().inverse_square();
    const double g = probe.gamma();
    const double r = tau / t;
    const double big = 2.0 * kappa + g * g + 1.0;
    const double t6 = std::pow(t, 6);

    const std::array<double, 3> z{
        2.0 * s2 * s2 * t6 *
            (big * big + 6.0 * g * r * big + 15.0 * r * r * (0.6 * kappa + g * g + 0.3) +
             18.0 * g * r * r * r + 9.0 * std::pow(r, 4)),
        4.0 * s2 * s2 * s2 * t6 * t * (big + 3.0 * g * r + 3.0 * r * r),
        4.0 * std::pow(s2, 4) * t6 * t * t,
    };
    const double lambda = env.lambda();
    const double value = (z[0] + lambda * (z[1] + lambda * z[2])) / (18.0 * std::pow(tau, 4));
    return {EstimationTarget::Lambda, z, big, value};
}

QfiTerms qfi_analytic_terms(EstimationTarget target, const ProbeSpec& probe,
                            const EnvironmentSpec& env, double t) {
    const PhiCoefficients phi = target == EstimationTarget::Gamma ? phi_gamma(probe, env, t)
                                                                  : phi_lambda(probe, env, t);
    const PurityBracket b = purity_bracket(probe, env, t);
    const double d = b.value;
    const double dd = target == EstimationTarget::Gamma ? b.d_gamma : b.d_lambda;

    // mu^4 / (2 (1 + mu^2)) * 16 Phi with mu^2 = 1/D.
    const double covariance_term = kTraceConventionFactor * phi.value / (2.0 * d * (d + 1.0));

    // 2 (dmu)^2 / (1 - mu^4) = (dD)^2 / (2 D (D - 1) (D + 1)).
    double purity_term = 0.0;
    if (b.excess > 0.0) {
        purity_term = dd * dd / (2.0 * d * b.excess * (2.0 + b.excess));
    } else if (dd != 0.0) {
        throw NumericalError("pure-state limit: purity is 1 but its derivative is not 0");
    }
    return {covariance_term, purity_term};
}

double qfi_analytic(EstimationTarget target, const ProbeSpec& probe, const EnvironmentSpec& env,
                    double t) {
    return qfi_analytic_terms(target, probe, env, t).total();
}

double StepPolicy::base_step(EstimationTarget target, double theta) const {
    const double scale = target == EstimationTarget::Gamma ? gamma_scale : lambda_scale;
    return relative_step * std::max(std::abs(theta), scale);
}

QfiTerms qfi_numeric_terms(EstimationTarget target, const ProbeSpec& probe,
                           const EnvironmentSpec& env, double t, const StepPolicy& policy) {
    require_positive_time(t);
    const double theta = theta_of(target, probe, env);
    const Wide h = policy.base_step(target, theta);

    auto moments = [&](const Wide& x) {
        const auto cov = detail::scaled_covariance(reduce_at(target, probe, env, t, x));
        return std::array<Wide, 4>{cov.sxx, cov.sxp, cov.spp, Wide(1) / sqrt(cov.det())};
    };
    const auto grad = numerics::richardson_gradient<Wide, 4>(moments, Wide(theta), h, policy.levels);
    for (const auto& d : grad) {
        if (!settled(d, policy)) {
            throw NumericalError(fmt::format(
                "derivative failed to converge ({} = {}, t = {})", to_string(target), theta, t));
        }
    }

    const auto at = moments(Wide(theta));
    const CovarianceMatrix s{at[0], at[1], at[2]};
    const CovarianceMatrix ds{grad[0].value, grad[1].value, grad[2].value};
    const Wide mu = at[3];
    const Wide dmu = grad[3].value;
    const Wide mu2 = mu * mu;

    const Wide covariance_term =
        mu2 * mu2 / (Wide(2) * (Wide(1) + mu2)) * trace_adjugate_product_squared(s, ds);

    Wide purity_term = 0;
    const Wide excess = s.det() - Wide(1);
    if (excess > Wide(kPureExcess)) {
        // 1 - mu^4 = (det^2 - 1) / det^2, formed from det - 1 to keep digits.
        const Wide det = excess + Wide(1);
        const Wide one_minus_mu4 = excess * (excess + Wide(2)) / (det * det);
        purity_term = Wide(2) * dmu * dmu / one_minus_mu4;
    } else if (abs(dmu) * h > Wide(kPureExcess)) {
        // mu resolvably moves off 1 within one step.
        throw NumericalError("pure-state limit: purity is 1 but its derivative is not 0");
    }
    return {to_double(covariance_term), to_double(purity_term)};
}

double qfi_numeric(EstimationTarget target, const ProbeSpec& probe, const EnvironmentSpec& env,
                   double t, const StepPolicy& policy) {
    return qfi_numeric_terms(target, probe, env, t, policy).total();
}

double cfi_closed(EstimationTarget target, const ProbeSpec& probe, const EnvironmentSpec& env,
                  double t) {
    const KernelParams k = kernel_params(probe, env, t);
    const double s2 = probe.sigma0() * probe.sigma0();
    const double denom = s2 * s2 * k.b_sq * k.b_sq;
    if (target == EstimationTarget::Gamma) {
        const double chirp = probe.mass() / (constants::hbar * t) + probe.gamma() / s2;
        return chirp * chirp / (8.0 * denom);
    }
    return t * t / (18.0 * denom);
}

CfiOracles cfi_quadrature(EstimationTarget target, const ProbeSpec& probe,
                          const EnvironmentSpec& env, double t, const StepPolicy& policy) {
    require_positive_time(t);
    const double theta = theta_of(target, probe, env);
    const Wide h = policy.base_step(target, theta);
    const Wide sigma0_sq = Wide(probe.sigma0()) * Wide(probe.sigma0());

    auto variance = [&](const Wide& x) {
        return sigma0_sq * detail::scaled_covariance(reduce_at(target, probe, env, t, x)).sxx /
               Wide(2);
    };
    const Wide v0 = variance(Wide(theta));

    // (b) Gaussian identity.
    const auto dv = numerics::richardson_derivative<Wide>(variance, Wide(theta), h, policy.levels);
    if (!settled(dv, policy)) {
        throw NumericalError("derivative failed to converge (position variance)");
    }
    const double identity = to_double(dv.value * dv.value / (Wide(2) * v0 * v0));

    // (a) Quadrature over z = x / sqrt(V0); dx = sqrt(V0) dz. The stencil
    // differences ln P, which stays polynomial in z where P itself underflows.
    const Wide root_v0 = sqrt(v0);
    const Wide two_pi = boost::math::constants::two_pi<Wide>();
    auto integrand = [&](double z) {
        const Wide x = Wide(z) * root_v0;
        auto log_density = [&](const Wide& th) {
            const Wide v = variance(th);
            return -x * x / (Wide(2) * v) - log(two_pi * v) / Wide(2);
        };
        const auto dlp =
            numerics::richardson_derivative<Wide>(log_density, Wide(theta), h, policy.levels);
        if (!settled(dlp, policy)) {
            throw NumericalError(fmt::format("derivative failed to converge (density at z = {})", z));
        }
        // (dP)^2 / P = P (d ln P)^2
        return to_double(exp(log_density(Wide(theta))) * dlp.value * dlp.value * root_v0);
    };

    double error = 0.0;
    double l1 = 0.0;
    const double value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
        integrand, -kQuadratureHalfWidth, kQuadratureHalfWidth, 15, kQuadratureTolerance, &error,
        &l1);
    // Beyond |z| = a the integrand falls like its edge value times exp(-a dz).
    const double tail = 2.0 * integrand(kQuadratureHalfWidth) / kQuadratureHalfWidth;
    if (error > kQuadratureTolerance * l1 || tail > kTailTolerance * value) {
        throw NumericalError(fmt::format(
            "quadrature tolerance not met (error {:.3g}, tail {:.3g}, value {:.3g})", error, tail,
            value));
    }
    return {value, identity, error};
}

double cramer_rao_bound(double fisher_information, std::uint64_t repeats) {
    if (repeats < 1) {
        throw InvalidArgument("number of repeats must be >= 1");
    }
    if (!(fisher_information >= 0.0) || !std::isfinite(fisher_information)) {
        throw InvalidArgument(
            fmt::format("Fisher information must be finite and >= 0, got {}", fisher_information));
    }
    if (fisher_information == 0.0) {
        throw InvalidArgument("non-informative: Fisher information is 0");
    }
    return 1.0 / std::sqrt(static_cast<double>(repeats) * fisher_information);
}

FisherResult fisher_report(EstimationTarget target, const ProbeSpec& probe,
                           const EnvironmentSpec& env, double t) {
    const auto cfi = cfi_quadrature(target, probe, env, t);
    const auto grad = purity_gradient(probe, env, t);
    return {
        qfi_analytic(target, probe, env, t),
        qfi_numeric(target, probe, env, t),
        cfi_closed(target, probe, env, t),
        cfi.quadrature,
        cfi.gaussian_identity,
        purity_exact(probe, env, t),
        target == EstimationTarget::Gamma ? grad.d_gamma : grad.d_lambda,
    };
}

} // namespace pmgauss::fisher
