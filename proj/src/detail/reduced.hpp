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

#include "pmgauss/constants.hpp"
#include "pmgauss/model.hpp"

namespace pmgauss::detail {

/// Dimensionless form of a (probe, Lambda, t) point:
///   s        = t / tau0
///   kappa    = sigma0^2 / ell0^2
///   coupling = Lambda sigma0^2 tau0
/// Every moment and purity expression is a polynomial in these.
template <class Real> struct Reduced {
    Real s;
    Real kappa;
    Real coupling;
    Real gamma;

    /// 1 + gamma^2 + 2 kappa: scaled momentum variance at t = 0.
    Real spread() const { return Real(1) + gamma * gamma + Real(2) * kappa; }
};

template <class Real> Real tau0_in(const ProbeSpec& probe) {
    const Real sigma0 = probe.sigma0();
    return Real(probe.mass()) * sigma0 * sigma0 / Real(constants::hbar);
}

template <class Real>
Reduced<Real> reduce(const ProbeSpec& probe, Real gamma, Real lambda, Real t) {
    const Real sigma0 = probe.sigma0();
    const Real sigma0_sq = sigma0 * sigma0;
    const Real tau0 = tau0_in<Real>(probe);
    return {t / tau0, sigma0_sq * Real(probe.ell0().inverse_square()), lambda * sigma0_sq * tau0,
            gamma};
}

template <class Real>
Reduced<Real> reduce(const ProbeSpec& probe, const EnvironmentSpec& env, double t) {
    return reduce<Real>(probe, Real(probe.gamma()), Real(env.lambda()), Real(t));
}

/// Free flight shears the initial ellipse; scattering adds momentum
/// diffusion 4 coupling s and its integrated position/correlation parts.
template <class Real> BasicCovariance<Real> scaled_covariance(const Reduced<Real>& r) {
    const Real s = r.s;
    const Real spread = r.spread();
    return {
        Real(1) + Real(2) * r.gamma * s + spread * s * s + Real(4) / Real(3) * r.coupling * s * s * s,
        r.gamma + spread * s + Real(2) * r.coupling * s * s,
        spread + Real(4) * r.coupling * s,
    };
}

/// D - 1 where D = mu^-2.
template <class Real> Real bracket_excess(const Reduced<Real>& r) {
    const Real s = r.s;
    const Real decay = Real(1) + r.gamma * s + r.spread() * s * s / Real(3) +
                       r.coupling * s * s * s / Real(3);
    return Real(2) * r.kappa + Real(4) * r.coupling * s * decay;
}

template <class Real> Real bracket_d_gamma(const Reduced<Real>& r) {
    const Real s = r.s;
    return Real(4) * r.coupling * s * s * (Real(1) + Real(2) * r.gamma * s / Real(3));
}

/// dD / dcoupling.
template <class Real> Real bracket_d_coupling(const Reduced<Real>& r) {
    const Real s = r.s;
    return Real(4) * s *
           (Real(1) + r.gamma * s + r.spread() * s * s / Real(3) +
            Real(2) * r.coupling * s * s * s / Real(3));
}

/// dD / ds.
template <class Real> Real bracket_d_s(const Reduced<Real>& r) {
    const Real s = r.s;
    return Real(4) * r.coupling *
           (Real(1) + Real(2) * r.gamma * s + r.spread() * s * s +
            Real(4) * r.coupling * s * s * s / Real(3));
}

} // namespace pmgauss::detail
