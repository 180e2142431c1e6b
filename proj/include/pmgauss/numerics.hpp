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
 * @file numerics.hpp
 * Small numerical kernels: Richardson-extrapolated central differences and
 * golden-section maximisation.
 */
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <vector>

#include "pmgauss/error.hpp"

namespace pmgauss::numerics {

template <class Real> struct DerivativeEstimate {
    Real value;
    /// |last diagonal entry - previous diagonal entry| of the tableau.
    Real error;
    /// Largest |f| seen on the stencil divided by the base step: the size of
    /// a derivative at which rounding in f starts to matter.
    Real noise_scale;
};

/// Central differences at steps h, h/2, ..., h/2^(levels-1), combined in a
/// Richardson tableau on the h^2 error series. `f` maps Real to
/// std::array<Real, N>; every component is differentiated from the same
/// stencil evaluations.
template <class Real, std::size_t N, class F>
std::array<DerivativeEstimate<Real>, N> richardson_gradient(F&& f, Real x, Real h, int levels) {
    using std::abs;
    if (levels < 2) {
        throw InvalidArgument("Richardson extrapolation needs at least two levels");
    }
    std::vector<std::array<Real, N>> prev, cur;
    std::array<DerivativeEstimate<Real>, N> out{};
    std::array<Real, N> scale{};
    Real step = h;
    for (int i = 0; i < levels; ++i, step /= Real(2)) {
        const auto up = f(x + step);
        const auto down = f(x - step);
        cur.assign(static_cast<std::size_t>(i) + 1, std::array<Real, N>{});
        for (std::size_t k = 0; k < N; ++k) {
            cur[0][k] = (up[k] - down[k]) / (Real(2) * step);
            scale[k] = std::max({scale[k], Real(abs(up[k])), Real(abs(down[k]))});
        }
        Real factor = 4;
        for (int j = 1; j <= i; ++j, factor *= Real(4)) {
            for (std::size_t k = 0; k < N; ++k) {
                cur[j][k] = cur[j - 1][k] + (cur[j - 1][k] - prev[j - 1][k]) / (factor - Real(1));
            }
        }
        if (i == levels - 1) {
            for (std::size_t k = 0; k < N; ++k) {
                out[k].value = cur[i][k];
                out[k].error = abs(cur[i][k] - prev[i - 1][k]);
                out[k].noise_scale = scale[k] / h;
            }
        }
        prev.swap(cur);
    }
    return out;
}

/// Scalar convenience wrapper.
template <class Real, class F>
DerivativeEstimate<Real> richardson_derivative(F&& f, Real x, Real h, int levels) {
    auto wrapped = [&f](Real y) { return std::array<Real, 1>{f(y)}; };
    return richardson_gradient<Real, 1>(wrapped, x, h, levels)[0];
}

/// True when the estimate agrees across the last two tableau orders within
/// `relative_tolerance`, or the disagreement is below the rounding floor of
/// the stencil values.
template <class Real>
bool converged(const DerivativeEstimate<Real>& d, Real relative_tolerance, Real noise_floor) {
    using std::abs;
    return d.error <= relative_tolerance * abs(d.value) || d.error <= noise_floor * d.noise_scale;
}

/// Maximiser of a unimodal `f` on [lo, hi], to |hi - lo| <= tolerance.
template <class F> double golden_section_maximize(F&& f, double lo, double hi, double tolerance) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (std::abs(b - a) > tolerance) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace pmgauss::numerics
