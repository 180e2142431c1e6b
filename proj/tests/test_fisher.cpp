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


#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pmgauss/error.hpp"
#include "pmgauss/fisher.hpp"
#include "pmgauss/model.hpp"
#include "support.hpp"

using namespace pmgauss;
using namespace pmgauss::fisher;
using pmgauss::testing::rel_diff;

namespace {

constexpr auto G = EstimationTarget::Gamma;
constexpr auto L = EstimationTarget::Lambda;

/// Values from an independent 60-digit evaluation: fidelity-based QFI of the
/// two-mode Gaussian moments and direct quadrature of the position Fisher integrand.
struct Frozen {
    double gamma, lambda, t;
    double qfi_gamma, qfi_lambda, cfi_gamma, cfi_lambda;
};

constexpr Frozen kFrozen[] = {
    {5, 1e20, 1e-6, 0.383041020923495, 1.10759709555259e-41, 0.0578865956612817, 2.93899164049856e-48},
    {-10, 1e15, 5e-5, 0.249161461520561, 2.49117187228371e-31, 0.0196402588875017, 8.10002932121437e-46},
    {0, 1e15, 2.284e-4, 0.240198549629455, 2.4826142082406e-31, 1.67079850333706e-5, 1.56068690802343e-40},
    {150, 1e15, 8.2e-6, 0.240888976845373, 2.47565106987427e-31, 8.87806452832463e-5, 4.35984081498955e-52},
    {-50, 1e22, 1e-3, 0.000517147212426376, 5.19143028175744e-45, 0.000455753762946689, 2.9991499065755e-46},
    {50, 1e13, 1e-7, 0.488121083783544, 1.94879857181683e-42, 0.000616841207509248, 3.13179783972048e-54},
};

const std::vector<double> kGridGamma{-50, -5, 0, 5, 50};
const std::vector<double> kGridLambda{1e13, 1e15, 1e18, 1e20, 1e22};
const std::vector<double> kGridTime{1e-7, 1e-6, 1e-5, 1e-4, 1e-3};

ProbeSpec coherent(double gamma) {
    return ProbeSpec::fullerene(gamma).with_ell0(CoherenceLength::fully_coherent());
}

} // namespace

TEST_SUITE("fisher") {

TEST_CASE("Phi for gamma") {
    const auto pure = phi_gamma(coherent(0.0), EnvironmentSpec::vacuum(), 1e-6);
    CHECK(pure.value == doctest::Approx(0.125).epsilon(1e-14));
    CHECK(pure.target == G);
    CHECK_FALSE(pure.big_gamma.has_value());

    const auto p = ProbeSpec::fullerene(3.0);
    const auto free = phi_gamma(p, EnvironmentSpec::vacuum(), 1e-5);
    const double tau = tau0(p);
    CHECK(rel_diff(free.value, free.coefficients[0] / (72 * std::pow(tau, 4))) < 1e-15);
    CHECK(rel_diff(free.value, (1 + 2 * std::pow(7.8 / 50.0, 2)) / 8) < 1e-14);
    CHECK_THROWS_AS(phi_gamma(p, EnvironmentSpec::vacuum(), 0.0), InvalidArgument);
}

TEST_CASE("Phi for Lambda") {
    const auto p = ProbeSpec::fullerene(-2.0);
    const auto phi = phi_lambda(p, EnvironmentSpec::vacuum(), 3e-6);
    REQUIRE(phi.big_gamma.has_value());
    CHECK(rel_diff(*phi.big_gamma, 1 + 4 + 2 * std::pow(7.8 / 50.0, 2)) < 1e-15);
    CHECK(rel_diff(phi.value, phi.coefficients[0] / (18 * std::pow(tau0(p), 4))) < 1e-15);
}

TEST_CASE("analytic QFI against frozen reference values") {
    for (const auto& f : kFrozen) {
        const auto p = ProbeSpec::fullerene(f.gamma);
        const EnvironmentSpec env{f.lambda};
        CAPTURE(f.gamma);
        CHECK(rel_diff(qfi_analytic(G, p, env, f.t), f.qfi_gamma) < 1e-9);
        CHECK(rel_diff(qfi_analytic(L, p, env, f.t), f.qfi_lambda) < 1e-9);
        CHECK(rel_diff(qfi_numeric(G, p, env, f.t), f.qfi_gamma) < 1e-9);
        CHECK(rel_diff(qfi_numeric(L, p, env, f.t), f.qfi_lambda) < 1e-9);
    }
}

TEST_CASE("CFI against frozen reference values") {
    for (const auto& f : kFrozen) {
        const auto p = ProbeSpec::fullerene(f.gamma);
        const EnvironmentSpec env{f.lambda};
        CAPTURE(f.gamma);
        CHECK(rel_diff(cfi_closed(G, p, env, f.t), f.cfi_gamma) < 1e-9);
        CHECK(rel_diff(cfi_closed(L, p, env, f.t), f.cfi_lambda) < 1e-9);
        const auto qg = cfi_quadrature(G, p, env, f.t);
        const auto ql = cfi_quadrature(L, p, env, f.t);
        CHECK(rel_diff(qg.quadrature, f.cfi_gamma) < 1e-8);
        CHECK(rel_diff(ql.quadrature, f.cfi_lambda) < 1e-8);
        CHECK(rel_diff(qg.gaussian_identity, f.cfi_gamma) < 1e-8);
        CHECK(rel_diff(ql.gaussian_identity, f.cfi_lambda) < 1e-8);
    }
}

TEST_CASE("QFI examples") {
    SUBCASE("pure state, gamma target") {
        const auto p = coherent(3.0);
        const double expected = 0.5; // independent fidelity route
        CHECK(rel_diff(qfi_analytic(G, p, EnvironmentSpec::vacuum(), 1e-6), expected) < 1e-13);
        CHECK(rel_diff(qfi_numeric(G, p, EnvironmentSpec::vacuum(), 1e-6), expected) < 1e-9);
        CHECK(qfi_analytic_terms(G, p, EnvironmentSpec::vacuum(), 1e-6).purity_term == 0.0);
    }
    SUBCASE("pure state, Lambda target is singular") {
        CHECK_THROWS_WITH_AS(qfi_analytic(L, coherent(0.0), EnvironmentSpec::vacuum(), 1e-6),
                             doctest::Contains("pure-state limit"), NumericalError);
        CHECK_THROWS_WITH_AS(qfi_numeric(L, coherent(0.0), EnvironmentSpec::vacuum(), 1e-6),
                             doctest::Contains("pure-state limit"), NumericalError);
    }
    SUBCASE("reference Lambda^2 F values") {
        const EnvironmentSpec env{1e15};
        CHECK(std::abs(1e30 * qfi_analytic(L, ProbeSpec::fullerene(0.0), env, 2.284e-4) / 0.247 - 1) <= 0.02);
        CHECK(std::abs(1e30 * qfi_analytic(L, ProbeSpec::fullerene(150.0), env, 8.2e-6) / 0.247 - 1) <= 0.02);
    }
    SUBCASE("terms add up") {
        const auto p = ProbeSpec::fullerene(5.0);
        const auto a = qfi_analytic_terms(L, p, EnvironmentSpec{1e20}, 1e-6);
        const auto n = qfi_numeric_terms(L, p, EnvironmentSpec{1e20}, 1e-6);
        CHECK(rel_diff(a.covariance_term, n.covariance_term) < 1e-8);
        CHECK(rel_diff(a.purity_term, n.purity_term) < 1e-8);
        CHECK(a.total() == qfi_analytic(L, p, EnvironmentSpec{1e20}, 1e-6));
    }
}

TEST_CASE("step policy") {
    const StepPolicy policy;
    CHECK(policy.base_step(G, 0.0) == 1e-4);
    CHECK(policy.base_step(G, -50.0) == doctest::Approx(5e-3));
    CHECK(policy.base_step(L, 1e3) == doctest::Approx(1e8));
    CHECK(policy.base_step(L, 1e20) == doctest::Approx(1e16));
}

TEST_CASE("CFI examples") {
    SUBCASE("gamma CFI vanishes where the variance is stationary") {
        const auto p = ProbeSpec::fullerene();
        const double t = 1e-6;
        const auto q = p.with_gamma(-tau0(p) / t);
        CHECK(cfi_closed(G, q, EnvironmentSpec{1e18}, t) < 1e-20);
        CHECK(std::abs(cfi_quadrature(G, q, EnvironmentSpec{1e18}, t).quadrature) <= 1e-10);
    }
    SUBCASE("quadrature error estimate is small") {
        const auto r = cfi_quadrature(G, ProbeSpec::fullerene(5.0), EnvironmentSpec{1e20}, 1e-6);
        CHECK(r.quadrature_error <= 1e-10 * r.quadrature);
    }
}

TEST_CASE("Cramer-Rao bound") {
    CHECK(cramer_rao_bound(1.0, 1) == 1.0);
    CHECK(cramer_rao_bound(4.0, 25) == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(cramer_rao_bound(3.0, 40) == doctest::Approx(cramer_rao_bound(3.0, 10) / 2).epsilon(1e-15));
    CHECK_THROWS_WITH_AS(cramer_rao_bound(0.0, 10), doctest::Contains("non-informative"), InvalidArgument);
    CHECK_THROWS_AS(cramer_rao_bound(1.0, 0), InvalidArgument);
    CHECK_THROWS_AS(cramer_rao_bound(-1.0, 1), InvalidArgument);
}

TEST_CASE("report bundles all routes") {
    const auto p = ProbeSpec::fullerene(-10.0);
    const EnvironmentSpec env{1e15};
    const auto r = fisher_report(L, p, env, 5e-5);
    CHECK(r.qfi_analytic == qfi_analytic(L, p, env, 5e-5));
    CHECK(rel_diff(r.qfi_numeric, r.qfi_analytic) < 1e-6);
    CHECK(rel_diff(r.cfi_quadrature, r.cfi_closed) < 1e-6);
    CHECK(rel_diff(r.cfi_gaussian_identity, r.cfi_closed) < 1e-6);
    CHECK(r.purity == purity_exact(p, env, 5e-5));
    CHECK(r.purity_derivative == purity_gradient(p, env, 5e-5).d_lambda);
}

TEST_CASE("grid: route agreement and QFI dominance") {
    for (double g : kGridGamma) {
        for (double lambda : kGridLambda) {
            for (double t : kGridTime) {
                const auto p = ProbeSpec::fullerene(g);
                const EnvironmentSpec env{lambda};
                for (auto target : {G, L}) {
                    CAPTURE(g);
                    CAPTURE(lambda);
                    CAPTURE(t);
                    CAPTURE(to_string(target));
                    const double qa = qfi_analytic(target, p, env, t);
                    const double qn = qfi_numeric(target, p, env, t);
                    const double cc = cfi_closed(target, p, env, t);
                    const auto cq = cfi_quadrature(target, p, env, t);
                    CHECK(rel_diff(qa, qn) <= 1e-6);
                    CHECK(rel_diff(cc, cq.quadrature) <= 1e-6);
                    CHECK(rel_diff(cc, cq.gaussian_identity) <= 1e-6);
                    CHECK(rel_diff(cq.quadrature, cq.gaussian_identity) <= 1e-6);
                    CHECK(qa >= cc - 1e-9 * qa);
                }
            }
        }
    }
}

TEST_CASE("property: positivity") {
    testing::ParameterSampler draw(21);
    for (int i = 0; i < 2000; ++i) {
        const auto p = draw.probe();
        const EnvironmentSpec env{draw.lambda()};
        const double t = draw.time();
        CAPTURE(i);
        CHECK(qfi_analytic(G, p, env, t) >= 0.0);
        CHECK(qfi_analytic(L, p, env, t) >= 0.0);
        CHECK(cfi_closed(G, p, env, t) >= 0.0);
        CHECK(cfi_closed(L, p, env, t) >= 0.0);
        const auto q = p.with_gamma(std::abs(p.gamma()));
        CHECK(phi_gamma(q, env, t).value >= 0.0);
        CHECK(phi_lambda(q, env, t).value >= 0.0);
    }
}

TEST_CASE("property: QFI dominance on random draws") {
    testing::ParameterSampler draw(22);
    for (int i = 0; i < 2000; ++i) {
        const auto p = draw.probe();
        const EnvironmentSpec env{draw.lambda()};
        const double t = draw.time();
        CAPTURE(i);
        for (auto target : {G, L}) {
            const double q = qfi_analytic(target, p, env, t);
            CHECK(q >= cfi_closed(target, p, env, t) - 1e-9 * q);
        }
    }
}

TEST_CASE("property: Phi monotone for gamma >= 0") {
    testing::ParameterSampler draw(23);
    for (int i = 0; i < 2000; ++i) {
        const auto p = draw.probe().with_gamma(draw.nonnegative_gamma());
        const double lambda = draw.lambda();
        const double t = draw.time();
        const double k = draw.uniform(1.01, 3.0);
        const EnvironmentSpec env{lambda};
        const EnvironmentSpec more{lambda * k};
        const auto steeper = p.with_gamma(p.gamma() * k + 0.01);
        CAPTURE(i);
        for (auto phi : {&phi_gamma, &phi_lambda}) {
            const double base = (*phi)(p, env, t).value;
            CHECK((*phi)(p, env, t * k).value >= base);
            CHECK((*phi)(p, more, t).value >= base);
            CHECK((*phi)(steeper, env, t).value >= base);
        }
    }
}

TEST_CASE("high-noise CFI/QFI ratio exceeds one half at every gamma" * doctest::should_fail()) {
    // The position readout is blind to gamma where the variance is stationary
    // (gamma = -tau0/t), so the literal claim fails there.
    const auto base = ProbeSpec::fullerene();
    const EnvironmentSpec env{1e23};
    bool all_above = true;
    for (int i = 0; i <= 200; ++i) {
        const auto p = base.with_gamma(-10.0 + 0.1 * i);
        all_above = all_above && cfi_closed(G, p, env, 1e-6) > 0.5 * qfi_analytic(G, p, env, 1e-6);
    }
    CHECK(all_above);
}

TEST_CASE("high-noise CFI/QFI ratio exceeds one half for most gamma") {
    const auto base = ProbeSpec::fullerene();
    auto median_ratio = [&](double lambda) {
        std::vector<double> r;
        for (int i = 0; i <= 20; ++i) {
            const auto p = base.with_gamma(-10.0 + i);
            const EnvironmentSpec env{lambda};
            r.push_back(cfi_closed(G, p, env, 1e-6) / qfi_analytic(G, p, env, 1e-6));
        }
        std::nth_element(r.begin(), r.begin() + 10, r.end());
        return r[10];
    };
    CHECK(median_ratio(1e23) > 0.5);
    CHECK(median_ratio(0.0) < 0.5);
}

} // TEST_SUITE
