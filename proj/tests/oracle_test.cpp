// Copyright 2026 The sowig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "sowig/diag.hpp"
#include "sowig/error.hpp"
#include "sowig/oracle.hpp"
#include "sowig/states.hpp"
#include "sowig/wigner.hpp"

using namespace sowig;

namespace {
const PhysicalConstants kUnit{1.0};
}

TEST(oracle, simpson_is_exact_for_cubics) {
    auto f = [](double t) { return 2.0 * t * t * t - t * t + 3.0; };
    EXPECT_NEAR(simpson<double>(f, -1.0, 2.0, 2), 8.0 - 3.0 + 9.0 - 0.5, 1e-13);
    EXPECT_THROW(simpson<double>(f, 0.0, 1.0, 3), std::invalid_argument);
}

TEST(oracle, simpson_converges_at_fourth_order) {
    auto f = [](double t) { return std::exp(t); };
    const double exact = std::exp(1.0) - 1.0;
    const double e1 = std::abs(simpson<double>(f, 0.0, 1.0, 8) - exact);
    const double e2 = std::abs(simpson<double>(f, 0.0, 1.0, 16) - exact);
    EXPECT_NEAR(e1 / e2, 16.0, 0.5);
}

TEST(oracle, gaussian_wigner) {
    const StateSpec g = build_gaussian(0.4, 0.9, kUnit);
    for (double p : {-1.0, 0.0, 2.0}) {
        const auto r = wigner_quadrature(g, 0.1, p, default_wigner_quadrature(g, p));
        EXPECT_NEAR(r.value, eval_wigner(g, 0.1, p), 1e-14);
        EXPECT_NEAR(r.imag, 0.0, 1e-14);
    }
}

TEST(oracle, agrees_with_closed_form_on_random_states) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 8; ++trial) {
        StateSpec s;
        s.constants = {0.5 + std::abs(u(rng))};
        const double xi = 0.3 + std::abs(u(rng));
        for (int k = 0; k < 1 + trial % 4; ++k) s.components.push_back({3.0 * u(rng), xi, {u(rng), u(rng)}, u(rng)});
        s = normalize(s);
        for (int k = 0; k < 10; ++k) {
            const double x = 4.0 * u(rng), p = 3.0 * u(rng);
            const auto r = wigner_quadrature(s, x, p, default_wigner_quadrature(s, p));
            EXPECT_NEAR(r.value, eval_wigner(s, x, p), 1e-10);
        }
    }
}

TEST(oracle, error_shrinks_with_panels) {
    WarningCapture quiet;
    const StateSpec psi = build_psi({8, 10.0}, 3.0, 0.25, kUnit);
    const double x = 0.0, p = 0.05;
    const double exact = eval_wigner(psi, x, p);
    const QuadratureSpec base = default_wigner_quadrature(psi, p);
    const double fine = wigner_quadrature(psi, x, p, base).value;
    EXPECT_NEAR(fine, exact, 1e-10);
    const std::size_t need = required_wigner_panels(psi, p, base.y_halfwidth);
    EXPECT_LE(need, base.n_points);
    const double twice = wigner_quadrature(psi, x, p, {base.y_halfwidth, 2 * base.n_points}).value;
    EXPECT_NEAR(twice, exact, 1e-10);
}

TEST(oracle, rejects_coarse_or_narrow_rules) {
    WarningCapture quiet;
    const StateSpec psi = build_psi({8, 10.0}, 3.0, 0.25, kUnit);
    const QuadratureSpec base = default_wigner_quadrature(psi, 0.0);
    EXPECT_THROW(wigner_quadrature(psi, 0.0, 0.0, {base.y_halfwidth, 16}), UndersampledError);
    EXPECT_THROW(wigner_quadrature(psi, 0.0, 0.0, {3.0, base.n_points}), UndersampledError);
    EXPECT_THROW(wigner_quadrature(psi, 0.0, 0.0, {-1.0, base.n_points}), InvalidArgument);
    EXPECT_THROW(norm_quadrature(psi, {2.0, 4096}), UndersampledError);
}

TEST(oracle, norm_quadrature_matches_closed_form) {
    const StateSpec cat = build_cat(2.0, 0.8, kUnit, Normalization::raw);
    EXPECT_NEAR(norm_quadrature(cat, default_norm_quadrature(cat)), norm_squared(cat), 1e-13);
}
